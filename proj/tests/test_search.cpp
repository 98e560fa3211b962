#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "spexlab/expr.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/search.hpp"

using namespace spexlab;

namespace {

// Every witness must decode to a free graph of the right order; for the
// edges objective its edge count must equal the optimum; the list must be
// sorted by canonical form with no duplicates.
void validate_report(const SearchReport& rep, const FamilySpec& spec) {
    REQUIRE(!rep.witnesses.empty());
    std::vector<std::string> forms;
    for (const auto& w : rep.witnesses) {
        Graph g = graph6_decode(w.graph6);
        REQUIRE(g.order() == rep.n);
        REQUIRE(is_free(g, spec));
        if (rep.edges_objective()) REQUIRE(g.size() == rep.optimum_edges);
        forms.push_back(w.graph6);
    }
    REQUIRE(std::is_sorted(forms.begin(), forms.end()));
    REQUIRE(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
}

// Balanced complete multipartite graph: vertex v joins part v mod r.
Graph turan_graph(int n, int r) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u % r != v % r) g.add_edge(u, v);
    return g;
}

// Isomorphism-class count by brute force: a bitmask per labelled graph,
// counting only masks that are minimal over all vertex permutations.
int permutation_dedup_count(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    int m = int(pairs.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> edge_maps;  // edge index -> edge index
    do {
        std::vector<int> map(m);
        for (int i = 0; i < m; ++i) {
            int a = perm[pairs[i].first], b = perm[pairs[i].second];
            if (a > b) std::swap(a, b);
            for (int j = 0; j < m; ++j)
                if (pairs[j].first == a && pairs[j].second == b) {
                    map[i] = j;
                    break;
                }
        }
        edge_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    int classes = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
        bool minimal = true;
        for (const auto& map : edge_maps) {
            uint32_t img = 0;
            for (int i = 0; i < m; ++i)
                if ((mask >> i) & 1) img |= uint32_t(1) << map[i];
            if (img < mask) {
                minimal = false;
                break;
            }
        }
        if (minimal) ++classes;
    }
    return classes;
}

}  // namespace

TEST_CASE("ex: matching-free maximum on six vertices is the star") {
    FamilySpec spec = parse_family("list:M4");
    SearchReport rep = ex(6, spec);
    // two disjoint edges forbidden: the edge set must be pairwise
    // intersecting, i.e. a star or a triangle; the star K_{1,5} wins
    CHECK(rep.optimum_edges == 5);
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0].graph6 == canonical_form(realize("K1,5")));
    // the M4-free classes on six vertices are exactly: empty, K2, P3, K3,
    // K1,3, K1,4, K1,5 (padded with isolated vertices)
    CHECK(rep.enumerated == 7);
    CHECK(rep.query == "ex");
    CHECK(rep.flags.empty());
    validate_report(rep, spec);
}

TEST_CASE("ex: P4-free maximum on five vertices has two extremal classes") {
    FamilySpec spec = parse_family("list:P4");
    SearchReport rep = ex(5, spec);
    CHECK(rep.optimum_edges == 4);
    std::vector<std::string> expect = {canonical_form(realize("K1,4")),
                                       canonical_form(realize("K3 u K2"))};
    std::sort(expect.begin(), expect.end());
    REQUIRE(rep.witnesses.size() == 2);
    CHECK(rep.witnesses[0].graph6 == expect[0]);
    CHECK(rep.witnesses[1].graph6 == expect[1]);
    validate_report(rep, spec);

    SECTION("every non-witness class with optimum edges contains the path") {
        std::set<std::string> wit;
        for (const auto& w : rep.witnesses) wit.insert(w.graph6);
        enumerate_graphs(5, false, [&](const Graph& g) {
            if (g.size() != rep.optimum_edges) return;
            if (wit.count(canonical_form(g))) return;
            CHECK_FALSE(is_free(g, spec));
        });
    }

    SECTION("connected variant keeps only the star") {
        SearchReport con = ex(5, spec, true);
        CHECK(con.optimum_edges == 4);
        REQUIRE(con.witnesses.size() == 1);
        CHECK(con.witnesses[0].graph6 == canonical_form(realize("K1,4")));
        CHECK(con.restricted_to == "connected graphs");
        CHECK(con.query == "ex-connected");
    }
}

TEST_CASE("ex: forbidding a single edge leaves the empty graph") {
    FamilySpec spec = parse_family("list:K2");
    SearchReport rep = ex(5, spec);
    CHECK(rep.optimum_edges == 0);
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0].graph6 == canonical_form(empty_graph(5)));
    // pruning at the first edge leaves exactly one visited class
    CHECK(rep.enumerated == 1);
    CHECK(rep.csv_row() == "5,0");
    CHECK(SearchReport::csv_header() == "n,optimum");
}

TEST_CASE("ex: throws when the family kills every graph") {
    FamilySpec spec = FamilySpec::finite_list({empty_graph(1)}, {"K1"});
    CHECK_THROWS_AS(ex(4, spec), search_error);
    CHECK_THROWS_AS(spex(4, spec), search_error);
}

TEST_CASE("ex: argument validation") {
    FamilySpec spec = parse_family("list:P4");
    CHECK_THROWS_AS(ex(0, spec), std::invalid_argument);
    CHECK_THROWS_AS(spex(5, spec, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(spex(5, spec, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(ex_restricted(8, spec, 0), std::invalid_argument);
    CHECK_THROWS_AS(ex_restricted(8, spec, 5), std::invalid_argument);
    CHECK_THROWS_AS(ex_restricted(2, spec, 2), std::invalid_argument);
}

TEST_CASE("enumerate_graphs agrees with the permutation-dedup oracle") {
    for (int n = 1; n <= 6; ++n) {
        uint64_t count = enumerate_graphs(n, false, [](const Graph&) {});
        CHECK(count == uint64_t(permutation_dedup_count(n)));
    }
}

TEST_CASE("spex: matching-free maximum on six vertices is the star at sqrt(5)") {
    FamilySpec spec = parse_family("list:M4");
    SearchReport rep = spex(6, spec, 0.0);
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0].graph6 == canonical_form(realize("K1,5")));
    CHECK(rep.optimum_lambda == Catch::Approx(std::sqrt(5.0)).margin(1e-9));
    CHECK(rep.flags.empty());
    CHECK(rep.objective == "lambda(alpha=0)");
    validate_report(rep, spec);
}

TEST_CASE("spex: clique-free optimizers are the Turan graphs, matching ex") {
    struct Case {
        int n, r;
    };
    for (Case c : {Case{5, 2}, Case{6, 2}, Case{7, 2}, Case{8, 2}, Case{6, 3}, Case{7, 3}}) {
        FamilySpec spec = parse_family("list:K" + std::to_string(c.r + 1));
        Graph t = turan_graph(c.n, c.r);
        std::string tform = canonical_form(t);

        SearchReport se = spex(c.n, spec, 0.0);
        REQUIRE(se.witnesses.size() == 1);
        CHECK(se.witnesses[0].graph6 == tform);

        SearchReport ee = ex(c.n, spec);
        REQUIRE(ee.witnesses.size() == 1);
        CHECK(ee.witnesses[0].graph6 == tform);
        CHECK(ee.optimum_edges == t.size());

        if (c.r == 2) {
            // bipartite Turan graph: lambda = sqrt(ceil(n/2) * floor(n/2))
            double ab = double((c.n + 1) / 2) * double(c.n / 2);
            CHECK(se.optimum_lambda == Catch::Approx(std::sqrt(ab)).margin(1e-9));
        }
        if (c.n == 6 && c.r == 3)
            CHECK(se.optimum_lambda == Catch::Approx(4.0).margin(1e-9));  // K_{2,2,2} is 4-regular
    }
}

TEST_CASE("spex: forbidding an edge gives the empty graph at lambda 0") {
    FamilySpec spec = parse_family("list:K2");
    SearchReport rep = spex(6, spec, 0.4);
    CHECK(rep.optimum_lambda == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0].graph6 == canonical_form(empty_graph(6)));
}

TEST_CASE("spex: genuine tie between the pentagon and the star is certified") {
    // {K3, C4}-free graphs on five vertices with maximum spectral radius:
    // C5 (2-regular) and K_{1,4} (sqrt(4)) both sit exactly at lambda = 2
    FamilySpec spec = FamilySpec::finite_list({realize("K3"), realize("C4")}, {"K3", "C4"});
    SearchReport rep = spex(5, spec, 0.0);
    CHECK(rep.optimum_lambda == Catch::Approx(2.0).margin(1e-12));
    std::vector<std::string> expect = {canonical_form(realize("C5")),
                                       canonical_form(realize("K1,4"))};
    std::sort(expect.begin(), expect.end());
    REQUIRE(rep.witnesses.size() == 2);
    CHECK(rep.witnesses[0].graph6 == expect[0]);
    CHECK(rep.witnesses[1].graph6 == expect[1]);
    REQUIRE_FALSE(rep.flags.empty());
    CHECK(rep.flags[0] == "tie");
    CHECK(std::find(rep.flags.begin(), rep.flags.end(), "tie-exact-equal") != rep.flags.end());
    validate_report(rep, spec);
}

TEST_CASE("ex monotone in n for subgraph-defined families") {
    for (const char* fam : {"list:P4", "list:M4", "list:K3"}) {
        FamilySpec spec = parse_family(fam);
        long long prev = -1;
        for (int n = 2; n <= 7; ++n) {
            SearchReport rep = ex(n, spec);
            CHECK(rep.optimum_edges >= prev);
            prev = rep.optimum_edges;
        }
    }
}

TEST_CASE("ex_restricted: path families reproduce the join shapes") {
    SECTION("P6 with k=2: right side empty, left side complete") {
        FamilySpec spec = parse_family("list:P6");
        SearchReport rep = ex_restricted(10, spec, 2);
        CHECK(rep.optimum_edges == 1 + 2 * 8);
        REQUIRE(rep.witnesses.size() == 1);
        CHECK(rep.witnesses[0].graph6 == canonical_form(join(complete_graph(2), empty_graph(8))));
        CHECK(rep.witnesses[0].pattern == "Q=0");
        CHECK(rep.witnesses[0].decomposition ==
              "left-edges=0-1; X=" + canonical_form(empty_graph(8)));
        CHECK(std::find(rep.flags.begin(), rep.flags.end(), "right-degree-bound=2+1") !=
              rep.flags.end());
        CHECK(std::find(rep.flags.begin(), rep.flags.end(), "pattern-violated") == rep.flags.end());
        validate_report(rep, spec);
    }
    SECTION("P7 with k=2: one right edge survives") {
        FamilySpec spec = parse_family("list:P7");
        SearchReport rep = ex_restricted(10, spec, 2);
        CHECK(rep.optimum_edges == 1 + 2 * 8 + 1);
        REQUIRE(rep.witnesses.size() == 1);
        Graph expect = join(complete_graph(2), disjoint_union(complete_graph(2), empty_graph(6)));
        CHECK(rep.witnesses[0].graph6 == canonical_form(expect));
        CHECK(rep.witnesses[0].pattern == "Q=0");
        CHECK(std::find(rep.flags.begin(), rep.flags.end(), "right-degree-bound=2+2") !=
              rep.flags.end());
        validate_report(rep, spec);
    }
    SECTION("three copies of P3 with k=2: right side is a perfect matching") {
        FamilySpec spec = parse_family("list:3*P3");
        SearchReport rep = ex_restricted(12, spec, 2);
        CHECK(rep.optimum_edges == 1 + 2 * 10 + 5);
        REQUIRE(rep.witnesses.size() == 1);
        Graph expect = join(complete_graph(2), matching_graph(10));
        CHECK(rep.witnesses[0].graph6 == canonical_form(expect));
        CHECK(rep.witnesses[0].pattern == "Q=1/2");
        validate_report(rep, spec);
    }
}

TEST_CASE("ex_restricted: k=1 star core under a matching family") {
    FamilySpec spec = parse_family("list:M4");
    SearchReport rep = ex_restricted(6, spec, 1);
    // any right-side edge is disjoint from some star edge, so X stays empty
    CHECK(rep.optimum_edges == 5);
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0].graph6 == canonical_form(realize("K1,5")));
    CHECK(rep.optimum_edges == ex(6, spec).optimum_edges);
}

TEST_CASE("ex_restricted: structural family falls back to unrestricted right side") {
    FamilySpec spec = parse_family("cycles-ge:5");
    SearchReport rep = ex_restricted(6, spec, 2);
    // adding any right-side edge to K_{2,4} closes a 5-cycle; the left edge
    // only ever closes triangles and 4-cycles
    CHECK(rep.optimum_edges == 1 + 2 * 4);
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0].graph6 == canonical_form(join(complete_graph(2), empty_graph(4))));
    CHECK(std::find(rep.flags.begin(), rep.flags.end(), "no-right-degree-bound") !=
          rep.flags.end());
    validate_report(rep, spec);
}

TEST_CASE("ex_restricted: throws when the bipartite core is not free") {
    FamilySpec spec = parse_family("list:C4");
    CHECK_THROWS_AS(ex_restricted(8, spec, 2), search_error);
}

TEST_CASE("candidate_compare: joins at order ten rank by the eigensolver") {
    FamilySpec spec = parse_family("counterexample7");
    CompareReport rep =
        candidate_compare({"K2+2*K1,3", "K2+P8"}, spec, 0.0);
    REQUIRE(rep.ranked.size() == 2);
    for (const auto& c : rep.ranked) {
        CHECK(c.realized);
        CHECK(c.free);
        CHECK(c.n == 10);
        Graph g = realize(c.expr);
        CHECK(c.lambda ==
              Catch::Approx(spectral_radius(g, 0.0).lambda).margin(1e-12));
    }
    CHECK(rep.ranked[0].lambda >= rep.ranked[1].lambda);
}

TEST_CASE("candidate_compare: singleton bipartite core is trivially top") {
    FamilySpec spec = parse_family("list:P6");
    CompareReport rep = candidate_compare({"K2,8"}, spec, 0.0);
    REQUIRE(rep.ranked.size() == 1);
    CHECK(rep.ranked[0].free);
    CHECK(rep.ranked[0].lambda == Catch::Approx(4.0).margin(1e-9));  // sqrt(2*8)
    CHECK(rep.flags.empty());
}

TEST_CASE("candidate_compare: failures are embedded, not thrown") {
    FamilySpec spec = parse_family("list:C4");
    CompareReport rep = candidate_compare({"K1,4", "C4", "K5+"}, spec, 0.0);
    REQUIRE(rep.ranked.size() == 3);
    CHECK(rep.ranked[0].expr == "K1,4");
    CHECK(rep.ranked[0].free);
    // C4 realizes but contains the forbidden member
    CHECK(rep.ranked[1].expr == "C4");
    CHECK(rep.ranked[1].realized);
    CHECK_FALSE(rep.ranked[1].free);
    CHECK(rep.ranked[1].error == "contains a forbidden member");
    // K5+ fails to parse
    CHECK(rep.ranked[2].expr == "K5+");
    CHECK_FALSE(rep.ranked[2].realized);
    CHECK_FALSE(rep.ranked[2].error.empty());
}

TEST_CASE("candidate_compare: exact quotient test certifies an equal pair") {
    // C4 and K_{1,4} share lambda = 2 exactly; both are connected, so the
    // near-tie goes through the exact route and comes back as an equality
    FamilySpec spec = parse_family("list:K5");
    CompareReport rep = candidate_compare({"C4", "K1,4"}, spec, 0.0);
    REQUIRE(rep.ranked.size() == 2);
    CHECK(rep.ranked[0].exact);
    CHECK(rep.ranked[1].exact);
    bool equal_flag = false;
    for (const auto& f : rep.flags)
        if (f.rfind("exact-equal:", 0) == 0) equal_flag = true;
    CHECK(equal_flag);
}

TEST_CASE("candidate_compare: disconnected near-tie is flagged inconclusive") {
    FamilySpec spec = parse_family("list:K5");
    CompareReport rep = candidate_compare({"C4 u K1", "K1,4 u K1"}, spec, 0.0);
    REQUIRE(rep.ranked.size() == 2);
    bool inconclusive = false;
    for (const auto& f : rep.flags)
        if (f.rfind("inconclusive:", 0) == 0) inconclusive = true;
    CHECK(inconclusive);
}

TEST_CASE("spex optimum dominates every free submitted candidate") {
    FamilySpec spec = parse_family("list:M4");
    SearchReport best = spex(6, spec, 0.0);
    CompareReport rep = candidate_compare({"K1,5", "K3 u 3*K1", "P3 u P3"}, spec, 0.0);
    for (const auto& c : rep.ranked)
        if (c.realized && c.free) CHECK(best.optimum_lambda >= c.lambda - 1e-12);
}

TEST_CASE("reports are deterministic across runs and worker counts") {
    FamilySpec spec = parse_family("list:P5");
    SearchOptions one;
    one.workers = 1;
    SearchOptions four;
    four.workers = 4;

    SearchReport e1 = ex(7, spec, false, one);
    SearchReport e4 = ex(7, spec, false, four);
    SearchReport e1b = ex(7, spec, false, one);
    CHECK(e1.to_json_string(false) == e4.to_json_string(false));
    CHECK(e1.to_json_string(false) == e1b.to_json_string(false));

    SearchReport s1 = spex(7, spec, 0.25, false, one);
    SearchReport s4 = spex(7, spec, 0.25, false, four);
    SearchReport s1b = spex(7, spec, 0.25, false, one);
    CHECK(s1.to_json_string(false) == s4.to_json_string(false));
    CHECK(s1.to_json_string(false) == s1b.to_json_string(false));

    // runtime is the only field allowed to differ between runs
    auto j = s1.to_json(true);
    CHECK(j.contains("runtime_ms"));
    CHECK_FALSE(s1.to_json(false).contains("runtime_ms"));
}

TEST_CASE("report JSON carries the documented fields") {
    FamilySpec spec = parse_family("list:M4");
    SearchReport rep = ex(6, spec);
    auto j = rep.to_json(false);
    for (const char* key : {"query", "n", "family", "objective", "optimum", "witnesses",
                            "enumerated", "flags"})
        CHECK(j.contains(key));
    CHECK(j["optimum"].is_number_integer());
    CHECK(j["optimum"] == 5);
    CHECK(j["witnesses"].size() == 1);
    CHECK(rep.csv_row() == "6,5");

    SearchReport sp = spex(6, spec, 0.0);
    auto js = sp.to_json(false);
    CHECK(js["optimum"].is_number_float());
}
