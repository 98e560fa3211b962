#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>
#include <vector>

#include "spexlab/canonical.hpp"
#include "spexlab/expr.hpp"
#include "spexlab/family.hpp"
#include "spexlab/trees.hpp"

using namespace spexlab;

TEST_CASE("Prüfer decoding is the Cayley bijection", "[trees]") {
    CHECK(prufer_decode({}).size() == 1);  // the single tree on 2 vertices
    Graph star = prufer_decode({3, 3, 3});
    CHECK(canonical_form(star) == canonical_form(star_graph(4)));
    Graph path = prufer_decode({1, 2, 3});
    CHECK(canonical_form(path) == canonical_form(path_graph(5)));

    for (int m = 3; m <= 6; ++m) {
        std::set<std::vector<std::pair<int, int>>> edge_sets;
        long long total = 0;
        detail::for_each_labelled_tree(m, [&](const Graph& t) {
            ++total;
            REQUIRE(t.order() == m);
            REQUIRE(t.size() == m - 1);
            REQUIRE(t.is_connected());
            edge_sets.insert(t.edges());
        });
        long long cayley = 1;
        for (int i = 0; i < m - 2; ++i) cayley *= m;
        REQUIRE(total == cayley);
        REQUIRE(static_cast<long long>(edge_sets.size()) == cayley);  // distinct labelled trees
    }

    CHECK_THROWS_AS(prufer_decode({5}), std::invalid_argument);
    CHECK_THROWS_AS(prufer_decode({-1}), std::invalid_argument);
}

TEST_CASE("uniform sampling hits every labelled tree", "[trees]") {
    std::mt19937_64 rng(424242);
    std::map<std::vector<std::pair<int, int>>, int> freq;
    const int samples = 16000;
    for (int i = 0; i < samples; ++i) ++freq[random_tree(4, rng).edges()];
    REQUIRE(freq.size() == 16);
    for (const auto& [edges, count] : freq) {
        CHECK(count > 800);  // expectation 1000; bounds are ~6 sigma
        CHECK(count < 1200);
    }
}

TEST_CASE("good-tree predicate on named trees", "[trees]") {
    CHECK_FALSE(good_tree(path_graph(4)));
    CHECK_FALSE(good_tree(star_graph(3)));
    CHECK_FALSE(good_tree(realize("S2,1,1")));  // its degree-3 vertex sits in A
    CHECK(good_tree(realize("D2,2")));
    CHECK(good_tree(realize("D2,3")));
    CHECK_FALSE(good_tree(path_graph(1)));
    CHECK_FALSE(good_tree(path_graph(2)));
    CHECK_THROWS_AS(good_tree(cycle_graph(3)), std::invalid_argument);
    CHECK_THROWS_AS(good_tree(matching_graph(4)), std::invalid_argument);
}

TEST_CASE("good trees imply a free saturated bipartite host", "[trees]") {
    for (int t = 4; t <= 7; ++t)
        for (const Graph& tree : all_trees_on(t)) {
            if (!good_tree(tree)) continue;
            int small = tree_small_side(tree);
            REQUIRE(small >= 2);  // |A| = 1 cannot host a heavy B-vertex
            REQUIRE(small <= 4);
            int k = small - 1;
            FamilySpec spec = FamilySpec::finite_list({tree}, {"T"});
            for (int mp : {t, 2 * t}) {
                REQUIRE(is_free(complete_bipartite(k, mp), spec));
                REQUIRE(is_saturated(complete_bipartite(k, mp), spec));
            }
        }
}

TEST_CASE("tree statistics: exhaustive small orders", "[trees]") {
    TreeStats four = tree_stats(4, 100, 1);
    CHECK(four.exhaustive);
    CHECK(four.samples == 16);
    CHECK(four.good_count == 0);
    CHECK(four.fraction == 0.0);
    CHECK(four.half_width == 0.0);

    TreeStats six = tree_stats(6, 100, 1);
    CHECK(six.exhaustive);
    CHECK(six.samples == 1296);
    // D_{2,2} is the unique good tree shape on 6 vertices; it has
    // 6!/(2*2*2) = 90 labellings
    CHECK(six.good_count == 90);

    CHECK_THROWS_AS(tree_stats(2, 100, 1), std::invalid_argument);
}

TEST_CASE("tree statistics: sampled orders are deterministic and trend upward", "[trees]") {
    TreeStats a = tree_stats(16, 20000, 42);
    TreeStats b = tree_stats(16, 20000, 42);
    CHECK(a.good_count == b.good_count);
    CHECK(a.fraction == b.fraction);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.half_width > 0.0);

    std::vector<TreeStats> runs;
    for (int m : {8, 16, 32, 64}) runs.push_back(tree_stats(m, 20000, 42));
    CHECK(runs[0].exhaustive);  // 8^6 sequences
    // frozen from an independent sampling script
    CHECK(std::abs(runs[0].fraction - 0.13) < 0.04);
    CHECK(std::abs(runs[1].fraction - 0.22) < 0.04);
    CHECK(std::abs(runs[2].fraction - 0.36) < 0.04);
    CHECK(std::abs(runs[3].fraction - 0.57) < 0.04);
    for (size_t i = 0; i + 1 < runs.size(); ++i)
        CHECK(runs[i + 1].fraction + 2 * runs[i + 1].half_width + 2 * runs[i].half_width >=
              runs[i].fraction);
}

TEST_CASE("labelled-tree edge counts match the closed formulas", "[trees]") {
    for (int n = 4; n <= 8; ++n) {
        TreeEdgeCounts counts = tree_edge_counts(n);
        REQUIRE(counts.one_edge == counts.predicted_one_edge());
        REQUIRE(counts.shared_pair == counts.predicted_shared_pair());
        REQUIRE(counts.disjoint_pair == counts.predicted_disjoint_pair());
    }
    TreeEdgeCounts five = tree_edge_counts(5);
    CHECK(five.total == 125);
    CHECK(five.one_edge == 50);
    CHECK(five.shared_pair == 15);
    CHECK(five.disjoint_pair == 20);
    TreeEdgeCounts six = tree_edge_counts(6);
    CHECK(six.one_edge == 432);
    CHECK(six.shared_pair == 108);
    CHECK(six.disjoint_pair == 144);
    TreeEdgeCounts four = tree_edge_counts(4);
    CHECK(four.total == 16);
    CHECK(four.one_edge == 8);

    CHECK_THROWS_AS(tree_edge_counts(3), cap_exceeded);
    CHECK_THROWS_AS(tree_edge_counts(9), cap_exceeded);
}
