#pragma once
// End-to-end reproduction of the claims the library can check at desk scale:
// a catalog of forbidden-family applications (family + predicted spectral
// extremal graph, checked against brute-force search where feasible), the
// two-construction edge/spectral counterexample with its exact quotient
// matrices and characteristic polynomials, and the labelled-tree statistics
// (the tree operations themselves live in trees.hpp).

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "enumerate.hpp"
#include "equitable.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "family.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "polynomial.hpp"
#include "search.hpp"
#include "spectral.hpp"
#include "trees.hpp"

namespace spexlab {

// --- application catalog ------------------------------------------------------

struct PerNRecord {
    int n = 0;
    std::string predicted;  // canonical graph6 of the predicted extremal graph
    bool freeness_checked = false;
    bool predicted_free = false;
    std::string verdict;              // "matched" / "unmatched" / "skipped"
    std::vector<double> lambda_pred;  // one entry per alpha
    std::vector<double> lambda_best;  // one entry per alpha; empty when skipped
    std::string note;
};

struct CaseResult {
    std::string name;
    std::string citation;
    std::string family;  // family DSL
    int n_lo = 0, n_hi = 0;
    std::vector<double> alphas;
    std::vector<PerNRecord> records;
    int threshold = -1;  // smallest n matched onward; -1 = not observed
    bool all_predictions_free = true;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["case"] = name;
        j["citation"] = citation;
        j["family"] = family;
        j["n_lo"] = n_lo;
        j["n_hi"] = n_hi;
        j["alphas"] = alphas;
        j["threshold"] = threshold >= 0 ? nlohmann::json(threshold) : nlohmann::json("not observed");
        j["all_predictions_free"] = all_predictions_free;
        auto arr = nlohmann::json::array();
        for (const auto& r : records) {
            nlohmann::json e;
            e["n"] = r.n;
            e["predicted"] = r.predicted;
            e["predicted_free"] =
                r.freeness_checked ? nlohmann::json(r.predicted_free) : nlohmann::json("skipped");
            e["verdict"] = r.verdict;
            e["lambda_pred"] = r.lambda_pred;
            e["lambda_best"] = r.lambda_best;
            if (!r.note.empty()) e["note"] = r.note;
            arr.push_back(e);
        }
        j["records"] = arr;
        return j;
    }

    std::string to_markdown() const {
        std::string md = "## Case `" + name + "`\n\n";
        md += "- family: `" + family + "`\n";
        md += "- source: " + citation + "\n";
        md += "- threshold: " +
              (threshold >= 0 ? "matched from n = " + std::to_string(threshold) + " onward"
                              : std::string("not observed")) +
              "\n\n";
        md += "| n | predicted | free | verdict | lambda_pred | lambda_best |\n";
        md += "|---|-----------|------|---------|-------------|-------------|\n";
        for (const auto& r : records) {
            std::string lp, lb;
            for (size_t i = 0; i < r.lambda_pred.size(); ++i)
                lp += (i ? " / " : "") + detail::format_double(r.lambda_pred[i]);
            for (size_t i = 0; i < r.lambda_best.size(); ++i)
                lb += (i ? " / " : "") + detail::format_double(r.lambda_best[i]);
            if (lb.empty()) lb = "-";
            md += "| " + std::to_string(r.n) + " | `" + r.predicted + "` | " +
                  (r.freeness_checked ? (r.predicted_free ? "yes" : "NO") : "skipped") + " | " +
                  r.verdict + " | " + lp + " | " + lb + " |\n";
        }
        return md + "\n";
    }

    // one row per (n, alpha); lambda_best blank and matched "skipped" when
    // the search was infeasible at that order
    std::string to_csv() const {
        std::string csv = "n,lambda_pred,lambda_best,matched\n";
        for (const auto& r : records) {
            for (size_t i = 0; i < r.lambda_pred.size(); ++i) {
                csv += std::to_string(r.n) + "," + detail::format_double(r.lambda_pred[i]) + ",";
                if (i < r.lambda_best.size())
                    csv += detail::format_double(r.lambda_best[i]) + "," +
                           (r.verdict == "matched" ? "1" : "0");
                else
                    csv += ",skipped";
                csv += "\n";
            }
        }
        return csv;
    }
};

namespace detail {

struct CaseDef {
    std::string name;
    std::string citation;
    std::string family_dsl;
    std::function<Graph(int)> predicted;
    int min_n = 1;
    // star-forest style verdict: witnesses must look like K_{shape_k1} joined
    // with an almost-(shape_reg)-regular graph instead of matching one graph
    bool shape_check = false;
    int shape_k1 = 0, shape_reg = 0;
};

inline Graph join_empty(int k, int n) { return join(complete_graph(k), empty_graph(n - k)); }

inline Graph join_edge_rest(int k, int n) {
    return join(complete_graph(k), disjoint_union(complete_graph(2), empty_graph(n - k - 2)));
}

inline const std::vector<CaseDef>& verify_catalog() {
    static const std::vector<CaseDef> defs = [] {
        std::vector<CaseDef> v;
        auto add = [&](std::string name, std::string cite, std::string dsl,
                       std::function<Graph(int)> pred, int min_n) {
            v.push_back({std::move(name), std::move(cite), std::move(dsl), std::move(pred), min_n});
        };
        add("paths", "Balister-Gyori-Lehel-Schelp connected path extremal graphs (even order); spectral form by Nikiforov",
            "list:P6", [](int n) { return join_empty(2, n); }, 6);
        add("paths-odd", "Balister-Gyori-Lehel-Schelp connected path extremal graphs (odd order); spectral form by Nikiforov",
            "list:P7", [](int n) { return join_edge_rest(2, n); }, 7);
        add("matchings", "Erdos-Gallai matching extremal number; spectral form by Feng-Yu-Zhang",
            "list:M4", [](int n) { return join_empty(1, n); }, 5);
        add("copies-of-P3", "Bushaw-Kettle extremal graphs for disjoint short paths; spectral form by Chen-Liu-Zhang",
            "list:2*P3", [](int n) { return join(complete_graph(1), matching_graph(n - 1)); }, 6);
        add("linear-forests", "Lidicky-Liu-Palmer linear forests (an even component); spectral form by Chen-Liu-Zhang",
            "list:P2 u P4", [](int n) { return join_empty(2, n); }, 6);
        add("linear-forests-odd", "Lidicky-Liu-Palmer linear forests (all components odd); spectral form by Chen-Liu-Zhang",
            "list:P3 u P5", [](int n) { return join_edge_rest(2, n); }, 8);
        add("erdos-sos", "spectral Erdos-Sos theorem: graphs containing all trees on 2k+2 vertices (k=1)",
            "all-trees:4", [](int n) { return join_empty(1, n); }, 5);
        add("erdos-sos-odd", "spectral Erdos-Sos theorem: graphs containing all trees on 2k+3 vertices (k=1)",
            "all-trees:5", [](int n) { return join_edge_rest(1, n); }, 6);
        add("long-cycles", "Erdos-Gallai / Kopylov long cycles (odd threshold 5); spectral form by Gao-Hou",
            "cycles-ge:5", [](int n) { return join_empty(2, n); }, 5);
        add("long-cycles-even", "Erdos-Gallai / Kopylov long cycles (even threshold 6); spectral form by Gao-Hou",
            "cycles-ge:6", [](int n) { return join_edge_rest(2, n); }, 6);
        add("consec-even-cycles", "Verstraete bound for k consecutive even cycle lengths (k=2)",
            "consec-even:2", [](int n) { return join_edge_rest(2, n); }, 6);
        add("disjoint-cycles", "Erdos-Posa extremal graph for k disjoint cycles (k=2); spectral form by Liu-Zhai",
            "disjoint-cycles:2", [](int n) { return join_empty(3, n); }, 6);
        add("chorded-cycles", "Posa bound for chorded cycles; spectral form by Zheng-Huang-Wang",
            "chorded:1", [](int n) { return complete_bipartite(2, n - 2); }, 5);
        add("minors-Kk", "Mader minor bound; complete-minor-free spectral extremal graph (k=4)",
            "minor:K4", [](int n) { return join_empty(2, n); }, 5);
        add("friendship-minor", "He-Li-Feng: friendship-graph-minor-free spectral extremal graph (2 triangles)",
            "minor:F2", [](int n) { return join_empty(2, n); }, 5);
        add("small-trees:S2,2,1", "Caro-Patkos-Tuza connected extremal numbers for small trees",
            "list:S2,2,1", [](int n) { return join_empty(2, n); }, 6);
        add("small-trees:S3,1,1", "Caro-Patkos-Tuza connected extremal numbers for small trees",
            "list:S3,1,1", [](int n) { return join(complete_graph(1), matching_graph(n - 1)); }, 6);
        add("small-trees:D2,2", "Caro-Patkos-Tuza connected extremal numbers for small trees",
            "list:D2,2", [](int n) { return complete_bipartite(2, n - 2); }, 6);
        add("small-trees:D2,2*", "Caro-Patkos-Tuza connected extremal numbers for small trees",
            "list:D2,2*", [](int n) { return join_empty(2, n); }, 7);
        add("small-trees:S3,2,1", "Caro-Patkos-Tuza connected extremal numbers for small trees",
            "list:S3,2,1", [](int n) { return join_empty(2, n); }, 7);
        add("small-trees:D2,3", "Caro-Patkos-Tuza connected extremal numbers for small trees",
            "list:D2,3", [](int n) { return complete_bipartite(2, n - 2); }, 7);
        // star forests: extremal and spectral-extremal families can be
        // disjoint; witnesses are checked for the K_{k-1} + almost-regular
        // shape rather than against a single graph
        CaseDef sf;
        sf.name = "star-forests";
        sf.citation = "Lidicky-Liu-Palmer star forests (two K_{1,3}); spectral witnesses are K_1 joined with a 2-regular graph (Chen-Liu-Zhang)";
        sf.family_dsl = "list:2*K1,3";
        sf.predicted = [](int n) { return join(complete_graph(1), cycle_graph(n - 1)); };
        sf.min_n = 8;
        sf.shape_check = true;
        sf.shape_k1 = 1;
        sf.shape_reg = 2;
        v.push_back(std::move(sf));
        // bare "small-trees" aliases the first tree in the group
        for (const auto& d : v)
            if (d.name == "small-trees:S2,2,1") {
                CaseDef alias = d;
                alias.name = "small-trees";
                v.push_back(std::move(alias));
                break;
            }
        return v;
    }();
    return defs;
}

// witnesses of the star-forest shape: exactly k1 dominating vertices, and
// all but at most one remaining vertex with internal degree reg (the rest
// with reg - 1)
inline bool almost_regular_join_shape(const Graph& g, int k1, int reg) {
    int n = g.order();
    std::vector<int> rest;
    int dominating = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1)
            ++dominating;
        else
            rest.push_back(v);
    }
    if (dominating != k1) return false;
    int at_reg = 0, below = 0;
    for (int v : rest) {
        int d = g.degree(v) - k1;
        if (d == reg)
            ++at_reg;
        else if (d == reg - 1)
            ++below;
        else
            return false;
    }
    return below <= 1 && at_reg + below == int(rest.size());
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& d : detail::verify_catalog()) names.push_back(d.name);
    std::sort(names.begin(), names.end());
    return names;
}

inline CaseResult run_case(const std::string& name, int n_lo, int n_hi,
                           const std::vector<double>& alphas = {0.0},
                           const SearchOptions& opts = {}) {
    const detail::CaseDef* def = nullptr;
    for (const auto& d : detail::verify_catalog())
        if (d.name == name) def = &d;
    if (!def) throw std::invalid_argument("run_case: unknown case \"" + name + "\"");
    if (n_lo > n_hi) throw std::invalid_argument("run_case: empty n range");
    if (alphas.empty()) throw std::invalid_argument("run_case: need at least one alpha");

    CaseResult res;
    res.name = def->name;
    res.citation = def->citation;
    res.family = def->family_dsl;
    res.n_lo = n_lo;
    res.n_hi = n_hi;
    res.alphas = alphas;

    FamilySpec fam = parse_family(def->family_dsl);
    for (int n = std::max(n_lo, def->min_n); n <= n_hi; ++n) {
        PerNRecord rec;
        rec.n = n;
        Graph pred = def->predicted(n);
        rec.predicted = canonical_form(pred);
        try {
            rec.predicted_free = is_free(pred, fam, opts.caps);
            rec.freeness_checked = true;
            if (!rec.predicted_free) res.all_predictions_free = false;
        } catch (const cap_exceeded& e) {
            rec.note = std::string("freeness cap: ") + e.what();
        }
        for (double a : alphas)
            rec.lambda_pred.push_back(spectral_radius(pred, a, opts.spectral).lambda);
        if (n <= 9) {
            try {
                bool all_match = true;
                for (double a : alphas) {
                    SearchReport sr = spex(n, fam, a, false, opts);
                    rec.lambda_best.push_back(sr.optimum_lambda);
                    bool pred_in = false;
                    for (const auto& w : sr.witnesses)
                        pred_in = pred_in || (w.graph6 == rec.predicted);
                    // "matched" means the predicted graph is among the
                    // optimizers; exact ties are legitimate at small n and
                    // get noted rather than failing the verdict
                    bool ok = pred_in;
                    if (def->shape_check) {
                        for (const auto& w : sr.witnesses) {
                            Graph wg = graph6_decode(w.graph6);
                            ok = ok && detail::almost_regular_join_shape(wg, def->shape_k1,
                                                                         def->shape_reg);
                        }
                    } else if (pred_in && sr.witnesses.size() > 1 && rec.note.empty()) {
                        rec.note = "tie: " + std::to_string(sr.witnesses.size()) + " optimizers";
                    }
                    all_match = all_match && ok;
                }
                rec.verdict = all_match ? "matched" : "unmatched";
            } catch (const cap_exceeded& e) {
                rec.verdict = "skipped";
                rec.lambda_best.clear();
                rec.note = std::string("search cap: ") + e.what();
            }
        } else {
            rec.verdict = "skipped";
            if (rec.note.empty()) rec.note = "above the order-9 enumeration cap";
        }
        res.records.push_back(std::move(rec));
    }

    // threshold: earliest matched record after which no completed record is
    // unmatched (trailing skipped records do not block it)
    int last_unmatched = -1;
    for (const auto& r : res.records)
        if (r.verdict == "unmatched") last_unmatched = std::max(last_unmatched, r.n);
    for (const auto& r : res.records)
        if (r.verdict == "matched" && r.n > last_unmatched) {
            res.threshold = r.n;
            break;
        }
    return res;
}

// --- counterexample -----------------------------------------------------------

// K2 + c*K_{1,3}: vertices 0,1 dominate; copy t has center 2+4t, leaves after
inline Graph counterexample_G(int n) {
    if (n < 10 || n % 4 != 2)
        throw std::invalid_argument("counterexample: n must be >= 10 and 2 mod 4");
    int c = (n - 2) / 4;
    Graph g(n);
    g.add_edge(0, 1);
    for (int t = 0; t < c; ++t) {
        int center = 2 + 4 * t;
        for (int l = 1; l <= 3; ++l) g.add_edge(center, center + l);
    }
    for (int v = 2; v < n; ++v) {
        g.add_edge(0, v);
        g.add_edge(1, v);
    }
    return g;
}

// K2 + (P8 u c*P4): vertices 0,1 dominate; the P8 sits on 2..9 in path
// order; P4 copy t sits on 10+4t .. 13+4t in path order
inline Graph counterexample_H(int n) {
    if (n < 10 || n % 4 != 2)
        throw std::invalid_argument("counterexample: n must be >= 10 and 2 mod 4");
    int c = (n - 10) / 4;
    Graph g(n);
    g.add_edge(0, 1);
    for (int v = 2; v < 9; ++v) g.add_edge(v, v + 1);
    for (int t = 0; t < c; ++t) {
        int b = 10 + 4 * t;
        g.add_edge(b, b + 1);
        g.add_edge(b + 1, b + 2);
        g.add_edge(b + 2, b + 3);
    }
    for (int v = 2; v < n; ++v) {
        g.add_edge(0, v);
        g.add_edge(1, v);
    }
    return g;
}

namespace detail {

// dominating pair / star centers / star leaves
inline Partition counterexample_partition_G(int n) {
    Partition p;
    p.cells.push_back({0, 1});
    std::vector<int> centers, leaves;
    for (int t = 0; t < (n - 2) / 4; ++t) {
        int center = 2 + 4 * t;
        centers.push_back(center);
        for (int l = 1; l <= 3; ++l) leaves.push_back(center + l);
    }
    p.cells.push_back(std::move(centers));
    p.cells.push_back(std::move(leaves));
    return p;
}

// dominating pair / P4 interiors / P4 ends / the P8 symmetric position
// pairs from the middle outward ({4,5}, {3,6}, {2,7}, {1,8}); the two P4
// cells are dropped when n = 10 leaves no P4 at all
inline Partition counterexample_partition_H(int n) {
    Partition p;
    p.cells.push_back({0, 1});
    if (n > 10) {
        std::vector<int> mids, ends;
        for (int t = 0; t < (n - 10) / 4; ++t) {
            int b = 10 + 4 * t;
            mids.push_back(b + 1);
            mids.push_back(b + 2);
            ends.push_back(b);
            ends.push_back(b + 3);
        }
        p.cells.push_back(std::move(mids));
        p.cells.push_back(std::move(ends));
    }
    p.cells.push_back({5, 6});
    p.cells.push_back({4, 7});
    p.cells.push_back({3, 8});
    p.cells.push_back({2, 9});
    return p;
}

inline RationalMatrix expected_B_G(int n) {
    RationalMatrix b(3);
    Rational q = Rational(n - 2) / 4;
    b.at(0, 0) = 1;
    b.at(0, 1) = q;
    b.at(0, 2) = 3 * q;
    b.at(1, 0) = 2;
    b.at(1, 1) = 0;
    b.at(1, 2) = 3;
    b.at(2, 0) = 2;
    b.at(2, 1) = 1;
    b.at(2, 2) = 0;
    return b;
}

inline RationalMatrix expected_B_H(int n) {
    RationalMatrix b(7);
    Rational h = Rational(n - 10) / 2;
    const int rows[7][7] = {
        {1, 0, 0, 2, 2, 2, 2},  // row 0 columns 1,2 overwritten with h below
        {2, 1, 1, 0, 0, 0, 0},
        {2, 1, 0, 0, 0, 0, 0},
        {2, 0, 0, 1, 1, 0, 0},
        {2, 0, 0, 1, 0, 1, 0},
        {2, 0, 0, 0, 1, 0, 1},
        {2, 0, 0, 0, 0, 1, 0},
    };
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) b.at(i, j) = rows[i][j];
    b.at(0, 1) = h;
    b.at(0, 2) = h;
    return b;
}

inline RationalMatrix drop_rows_cols_12(const RationalMatrix& m) {
    const int keep[5] = {0, 3, 4, 5, 6};
    RationalMatrix out(5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) out.at(i, j) = m.at(keep[i], keep[j]);
    return out;
}

}  // namespace detail

// coefficients (ascending) of the degree-3 characteristic polynomial of the
// three-cell quotient: x^3 - x^2 + (1-2n)x + (9-3n)
inline Polynomial counterexample_poly_G(long long n) {
    return Polynomial({Rational(9 - 3 * n), Rational(1 - 2 * n), Rational(-1), Rational(1)});
}

// ascending coefficients of the degree-7 quotient characteristic polynomial:
// x^7 - 3x^6 + (3-2n)x^5 + (3+n)x^4 + (7n-22)x^3 + (1-n)x^2 + (10-4n)x + (3-n)
inline Polynomial counterexample_poly_H(long long n) {
    return Polynomial({Rational(3 - n), Rational(10 - 4 * n), Rational(1 - n),
                       Rational(7 * n - 22), Rational(3 + n), Rational(3 - 2 * n), Rational(-3),
                       Rational(1)});
}

struct CounterexampleEntry {
    int n = 0;
    std::string g6_G, g6_H;
    long long e_G = 0, e_H = 0;
    bool edge_gap_ok = false;  // e(H) - e(G) == 1
    bool freeness_checked = false;
    bool G_free = false, H_free = false;
    bool B_G_match = false, B_H_match = false;          // exact, entrywise
    bool poly_G_match = false, poly_H_match = false;    // exact, coefficientwise
    double lambda_G = 0.0, lambda_H = 0.0;              // quotient eigenvalues
};

struct CounterexampleReport {
    std::vector<CounterexampleEntry> entries;
    long long ceiling = 0;
    long long crossover = -1;  // smallest n = 2 mod 4 with lambda1(G) > lambda1(H)
    bool all_ok = true;        // every checked item on every entry passed

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["query"] = "counterexample";
        j["ceiling"] = ceiling;
        j["crossover"] = crossover >= 0 ? nlohmann::json(crossover)
                                        : nlohmann::json("none below ceiling");
        j["all_ok"] = all_ok;
        auto arr = nlohmann::json::array();
        for (const auto& e : entries) {
            nlohmann::json r;
            r["n"] = e.n;
            r["G"] = e.g6_G;
            r["H"] = e.g6_H;
            r["edges_G"] = e.e_G;
            r["edges_H"] = e.e_H;
            r["edge_gap_ok"] = e.edge_gap_ok;
            r["freeness"] = e.freeness_checked
                                ? nlohmann::json(std::vector<bool>{e.G_free, e.H_free})
                                : nlohmann::json("skipped");
            r["B_match"] = std::vector<bool>{e.B_G_match, e.B_H_match};
            r["poly_match"] = std::vector<bool>{e.poly_G_match, e.poly_H_match};
            r["lambda_G"] = e.lambda_G;
            r["lambda_H"] = e.lambda_H;
            arr.push_back(r);
        }
        j["entries"] = arr;
        return j;
    }

    std::string to_markdown() const {
        std::string md = "## Counterexample constructions\n\n";
        md += "Two joins on n = 2 (mod 4) vertices: G = K2 + ((n-2)/4) K_{1,3} and "
              "H = K2 + (P8 u ((n-10)/4) P4).  H always has exactly one more edge; "
              "the spectral order flips in favour of G at the crossover order.\n\n";
        md += "| n | e(G) | e(H) | gap ok | free | B exact | poly exact | lambda_G | lambda_H |\n";
        md += "|---|------|------|--------|------|---------|------------|----------|----------|\n";
        for (const auto& e : entries) {
            md += "| " + std::to_string(e.n) + " | " + std::to_string(e.e_G) + " | " +
                  std::to_string(e.e_H) + " | " + (e.edge_gap_ok ? "yes" : "NO") + " | " +
                  (e.freeness_checked ? (e.G_free && e.H_free ? "yes" : "NO") : "skipped") +
                  " | " + (e.B_G_match && e.B_H_match ? "yes" : "NO") + " | " +
                  (e.poly_G_match && e.poly_H_match ? "yes" : "NO") + " | " +
                  detail::format_double(e.lambda_G) + " | " + detail::format_double(e.lambda_H) +
                  " |\n";
        }
        md += "\ncrossover: ";
        md += crossover >= 0 ? "n = " + std::to_string(crossover)
                             : "none below " + std::to_string(ceiling);
        return md + "\n";
    }
};

// exact verdict of lambda1(G) > lambda1(H) at a concrete order via the two
// printed polynomials; both leading roots exceed sqrt(2(n-2)) >= 4, so any
// lower bound below that is safe
inline bool counterexample_G_wins(long long n) {
    RootComparison cmp =
        compare_largest_roots(counterexample_poly_G(n), counterexample_poly_H(n), Rational(1));
    return cmp.verdict == RootOrder::FirstGreater;
}

inline long long counterexample_crossover(long long ceiling = 1000000) {
    for (long long n = 10; n <= ceiling; n += 4)
        if (counterexample_G_wins(n)) return n;
    return -1;
}

inline CounterexampleReport counterexample_report(const std::vector<int>& n_list,
                                                  long long ceiling = 1000000,
                                                  const FamilyCaps& caps = {}) {
    CounterexampleReport rep;
    rep.ceiling = ceiling;
    FamilySpec fam = FamilySpec::counterexample7();
    for (int n : n_list) {
        CounterexampleEntry e;
        e.n = n;
        Graph G = counterexample_G(n);  // validates n
        Graph H = counterexample_H(n);
        e.g6_G = canonical_form(G);
        e.g6_H = canonical_form(H);
        e.e_G = G.size();
        e.e_H = H.size();
        e.edge_gap_ok = (e.e_H - e.e_G == 1);

        if (n <= 14) {
            e.freeness_checked = true;
            e.G_free = is_free(G, fam, caps);
            e.H_free = is_free(H, fam, caps);
        }

        QuotientMatrix qG = quotient(G, detail::counterexample_partition_G(n));
        e.B_G_match = (qG.B == detail::expected_B_G(n));
        e.poly_G_match = (char_poly(qG.B) == counterexample_poly_G(n));
        e.lambda_G = qG.lambda1();

        QuotientMatrix qH = quotient(H, detail::counterexample_partition_H(n));
        if (n > 10) {
            e.B_H_match = (qH.B == detail::expected_B_H(n));
            e.poly_H_match = (char_poly(qH.B) == counterexample_poly_H(n));
        } else {
            // at n = 10 the two P4 cells are empty: the printed matrix loses
            // rows/columns 2 and 3, and its polynomial gains the factor
            // x^2 - x - 1 from that vanished block (roots below lambda1)
            e.B_H_match = (qH.B == detail::drop_rows_cols_12(detail::expected_B_H(n)));
            Polynomial extra({Rational(-1), Rational(-1), Rational(1)});
            e.poly_H_match = (char_poly(qH.B) * extra == counterexample_poly_H(n));
        }
        e.lambda_H = qH.lambda1();

        bool entry_ok = e.edge_gap_ok && e.B_G_match && e.B_H_match && e.poly_G_match &&
                        e.poly_H_match && (!e.freeness_checked || (e.G_free && e.H_free));
        rep.all_ok = rep.all_ok && entry_ok;
        rep.entries.push_back(std::move(e));
    }
    rep.crossover = counterexample_crossover(ceiling);
    return rep;
}

}  // namespace spexlab
