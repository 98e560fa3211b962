#pragma once
// Extremal search over isomorphism classes: maximum edge count (ex) and
// maximum A_alpha spectral radius (spex) among graphs avoiding a forbidden
// family, a restricted variant over supergraphs of a spanning K_{k,n-k}
// (ex_restricted), and a candidate-ranking helper (candidate_compare) for
// orders beyond enumeration reach.

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
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
#include "spectral.hpp"

namespace spexlab {

struct SearchOptions {
    int workers = 1;
    // lambda objective: every class within tie_tol of the best is a witness.
    double tie_tol = 1e-9;
    // ties are re-examined with exact characteristic polynomials; roots
    // closer than exact_tie_tol are then compared symbolically.
    double exact_tie_tol = 1e-12;
    FamilyCaps caps{};
    SpectralOptions spectral{};
};

struct Witness {
    std::string graph6;         // canonical form
    std::string decomposition;  // restricted search: left edges + right graph
    std::string pattern;        // restricted search: right-side shape class
};

namespace detail {

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace detail

struct SearchReport {
    std::string query;      // "ex", "ex-connected", "ex-restricted", "spex"
    int n = 0;
    std::string family;
    std::string objective;  // "edges" or "lambda(alpha=...)"
    long long optimum_edges = -1;
    double optimum_lambda = 0.0;
    std::vector<Witness> witnesses;  // sorted by canonical form
    uint64_t enumerated = 0;         // graphs examined
    std::string restricted_to;       // nonempty for connected/restricted runs
    long long runtime_ms = 0;
    std::vector<std::string> flags;

    bool edges_objective() const { return objective == "edges"; }

    nlohmann::json to_json(bool include_runtime = true) const {
        nlohmann::json j;
        j["query"] = query;
        j["n"] = n;
        j["family"] = family;
        j["objective"] = objective;
        if (edges_objective())
            j["optimum"] = optimum_edges;
        else
            j["optimum"] = optimum_lambda;
        auto wits = nlohmann::json::array();
        for (const auto& w : witnesses) wits.push_back(w.graph6);
        j["witnesses"] = wits;
        bool any_detail = false;
        for (const auto& w : witnesses)
            if (!w.decomposition.empty() || !w.pattern.empty()) any_detail = true;
        if (any_detail) {
            auto det = nlohmann::json::array();
            for (const auto& w : witnesses) {
                nlohmann::json d;
                d["graph6"] = w.graph6;
                if (!w.decomposition.empty()) d["decomposition"] = w.decomposition;
                if (!w.pattern.empty()) d["pattern"] = w.pattern;
                det.push_back(d);
            }
            j["witness_details"] = det;
        }
        j["enumerated"] = enumerated;
        if (!restricted_to.empty()) j["restricted_to"] = restricted_to;
        if (include_runtime) j["runtime_ms"] = runtime_ms;
        j["flags"] = flags;
        return j;
    }

    std::string to_json_string(bool include_runtime = true) const {
        return to_json(include_runtime).dump(2) + "\n";
    }

    static std::string csv_header() { return "n,optimum"; }

    std::string csv_row() const {
        if (edges_objective()) return std::to_string(n) + "," + std::to_string(optimum_edges);
        return std::to_string(n) + "," + detail::format_double(optimum_lambda);
    }
};

namespace detail {

inline long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

// Enumeration with a freeness prune.  Freeness is monotone under taking
// subgraphs for every family kind: deleting the last-added vertex can only
// remove subgraph embeddings, cycles, packings, minors, subdivisions, and
// seven-rule items, and for the all-trees kind a subgraph misses at least
// the trees its supergraph misses.  Hence a non-free intermediate graph can
// never augment into a free one, and abandoning its whole subtree is sound.
inline EnumOptions make_enum_options(const FamilySpec& spec, bool connected,
                                     const SearchOptions& opts) {
    EnumOptions eo;
    eo.connected = connected;
    eo.workers = std::max(1, opts.workers);
    FamilyCaps caps = opts.caps;
    eo.keep = [spec, caps](const Graph& g) { return is_free(g, spec, caps); };
    return eo;
}

inline std::string lambda_objective(double alpha) {
    return "lambda(alpha=" + format_double(alpha) + ")";
}

}  // namespace detail

// --- ex: maximum edge count ------------------------------------------------

inline SearchReport ex(int n, const FamilySpec& spec, bool connected = false,
                       const SearchOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("ex: n must be >= 1");
    auto t0 = std::chrono::steady_clock::now();
    EnumOptions eo = detail::make_enum_options(spec, connected, opts);

    struct Acc {
        long long best = -1;
        std::vector<std::string> wit;
        char pad[40];  // keep per-worker slots off the same cache line
    };
    std::vector<Acc> acc(eo.workers);
    uint64_t count = enumerate_graphs(n, eo, [&](const Graph& g, int w) {
        Acc& a = acc[w];
        long long e = g.size();
        if (e < a.best) return;
        if (e > a.best) {
            a.best = e;
            a.wit.clear();
        }
        a.wit.push_back(canonical_form(g));
    });

    SearchReport rep;
    rep.query = connected ? "ex-connected" : "ex";
    rep.n = n;
    rep.family = spec.text;
    rep.objective = "edges";
    rep.enumerated = count;
    if (connected) rep.restricted_to = "connected graphs";

    long long best = -1;
    for (const Acc& a : acc) best = std::max(best, a.best);
    if (best < 0)
        throw search_error("ex: no free " + std::string(connected ? "connected " : "") +
                           "graph on " + std::to_string(n) + " vertices");
    std::vector<std::string> forms;
    for (const Acc& a : acc)
        if (a.best == best) forms.insert(forms.end(), a.wit.begin(), a.wit.end());
    std::sort(forms.begin(), forms.end());
    for (const auto& f : forms) rep.witnesses.push_back({f, "", ""});
    rep.optimum_edges = best;
    rep.runtime_ms = detail::elapsed_ms(t0);
    return rep;
}

// --- spex: maximum A_alpha spectral radius ----------------------------------

inline SearchReport spex(int n, const FamilySpec& spec, double alpha = 0.0,
                         bool connected = false, const SearchOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("spex: n must be >= 1");
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("spex: alpha must lie in [0,1)");
    auto t0 = std::chrono::steady_clock::now();
    EnumOptions eo = detail::make_enum_options(spec, connected, opts);

    struct Cand {
        double lam;
        Graph g;
    };
    struct Acc {
        double best = -1.0;  // every spectral radius is >= 0
        std::vector<Cand> cands;
        char pad[24];
    };
    std::vector<Acc> acc(eo.workers);
    // Keep a safety margin above the final tie cut so per-worker pruning can
    // never discard a class that the merged report would call a witness.
    const double margin = 2 * opts.tie_tol + 1e-15;
    uint64_t count = enumerate_graphs(n, eo, [&](const Graph& g, int w) {
        Acc& a = acc[w];
        double lam = spectral_radius(g, alpha, opts.spectral).lambda;
        if (lam <= a.best - margin) return;
        if (lam > a.best) a.best = lam;
        a.cands.push_back({lam, g});
        if (a.cands.size() >= 128) {
            double cut = a.best - margin;
            a.cands.erase(std::remove_if(a.cands.begin(), a.cands.end(),
                                         [&](const Cand& c) { return c.lam <= cut; }),
                          a.cands.end());
        }
    });

    SearchReport rep;
    rep.query = "spex";
    rep.n = n;
    rep.family = spec.text;
    rep.objective = detail::lambda_objective(alpha);
    rep.enumerated = count;
    if (connected) rep.restricted_to = "connected graphs";

    double best = -1.0;
    for (const Acc& a : acc) best = std::max(best, a.best);
    if (best < 0)
        throw search_error("spex: no free " + std::string(connected ? "connected " : "") +
                           "graph on " + std::to_string(n) + " vertices");

    struct Pooled {
        std::string form;
        double lam;
        Graph g;
        bool operator<(const Pooled& o) const { return form < o.form; }
    };
    std::vector<Pooled> pool;
    for (const Acc& a : acc)
        for (const Cand& c : a.cands)
            if (c.lam >= best - opts.tie_tol) pool.push_back({canonical_form(c.g), c.lam, c.g});
    std::sort(pool.begin(), pool.end());
    rep.optimum_lambda = best;
    for (const auto& p : pool) rep.witnesses.push_back({p.form, "", ""});

    if (pool.size() > 1) {
        rep.flags.push_back("tie");
        // Escalate: exact characteristic polynomial of A_alpha (alpha taken
        // at its exact binary value), largest real root isolated to 1e-13.
        std::vector<Polynomial> polys(pool.size());
        std::vector<double> exact(pool.size());
        double exact_best = -1.0;
        for (size_t i = 0; i < pool.size(); ++i) {
            polys[i] = char_poly(a_alpha_rational(pool[i].g, Rational(alpha)));
            exact[i] = max_real_root(polys[i], pool[i].lam - 1.0, 1e-13);
            exact_best = std::max(exact_best, exact[i]);
        }
        std::vector<size_t> close;
        for (size_t i = 0; i < pool.size(); ++i)
            if (exact[i] >= exact_best - opts.exact_tie_tol) close.push_back(i);
        if (close.size() < pool.size())
            rep.flags.push_back("tie-escalated(survivors=" + std::to_string(close.size()) + ")");
        if (close.size() == 1) {
            rep.flags.push_back("tie-resolved:" + pool[close[0]].form);
        } else {
            // Adjudicate the survivors symbolically; a tournament with exact
            // root comparisons either crowns a unique maximum, certifies a
            // genuine equality, or reports the tie unresolved.
            Rational lower = Rational(exact_best) - 1;
            std::vector<size_t> leaders{close[0]};
            bool unresolved = false;
            for (size_t t = 1; t < close.size(); ++t) {
                size_t i = leaders[0], j = close[t];
                RootComparison cmp = compare_largest_roots(polys[i], polys[j], lower);
                switch (cmp.verdict) {
                    case RootOrder::FirstGreater: break;
                    case RootOrder::SecondGreater: leaders.assign(1, j); break;
                    case RootOrder::Equal: leaders.push_back(j); break;
                    case RootOrder::Unresolved:
                        leaders.push_back(j);
                        unresolved = true;
                        break;
                }
            }
            if (unresolved)
                rep.flags.push_back("tie-unresolved");
            else if (leaders.size() == close.size() && close.size() == pool.size())
                rep.flags.push_back("tie-exact-equal");
            else if (leaders.size() == 1)
                rep.flags.push_back("tie-resolved:" + pool[leaders[0]].form);
            else
                rep.flags.push_back("tie-exact-equal(group=" + std::to_string(leaders.size()) + ")");
        }
    }
    rep.runtime_ms = detail::elapsed_ms(t0);
    return rep;
}

// --- ex_restricted: supergraphs of a spanning K_{k,n-k} ----------------------

namespace detail {

// Smallest, over bipartite family members F and proper 2-colorings of F with
// one side of size <= k+1, of the minimum degree on that side.  In a free
// supergraph of K_{k,n-k} a right-side vertex u with internal degree above
// this bound would complete such an F through the complete bipartite core
// (small side -> u plus left vertices, other side -> right vertices) once n
// is large enough, so right-side graphs can be generated with this degree
// cap.  Only derivable for finite lists; -1 means no bound.
inline int right_degree_bound(const FamilySpec& spec, int k) {
    if (spec.kind != FamilySpec::Kind::FiniteList) return -1;
    int best = -1;
    for (const Graph& f : spec.members) {
        int nf = f.order();
        if (nf == 0 || f.size() == 0) continue;  // edgeless members never bound degrees
        std::vector<int> color(nf, -1), comp_of(nf, -1);
        int comps = 0;
        bool bipartite = true;
        for (int s = 0; s < nf && bipartite; ++s) {
            if (color[s] != -1) continue;
            color[s] = 0;
            comp_of[s] = comps;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && bipartite) {
                int u = q.front();
                q.pop();
                f.neighbors(u).for_each([&](int v) {
                    if (color[v] == -1) {
                        color[v] = color[u] ^ 1;
                        comp_of[v] = comps;
                        q.push(v);
                    } else if (color[v] == color[u]) {
                        bipartite = false;
                    }
                });
            }
            ++comps;
        }
        if (!bipartite || comps > 20) continue;  // non-bipartite members never embed in K_{k+1,inf}
        int local = INT_MAX;
        for (uint32_t mask = 0; mask < (uint32_t(1) << comps); ++mask) {
            int cnt = 0, mindeg = INT_MAX;
            for (int v = 0; v < nf && cnt <= k + 1; ++v)
                if ((color[v] ^ ((mask >> comp_of[v]) & 1)) == 0) {
                    ++cnt;
                    mindeg = std::min(mindeg, f.degree(v));
                }
            if (cnt >= 1 && cnt <= k + 1) local = std::min(local, mindeg);
        }
        if (local == INT_MAX) continue;  // F does not fit inside K_{k+1,inf}
        best = best < 0 ? local : std::min(best, local);
    }
    return best;
}

// One representative per isomorphism class of graphs on r vertices with
// maximum degree <= d.  For d <= 2 a class is a disjoint multiset of paths
// and cycles, so the classes come straight from labelled integer partitions
// (piece ranks: paths by size, then cycles by size) with no order cap; the
// general enumerator handles d >= 3 and the unbounded case within its caps.
inline void bounded_degree_classes(int r, int d,
                                   const std::function<void(const Graph&)>& visit) {
    if (r < 0) throw std::invalid_argument("bounded_degree_classes: r must be >= 0");
    if (d > 2 || d < 0) {
        EnumOptions eo;
        eo.max_degree = d;
        enumerate_graphs(r, eo, [&](const Graph& g, int) { visit(g); });
        return;
    }
    if (r > 32) throw cap_exceeded("bounded-degree generation capped at 32 vertices");
    if (d == 0 || r <= 1) {
        visit(Graph(r));
        return;
    }
    if (d == 1) {
        for (int j = 0; j <= r / 2; ++j) {
            Graph g(r);
            for (int i = 0; i < j; ++i) g.add_edge(2 * i, 2 * i + 1);
            visit(g);
        }
        return;
    }
    struct Piece {
        bool cycle;
        int size;
    };
    std::vector<Piece> pieces;
    std::function<void(int, int)> rec = [&](int left, int min_rank) {
        if (left == 0) {
            Graph g(r);
            int base = 0;
            for (const Piece& p : pieces) {
                for (int i = 1; i < p.size; ++i) g.add_edge(base + i - 1, base + i);
                if (p.cycle) g.add_edge(base, base + p.size - 1);
                base += p.size;
            }
            visit(g);
            return;
        }
        for (int rank = min_rank; rank <= 2 * r; ++rank) {
            bool cyc = rank > r;
            int size = cyc ? rank - r : rank;
            if (cyc && size < 3) continue;
            if (size > left) continue;
            pieces.push_back({cyc, size});
            rec(left - size, rank);
            pieces.pop_back();
        }
    };
    rec(r, 1);
}

// Right-side shape classification for a complete-left witness; the match
// order (empty, matching, P3-union, few edges, irregular) is fixed so the
// labels are deterministic even when small orders make shapes coincide.
inline std::string classify_right_side(const Graph& x) {
    int r = x.order();
    if (x.size() == 0) return "Q=0";
    std::string cx = canonical_form(x);
    if (r >= 2 && cx == canonical_form(maximal_union(path_graph(2), r))) return "Q=1/2";
    if (r >= 3 && cx == canonical_form(maximal_union(path_graph(3), r))) return "Q=2/3";
    if (x.size() <= 3) return "Q=0";  // bounded edit of the empty pattern
    return "irregular";
}

}  // namespace detail

inline SearchReport ex_restricted(int n, const FamilySpec& spec, int k,
                                  const SearchOptions& opts = {}) {
    if (k < 1 || k > 4) throw std::invalid_argument("ex_restricted: k must lie in [1,4]");
    if (n - k < 1) throw std::invalid_argument("ex_restricted: need n > k");
    auto t0 = std::chrono::steady_clock::now();
    int r = n - k;

    // For a finite forbidden list, a candidate only counts as free when it
    // stays free after appending extra right-side vertices joined to every
    // left vertex (freeness for every larger order).  Padding by the largest
    // member's order is exact: an embedding of a member can touch at most
    // that many padding vertices.
    int pad = 0;
    if (spec.kind == FamilySpec::Kind::FiniteList)
        for (const Graph& f : spec.members) pad = std::max(pad, f.order());

    // vertices 0..k-1 form the left side, k..n-1 the right side;
    // in the padded scaffold the padding occupies n..n+pad-1
    Graph base = complete_bipartite(k, r);
    Graph padded_base = complete_bipartite(k, r + pad);
    if (!is_free(padded_base, spec, opts.caps))
        throw search_error("ex_restricted: K_{" + std::to_string(k) + "," + std::to_string(r) +
                           "} completes a forbidden member (possibly only at larger orders)");

    SearchReport rep;
    rep.query = "ex-restricted";
    rep.n = n;
    rep.family = spec.text;
    rep.objective = "edges";

    std::string core = "K_{" + std::to_string(k) + "," + std::to_string(r) + "}";
    int m = detail::right_degree_bound(spec, k);
    int d;
    if (m >= 0) {
        d = m;
        rep.restricted_to =
            "supergraphs of a spanning " + core + "; right-side internal degree capped at " +
            std::to_string(m) +
            " (a free supergraph exceeding it would complete a family member through the "
            "bipartite core; valid for n large enough)";
        rep.flags.push_back("right-degree-bound=" + std::to_string(k) + "+" + std::to_string(m));
    } else {
        d = -1;
        rep.restricted_to = "supergraphs of a spanning " + core + "; right side unrestricted";
        rep.flags.push_back("no-right-degree-bound");
    }
    if (pad > 0) {
        rep.restricted_to +=
            "; freeness is checked with " + std::to_string(pad) +
            " extra dominated right vertices appended, i.e. for every larger order";
        rep.flags.push_back("right-padding=" + std::to_string(pad));
    }

    std::vector<std::pair<int, int>> left_pairs;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) left_pairs.emplace_back(u, v);

    // The right side never needs more internal edges than the family allows
    // on its own: any member inside X alone is a member of the supergraph.
    std::vector<Graph> rights;
    detail::bounded_degree_classes(r, d, [&](const Graph& x) {
        if (is_free(x, spec, opts.caps)) rights.push_back(x);
    });

    long long best = -1;
    std::map<std::string, Witness> found;  // canonical form -> witness
    uint64_t combos = 0;
    for (const Graph& x : rights) {
        for (uint64_t sm = 0; sm < (uint64_t(1) << left_pairs.size()); ++sm) {
            ++combos;
            long long e = __builtin_popcountll(sm) + (long long)k * r + x.size();
            if (e < best) continue;
            Graph gp = padded_base;
            for (size_t i = 0; i < left_pairs.size(); ++i)
                if ((sm >> i) & 1) gp.add_edge(left_pairs[i].first, left_pairs[i].second);
            for (auto [u, v] : x.edges()) gp.add_edge(k + u, k + v);
            if (!is_free(gp, spec, opts.caps)) continue;
            Graph g = base;
            for (size_t i = 0; i < left_pairs.size(); ++i)
                if ((sm >> i) & 1) g.add_edge(left_pairs[i].first, left_pairs[i].second);
            for (auto [u, v] : x.edges()) g.add_edge(k + u, k + v);
            if (e > best) {
                best = e;
                found.clear();
            }
            Witness w;
            w.graph6 = canonical_form(g);
            std::string left;
            for (size_t i = 0; i < left_pairs.size(); ++i)
                if ((sm >> i) & 1) {
                    if (!left.empty()) left += ",";
                    left += std::to_string(left_pairs[i].first) + "-" +
                            std::to_string(left_pairs[i].second);
                }
            if (left.empty()) left = "none";
            w.decomposition = "left-edges=" + left + "; X=" + canonical_form(x);
            w.pattern = (__builtin_popcountll(sm) == (long long)left_pairs.size())
                            ? detail::classify_right_side(x)
                            : "left-incomplete";
            auto it = found.find(w.graph6);
            if (it == found.end() || w.decomposition < it->second.decomposition)
                found[w.graph6] = w;
        }
    }
    // padded_base is free and appears as (X = empty, no left edges), so
    // found is never empty here
    rep.optimum_edges = best;
    rep.enumerated = combos;
    bool violated = false;
    for (const auto& [form, w] : found) {
        rep.witnesses.push_back(w);
        if (w.pattern == "irregular" || w.pattern == "left-incomplete") violated = true;
    }
    if (violated) rep.flags.push_back("pattern-violated");
    rep.runtime_ms = detail::elapsed_ms(t0);
    return rep;
}

// --- candidate_compare: ranking constructions beyond enumeration reach -------

struct CandidateResult {
    std::string expr;
    bool realized = false;
    bool free = false;
    std::string error;   // parse/realization/freeness failure, if any
    int n = 0;
    long long edges = 0;
    double lambda = 0.0;
    std::string graph6;  // canonical form
    bool connected = false;
    bool exact = false;  // took part in an exact char-poly comparison
};

struct CompareReport {
    double alpha = 0.0;
    std::string family;
    std::vector<CandidateResult> ranked;  // free candidates by decreasing lambda, then failures
    std::vector<std::string> flags;
    long long runtime_ms = 0;

    nlohmann::json to_json(bool include_runtime = true) const {
        nlohmann::json j;
        j["query"] = "compare";
        j["alpha"] = alpha;
        j["family"] = family;
        auto arr = nlohmann::json::array();
        for (const auto& c : ranked) {
            nlohmann::json e;
            e["expr"] = c.expr;
            e["realized"] = c.realized;
            e["free"] = c.free;
            if (!c.error.empty()) e["error"] = c.error;
            if (c.realized) {
                e["n"] = c.n;
                e["edges"] = c.edges;
                e["graph6"] = c.graph6;
                e["connected"] = c.connected;
            }
            if (c.realized && c.free) {
                e["lambda"] = c.lambda;
                e["exact"] = c.exact;
            }
            arr.push_back(e);
        }
        j["candidates"] = arr;
        j["flags"] = flags;
        if (include_runtime) j["runtime_ms"] = runtime_ms;
        return j;
    }

    std::string to_json_string(bool include_runtime = true) const {
        return to_json(include_runtime).dump(2) + "\n";
    }
};

inline CompareReport candidate_compare(const std::vector<std::string>& exprs,
                                       const FamilySpec& spec, double alpha = 0.0,
                                       const SearchOptions& opts = {}) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("candidate_compare: alpha must lie in [0,1)");
    auto t0 = std::chrono::steady_clock::now();
    CompareReport rep;
    rep.alpha = alpha;
    rep.family = spec.text;

    struct Entry {
        CandidateResult res;
        Graph g{0};
        bool has_poly = false;
        Polynomial poly;  // exact A_alpha char poly of the equitable quotient
    };
    std::vector<Entry> ok;
    std::vector<CandidateResult> bad;
    for (const auto& text : exprs) {
        Entry e;
        e.res.expr = text;
        try {
            e.g = realize(text);
            e.res.realized = true;
            e.res.n = e.g.order();
            e.res.edges = e.g.size();
            e.res.graph6 = canonical_form(e.g);
            e.res.connected = e.g.is_connected();
            try {
                e.res.free = is_free(e.g, spec, opts.caps);
                if (!e.res.free) e.res.error = "contains a forbidden member";
            } catch (const cap_exceeded& ce) {
                e.res.error = std::string("freeness check hit a cap: ") + ce.what();
            }
        } catch (const std::exception& ex) {
            e.res.error = ex.what();
        }
        if (e.res.realized && e.res.free) {
            if (e.res.n < 1) {
                e.res.error = "empty graph has no spectral radius";
                bad.push_back(e.res);
                continue;
            }
            e.res.lambda = spectral_radius(e.g, alpha, opts.spectral).lambda;
            ok.push_back(std::move(e));
        } else {
            bad.push_back(e.res);
        }
    }

    std::stable_sort(ok.begin(), ok.end(), [](const Entry& a, const Entry& b) {
        if (a.res.lambda != b.res.lambda) return a.res.lambda > b.res.lambda;
        return a.res.graph6 < b.res.graph6;
    });

    // Near-ties between neighbours get an exact verdict when both sides are
    // connected (the equitable quotient of a connected graph carries its
    // Perron value, so quotient char polys decide the order symbolically).
    // A repeated adjacent pass keeps the order consistent with any swaps.
    auto quotient_poly = [&](Entry& e) {
        if (!e.has_poly) {
            e.poly = char_poly(alpha_quotient(quotient(e.g), Rational(alpha)));
            e.has_poly = true;
        }
        return e.poly;
    };
    const double guard = 10 * opts.tie_tol;
    bool swapped = true;
    int rounds = 0;
    while (swapped && rounds++ < int(ok.size()) + 1) {
        swapped = false;
        for (size_t i = 0; i + 1 < ok.size(); ++i) {
            Entry& a = ok[i];
            Entry& b = ok[i + 1];
            double gap = a.res.lambda - b.res.lambda;
            if (gap >= guard) continue;
            std::string pair = a.res.expr + " ~ " + b.res.expr;
            if (!a.res.connected || !b.res.connected) {
                std::string flag = "inconclusive:" + pair;
                if (std::find(rep.flags.begin(), rep.flags.end(), flag) == rep.flags.end())
                    rep.flags.push_back(flag);
                continue;
            }
            Rational lower = Rational(std::min(a.res.lambda, b.res.lambda)) - 1;
            RootComparison cmp = compare_largest_roots(quotient_poly(a), quotient_poly(b), lower);
            a.res.exact = b.res.exact = true;
            std::string flag;
            switch (cmp.verdict) {
                case RootOrder::FirstGreater:
                    break;
                case RootOrder::SecondGreater:
                    std::swap(ok[i], ok[i + 1]);
                    swapped = true;
                    flag = "exact-reordered:" + pair;
                    break;
                case RootOrder::Equal:
                    flag = "exact-equal:" + pair;
                    break;
                case RootOrder::Unresolved:
                    flag = "inconclusive:" + pair;
                    break;
            }
            if (!flag.empty() &&
                std::find(rep.flags.begin(), rep.flags.end(), flag) == rep.flags.end())
                rep.flags.push_back(flag);
        }
    }

    for (auto& e : ok) rep.ranked.push_back(std::move(e.res));
    for (auto& c : bad) rep.ranked.push_back(std::move(c));
    rep.runtime_ms = detail::elapsed_ms(t0);
    return rep;
}

}  // namespace spexlab
