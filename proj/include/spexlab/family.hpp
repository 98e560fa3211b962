#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "spexlab/canonical.hpp"
#include "spexlab/errors.hpp"
#include "spexlab/expr.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/graph6.hpp"

namespace spexlab {

// Forbidden-family machinery: subgraph/minor/subdivision containment, cycle
// structure queries, structural family kinds, saturation, and the largest j
// with K_{j,m} free.

struct FamilyCaps {
    int cycle_cap = 16;           // order cap for cycle-structure queries
    int disjoint_cap = 14;        // order cap for disjoint-cycle searches
    int minor_f_cap = 8;          // pattern order cap for minors/subdivisions
    int minor_g_cap = 14;         // host order cap for minors/subdivisions
    int trees_cap = 10;           // order cap for all-trees families
    int counterexample_cap = 20;  // order cap for the seven-item family
};

// ---------------------------------------------------------------------------
// Subgraph embedding (non-induced).

namespace detail {

struct EmbedPlan {
    std::vector<int> order;                // f-vertices in placement order
    std::vector<std::vector<int>> prior;   // positions (< i) adjacent in f
    std::vector<int> fdeg;
};

inline EmbedPlan make_embed_plan(const Graph& f) {
    int nf = f.order();
    EmbedPlan plan;
    std::vector<bool> placed(nf, false);
    // repeatedly pick the unplaced vertex with the most placed neighbours
    // (ties: larger degree), which keeps the search tree narrow
    for (int step = 0; step < nf; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < nf; ++v) {
            if (placed[v]) continue;
            int links = 0;
            f.neighbors(v).for_each([&](int u) { links += placed[u]; });
            int deg = f.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        placed[best] = true;
        plan.order.push_back(best);
    }
    std::vector<int> pos(nf, -1);
    for (int i = 0; i < nf; ++i) pos[plan.order[i]] = i;
    plan.prior.resize(nf);
    plan.fdeg.resize(nf);
    for (int i = 0; i < nf; ++i) {
        int v = plan.order[i];
        plan.fdeg[i] = f.degree(v);
        f.neighbors(v).for_each([&](int u) {
            if (pos[u] < i) plan.prior[i].push_back(pos[u]);
        });
    }
    return plan;
}

inline bool embed_step(const Graph& g, const EmbedPlan& plan, int idx, Bitset& used,
                       std::vector<int>& image, const Bitset& avail,
                       const std::function<bool(const Bitset&)>& cb) {
    if (idx == int(plan.order.size())) return cb(used);
    Bitset cand = avail;
    cand -= used;
    for (int j : plan.prior[idx]) cand &= g.neighbors(image[j]);
    bool stop = false;
    cand.for_each([&](int v) {
        if (stop || g.degree(v) < plan.fdeg[idx]) return;
        used.set(v);
        image[idx] = v;
        if (embed_step(g, plan, idx + 1, used, image, avail, cb)) stop = true;
        used.reset(v);
    });
    return stop;
}

// Calls cb with the used vertex set of every injective homomorphism f -> g
// inside `avail` until cb returns true (found/stop).  Returns whether stopped.
inline bool for_each_embedding(const Graph& g, const Graph& f, const Bitset& avail,
                               const std::function<bool(const Bitset&)>& cb) {
    if (f.order() == 0) return cb(Bitset(g.order()));
    if (f.order() > int(avail.count())) return false;
    EmbedPlan plan = make_embed_plan(f);
    Bitset used(g.order());
    std::vector<int> image(f.order(), -1);
    return embed_step(g, plan, 0, used, image, avail, cb);
}

inline uint64_t low_mask(const Bitset& b) {
    uint64_t m = 0;
    b.for_each([&](int v) { m |= uint64_t(1) << v; });
    return m;
}

}  // namespace detail

// true iff an injective map V(f) -> V(g) sends every edge of f to an edge of g
inline bool contains_subgraph(const Graph& g, const Graph& f) {
    Bitset all(g.order());
    for (int v = 0; v < g.order(); ++v) all.set(v);
    return detail::for_each_embedding(g, f, all, [](const Bitset&) { return true; });
}

// ---------------------------------------------------------------------------
// Cycle-structure queries.

namespace detail {

// whether the component of `within` containing any vertex admits an odd cycle
inline bool mask_bipartite(const Graph& g, const Bitset& within) {
    int n = g.order();
    std::vector<int> color(n, -1);
    bool ok = true;
    within.for_each([&](int s) {
        if (!ok || color[s] != -1) return;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty() && ok) {
            int v = stack.back();
            stack.pop_back();
            (g.neighbors(v) & within).for_each([&](int u) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    ok = false;
                }
            });
        }
    });
    return ok;
}

inline std::vector<int> bfs_dist(const Graph& g, int s, const Bitset& within) {
    std::vector<int> dist(g.order(), -1);
    dist[s] = 0;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        (g.neighbors(v) & within).for_each([&](int u) {
            if (dist[u] == -1) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        });
    }
    return dist;
}

inline bool cycle_dfs(const Graph& g, const Bitset& within, int s, int len,
                      const std::vector<int>& dist, Bitset& on_path, int last, int count) {
    // cycle of `len` vertices: path s..last with `count` vertices so far
    if (count == len) return g.has_edge(last, s);
    bool found = false;
    (g.neighbors(last) & within).for_each([&](int v) {
        if (found || on_path.test(v) || v <= s) return;
        // must be able to get back to s within the remaining edge budget
        if (dist[v] == -1 || dist[v] > len - count) return;
        on_path.set(v);
        if (cycle_dfs(g, within, s, len, dist, on_path, v, count + 1)) found = true;
        on_path.reset(v);
    });
    return found;
}

}  // namespace detail

// true iff g has a simple cycle on exactly `len` vertices inside `within`
inline bool exists_cycle_of_length(const Graph& g, int len, const Bitset& within) {
    if (len < 3 || len > int(within.count())) return false;
    if (len % 2 == 1 && detail::mask_bipartite(g, within)) return false;
    bool found = false;
    within.for_each([&](int s) {
        if (found) return;
        // s is the smallest vertex of the sought cycle
        Bitset allowed = within;
        for (int v = 0; v < s; ++v) allowed.reset(v);
        auto dist = detail::bfs_dist(g, s, allowed);
        Bitset on_path(g.order());
        on_path.set(s);
        if (detail::cycle_dfs(g, allowed, s, len, dist, on_path, s, 1)) found = true;
    });
    return found;
}

inline bool exists_cycle_of_length(const Graph& g, int len) {
    Bitset all(g.order());
    for (int v = 0; v < g.order(); ++v) all.set(v);
    return exists_cycle_of_length(g, len, all);
}

// exact set of cycle lengths present in g
inline std::set<int> cycle_spectrum(const Graph& g, int cap = 16) {
    if (g.order() > cap)
        throw cap_exceeded("cycle_spectrum: order " + std::to_string(g.order()) +
                           " exceeds cap " + std::to_string(cap));
    std::set<int> out;
    for (int len = 3; len <= g.order(); ++len)
        if (exists_cycle_of_length(g, len)) out.insert(len);
    return out;
}

// ---------------------------------------------------------------------------
// Disjoint (possibly chorded) cycle packing.
//
// A cycle of length L occupies exactly L vertices, so packing k disjoint
// cycles is a search over "host" vertex sets S whose induced graph has a
// spanning cycle; S additionally hosts a chorded cycle iff it has a spanning
// cycle plus at least one extra edge.  Hosts are precomputed once and the
// packing recursion memoizes failed (available-mask, k, chorded) states.

namespace detail {

inline bool hamiltonian_cycle_exists(const Graph& g, const std::vector<int>& verts) {
    int k = int(verts.size());
    if (k < 3) return false;
    // local adjacency over positions
    std::vector<uint32_t> adj(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && g.has_edge(verts[i], verts[j])) adj[i] |= uint32_t(1) << j;
    for (int i = 0; i < k; ++i) {
        if (std::popcount(adj[i]) < 2) return false;  // needs two cycle edges
    }
    // DFS from position 0 over the rest
    uint32_t full = (uint32_t(1) << k) - 1;
    std::function<bool(int, uint32_t)> rec = [&](int at, uint32_t seen) -> bool {
        if (seen == full) return adj[at] & 1;
        uint32_t next = adj[at] & ~seen;
        while (next) {
            int v = std::countr_zero(next);
            next &= next - 1;
            if (rec(v, seen | (uint32_t(1) << v))) return true;
        }
        return false;
    };
    return rec(0, 1);
}

struct CycleHosts {
    std::vector<uint64_t> mask;   // vertex set
    std::vector<char> chordable;  // has spanning cycle + extra edge
};

// all vertex sets of size in [min_len, max_len] hosting a spanning cycle
inline CycleHosts collect_cycle_hosts(const Graph& g, int min_len, int max_len) {
    int n = g.order();
    CycleHosts hosts;
    min_len = std::max(min_len, 3);
    max_len = std::min(max_len, n);
    for (uint64_t m = 1; m < (uint64_t(1) << n); ++m) {
        int sz = std::popcount(m);
        if (sz < min_len || sz > max_len) continue;
        std::vector<int> verts;
        Bitset bs(n);
        for (int v = 0; v < n; ++v)
            if (m >> v & 1) {
                verts.push_back(v);
                bs.set(v);
            }
        // quick degree filter
        bool ok = true;
        long long edges = 0;
        for (int v : verts) {
            int d = int((g.neighbors(v) & bs).count());
            if (d < 2) {
                ok = false;
                break;
            }
            edges += d;
        }
        if (!ok) continue;
        edges /= 2;
        if (edges < sz) continue;
        if (!hamiltonian_cycle_exists(g, verts)) continue;
        hosts.mask.push_back(m);
        hosts.chordable.push_back(edges > sz ? 1 : 0);
    }
    return hosts;
}

inline bool pack_cycles(const CycleHosts& hosts, uint64_t avail, int k, int chorded,
                        int min_len, std::unordered_set<uint64_t>& failed) {
    chorded = std::max(chorded, 0);
    if (chorded > k) return false;
    if (k == 0) return true;
    if (std::popcount(avail) < k * std::max(min_len, 3)) return false;
    // vertices occupy bits [0, 48); k and chorded are both at most n/3 < 256
    uint64_t key = avail | (uint64_t(k) << 48) | (uint64_t(chorded) << 56);
    if (failed.count(key)) return false;
    // lowest available vertex that any usable host covers: either some chosen
    // cycle uses it, or no cycle ever will and it can be dropped
    uint64_t coverable = 0;
    for (size_t i = 0; i < hosts.mask.size(); ++i)
        if ((hosts.mask[i] & ~avail) == 0) coverable |= hosts.mask[i];
    if (std::popcount(coverable) < k * std::max(min_len, 3)) {
        failed.insert(key);
        return false;
    }
    uint64_t pivot = coverable & (~coverable + 1);  // lowest coverable bit
    for (size_t i = 0; i < hosts.mask.size(); ++i) {
        if (!(hosts.mask[i] & pivot) || (hosts.mask[i] & ~avail)) continue;
        if (pack_cycles(hosts, avail & ~hosts.mask[i], k - 1,
                        chorded - hosts.chordable[i], min_len, failed))
            return true;
    }
    if (pack_cycles(hosts, avail & ~pivot, k, chorded, min_len, failed)) return true;
    failed.insert(key);
    return false;
}

}  // namespace detail

// true iff g contains k vertex-disjoint cycles with lengths in
// [min_len, max_len], at least `chorded_needed` of them carrying a chord
inline bool has_disjoint_cycles(const Graph& g, int k, int min_len, int max_len,
                                int chorded_needed = 0) {
    if (k <= 0) return true;
    int n = g.order();
    if (n > 22) throw cap_exceeded("disjoint-cycle search limited to 22 vertices");
    if (k > n / 3) return false;  // every cycle needs three vertices
    auto hosts = detail::collect_cycle_hosts(g, min_len, max_len);
    std::unordered_set<uint64_t> failed;
    uint64_t avail = (uint64_t(1) << n) - 1;
    return detail::pack_cycles(hosts, avail, k, std::max(chorded_needed, 0), min_len, failed);
}

// ---------------------------------------------------------------------------
// Minors and topological subdivisions.

namespace detail {

struct MinorTables {
    std::vector<Bitset> conn;  // all connected vertex sets of g
    std::vector<Bitset> nbr;   // open neighbourhood of each set
};

inline MinorTables connected_sets(const Graph& g) {
    int n = g.order();
    MinorTables t;
    for (uint64_t m = 1; m < (uint64_t(1) << n); ++m) {
        Bitset bs(n);
        for (int v = 0; v < n; ++v)
            if (m >> v & 1) bs.set(v);
        if (!g.connected_within(bs)) continue;
        Bitset nb(n);
        bs.for_each([&](int v) { nb |= g.neighbors(v); });
        nb -= bs;
        t.conn.push_back(bs);
        t.nbr.push_back(std::move(nb));
    }
    // small branch sets first: minimal models are found sooner
    std::vector<size_t> idx(t.conn.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](size_t a, size_t b) { return t.conn[a].count() < t.conn[b].count(); });
    MinorTables sorted;
    for (size_t i : idx) {
        sorted.conn.push_back(t.conn[i]);
        sorted.nbr.push_back(t.nbr[i]);
    }
    return sorted;
}

inline bool minor_rec(const Graph& f, const std::vector<int>& order, const MinorTables& t,
                      int idx, Bitset remaining, std::vector<int>& chosen) {
    if (idx == int(order.size())) return true;
    int fv = order[idx];
    for (size_t i = 0; i < t.conn.size(); ++i) {
        if (!t.conn[i].is_subset_of(remaining)) continue;
        if (int(remaining.count() - t.conn[i].count()) < int(order.size()) - idx - 1) continue;
        bool ok = true;
        for (int j = 0; j < idx && ok; ++j)
            if (f.has_edge(fv, order[j]) && !t.nbr[i].intersects(t.conn[chosen[j]])) ok = false;
        if (!ok) continue;
        chosen[idx] = int(i);
        Bitset rem = remaining;
        rem -= t.conn[i];
        if (minor_rec(f, order, t, idx + 1, std::move(rem), chosen)) return true;
    }
    return false;
}

}  // namespace detail

// true iff f is a minor of g: disjoint connected branch sets, one per vertex
// of f, with an edge of g between branch sets for every edge of f
inline bool has_minor(const Graph& g, const Graph& f, const FamilyCaps& caps = {}) {
    if (f.order() > caps.minor_f_cap)
        throw cap_exceeded("minor pattern exceeds cap " + std::to_string(caps.minor_f_cap));
    if (g.order() > caps.minor_g_cap)
        throw cap_exceeded("minor host exceeds cap " + std::to_string(caps.minor_g_cap));
    if (f.order() == 0) return true;
    if (f.order() > g.order() || f.size() > g.size()) return false;

    auto tables = detail::connected_sets(g);
    std::vector<int> order(f.order());
    for (int i = 0; i < f.order(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return f.degree(a) > f.degree(b); });
    std::vector<int> chosen(f.order(), -1);
    Bitset all(g.order());
    for (int v = 0; v < g.order(); ++v) all.set(v);
    return detail::minor_rec(f, order, tables, 0, std::move(all), chosen);
}

namespace detail {

struct SubdivState {
    const Graph* g;
    const Graph* f;
    std::vector<int> branch;                    // f-vertex -> g-vertex
    std::vector<std::pair<int, int>> fedges;    // edges of f
    Bitset used;                                // branch vertices + path internals
};

inline bool route_edges(SubdivState& st, size_t ei);

inline bool extend_path(SubdivState& st, size_t ei, int at, int target) {
    if (st.g->has_edge(at, target)) {
        if (route_edges(st, ei + 1)) return true;
    }
    bool found = false;
    st.g->neighbors(at).for_each([&](int v) {
        if (found || st.used.test(v) || v == target) return;
        st.used.set(v);
        if (extend_path(st, ei, v, target)) found = true;
        st.used.reset(v);
    });
    return found;
}

inline bool route_edges(SubdivState& st, size_t ei) {
    if (ei == st.fedges.size()) return true;
    auto [a, b] = st.fedges[ei];
    return extend_path(st, ei, st.branch[a], st.branch[b]);
}

inline bool place_branch(SubdivState& st, const std::vector<int>& order, size_t idx) {
    if (idx == order.size()) return route_edges(st, 0);
    int fv = order[idx];
    bool found = false;
    for (int v = 0; v < st.g->order() && !found; ++v) {
        if (st.used.test(v) || st.g->degree(v) < st.f->degree(fv)) continue;
        st.used.set(v);
        st.branch[fv] = v;
        if (place_branch(st, order, idx + 1)) found = true;
        st.used.reset(v);
    }
    return found;
}

}  // namespace detail

// true iff a subdivision of f embeds in g: injective branch vertices joined
// by internally disjoint paths, one per edge of f
inline bool has_subdivision(const Graph& g, const Graph& f, const FamilyCaps& caps = {}) {
    if (f.order() > caps.minor_f_cap)
        throw cap_exceeded("subdivision pattern exceeds cap " + std::to_string(caps.minor_f_cap));
    if (g.order() > caps.minor_g_cap)
        throw cap_exceeded("subdivision host exceeds cap " + std::to_string(caps.minor_g_cap));
    if (f.order() > g.order() || f.size() > g.size()) return f.order() == 0;

    detail::SubdivState st;
    st.g = &g;
    st.f = &f;
    st.branch.assign(f.order(), -1);
    st.fedges = f.edges();
    st.used = Bitset(g.order());
    std::vector<int> order(f.order());
    for (int i = 0; i < f.order(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return f.degree(a) > f.degree(b); });
    return detail::place_branch(st, order, 0);
}

// ---------------------------------------------------------------------------
// All non-isomorphic trees on t vertices (t <= 10), by leaf attachment with
// canonical dedup.

inline const std::vector<Graph>& all_trees_on(int t, const FamilyCaps& caps = {}) {
    if (t < 1) throw std::invalid_argument("tree order must be >= 1");
    if (t > caps.trees_cap || t > 10)
        throw cap_exceeded("tree enumeration capped at order 10");
    static const std::array<std::vector<Graph>, 11> tables = [] {
        std::array<std::vector<Graph>, 11> tabs;
        tabs[1].push_back(Graph(1));
        for (int k = 2; k <= 10; ++k) {
            std::set<std::string> seen;
            for (const Graph& t0 : tabs[k - 1])
                for (int v = 0; v < k - 1; ++v) {
                    Graph bigger(k);
                    for (auto [a, b] : t0.edges()) bigger.add_edge(a, b);
                    bigger.add_edge(v, k - 1);
                    if (seen.insert(canonical_form(bigger)).second)
                        tabs[k].push_back(std::move(bigger));
                }
        }
        return tabs;
    }();
    return tables[t];
}

// ---------------------------------------------------------------------------
// FamilySpec: structural or finite forbidden families.

struct FamilySpec {
    enum class Kind {
        FiniteList,
        CyclesAtLeast,           // a = l
        CyclesModulo,            // a = l, b = r (l < r)
        ConsecutiveEvenCycles,   // a = k
        DisjointCycles,          // a = k, b = min length, chorded = #chorded
        ChordedCycles,           // a = count
        MinorsOf,                // members[0]
        SubdivisionsOf,          // members[0]
        AllTreesOn,              // a = t
        Counterexample7
    };

    Kind kind = Kind::FiniteList;
    std::vector<Graph> members;
    std::vector<std::string> names;  // display names matching `members`
    int a = 0, b = 0;
    int chorded = 0;
    std::string text;  // DSL form

    static FamilySpec finite_list(std::vector<Graph> graphs, std::vector<std::string> labels) {
        if (graphs.empty()) throw std::invalid_argument("finite family must be nonempty");
        FamilySpec s;
        s.kind = Kind::FiniteList;
        s.members = std::move(graphs);
        s.names = std::move(labels);
        s.text = "list:" + (s.names.empty() ? std::string("?") : s.names[0]);
        return s;
    }
    static FamilySpec finite_list(const std::string& expr_text) {
        FamilySpec s = finite_list({realize(expr_text)}, {expr_text});
        s.text = "list:" + expr_text;
        return s;
    }
    static FamilySpec cycles_at_least(int l) {
        FamilySpec s;
        s.kind = Kind::CyclesAtLeast;
        s.a = l;
        s.text = "cycles-ge:" + std::to_string(l);
        if (l < 1) throw std::invalid_argument("cycle length bound must be positive");
        return s;
    }
    static FamilySpec cycles_modulo(int l, int r) {
        if (!(0 <= l && l < r)) throw std::invalid_argument("cycles-mod requires 0 <= l < r");
        FamilySpec s;
        s.kind = Kind::CyclesModulo;
        s.a = l;
        s.b = r;
        s.text = "cycles-mod:" + std::to_string(l) + "," + std::to_string(r);
        return s;
    }
    static FamilySpec consecutive_even_cycles(int k) {
        if (k < 1) throw std::invalid_argument("consec-even count must be positive");
        FamilySpec s;
        s.kind = Kind::ConsecutiveEvenCycles;
        s.a = k;
        s.text = "consec-even:" + std::to_string(k);
        return s;
    }
    static FamilySpec disjoint_cycles(int k, int min_len = 3, int chorded_count = 0) {
        if (k < 1 || min_len < 3 || chorded_count < 0 || chorded_count > k)
            throw std::invalid_argument("bad disjoint-cycles parameters");
        FamilySpec s;
        s.kind = Kind::DisjointCycles;
        s.a = k;
        s.b = min_len;
        s.chorded = chorded_count;
        s.text = "disjoint-cycles:" + std::to_string(k) + ",min=" + std::to_string(min_len) +
                 (chorded_count ? ",chorded=" + std::to_string(chorded_count) : "");
        return s;
    }
    static FamilySpec chorded_cycles(int count) {
        if (count < 1) throw std::invalid_argument("chorded count must be positive");
        FamilySpec s;
        s.kind = Kind::ChordedCycles;
        s.a = count;
        s.text = "chorded:" + std::to_string(count);
        return s;
    }
    static FamilySpec minors_of(const std::string& expr_text) {
        FamilySpec s;
        s.kind = Kind::MinorsOf;
        s.members.push_back(realize(expr_text));
        s.names.push_back(expr_text);
        s.text = "minor:" + expr_text;
        return s;
    }
    static FamilySpec subdivisions_of(const std::string& expr_text) {
        FamilySpec s;
        s.kind = Kind::SubdivisionsOf;
        s.members.push_back(realize(expr_text));
        s.names.push_back(expr_text);
        s.text = "subdiv:" + expr_text;
        return s;
    }
    static FamilySpec all_trees(int t) {
        if (t < 1) throw std::invalid_argument("tree order must be positive");
        FamilySpec s;
        s.kind = Kind::AllTreesOn;
        s.a = t;
        s.text = "all-trees:" + std::to_string(t);
        return s;
    }
    static FamilySpec counterexample7() {
        FamilySpec s;
        s.kind = Kind::Counterexample7;
        s.text = "counterexample7";
        return s;
    }
};

inline std::string family_text(const FamilySpec& s) { return s.text; }

// ---------------------------------------------------------------------------
// The seven-item family behind the EX/SPEX counterexample:
//   (1) 3 * K_{1,4}
//   (2) K_{2,6} u X5 u Y5          (X5, Y5 connected, 5 vertices)
//   (3) K_{2,6} u K_{1,3} u X5
//   (4) K_{2,6} u X9               (X9 connected, 9 vertices)
//   (5) K_{2,6} u X8               (X8 connected, 8 vertices, X8 != P8)
//   (6) X5 u Y5 u Z5 u W5          (all connected, 5 vertices)
//   (7) C_i u C_j u C_k            (3 <= i,j,k <= 7)
// Containment of "some member" reduces to disjoint pieces: a connected graph
// on t vertices embeds into an induced set S, |S| = t, iff g[S] is connected
// (the spanning connected subgraph is itself such a graph); item (5) also
// needs g[S] not isomorphic to P8, since P8's only connected spanning
// subgraph is P8.

namespace detail {

struct Piece {
    const Graph* fixed = nullptr;  // embed this graph...
    int conn_order = 0;            // ...or any connected graph on this many vertices
    bool not_p8 = false;
};

// enumerate connected subsets of `avail` of size t, each exactly once
inline bool connected_subsets(const Graph& g, const Bitset& avail, int t,
                              const std::function<bool(const Bitset&)>& cb) {
    int n = g.order();
    if (t < 1 || t > int(avail.count())) return false;
    Bitset scope = avail;  // v = smallest subset vertex; shrinks as v advances
    bool stop = false;
    avail.for_each([&](int v) {
        if (stop) return;
        std::function<bool(Bitset&, Bitset, Bitset)> grow = [&](Bitset& cur, Bitset ext,
                                                                Bitset forb) -> bool {
            if (int(cur.count()) == t) return cb(cur);
            while (true) {
                Bitset pick = ext;
                pick -= forb;
                int u = pick.lowest();
                if (u == -1) return false;
                Bitset ext2 = ext | (g.neighbors(u) & scope);
                ext2 -= cur;
                ext2.reset(u);
                ext2 -= forb;
                cur.set(u);
                if (grow(cur, std::move(ext2), forb)) return true;
                cur.reset(u);
                forb.set(u);
            }
        };
        Bitset cur(n);
        cur.set(v);
        scope.reset(v);  // vertices below v are out of scope for this v
        Bitset ext = g.neighbors(v) & scope;
        if (grow(cur, std::move(ext), Bitset(n))) stop = true;
    });
    return stop;
}

inline bool induced_is_p8(const Graph& g, const Bitset& set) {
    if (set.count() != 8) return false;
    long long edges = 0;
    bool deg_ok = true;
    set.for_each([&](int v) {
        int d = int((g.neighbors(v) & set).count());
        edges += d;
        if (d > 2) deg_ok = false;
    });
    return deg_ok && edges / 2 == 7;  // connected is checked by the caller
}

inline bool place_pieces(const Graph& g, const Bitset& avail,
                         const std::vector<Piece>& pieces, size_t idx) {
    if (idx == pieces.size()) return true;
    const Piece& p = pieces[idx];
    if (p.fixed) {
        // dedup used-sets across the automorphisms of the pattern
        std::unordered_set<uint64_t> tried;
        return for_each_embedding(g, *p.fixed, avail, [&](const Bitset& used) {
            if (!tried.insert(low_mask(used)).second) return false;
            Bitset rest = avail;
            rest -= used;
            return place_pieces(g, rest, pieces, idx + 1);
        });
    }
    return connected_subsets(g, avail, p.conn_order, [&](const Bitset& set) {
        if (p.not_p8 && induced_is_p8(g, set)) return false;
        Bitset rest = avail;
        rest -= set;
        return place_pieces(g, rest, pieces, idx + 1);
    });
}

inline bool counterexample_item_embeds(const Graph& g, int item) {
    static const Graph k26 = complete_bipartite(2, 6);
    static const Graph k14 = star_graph(4);
    static const Graph k13 = star_graph(3);
    Bitset all(g.order());
    for (int v = 0; v < g.order(); ++v) all.set(v);
    auto conn = [](int t) { return Piece{nullptr, t, false}; };
    switch (item) {
        case 1:
            return g.order() >= 15 &&
                   place_pieces(g, all, {{&k14, 0, false}, {&k14, 0, false}, {&k14, 0, false}}, 0);
        case 2:
            return g.order() >= 18 &&
                   place_pieces(g, all, {{&k26, 0, false}, conn(5), conn(5)}, 0);
        case 3:
            return g.order() >= 17 &&
                   place_pieces(g, all, {{&k26, 0, false}, {&k13, 0, false}, conn(5)}, 0);
        case 4:
            return g.order() >= 17 && place_pieces(g, all, {{&k26, 0, false}, conn(9)}, 0);
        case 5:
            return g.order() >= 16 &&
                   place_pieces(g, all, {{&k26, 0, false}, Piece{nullptr, 8, true}}, 0);
        case 6:
            return g.order() >= 20 &&
                   place_pieces(g, all, {conn(5), conn(5), conn(5), conn(5)}, 0);
        case 7:
            return g.order() >= 9 && has_disjoint_cycles(g, 3, 3, 7);
        default:
            throw std::logic_error("bad family item");
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Freeness, saturation, and the bipartite threshold.

inline bool is_free(const Graph& g, const FamilySpec& spec, const FamilyCaps& caps = {}) {
    using Kind = FamilySpec::Kind;
    int n = g.order();
    auto require_cycle_cap = [&] {
        if (n > caps.cycle_cap)
            throw cap_exceeded("cycle-structure freeness capped at order " +
                               std::to_string(caps.cycle_cap));
    };
    switch (spec.kind) {
        case Kind::FiniteList:
            for (const Graph& f : spec.members)
                if (contains_subgraph(g, f)) return false;
            return true;
        case Kind::CyclesAtLeast:
            require_cycle_cap();
            for (int len = std::max(3, spec.a); len <= n; ++len)
                if (exists_cycle_of_length(g, len)) return false;
            return true;
        case Kind::CyclesModulo:
            require_cycle_cap();
            for (int len = 3; len <= n; ++len)
                if (len % spec.b == spec.a && exists_cycle_of_length(g, len)) return false;
            return true;
        case Kind::ConsecutiveEvenCycles: {
            require_cycle_cap();
            std::vector<bool> even(n + 1, false);
            for (int len = 4; len <= n; len += 2) even[len] = exists_cycle_of_length(g, len);
            for (int start = 4; start + 2 * (spec.a - 1) <= n; start += 2) {
                bool run = true;
                for (int i = 0; i < spec.a && run; ++i) run = even[start + 2 * i];
                if (run) return false;
            }
            return true;
        }
        case Kind::DisjointCycles:
            if (n > caps.disjoint_cap)
                throw cap_exceeded("disjoint-cycle freeness capped at order " +
                                   std::to_string(caps.disjoint_cap));
            return !has_disjoint_cycles(g, spec.a, spec.b, n, spec.chorded);
        case Kind::ChordedCycles:
            if (n > caps.disjoint_cap)
                throw cap_exceeded("chorded-cycle freeness capped at order " +
                                   std::to_string(caps.disjoint_cap));
            return !has_disjoint_cycles(g, spec.a, 3, n, spec.a);
        case Kind::MinorsOf:
            return !has_minor(g, spec.members[0], caps);
        case Kind::SubdivisionsOf:
            return !has_subdivision(g, spec.members[0], caps);
        case Kind::AllTreesOn:
            for (const Graph& t : all_trees_on(spec.a, caps))
                if (!contains_subgraph(g, t)) return true;
            return false;
        case Kind::Counterexample7:
            if (n > caps.counterexample_cap)
                throw cap_exceeded("seven-item freeness capped at order " +
                                   std::to_string(caps.counterexample_cap));
            for (int item = 1; item <= 7; ++item)
                if (detail::counterexample_item_embeds(g, item)) return false;
            return true;
    }
    throw std::logic_error("unreachable family kind");
}

// g is free and every single-edge addition destroys freeness
inline bool is_saturated(const Graph& g, const FamilySpec& spec, const FamilyCaps& caps = {}) {
    if (!is_free(g, spec, caps)) return false;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.has_edge(u, v)) continue;
            Graph plus = g;
            plus.add_edge(u, v);
            if (is_free(plus, spec, caps)) return false;
        }
    return true;
}

struct BipartiteK {
    int k = 0;
    bool truncated = false;          // result not certified exact
    bool empty_graph_fails = false;  // even K_{0,m} contains a member
};

// largest j with K_{j, m_cap} free (j capped at m_cap)
inline BipartiteK max_bipartite_k_info(const FamilySpec& spec, int m_cap,
                                       const FamilyCaps& caps = {}) {
    BipartiteK out;
    if (spec.kind == FamilySpec::Kind::FiniteList) {
        int biggest = 0;
        for (const Graph& f : spec.members) biggest = std::max(biggest, f.order());
        // any member inside K_{j, infinity} uses at most its own order of
        // right-side vertices, so m_cap >= largest member order is exact
        out.truncated = m_cap < biggest;
    } else {
        out.truncated = true;
    }
    try {
        if (!is_free(empty_graph(m_cap), spec, caps)) {
            out.empty_graph_fails = true;
            return out;
        }
    } catch (const cap_exceeded&) {
        out.truncated = true;
        return out;
    }
    for (int j = 1; j <= m_cap; ++j) {
        out.k = j - 1;  // K_{j-1, m_cap} certified free
        bool free;
        try {
            free = is_free(complete_bipartite(j, m_cap), spec, caps);
        } catch (const cap_exceeded&) {
            out.truncated = true;
            return out;
        }
        if (!free) return out;
    }
    out.k = m_cap;
    out.truncated = true;  // never hit a non-free K_{j, m_cap}
    return out;
}

inline int max_bipartite_k(const FamilySpec& spec, int m_cap, const FamilyCaps& caps = {}) {
    return max_bipartite_k_info(spec, m_cap, caps).k;
}

// default right-side truncation for finite lists: twice the largest member
inline int default_m_cap(const FamilySpec& spec) {
    int biggest = 0;
    for (const Graph& f : spec.members) biggest = std::max(biggest, f.order());
    return std::max(4, 2 * biggest);
}

// ---------------------------------------------------------------------------
// DSL: list:P6 | list:@file.g6 | cycles-ge:5 | cycles-mod:3,5 | consec-even:2
//      disjoint-cycles:2,min=5[,chorded=1] | chorded:1 | minor:K5 | subdiv:K4
//      all-trees:6 | counterexample7

inline FamilySpec parse_family(const std::string& dsl) {
    if (dsl == "counterexample7") return FamilySpec::counterexample7();
    size_t colon = dsl.find(':');
    if (colon == std::string::npos)
        throw parse_error("family spec needs 'kind:params' (got '" + dsl + "')");
    std::string head = dsl.substr(0, colon), rest = dsl.substr(colon + 1);
    if (rest.empty()) throw parse_error("family spec '" + head + "' needs parameters");

    auto to_int = [&](const std::string& s) {
        try {
            size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw parse_error("bad integer '" + s + "' in family spec");
        }
    };

    try {
        if (head == "list") {
            if (rest[0] == '@') {
                std::ifstream in(rest.substr(1));
                if (!in) throw parse_error("cannot open family file " + rest.substr(1));
                std::vector<Graph> graphs;
                std::vector<std::string> labels;
                std::string line;
                while (std::getline(in, line)) {
                    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                        line.pop_back();
                    if (line.empty()) continue;
                    graphs.push_back(graph6_decode(line));
                    labels.push_back(line);
                }
                if (graphs.empty()) throw parse_error("family file has no graphs");
                FamilySpec s = FamilySpec::finite_list(std::move(graphs), std::move(labels));
                s.text = dsl;
                return s;
            }
            return FamilySpec::finite_list(rest);
        }
        if (head == "cycles-ge") return FamilySpec::cycles_at_least(to_int(rest));
        if (head == "cycles-mod") {
            size_t comma = rest.find(',');
            if (comma == std::string::npos) throw parse_error("cycles-mod needs 'l,r'");
            return FamilySpec::cycles_modulo(to_int(rest.substr(0, comma)),
                                             to_int(rest.substr(comma + 1)));
        }
        if (head == "consec-even") return FamilySpec::consecutive_even_cycles(to_int(rest));
        if (head == "disjoint-cycles") {
            int k = -1, min_len = 3, chorded = 0;
            size_t pos = 0;
            while (pos <= rest.size()) {
                size_t comma = rest.find(',', pos);
                std::string part =
                    rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                pos = comma == std::string::npos ? rest.size() + 1 : comma + 1;
                if (part.empty()) continue;
                size_t eq = part.find('=');
                if (eq == std::string::npos) {
                    if (k != -1) throw parse_error("disjoint-cycles: duplicate count");
                    k = to_int(part);
                } else if (part.substr(0, eq) == "min") {
                    min_len = to_int(part.substr(eq + 1));
                } else if (part.substr(0, eq) == "chorded") {
                    chorded = to_int(part.substr(eq + 1));
                } else {
                    throw parse_error("disjoint-cycles: unknown option '" + part + "'");
                }
            }
            if (k == -1) throw parse_error("disjoint-cycles needs a cycle count");
            return FamilySpec::disjoint_cycles(k, min_len, chorded);
        }
        if (head == "chorded") return FamilySpec::chorded_cycles(to_int(rest));
        if (head == "minor") return FamilySpec::minors_of(rest);
        if (head == "subdiv") return FamilySpec::subdivisions_of(rest);
        if (head == "all-trees") return FamilySpec::all_trees(to_int(rest));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("bad family parameters: ") + e.what());
    }
    throw parse_error("unknown family kind '" + head + "'");
}

}  // namespace spexlab
