#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"
#include "spexlab/graph6.hpp"

namespace spexlab {

// Canonical labeling by iterated refinement + individualization, in the
// style of nauty but sized for desk-scale graphs (n up to a few dozen).
//
// The search explores individualization choices within the first
// non-singleton cell.  A branch is skipped only when an already-discovered
// automorphism that fixes every previously individualized vertex maps it
// onto an explored sibling; such subtrees generate identical leaf strings,
// so the minimum over explored leaves equals the minimum over all leaves.
// Every recorded generator comes from a pair of equal leaf strings and is
// therefore a genuine automorphism regardless of search order.  When no
// generator is found the search has explored one representative of every
// leaf, which can only happen for a trivial automorphism group.
struct CanonicalResult {
    std::vector<int> labeling;   // labeling[v] = canonical position of v
    std::string form;            // graph6 of the relabelled graph (+ color header)
    std::vector<std::vector<int>> generators;  // automorphisms, v -> sigma(v)
    std::vector<int> orbit;      // orbit id per vertex under <generators>
    bool trivial_group = true;   // true => Aut (color-preserving) is trivial
};

namespace detail {

using Cells = std::vector<std::vector<int>>;

inline void refine_partition(const Graph& g, Cells& cells) {
    int n = g.order();
    std::vector<int> cell_of(n);
    for (;;) {
        for (size_t i = 0; i < cells.size(); ++i)
            for (int v : cells[i]) cell_of[v] = int(i);
        Cells next;
        bool split = false;
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            // signature: neighbor count per current cell
            std::map<std::vector<int>, std::vector<int>> buckets;
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                g.neighbors(v).for_each([&](int u) { ++sig[cell_of[u]]; });
                buckets[sig].push_back(v);
            }
            if (buckets.size() > 1) split = true;
            for (auto& [sig, verts] : buckets) next.push_back(std::move(verts));
        }
        cells = std::move(next);
        if (!split) return;
    }
}

// adjacency upper triangle of g relabelled by order (position -> vertex),
// packed into bytes; lexicographic order on this string is the leaf order
inline std::string leaf_string(const Graph& g, const std::vector<int>& order) {
    std::string s;
    int acc = 0, bits = 0;
    for (size_t j = 1; j < order.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0);
            if (++bits == 8) {
                s += char(acc);
                bits = acc = 0;
            }
        }
    if (bits) s += char(acc << (8 - bits));
    return s;
}

class CanonSearch {
public:
    CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    void run(Cells cells) {
        refine_partition(g_, cells);
        descend(cells, {});
    }

    std::string best;
    std::vector<int> best_order;  // position -> vertex
    std::vector<std::vector<int>> gens;

private:
    void descend(const Cells& cells, const std::vector<int>& fixed) {
        int target = -1;
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) { target = int(i); break; }

        if (target == -1) {
            std::vector<int> order(n_);
            for (size_t i = 0; i < cells.size(); ++i) order[i] = cells[i][0];
            std::string s = leaf_string(g_, order);
            if (best_order.empty() || s < best) {
                best = std::move(s);
                best_order = std::move(order);
            } else if (s == best) {
                // two labelings with identical adjacency strings compose to
                // an automorphism: sigma(best_order[i]) = order[i]
                std::vector<int> sigma(n_);
                bool nontrivial = false;
                for (int i = 0; i < n_; ++i) {
                    sigma[best_order[i]] = order[i];
                    if (best_order[i] != order[i]) nontrivial = true;
                }
                if (nontrivial) gens.push_back(std::move(sigma));
            }
            return;
        }

        std::vector<int> tried;
        for (int v : cells[target]) {
            if (pruned_by_orbit(v, tried, fixed)) continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            for (size_t i = 0; i < cells.size(); ++i) {
                if (int(i) != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int u : cells[i])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            refine_partition(g_, child);
            std::vector<int> child_fixed = fixed;
            child_fixed.push_back(v);
            descend(child, child_fixed);
        }
    }

    // is v equivalent to an already-tried sibling under a known automorphism
    // that fixes the whole individualization prefix pointwise?
    bool pruned_by_orbit(int v, const std::vector<int>& tried,
                         const std::vector<int>& fixed) {
        if (tried.empty() || gens.empty()) return false;
        std::vector<int> uf(n_);
        for (int i = 0; i < n_; ++i) uf[i] = i;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (const auto& sigma : gens) {
            bool fixes = true;
            for (int w : fixed)
                if (sigma[w] != w) { fixes = false; break; }
            if (!fixes) continue;
            for (int i = 0; i < n_; ++i) {
                int a = find(i), b = find(sigma[i]);
                if (a != b) uf[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int u : tried)
            if (find(u) == find(v)) return true;
        return false;
    }

    const Graph& g_;
    int n_;
};

}  // namespace detail

// coloring: optional per-vertex color; only color-preserving relabellings are
// considered and the returned form carries a color-class-size header so forms
// with different class structures never compare equal.
inline CanonicalResult canonicalize(const Graph& g,
                                    const std::vector<int>& coloring = {}) {
    int n = g.order();
    CanonicalResult res;
    res.labeling.assign(n, 0);
    res.orbit.assign(n, 0);

    detail::Cells cells;
    bool colored = false;
    if (coloring.empty()) {
        if (n > 0) {
            cells.emplace_back(n);
            for (int v = 0; v < n; ++v) cells[0][v] = v;
        }
    } else {
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < n; ++v) by_color[coloring.at(v)].push_back(v);
        colored = by_color.size() > 1;
        for (auto& [c, verts] : by_color) cells.push_back(std::move(verts));
    }

    std::string header;
    if (colored) {
        header = "c";
        for (const auto& cell : cells) header += std::to_string(cell.size()) + ",";
        header += "|";
    }

    if (n == 0) {
        res.form = header + graph6_encode(g);
        return res;
    }

    detail::CanonSearch search(g);
    search.run(std::move(cells));

    for (int pos = 0; pos < n; ++pos) res.labeling[search.best_order[pos]] = pos;
    res.form = header + graph6_encode(g.relabelled(res.labeling));
    res.generators = std::move(search.gens);
    res.trivial_group = res.generators.empty();

    // vertex orbits under the generated group
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const auto& sigma : res.generators)
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(sigma[i]);
            if (a != b) uf[std::max(a, b)] = std::min(a, b);
        }
    for (int i = 0; i < n; ++i) res.orbit[i] = find(i);
    return res;
}

inline std::string canonical_form(const Graph& g) { return canonicalize(g).form; }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

// true iff u and v lie in the same orbit of the (color-preserving)
// automorphism group.  Exact: the fast path uses discovered generators, the
// fallback compares canonical forms with one vertex distinguished.
inline bool same_orbit(const Graph& g, const CanonicalResult& canon, int u, int v) {
    if (u == v) return true;
    if (canon.orbit[u] == canon.orbit[v]) return true;
    std::vector<int> cu(g.order(), 1), cv(g.order(), 1);
    cu[u] = 0;
    cv[v] = 0;
    return canonicalize(g, cu).form == canonicalize(g, cv).form;
}

}  // namespace spexlab
