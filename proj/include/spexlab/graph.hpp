#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "spexlab/bitset.hpp"

namespace spexlab {

// Simple undirected graph on vertices 0..n-1, adjacency stored as one bitset
// row per vertex.  No loops, no multi-edges.  Instances are immutable after
// construction apart from add_edge, which callers use only while building.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {
        if (n < 0) throw std::invalid_argument("graph order must be >= 0");
    }

    int order() const { return n_; }

    int size() const {  // edge count
        int s = 0;
        for (const auto& row : adj_) s += row.count();
        return s / 2;
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::out_of_range("vertex out of range");
        return u != v && adj_[u].test(v);
    }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::out_of_range("vertex out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) { if (u < v) e.emplace_back(u, v); });
        return e;
    }

    Graph complement() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adj_[u].test(v)) g.add_edge(u, v);
        return g;
    }

    // Subgraph induced by the vertices of `verts`, relabelled 0..k-1 in the
    // order given.
    Graph induced(const std::vector<int>& verts) const {
        Graph g(int(verts.size()));
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (adj_[verts[i]].test(verts[j])) g.add_edge(int(i), int(j));
        return g;
    }

    Graph induced(const Bitset& mask) const { return induced(mask.to_vector()); }

    // Image of this graph under vertex relabelling: vertex v becomes perm[v].
    Graph relabelled(const std::vector<int>& perm) const {
        Graph g(n_);
        for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
        return g;
    }

    // Connected component ids, 0-based, in order of first (lowest) vertex.
    std::vector<int> component_ids() const {
        std::vector<int> comp(n_, -1);
        int c = 0;
        for (int s = 0; s < n_; ++s) {
            if (comp[s] != -1) continue;
            std::vector<int> stack{s};
            comp[s] = c;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                adj_[u].for_each([&](int v) {
                    if (comp[v] == -1) { comp[v] = c; stack.push_back(v); }
                });
            }
            ++c;
        }
        return comp;
    }

    int component_count() const {
        auto comp = component_ids();
        return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    }

    bool is_connected() const { return n_ <= 1 || component_count() == 1; }

    // Connectivity of the subgraph induced by mask (true for empty mask? no:
    // empty and singleton masks count as connected only when nonempty).
    bool connected_within(const Bitset& mask) const {
        int start = mask.lowest();
        if (start == -1) return false;
        Bitset seen(n_);
        seen.set(start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            Bitset fresh = (adj_[u] & mask) - seen;
            fresh.for_each([&](int v) { seen.set(v); stack.push_back(v); });
        }
        return seen.count() == mask.count();
    }

    // Vertices whose removal disconnects this (connected) graph.
    std::vector<bool> cut_vertices() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

inline std::vector<bool> Graph::cut_vertices() const {
    // Standard DFS lowpoint computation, iterative to keep stack use flat.
    std::vector<bool> cut(n_, false);
    std::vector<int> num(n_, -1), low(n_, 0), parent(n_, -1), child_count(n_, 0);
    int timer = 0;
    for (int root = 0; root < n_; ++root) {
        if (num[root] != -1) continue;
        std::vector<std::pair<int, int>> stack{{root, -1}};
        std::vector<int> order;
        while (!stack.empty()) {
            auto [u, p] = stack.back();
            stack.pop_back();
            if (num[u] != -1) continue;
            num[u] = low[u] = timer++;
            parent[u] = p;
            if (p != -1) ++child_count[p];
            order.push_back(u);
            neighbors(u).for_each([&](int v) {
                if (num[v] == -1) stack.emplace_back(v, u);
            });
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int u = *it;
            neighbors(u).for_each([&](int v) {
                if (v == parent[u]) return;
                if (parent[v] == u)
                    low[u] = std::min(low[u], low[v]);
                else
                    low[u] = std::min(low[u], num[v]);
            });
            int p = parent[u];
            if (p != -1 && parent[p] != -1 && low[u] >= num[p]) cut[p] = true;
        }
        if (child_count[root] >= 2) cut[root] = true;
    }
    return cut;
}

// --- stock constructions ---------------------------------------------------

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {  // path on n vertices
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative part size");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// Matching on n vertices: floor(n/2) disjoint edges (+ isolated vertex if n odd).
inline Graph matching_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; v += 2) g.add_edge(v, v + 1);
    return g;
}

// Spider: paths of lengths legs[i] glued at a common endpoint (vertex 0).
inline Graph spider_graph(const std::vector<int>& legs) {
    if (legs.empty()) throw std::invalid_argument("spider needs at least one leg");
    int total = 1;
    for (int a : legs) {
        if (a < 1) throw std::invalid_argument("spider legs must have length >= 1");
        total += a;
    }
    Graph g(total);
    int next = 1;
    for (int a : legs) {
        int prev = 0;
        for (int i = 0; i < a; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

// Double star: adjacent centers 0 and 1 with a and b pendant leaves.
inline Graph double_star(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative leaf count");
    Graph g(2 + a + b);
    g.add_edge(0, 1);
    for (int i = 0; i < a; ++i) g.add_edge(0, 2 + i);
    for (int i = 0; i < b; ++i) g.add_edge(1, 2 + a + i);
    return g;
}

// D_{2,2} with one extra vertex pendant on a leaf of the second center.
inline Graph double_star_22_ext() {
    Graph g = double_star(2, 2);  // vertices 0,1 centers; 2,3 on 0; 4,5 on 1
    Graph h(7);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.add_edge(4, 6);
    return h;
}

// Friendship graph: k triangles sharing vertex 0.
inline Graph friendship_graph(int k) {
    if (k < 1) throw std::invalid_argument("friendship graph needs k >= 1");
    Graph g(2 * k + 1);
    for (int i = 0; i < k; ++i) {
        g.add_edge(0, 1 + 2 * i);
        g.add_edge(0, 2 + 2 * i);
        g.add_edge(1 + 2 * i, 2 + 2 * i);
    }
    return g;
}

// Disjoint union; vertices of a keep their labels, b is shifted up.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

// Join: disjoint union plus all edges between the two sides.
inline Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

inline Graph repeated_union(int count, const Graph& g) {
    if (count < 1) throw std::invalid_argument("repetition count must be >= 1");
    Graph r = g;
    for (int i = 1; i < count; ++i) r = disjoint_union(r, g);
    return r;
}

inline Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

}  // namespace spexlab
