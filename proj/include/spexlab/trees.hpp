#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "spexlab/errors.hpp"
#include "spexlab/graph.hpp"

namespace spexlab {

// Labelled-tree machinery: Prüfer decoding as the single source of
// uniformity, the good-tree predicate, Monte Carlo statistics, and exact
// labelled-tree edge counts.

// decode a Prüfer sequence (entries in [0, m), length m-2) to a tree on m vertices
inline Graph prufer_decode(const std::vector<int>& seq) {
    int m = int(seq.size()) + 2;
    for (int x : seq)
        if (x < 0 || x >= m) throw std::invalid_argument("Prüfer entry out of range");
    Graph t(m);
    if (m == 2) {
        t.add_edge(0, 1);
        return t;
    }
    std::vector<int> degree(m, 1);
    for (int x : seq) ++degree[x];
    std::set<int> leaves;
    for (int v = 0; v < m; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (int x : seq) {
        int v = *leaves.begin();
        leaves.erase(leaves.begin());
        t.add_edge(v, x);
        if (--degree[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *leaves.rbegin();
    t.add_edge(a, b);
    return t;
}

inline Graph random_tree(int m, std::mt19937_64& rng) {
    if (m < 1) throw std::invalid_argument("tree order must be >= 1");
    if (m <= 2) {
        Graph t(m);
        if (m == 2) t.add_edge(0, 1);
        return t;
    }
    std::uniform_int_distribution<int> pick(0, m - 1);
    std::vector<int> seq(m - 2);
    for (int& x : seq) x = pick(rng);
    return prufer_decode(seq);
}

namespace detail {

// does `side` contain a vertex of degree >= 3 with exactly one non-leaf neighbour?
inline bool side_has_heavy_vertex(const Graph& t, const std::vector<int>& color, int side) {
    for (int v = 0; v < t.order(); ++v) {
        if (color[v] != side || t.degree(v) < 3) continue;
        int non_leaf = 0;
        t.neighbors(v).for_each([&](int u) { non_leaf += t.degree(u) > 1; });
        if (non_leaf == 1) return true;
    }
    return false;
}

}  // namespace detail

// A tree is good when its proper 2-coloring A|B with |A| <= |B| gives B a
// vertex of degree >= 3 having exactly one non-leaf neighbour ("leaf" means a
// leaf of the whole tree).  When |A| = |B| both orientations are tried.
inline bool good_tree(const Graph& t) {
    int m = t.order();
    if (m < 1 || t.size() != m - 1 || !t.is_connected())
        throw std::invalid_argument("good_tree requires a tree");
    std::vector<int> color(m, -1);
    color[0] = 0;
    std::vector<int> stack{0};
    int count1 = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        t.neighbors(v).for_each([&](int u) {
            if (color[u] != -1) return;
            color[u] = 1 - color[v];
            count1 += color[u];
            stack.push_back(u);
        });
    }
    int count0 = m - count1;
    if (count0 < count1) return detail::side_has_heavy_vertex(t, color, 1);
    if (count1 < count0) return detail::side_has_heavy_vertex(t, color, 0);
    return detail::side_has_heavy_vertex(t, color, 0) ||
           detail::side_has_heavy_vertex(t, color, 1);
}

// size of the smaller colour class, i.e. the paper-facing k+1 of a good tree
inline int tree_small_side(const Graph& t) {
    if (t.order() < 1 || t.size() != t.order() - 1 || !t.is_connected())
        throw std::invalid_argument("tree_small_side requires a tree");
    std::vector<int> color(t.order(), -1);
    color[0] = 0;
    std::vector<int> stack{0};
    int ones = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        t.neighbors(v).for_each([&](int u) {
            if (color[u] != -1) return;
            color[u] = 1 - color[v];
            ones += color[u];
            stack.push_back(u);
        });
    }
    return std::min(ones, t.order() - ones);
}

struct TreeStats {
    int m = 0;
    long long samples = 0;
    long long good_count = 0;
    double fraction = 0.0;
    double half_width = 0.0;  // 95% normal-approximation half-width; 0 when exhaustive
    uint64_t seed = 0;
    bool exhaustive = false;
};

namespace detail {

inline long long labelled_tree_count(int m) {  // m^{m-2}
    long long c = 1;
    for (int i = 0; i < m - 2; ++i) c *= m;
    return c;
}

template <typename Visit>
void for_each_labelled_tree(int m, Visit&& visit) {
    std::vector<int> seq(std::max(m - 2, 0), 0);
    while (true) {
        visit(prufer_decode(seq));
        int pos = int(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == m - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
}

}  // namespace detail

// share of uniform labelled trees on m vertices that are good; exhaustive
// over all m^{m-2} Prüfer sequences when that count is at most 10^6
inline TreeStats tree_stats(int m, long long samples, uint64_t seed) {
    if (m < 3) throw std::invalid_argument("tree_stats requires m >= 3");
    TreeStats out;
    out.m = m;
    out.seed = seed;
    long long total = 1;  // m^{m-2}, capped to avoid overflow
    for (int i = 0; i < m - 2 && total <= 1000000; ++i) total *= m;
    if (total <= 1000000) {
        out.exhaustive = true;
        out.samples = total;
        detail::for_each_labelled_tree(m, [&](const Graph& t) { out.good_count += good_tree(t); });
        out.fraction = double(out.good_count) / double(out.samples);
        return out;
    }
    if (samples < 1) throw std::invalid_argument("tree_stats requires samples >= 1");
    out.samples = samples;
    std::mt19937_64 rng(seed);
    for (long long i = 0; i < samples; ++i) out.good_count += good_tree(random_tree(m, rng));
    out.fraction = double(out.good_count) / double(out.samples);
    out.half_width =
        1.96 * std::sqrt(out.fraction * (1.0 - out.fraction) / double(out.samples));
    return out;
}

struct TreeEdgeCounts {
    int n = 0;
    long long total = 0;        // n^{n-2}
    long long one_edge = 0;     // trees containing a fixed edge ij
    long long shared_pair = 0;  // trees containing ij and ik (distinct i,j,k)
    long long disjoint_pair = 0;  // trees containing ij and kl (all distinct)
    long long predicted_one_edge() const;
    long long predicted_shared_pair() const;
    long long predicted_disjoint_pair() const;
};

inline long long TreeEdgeCounts::predicted_one_edge() const {  // 2n^{n-3}
    long long p = 2;
    for (int i = 0; i < n - 3; ++i) p *= n;
    return p;
}
inline long long TreeEdgeCounts::predicted_shared_pair() const {  // 3n^{n-4}
    long long p = 3;
    for (int i = 0; i < n - 4; ++i) p *= n;
    return p;
}
inline long long TreeEdgeCounts::predicted_disjoint_pair() const {  // 4n^{n-4}
    long long p = 4;
    for (int i = 0; i < n - 4; ++i) p *= n;
    return p;
}

// exact counts over all labelled trees on [n]; labels (0,1), (0,1)+(0,2) and
// (0,1)+(2,3) stand in for any distinct choices by symmetry
inline TreeEdgeCounts tree_edge_counts(int n) {
    if (n < 4 || n > 8) throw cap_exceeded("tree_edge_counts handles 4 <= n <= 8");
    TreeEdgeCounts out;
    out.n = n;
    out.total = detail::labelled_tree_count(n);
    detail::for_each_labelled_tree(n, [&](const Graph& t) {
        bool e01 = t.has_edge(0, 1);
        out.one_edge += e01;
        out.shared_pair += e01 && t.has_edge(0, 2);
        out.disjoint_pair += e01 && t.has_edge(2, 3);
    });
    return out;
}

}  // namespace spexlab
