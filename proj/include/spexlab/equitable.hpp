#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "spexlab/dense.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/rational.hpp"

namespace spexlab {

// Equitable partitions and their quotient matrices.  A partition is equitable
// when every vertex of cell i has the same number of neighbours in cell j,
// for all pairs (i, j); that shared count is the quotient entry b_ij.

struct Partition {
    std::vector<std::vector<int>> cells;
};

inline Partition trivial_partition(int n) {
    Partition p;
    if (n > 0) {
        p.cells.emplace_back();
        for (int v = 0; v < n; ++v) p.cells[0].push_back(v);
    }
    return p;
}

namespace detail {

inline void check_partition(const Graph& g, const Partition& p) {
    std::vector<int> seen(g.order(), 0);
    for (const auto& cell : p.cells) {
        if (cell.empty()) throw std::invalid_argument("partition has an empty cell");
        for (int v : cell) {
            if (v < 0 || v >= g.order() || seen[v]++)
                throw std::invalid_argument("partition is not a partition of the vertex set");
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (!seen[v]) throw std::invalid_argument("partition misses a vertex");
}

}  // namespace detail

// Coarsest equitable refinement of `initial`.  Each round splits every cell by
// the vector of neighbour counts into the current cells; sub-cells are emitted
// in descending signature order, so higher-degree (and then lexicographically
// larger-profile) vertices come first.  Cell order is deterministic.
inline Partition equitable_partition(const Graph& g, const Partition& initial) {
    detail::check_partition(g, initial);
    std::vector<std::vector<int>> cells = initial.cells;

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cell_of(g.order(), -1);
        for (size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) cell_of[v] = int(c);

        std::vector<std::vector<int>> next;
        for (const auto& cell : cells) {
            // signature(v) = (#neighbours in cell 0, #neighbours in cell 1, ...)
            std::map<std::vector<int>, std::vector<int>, std::greater<>> buckets;
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                g.neighbors(v).for_each([&](int u) { ++sig[cell_of[u]]; });
                buckets[std::move(sig)].push_back(v);
            }
            if (buckets.size() > 1) changed = true;
            for (auto& [sig, verts] : buckets) next.push_back(std::move(verts));
        }
        cells = std::move(next);
    }

    Partition out;
    out.cells = std::move(cells);
    return out;
}

inline Partition equitable_partition(const Graph& g) {
    return equitable_partition(g, trivial_partition(g.order()));
}

struct QuotientMatrix {
    std::vector<std::vector<int>> cells;
    std::vector<int> sizes;
    RationalMatrix B;  // B.at(i, j) = neighbours in cell j of each vertex of cell i

    // Largest eigenvalue.  B is similar to the symmetric matrix with entries
    // b_ij * sqrt(s_i / s_j) (since s_i * b_ij = s_j * b_ji counts the edges
    // between the two cells), so a symmetric eigensolver applies.
    double lambda1() const {
        int k = int(sizes.size());
        if (k == 0) return 0.0;
        std::vector<double> s(size_t(k) * k, 0.0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                s[size_t(i) * k + j] =
                    to_double(B.at(i, j)) * std::sqrt(double(sizes[i]) / double(sizes[j]));
        auto eig = jacobi_eigen(std::move(s), k);
        double best = eig.values.empty() ? 0.0 : eig.values[0];
        for (double v : eig.values) best = std::max(best, v);
        return best;
    }
};

// Quotient matrix of an equitable partition; throws std::invalid_argument if
// the partition is not equitable.
inline QuotientMatrix quotient(const Graph& g, const Partition& p) {
    detail::check_partition(g, p);
    int k = int(p.cells.size());
    std::vector<int> cell_of(g.order(), -1);
    for (int c = 0; c < k; ++c)
        for (int v : p.cells[c]) cell_of[v] = c;

    QuotientMatrix q;
    q.cells = p.cells;
    q.B = RationalMatrix(k);
    for (int c = 0; c < k; ++c) {
        q.sizes.push_back(int(p.cells[c].size()));
        std::vector<int> expect(k, -1);
        for (int v : p.cells[c]) {
            std::vector<int> count(k, 0);
            g.neighbors(v).for_each([&](int u) { ++count[cell_of[u]]; });
            if (expect[0] == -1)
                expect = count;
            else if (expect != count)
                throw std::invalid_argument("partition is not equitable");
        }
        for (int j = 0; j < k; ++j) q.B.at(c, j) = expect[j];
    }
    return q;
}

inline QuotientMatrix quotient(const Graph& g) {
    return quotient(g, equitable_partition(g));
}

// Quotient of the matrix alpha*D + (1-alpha)*A on the same partition: vertex
// degrees are constant per cell (row sums of B), so the quotient is
// alpha * diag(row sums) + (1 - alpha) * B, exactly in rational arithmetic.
inline RationalMatrix alpha_quotient(const QuotientMatrix& q, const Rational& alpha) {
    int k = q.B.n;
    RationalMatrix out(k);
    for (int i = 0; i < k; ++i) {
        Rational deg = 0;
        for (int j = 0; j < k; ++j) deg += q.B.at(i, j);
        for (int j = 0; j < k; ++j) out.at(i, j) = (1 - alpha) * q.B.at(i, j);
        out.at(i, i) += alpha * deg;
    }
    return out;
}

// Largest eigenvalue of a (possibly nonsymmetric) quotient-type rational
// matrix that is diagonally similar to a symmetric one via diag(sqrt(sizes)).
inline double quotient_lambda1(const RationalMatrix& B, const std::vector<int>& sizes) {
    int k = B.n;
    if (k == 0) return 0.0;
    std::vector<double> s(size_t(k) * k, 0.0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            s[size_t(i) * k + j] =
                to_double(B.at(i, j)) * std::sqrt(double(sizes[i]) / double(sizes[j]));
    auto eig = jacobi_eigen(std::move(s), k);
    double best = eig.values.empty() ? 0.0 : eig.values[0];
    for (double v : eig.values) best = std::max(best, v);
    return best;
}

}  // namespace spexlab
