#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "spexlab/dense.hpp"
#include "spexlab/equitable.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/polynomial.hpp"
#include "spexlab/rational.hpp"

namespace spexlab {

// Spectral radius of A_alpha = alpha*D + (1-alpha)*A, with Perron data.

struct Spectrum {
    double alpha = 0;
    double lambda = 0;
    std::vector<double> perron;  // scaled so the maximum entry is exactly 1
    double residual = 0;         // ||M x - lambda x||_inf on the full matrix
    int component = 0;           // component attaining the maximum
};

struct SpectralOptions {
    int dense_limit = 2000;  // components larger than this use power iteration
    double eps = 1e-13;      // Jacobi off-diagonal convergence factor
};

inline std::vector<double> a_alpha(const Graph& g, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in [0,1)");
    int n = g.order();
    std::vector<double> m(size_t(n) * n, 0.0);
    for (int v = 0; v < n; ++v) {
        m[size_t(v) * n + v] = alpha * g.degree(v);
        g.neighbors(v).for_each([&](int u) { m[size_t(v) * n + u] = 1.0 - alpha; });
    }
    return m;
}

inline RationalMatrix a_alpha_rational(const Graph& g, const Rational& alpha) {
    if (!(alpha >= 0 && alpha < 1)) throw std::invalid_argument("alpha must be in [0,1)");
    int n = g.order();
    RationalMatrix m(n);
    for (int v = 0; v < n; ++v) {
        m.at(v, v) = alpha * g.degree(v);
        g.neighbors(v).for_each([&](int u) { m.at(v, u) = 1 - alpha; });
    }
    return m;
}

inline RationalMatrix adjacency_matrix(const Graph& g) {
    return a_alpha_rational(g, Rational(0));
}

inline Spectrum spectral_radius(const Graph& g, double alpha = 0.0,
                                const SpectralOptions& opts = {}) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in [0,1)");
    int n = g.order();
    if (n == 0) throw std::invalid_argument("spectral radius of the empty-order graph");

    auto comp = g.component_ids();
    int ncomp = 1 + *std::max_element(comp.begin(), comp.end());

    Spectrum out;
    out.alpha = alpha;
    out.component = -1;
    std::vector<double> full(n, 0.0);

    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) verts.push_back(v);
        int k = int(verts.size());

        // Degrees within the component equal degrees in g.
        std::vector<double> m(size_t(k) * k, 0.0);
        std::vector<int> pos(n, -1);
        for (int i = 0; i < k; ++i) pos[verts[i]] = i;
        for (int i = 0; i < k; ++i) {
            m[size_t(i) * k + i] = alpha * g.degree(verts[i]);
            g.neighbors(verts[i]).for_each(
                [&](int u) { m[size_t(i) * k + pos[u]] = 1.0 - alpha; });
        }

        double lam;
        std::vector<double> vec(k);
        if (k <= opts.dense_limit) {
            auto eig = jacobi_eigen(std::move(m), k, opts.eps);
            int best = 0;
            for (int i = 1; i < k; ++i)
                if (eig.values[i] > eig.values[best]) best = i;
            lam = eig.values[best];
            for (int i = 0; i < k; ++i) vec[i] = eig.vectors[size_t(i) * k + best];
        } else {
            auto pr = power_iteration(m, k);
            lam = pr.lambda;
            vec = std::move(pr.vector);
        }

        // Ties keep the earlier (lower-index) component.
        if (out.component != -1 && !(lam > out.lambda)) continue;
        out.lambda = lam;
        out.component = c;
        std::fill(full.begin(), full.end(), 0.0);
        // Orient so the dominant entry is positive, then clamp stray negative
        // round-off and scale the maximum to exactly 1.
        double big = 0;
        for (double x : vec)
            if (std::abs(x) > std::abs(big)) big = x;
        if (big < 0)
            for (double& x : vec) x = -x;
        double mx = *std::max_element(vec.begin(), vec.end());
        for (int i = 0; i < k; ++i)
            full[verts[i]] = mx > 0 ? std::max(vec[i], 0.0) / mx : 0.0;
    }

    out.perron = std::move(full);
    out.residual = 0;
    for (int v = 0; v < n; ++v) {
        double mv = alpha * g.degree(v) * out.perron[v];
        g.neighbors(v).for_each([&](int u) { mv += (1.0 - alpha) * out.perron[u]; });
        out.residual = std::max(out.residual, std::abs(mv - out.lambda * out.perron[v]));
    }
    return out;
}

// alpha*max_degree <= lambda_alpha <= alpha*max_degree + (1-alpha)*lambda_0
inline bool check_alpha_bounds(const Graph& g, double alpha, double tol = 1e-9) {
    if (g.order() == 0) return true;
    double delta = g.max_degree();
    double lam_alpha = spectral_radius(g, alpha).lambda;
    double lam0 = spectral_radius(g, 0.0).lambda;
    return lam_alpha >= alpha * delta - tol &&
           lam_alpha <= alpha * delta + (1.0 - alpha) * lam0 + tol;
}

// 2 e(N1(v)) + e(N1(v), N2(v)) <= 3 c n, where N1 is the neighbourhood of v
// and N2 the set of vertices at distance exactly two.
inline bool check_forest_edge_bound(const Graph& g, int v, double c) {
    int n = g.order();
    Bitset n1 = g.neighbors(v);
    Bitset n2(n);
    n1.for_each([&](int u) { n2 |= g.neighbors(u); });
    n2 -= n1;
    n2.reset(v);

    long long inside = 0, across = 0;
    n1.for_each([&](int u) {
        inside += (g.neighbors(u) & n1).count();
        across += (g.neighbors(u) & n2).count();
    });
    inside /= 2;
    return double(2 * inside + across) <= 3.0 * c * n + 1e-12;
}

inline Polynomial char_poly(const QuotientMatrix& q) { return char_poly(q.B); }

inline Polynomial adjacency_char_poly(const Graph& g) { return char_poly(adjacency_matrix(g)); }

}  // namespace spexlab
