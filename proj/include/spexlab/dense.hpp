#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace spexlab {

// Cyclic Jacobi eigendecomposition for dense symmetric matrices, plus a
// power-iteration fallback for orders where O(n^3) sweeps are too big.

struct SymmetricEigen {
    std::vector<double> values;   // all eigenvalues (unordered)
    std::vector<double> vectors;  // column j = eigenvector of values[j], row-major n*n
};

// M row-major symmetric n*n (consumed as a copy).  Converges when the
// off-diagonal Frobenius norm drops below eps * ||M||_F.
inline SymmetricEigen jacobi_eigen(std::vector<double> m, int n, double eps = 1e-13) {
    SymmetricEigen out;
    out.vectors.assign(size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i) out.vectors[size_t(i) * n + i] = 1.0;

    auto at = [&](int i, int j) -> double& { return m[size_t(i) * n + j]; };
    double norm = 0;
    for (double x : m) norm += x * x;
    norm = std::sqrt(norm);
    double threshold = eps * (norm > 0 ? norm : 1.0);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2 * at(i, j) * at(i, j);
        if (std::sqrt(off) < threshold) break;

        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0) continue;
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;

                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = out.vectors[size_t(k) * n + p];
                    double vkq = out.vectors[size_t(k) * n + q];
                    out.vectors[size_t(k) * n + p] = c * vkp - s * vkq;
                    out.vectors[size_t(k) * n + q] = s * vkp + c * vkq;
                }
            }
    }
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = at(i, i);
    return out;
}

struct PowerResult {
    double lambda = 0;
    std::vector<double> vector;
};

// Largest eigenvalue + eigenvector of a symmetric nonnegative matrix whose
// Perron eigenvalue dominates in modulus after a diagonal shift.
inline PowerResult power_iteration(const std::vector<double>& m, int n,
                                   double tol = 1e-12, int max_iters = 200000) {
    PowerResult out;
    if (n == 0) return out;
    double shift = 0;
    for (int i = 0; i < n; ++i) {
        double row = 0;
        for (int j = 0; j < n; ++j) row += std::abs(m[size_t(i) * n + j]);
        shift = std::max(shift, row);
    }
    std::vector<double> x(n, 1.0 / std::sqrt(double(n))), y(n);
    double lambda = 0;
    for (int it = 0; it < max_iters; ++it) {
        for (int i = 0; i < n; ++i) {
            double acc = shift * x[i];
            const double* row = &m[size_t(i) * n];
            for (int j = 0; j < n; ++j) acc += row[j] * x[j];
            y[i] = acc;
        }
        double norm = 0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0) break;
        for (int i = 0; i < n; ++i) y[i] /= norm;
        // Rayleigh quotient of the unshifted matrix
        double rq = 0;
        for (int i = 0; i < n; ++i) {
            double acc = 0;
            const double* row = &m[size_t(i) * n];
            for (int j = 0; j < n; ++j) acc += row[j] * y[j];
            rq += acc * y[i];
        }
        double delta = std::abs(rq - lambda);
        lambda = rq;
        x.swap(y);
        if (delta < tol * std::max(1.0, std::abs(lambda)) && it > 3) break;
    }
    out.lambda = lambda;
    out.vector = std::move(x);
    return out;
}

}  // namespace spexlab
