#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "spexlab/rational.hpp"

namespace spexlab {

// Dense univariate polynomial with exact rational coefficients, ascending
// degree order.  The zero polynomial has an empty coefficient vector.
struct Polynomial {
    std::vector<Rational> c;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

    static Polynomial from_ints(const std::vector<long long>& v) {
        std::vector<Rational> c(v.size());
        for (size_t i = 0; i < v.size(); ++i) c[i] = v[i];
        return Polynomial(std::move(c));
    }

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    double eval(double x) const {
        double acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_double(*it);
        return acc;
    }
    int sign_at(const Rational& x) const { return eval(x).sign(); }

    Polynomial derivative() const {
        if (c.size() <= 1) return Polynomial();
        std::vector<Rational> d(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * int(i);
        return Polynomial(std::move(d));
    }

    // scale so the leading coefficient has absolute value 1 (sign kept);
    // positive scaling preserves signs everywhere
    void monic_abs() {
        if (c.empty()) return;
        Rational lead = c.back();
        if (lead < 0) lead = -lead;
        for (auto& x : c) x /= lead;
    }

    friend Polynomial operator-(const Polynomial& p) {
        Polynomial r = p;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> r(a.c.size() + b.c.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return Polynomial(std::move(r));
    }

    // polynomial remainder of *this by d (d nonzero)
    Polynomial rem(const Polynomial& d) const {
        Polynomial r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational f = r.c.back() / d.c.back();
            int shift = r.degree() - d.degree();
            for (int i = 0; i <= d.degree(); ++i) r.c[i + shift] -= f * d.c[i];
            r.c.pop_back();
            r.trim();
        }
        return r;
    }

    bool operator==(const Polynomial& o) const { return c == o.c; }
};

inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
        b.monic_abs();
    }
    a.monic_abs();
    return a;
}

// p with repeated factors reduced to multiplicity one
inline Polynomial square_free(const Polynomial& p) {
    if (p.degree() <= 1) return p;
    Polynomial g = poly_gcd(p, p.derivative());
    if (g.degree() < 1) return p;
    // exact division p / g
    Polynomial q;
    Polynomial r = p;
    std::vector<Rational> qc(p.degree() - g.degree() + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= g.degree()) {
        Rational f = r.c.back() / g.c.back();
        int shift = r.degree() - g.degree();
        qc[shift] = f;
        for (int i = 0; i <= g.degree(); ++i) r.c[i + shift] -= f * g.c[i];
        r.trim();
    }
    return Polynomial(std::move(qc));
}

// Sturm chain of the square-free part: p, p', then negated remainders;
// sign-variation differences count distinct real roots.  Building from the
// square-free part is essential: it guarantees no two consecutive chain
// elements vanish at the same point (otherwise a multiple root of p zeroes
// the whole chain and the variation count there is meaningless).
class SturmChain {
public:
    explicit SturmChain(const Polynomial& orig) {
        Polynomial a = square_free(orig);
        a.monic_abs();
        chain_.push_back(a);
        Polynomial b = chain_[0].derivative();
        b.monic_abs();
        if (!b.is_zero()) chain_.push_back(b);
        while (chain_.size() >= 2) {
            const Polynomial& prev = chain_[chain_.size() - 2];
            const Polynomial& last = chain_.back();
            if (last.degree() < 1) break;
            Polynomial r = -prev.rem(last);
            if (r.is_zero()) break;
            r.monic_abs();
            chain_.push_back(std::move(r));
        }
    }

    // number of distinct real roots of p in (a, b], for a < b
    int count_roots(const Rational& a, const Rational& b) const {
        return variations(a) - variations(b);
    }

    // distinct real roots in (a, +infinity)
    int count_roots_above(const Rational& a) const {
        return variations(a) - variations_at_inf();
    }

private:
    int variations(const Rational& x) const {
        int var = 0, prev = 0;
        for (const auto& p : chain_) {
            int s = p.sign_at(x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }
    int variations_at_inf() const {
        int var = 0, prev = 0;
        for (const auto& p : chain_) {
            if (p.is_zero()) continue;
            int s = p.c.back().sign();
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    std::vector<Polynomial> chain_;
};

// 1 + max |a_i / a_lead| bounds the absolute value of every root
inline Rational cauchy_bound(const Polynomial& p) {
    if (p.degree() < 1) return 1;
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = p.c[i] / p.c.back();
        if (q < 0) q = -q;
        if (q > m) m = q;
    }
    return m + 1;
}

struct RootBracket {
    Rational lo, hi;  // largest real root lies in (lo, hi]
};

// Isolate the largest real root of p strictly above `lower`; throws
// std::invalid_argument when there is none.  The interval is certified by
// Sturm counts: exactly one distinct root in (lo, hi], none above hi.
inline RootBracket isolate_max_root(const Polynomial& p, const Rational& lower,
                                    const Rational& width) {
    if (p.degree() < 1) throw std::invalid_argument("constant polynomial has no roots");
    SturmChain chain(p);
    Rational hi = cauchy_bound(p);
    if (hi <= lower || chain.count_roots(lower, hi) == 0) {
        // Sturm counts (lower, hi]; a root exactly at `lower` is still valid.
        if (p.sign_at(lower) == 0) return {lower - width, lower};
        throw std::invalid_argument("no real root above the given lower bound");
    }
    Rational lo = lower;
    // keep the invariant: largest root in (lo, hi], no roots in (hi, inf)
    while (hi - lo > width || chain.count_roots(lo, hi) > 1) {
        Rational mid = (lo + hi) / 2;
        if (chain.count_roots(mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

// Largest real root of p above `lower`, to absolute tolerance `tol`
// (double).  Bisection is exact (Sturm sign variations); the final value is
// polished with a few Newton steps clamped to the certified interval.
inline double max_real_root(const Polynomial& p, double lower, double tol = 1e-12) {
    Rational tol_r = parse_rational("1e-13");
    RootBracket br = isolate_max_root(p, Rational(lower), tol_r);
    double x = to_double((br.lo + br.hi) / 2);
    double lo_d = to_double(br.lo), hi_d = to_double(br.hi);
    Polynomial q = square_free(p);
    Polynomial dq = q.derivative();
    for (int it = 0; it < 40; ++it) {
        double f = q.eval(x), df = dq.eval(x);
        if (df == 0) break;
        double nx = x - f / df;
        if (nx < lo_d - tol || nx > hi_d + tol) break;
        if (std::abs(nx - x) < tol * 0.01) { x = nx; break; }
        x = nx;
    }
    return std::min(std::max(x, lo_d), hi_d);
}

enum class RootOrder { FirstGreater, SecondGreater, Equal, Unresolved };

struct RootComparison {
    RootOrder verdict = RootOrder::Unresolved;
    // exact separator: first's largest root > witness >= second's largest
    // root (or the mirror image); meaningful for the two Greater verdicts
    Rational witness = 0;
    int sign_first = 0, sign_second = 0;  // exact signs at the witness
};

// Order the largest real roots (above `lower`) of two polynomials by
// shrinking certified isolating intervals until they separate.  Equality is
// detected exactly through a common-factor root.  No floating-point
// subtraction of nearby quantities is involved anywhere.
inline RootComparison compare_largest_roots(const Polynomial& p, const Polynomial& q,
                                            const Rational& lower) {
    SturmChain cp(p), cq(q);
    Rational php = cauchy_bound(p), phq = cauchy_bound(q);
    if (cp.count_roots(lower, php) == 0 || cq.count_roots(lower, phq) == 0)
        throw std::invalid_argument("a polynomial has no root above the lower bound");

    RootBracket bp{lower, php}, bq{lower, phq};
    auto shrink = [](const SturmChain& c, RootBracket& b) {
        Rational mid = (b.lo + b.hi) / 2;
        if (c.count_roots(mid, b.hi) >= 1)
            b.lo = mid;
        else
            b.hi = mid;
    };

    for (int it = 0; it < 220; ++it) {
        if (bp.lo >= bq.hi) {
            RootComparison r;
            r.verdict = RootOrder::FirstGreater;
            r.witness = bp.lo;
            r.sign_first = p.sign_at(r.witness);
            r.sign_second = q.sign_at(r.witness);
            return r;
        }
        if (bq.lo >= bp.hi) {
            RootComparison r;
            r.verdict = RootOrder::SecondGreater;
            r.witness = bq.lo;
            r.sign_first = p.sign_at(r.witness);
            r.sign_second = q.sign_at(r.witness);
            return r;
        }
        if (it == 40) {
            // intervals refuse to separate: check for a shared root exactly
            Polynomial g = poly_gcd(p, q);
            if (g.degree() >= 1) {
                Rational a = std::max(bp.lo, bq.lo), b = std::min(bp.hi, bq.hi);
                SturmChain cg(g);
                if (cg.count_roots(a, b) >= 1 && cp.count_roots(b, php) == 0 &&
                    cq.count_roots(b, phq) == 0) {
                    RootComparison r;
                    r.verdict = RootOrder::Equal;
                    r.witness = b;
                    return r;
                }
            }
        }
        shrink(cp, bp);
        shrink(cq, bq);
    }
    return {};
}

// Monic characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
// recurrence, exact in rational arithmetic.
inline Polynomial char_poly(const RationalMatrix& M) {
    int n = M.n;
    std::vector<Rational> coeff(n + 1, Rational(0));
    coeff[n] = 1;
    if (n == 0) return Polynomial(std::move(coeff));

    RationalMatrix Mk = M;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // Mk = M * (Mk_prev + c_{n-k+1} I)
            RationalMatrix t = Mk;
            for (int i = 0; i < n; ++i) t.at(i, i) += coeff[n - k + 1];
            RationalMatrix next(n);
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) {
                    const Rational& m = M.at(i, l);
                    if (m == 0) continue;
                    for (int j = 0; j < n; ++j) next.at(i, j) += m * t.at(l, j);
                }
            Mk = std::move(next);
        }
        Rational tr = 0;
        for (int i = 0; i < n; ++i) tr += Mk.at(i, i);
        coeff[n - k] = -tr / k;
    }
    return Polynomial(std::move(coeff));
}

}  // namespace spexlab
