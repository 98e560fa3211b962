#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "spexlab/errors.hpp"

namespace spexlab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline int sign_of(const Rational& r) { return r.sign(); }

// Accepts "3", "-1/4", "0.25", "2.5e-3" style inputs and converts exactly.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw parse_error("empty number");
    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        try {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw parse_error("zero denominator");
            return Rational(num, den);
        } catch (const std::runtime_error&) {
            throw parse_error("bad rational literal: " + s);
        }
    }
    // decimal / scientific form, converted exactly (0.25 -> 1/4)
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    BigInt mantissa = 0;
    long exp10 = 0;
    bool digits = false, dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            mantissa = mantissa * 10 + (c - '0');
            if (dot) --exp10;
            digits = true;
        } else if (c == '.' && !dot) {
            dot = true;
        } else if ((c == 'e' || c == 'E') && digits) {
            try {
                exp10 += std::stol(s.substr(i + 1));
            } catch (...) {
                throw parse_error("bad exponent in: " + s);
            }
            break;
        } else {
            throw parse_error("bad number: " + s, i);
        }
    }
    if (!digits) throw parse_error("bad number: " + s);
    Rational r(mantissa);
    BigInt p10 = 1;
    for (long k = 0; k < (exp10 < 0 ? -exp10 : exp10); ++k) p10 *= 10;
    if (exp10 < 0)
        r /= Rational(p10);
    else
        r *= Rational(p10);
    return neg ? -r : r;
}

struct RationalMatrix {
    int n = 0;
    std::vector<Rational> a;  // row-major

    RationalMatrix() = default;
    explicit RationalMatrix(int n_) : n(n_), a(size_t(n_) * n_, Rational(0)) {}

    Rational& at(int i, int j) { return a[size_t(i) * n + j]; }
    const Rational& at(int i, int j) const { return a[size_t(i) * n + j]; }

    bool operator==(const RationalMatrix& o) const { return n == o.n && a == o.a; }
};

}  // namespace spexlab
