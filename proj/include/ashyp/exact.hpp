#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "ashyp/errors.hpp"

namespace ashyp::exact {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r.sign(); }

/// Exact dyadic rational of a finite double (no rounding).
inline Rational from_double(double x) {
    if (!std::isfinite(x)) throw InvalidPoint("cannot rationalize a non-finite value");
    return Rational(x);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Canonical "num/den" rendering ("num" when the denominator is 1).
inline std::string to_fraction_string(const Rational& r) {
    const Int num = numerator(r);
    const Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational parse_fraction(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("malformed rational literal: " + s);
    }
}

inline Int factorial(int n) {
    Int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

/// Complex number with exact rational parts; used when a float result near a
/// proven bound has to be re-checked without rounding.
struct RatComplex {
    Rational re{0};
    Rational im{0};

    RatComplex() = default;
    RatComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit RatComplex(Rational r) : re(std::move(r)) {}

    RatComplex operator+(const RatComplex& o) const { return {re + o.re, im + o.im}; }
    RatComplex operator-(const RatComplex& o) const { return {re - o.re, im - o.im}; }
    RatComplex operator*(const RatComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    RatComplex operator-() const { return {-re, -im}; }
    bool operator==(const RatComplex& o) const = default;

    bool is_zero() const { return re == 0 && im == 0; }
    Rational norm2() const { return re * re + im * im; }
};

/// Solves A x = b by exact Gauss elimination. A is consumed.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                          std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw SingularSubstitution("singular linear system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/// Exact matrix inverse, column by column.
inline std::vector<std::vector<Rational>> invert_matrix(
    const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n);
        e[j] = 1;
        const auto col = solve_linear(a, std::move(e));
        for (std::size_t i = 0; i < n; ++i) inv[i][j] = col[i];
    }
    return inv;
}

}  // namespace ashyp::exact
