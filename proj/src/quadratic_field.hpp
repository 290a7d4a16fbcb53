#pragma once

// Exact arithmetic in Q(sqrt(d)) for the handful of fields that the cyclotomic
// values of small moduli live in. Private to the library.

#include "cyclosum/rational.hpp"

#include <cstdint>
#include <optional>

namespace cyclosum::detail {

/// a + b*sqrt(d); d is squarefree, and d == 1 only when b == 0.
struct QuadSurd {
    Rational a = 0;
    Rational b = 0;
    std::int64_t d = 1;

    static QuadSurd rational(const Rational& r, std::int64_t d = 1) { return {r, 0, d}; }

    bool is_rational() const { return b == 0; }
    QuadSurd conjugate() const { return {a, -b, d}; }
    Rational norm() const { return a * a - b * b * d; }
    int sign() const;
    double to_double() const;

    friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);
    friend bool operator==(const QuadSurd& x, const QuadSurd& y);
};

QuadSurd pow(QuadSurd x, int e);

/// Smallest unit a + b sqrt(d) > 1 of Z[sqrt(d)], d squarefree > 1.
QuadSurd fundamental_unit(std::int64_t d);

/// If eps > 0 has norm +-1 and eps = u^r for the fundamental unit u and a
/// rational r with denominator <= 12, returns r (verified exactly).
std::optional<Rational> unit_exponent(const QuadSurd& eps);

/// cos(2 pi p/q) when it lies in a field of degree <= 2 (reduced q in
/// {1,2,3,4,5,6,8,10,12}).
std::optional<QuadSurd> cos_two_pi(std::int64_t p, std::int64_t q);

/// cot(pi p/q) for 0 < p/q < 1 when it lies in Q(sqrt(d)) (reduced q in {2,3,4,6,8,12}).
std::optional<QuadSurd> cot_pi(std::int64_t p, std::int64_t q);

/// Splits n = s^2 * core with core squarefree; returns {s, core}.
std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t n);

}  // namespace cyclosum::detail
