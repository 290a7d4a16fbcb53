#pragma once

#include "cyclosum/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyclosum {

/// x^2 - trace*x + 1 with trace = 2cos(2*pi*r/m): the real factor pairing
/// the conjugate roots exp(+-2*pi*i*r/m). The exact angle is kept as (r, m).
struct QuadraticFactor {
    int root_index = 0;
    int modulus = 0;
    double trace = 0.0;

    double evaluate(double x) const { return (x - trace) * x + 1.0; }
    /// The trace is an integer exactly when m/gcd(r, m) is 3, 4 or 6.
    std::optional<int> integer_trace() const;
    /// Exact polynomial form; only available for integer traces.
    std::optional<RationalPolynomial> exact() const;
    std::string to_string() const;
};

struct CyclotomicRealFactorization {
    int modulus = 0;
    bool has_root_plus_one = true;
    bool has_root_minus_one = false;
    std::vector<QuadraticFactor> quadratic_factors;

    /// Product of every factor evaluated at x, in binary64.
    double evaluate_product(double x) const;
    std::string to_string() const;
};

/// 1 + x^step + x^(2 step) + ... + x^((m-1) step)
RationalPolynomial geometric_block(int m, int step);

/// (x-1), (x+1) when m is even, and one quadratic per conjugate root pair r = 1..floor((m-1)/2).
CyclotomicRealFactorization real_factorization(int m);

}  // namespace cyclosum
