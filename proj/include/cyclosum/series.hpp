#pragma once

#include "cyclosum/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclosum {

/// First K coefficients of 1/source.
struct PowerSeriesPrefix {
    std::vector<Rational> coefficients;
    RationalPolynomial source;
};

/// A formal combination sum_i w_i * Sigma_m^i, where Sigma_m^i collects the
/// terms 1/(k*m + i), k >= 0. Residue i runs over 1..m (m stands for the
/// zero class); weights[i-1] is the weight of Sigma_m^i.
class SigmaCombination {
public:
    SigmaCombination(int modulus, std::vector<std::int64_t> weights);

    /// weight(+1) on residue i, weight(-1) on residue j.
    static SigmaCombination difference(int modulus, int i, int j);

    int modulus() const { return modulus_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    std::int64_t weight(int residue) const { return weights_.at(residue - 1); }
    std::int64_t weight_sum() const;
    std::int64_t abs_weight_sum() const;
    bool convergent() const { return weight_sum() == 0; }

    /// "S(6,1) + S(6,2) - S(6,4) - S(6,5)"
    std::string to_string() const;
    /// "sigma1+sigma2-sigma4-sigma5"
    std::string slug() const;

    friend bool operator==(const SigmaCombination&, const SigmaCombination&) = default;

private:
    int modulus_;
    std::vector<std::int64_t> weights_;
};

/// Eventually periodic coefficients of 1/source with period m; weights[i-1]
/// is the coefficient of every power x^(k*m + i - 1).
struct PeriodicPattern {
    int period = 0;
    std::vector<std::int64_t> weights;
    bool certified = false;
    RationalPolynomial source;
    /// q with (1 - x^m) = source * q, when certified.
    RationalPolynomial quotient;

    bool summable() const;
};

class NotPeriodic : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact recurrence c_0 = 1, c_n = -sum_{j=1..n} p_j c_{n-j}. Requires p(0) = 1.
PowerSeriesPrefix reciprocal_series(const RationalPolynomial& p, std::size_t k);

/// Certifies that 1/p is m-periodic by exact division of (1 - x^m) by p.
/// Throws NotPeriodic on a nonzero remainder or non-integer quotient.
PeriodicPattern certify_pattern(const RationalPolynomial& p, int m);

/// Uncertified pattern built from explicit weights (e.g. user input).
PeriodicPattern pattern_from_weights(int m, std::vector<std::int64_t> weights);

/// Term-by-term integration over [0,1]: x^(km+i-1) -> 1/(km+i), i.e. the
/// coefficient class i-1 feeds Sigma_m^i.
SigmaCombination integrate_and_map(const PeriodicPattern& pattern);

/// Exact sum over the first `periods` blocks of m terms.
Rational truncated_sum(const SigmaCombination& combination, std::int64_t periods);

/// Same sum in compensated binary64 (for cutoffs where exact fractions get too large).
double truncated_sum_approx(const SigmaCombination& combination, std::int64_t periods);

/// Quadratic factor of x^m - 1 whose reciprocal expands with integer coefficients.
struct IntegerExpansion {
    int root_index = 0;
    int trace = 0;
    RationalPolynomial factor;
    int period = 0;
    std::vector<std::int64_t> prefix;
};

/// Experimental: scans the quadratic factors of x^m - 1 for integer reciprocal expansions.
std::vector<IntegerExpansion> integer_expansion_search(int m, std::size_t prefix_length = 12);

}  // namespace cyclosum
