#pragma once

#include "cyclosum/polynomial.hpp"
#include "cyclosum/series.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace cyclosum {

/// The integrand has a pole on [0,1] that algebraic reduction cannot remove.
class SingularIntegrand : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Adaptive quadrature or series acceleration ran out of budget.
class ToleranceNotReached : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int panels = 0;
};

inline constexpr int kMaxPanels = 1 << 16;

/// Global adaptive Gauss-Kronrod (7/15) on [a, b]: the panel with the
/// largest |K15 - G7| is bisected until the summed estimate drops below
/// abs_tolerance. Panels are summed in left-to-right order.
QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                    double abs_tolerance, int max_panels = kMaxPanels);

/// numerator(x)/denominator(x) on [0,1], reduced by the polynomial gcd so
/// removable singularities (in particular powers of 1 - x) are gone.
class RationalIntegrand {
public:
    /// Reduces and normalizes (denominator(0) = 1 when possible); throws
    /// SingularIntegrand if the reduced denominator vanishes on [0,1].
    RationalIntegrand(const RationalPolynomial& numerator, const RationalPolynomial& denominator);

    const RationalPolynomial& numerator() const { return numerator_; }
    const RationalPolynomial& denominator() const { return denominator_; }
    /// True when the gcd with the denominator was nontrivial.
    bool reduced() const { return reduced_; }

    double evaluate(double x) const;
    std::string to_string() const;

private:
    RationalPolynomial numerator_;
    RationalPolynomial denominator_;
    std::vector<double> num_d_;
    std::vector<double> den_d_;
    bool reduced_ = false;
};

/// Number of distinct real roots of p in [a, b] (Sturm sequence, exact).
int count_roots(const RationalPolynomial& p, const Rational& a, const Rational& b);

/// Requires abs_tolerance >= 1e-13.
QuadratureResult integrate(const RationalIntegrand& f, double abs_tolerance);

/// sum_i w_i Sigma_m^i = integral_0^1 (sum_i w_i x^(i-1)) / (1 - x^m) dx, reduced.
/// Throws DivergentCombination for a nonzero weight sum.
RationalIntegrand combination_integrand(const SigmaCombination& combination);

struct SeriesEstimate {
    double value = 0.0;
    double error = 0.0;
    std::int64_t periods = 0;
};

/// Richardson extrapolation of the period partial sums S(N), N = 8, 16, 32, ...
/// (the truncation error expands in powers of 1/N). Stops when two successive
/// diagonal entries agree within target_tolerance.
SeriesEstimate accelerated_sum(const SigmaCombination& combination, double target_tolerance,
                               std::int64_t max_periods = std::int64_t{1} << 22);

/// sum_{n>=0} 1/((n x + y)^2 - z^2) summed directly over `terms` terms plus
/// an Euler-Maclaurin estimate of the remainder.
SeriesEstimate hansen_direct_series(const Rational& x, const Rational& y, const Rational& z,
                                    std::int64_t terms = 1000000);

/// A convergent combination through its Hansen pair decomposition, each pair summed directly.
SeriesEstimate hansen_direct_combination(const SigmaCombination& combination, std::int64_t terms = 100000);

}  // namespace cyclosum
