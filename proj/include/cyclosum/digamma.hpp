#pragma once

#include "cyclosum/closed_form.hpp"
#include "cyclosum/series.hpp"

#include <cstdint>
#include <stdexcept>

namespace cyclosum {

/// Raised when a combination with nonzero weight sum is handed to an
/// evaluator that needs a convergent one.
class DivergentCombination : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Numeric digamma in binary64: reflection for negative arguments, upward
/// recurrence to x >= 10, then the asymptotic series. Throws std::domain_error
/// at the poles 0, -1, -2, ...
double digamma(double x);

/// Psi(p/q) for p/q > 0 via the Gauss digamma theorem (arguments above 1 go
/// through Psi(z+1) = Psi(z) + 1/z). The cosine-weighted log-sine sum is
/// rewritten into logs, surds and units when cos(2 pi/q) is at most
/// quadratic; otherwise it stays as a LOG_SINE_SERIES atom.
ClosedFormConstant digamma_rational(std::int64_t p, std::int64_t q);

/// Psi at any rational that is not a pole (negative arguments are shifted up
/// with the recurrence).
ClosedFormConstant digamma_at(const Rational& z);

/// sum_{n>=0} 1/((n x + y)^2 - z^2) = (Psi((y+z)/x) - Psi((y-z)/x)) / (2 x z).
/// Requires x > 0, z != 0 and no vanishing denominator.
ClosedFormConstant hansen_sum(const Rational& x, const Rational& y, const Rational& z);

/// -(1/m) sum_i w_i Psi(i/m). Throws DivergentCombination unless the weights sum to zero.
ClosedFormConstant digamma_combination(const SigmaCombination& combination);

/// One term of the pair decomposition w * (Sigma_m^i - Sigma_m^p)
/// = w (p - i) * hansen(m, (i+p)/2, (p-i)/2).
struct HansenPair {
    Rational scale;
    Rational x, y, z;
};

/// Writes a convergent combination as a sum of Hansen pairs pivoting on the
/// highest residue with nonzero weight.
std::vector<HansenPair> hansen_decomposition(const SigmaCombination& combination);

/// Sum of the Hansen closed forms of hansen_decomposition(combination).
ClosedFormConstant hansen_combination(const SigmaCombination& combination);

/// integral_0^1 dx / (x^2 - 2 cos(2 pi r/m) x + 1) = pi (m - 2r) / (2 m sin(2 pi r/m)),
/// written as ((m-2r)/(2m)) (pi cot(pi r/m) - pi cot(2 pi r/m)).
/// Requires 1 <= r <= m-1 and 2r != m.
ClosedFormConstant integral_closed_form(int m, int r);

}  // namespace cyclosum
