#pragma once

#include "cyclosum/closed_form.hpp"
#include "cyclosum/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace cyclosum {

/// Cutoffs up to this many periods are summed exactly; larger ones in
/// compensated binary64.
inline constexpr std::int64_t kExactPeriodLimit = 10000;

enum class Precision {
    Auto,   ///< exact up to kExactPeriodLimit, float beyond
    Exact,  ///< always exact (slow for large N)
    Float,  ///< always compensated binary64
};

/// Exact harmonic number H_N.
Rational harmonic(std::int64_t n);
/// H_N in binary64 (exact below kExactPeriodLimit, compensated summation above).
double harmonic_value(std::int64_t n);

/// Partial sum of one residue class, or of all of them (residue == 0).
struct CutoffSum {
    int modulus = 0;
    int residue = 0;
    std::int64_t periods = 0;
    std::optional<Rational> exact;
    double value = 0.0;
};

/// Sigma_m^i(N) = sum_{k=0}^{N-1} 1/(k m + i).
CutoffSum sigma(int m, int i, std::int64_t n, Precision precision = Precision::Auto);
/// Sigma_m(N) = sum of the first m N unit fractions = H_{mN}.
CutoffSum sigma_total(int m, std::int64_t n, Precision precision = Precision::Auto);

/// value(N) = log_coefficient * log N + constant + O(1/N)
struct AsymptoticExpansion {
    Rational log_coefficient;
    ClosedFormConstant constant;
    std::string remainder_order = "O(1/N)";
};

/// Sigma_m^i: log coefficient 1/m, constant -Psi(i/m)/m.
AsymptoticExpansion asymptotic_expansion(int m, int i);
/// Sigma_m: log coefficient 1, constant gamma + log m.
AsymptoticExpansion asymptotic_expansion_total(int m);

/// Sigma_m^i(N) - Sigma_m^j(N) in binary64.
double renormalized_difference(int m, int i, int j, std::int64_t n);

struct Extrapolation {
    double value = 0.0;
    double error = 0.0;
};

/// Richardson extrapolation of Sigma_m^i(N) - log(N)/m over N = base * 2^k,
/// k = 0..levels-1: an independent estimate of the asymptotic constant.
Extrapolation extrapolated_constant(int m, int i, std::int64_t base = 1000, int levels = 6);

}  // namespace cyclosum
