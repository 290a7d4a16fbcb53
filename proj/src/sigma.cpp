#include "cyclosum/sigma.hpp"

#include "cyclosum/compensated_sum.hpp"
#include "cyclosum/digamma.hpp"
#include "cyclosum/series.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cyclosum {

namespace {

void check_residue(int m, int i)
{
    if (m < 1)
        throw std::domain_error("modulus must be positive");
    if (i < 1 || i > m)
        throw std::domain_error("residue " + std::to_string(i) + " is outside 1.." + std::to_string(m));
}

void check_cutoff(std::int64_t n)
{
    if (n < 1)
        throw std::domain_error("cutoff must be at least one period");
}

SigmaCombination single(int m, int i)
{
    std::vector<std::int64_t> w(m, 0);
    w[i - 1] = 1;
    return {m, std::move(w)};
}

// Smallest terms first keeps the compensated sum tight.
double residue_sum_float(int m, int i, std::int64_t n)
{
    CompensatedSum s;
    for (std::int64_t k = n - 1; k >= 0; --k)
        s += 1.0 / static_cast<double>(k * m + i);
    return s.value();
}

bool use_exact(Precision precision, std::int64_t n)
{
    return precision == Precision::Exact || (precision == Precision::Auto && n <= kExactPeriodLimit);
}

}  // namespace

Rational harmonic(std::int64_t n)
{
    check_cutoff(n);
    return truncated_sum(single(1, 1), n);
}

double harmonic_value(std::int64_t n)
{
    check_cutoff(n);
    return n <= kExactPeriodLimit ? harmonic(n).get_d() : residue_sum_float(1, 1, n);
}

CutoffSum sigma(int m, int i, std::int64_t n, Precision precision)
{
    check_residue(m, i);
    check_cutoff(n);
    CutoffSum s{m, i, n, std::nullopt, 0.0};
    if (use_exact(precision, n)) {
        s.exact = truncated_sum(single(m, i), n);
        s.value = s.exact->get_d();
    } else {
        s.value = residue_sum_float(m, i, n);
    }
    return s;
}

CutoffSum sigma_total(int m, std::int64_t n, Precision precision)
{
    if (m < 1)
        throw std::domain_error("modulus must be positive");
    check_cutoff(n);
    CutoffSum s{m, 0, n, std::nullopt, 0.0};
    if (use_exact(precision, n)) {
        s.exact = harmonic(n * m);
        s.value = s.exact->get_d();
    } else {
        s.value = residue_sum_float(1, 1, n * m);
    }
    return s;
}

AsymptoticExpansion asymptotic_expansion(int m, int i)
{
    check_residue(m, i);
    return {make_rational(1, m), make_rational(-1, m) * digamma_rational(i, m), "O(1/N)"};
}

AsymptoticExpansion asymptotic_expansion_total(int m)
{
    if (m < 1)
        throw std::domain_error("modulus must be positive");
    // H_{mN} = log N + gamma + log m + O(1/N)
    return {1, ClosedFormConstant::of(Atom::euler_gamma()) + ClosedFormConstant::log(m), "O(1/N)"};
}

double renormalized_difference(int m, int i, int j, std::int64_t n)
{
    check_residue(m, i);
    check_residue(m, j);
    check_cutoff(n);
    if (i == j)
        return 0.0;
    const auto diff = SigmaCombination::difference(m, i, j);
    return n <= kExactPeriodLimit ? truncated_sum(diff, n).get_d() : truncated_sum_approx(diff, n);
}

Extrapolation extrapolated_constant(int m, int i, std::int64_t base, int levels)
{
    check_residue(m, i);
    if (base < 1 || levels < 2)
        throw std::domain_error("extrapolation needs base >= 1 and at least two levels");
    // T[j][k] eliminates the 1/N^k term; the error expansion is in integer powers of 1/N.
    std::vector<std::vector<double>> t(levels);
    std::int64_t n = base;
    for (int j = 0; j < levels; ++j, n *= 2) {
        t[j].push_back(residue_sum_float(m, i, n) - std::log(static_cast<double>(n)) / m);
        for (int k = 1; k <= j; ++k) {
            const double factor = std::ldexp(1.0, k) - 1.0;
            t[j].push_back(t[j][k - 1] + (t[j][k - 1] - t[j - 1][k - 1]) / factor);
        }
    }
    const double best = t[levels - 1][levels - 1];
    return {best, std::fabs(best - t[levels - 2][levels - 2])};
}

}  // namespace cyclosum
