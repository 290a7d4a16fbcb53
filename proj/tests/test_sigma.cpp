#include "cyclosum/sigma.hpp"
#include "oracle_values.hpp"

#include <doctest.h>

#include <cmath>

using namespace cyclosum;

namespace {

ClosedFormConstant term(const Atom& a, std::int64_t num = 1, std::int64_t den = 1)
{
    return ClosedFormConstant::of(a, make_rational(num, den));
}

}  // namespace

TEST_CASE("harmonic numbers")
{
    CHECK(harmonic(1) == 1);
    CHECK(harmonic(6) == make_rational(49, 20));
    CHECK(harmonic_value(6) == doctest::Approx(2.45).epsilon(1e-15));
    CHECK_THROWS(harmonic(0));
}

TEST_CASE("Euler gamma from H_N - log N - 1/(2N) at N = 1e6")
{
    const double n = 1e6;
    const double estimate = harmonic_value(1000000) - std::log(n) - 1 / (2 * n);
    CHECK(std::fabs(estimate - oracle::harmonic_1e6_minus_log_minus_half) <= 1e-12);
    CHECK(std::fabs(estimate - kEulerGamma) <= 1e-10);
    CHECK(std::fabs(kEulerGamma - oracle::euler_gamma) == 0.0);
}

TEST_CASE("harmonic residual H_N - log N - gamma - 1/(2N) is below 1/(8N^2)")
{
    for (std::int64_t n : {100, 1000, 10000}) {
        const double residual = harmonic_value(n) - std::log(static_cast<double>(n)) - kEulerGamma - 0.5 / n;
        CHECK(std::fabs(residual) <= 1.0 / (8.0 * n * n));
    }
}

TEST_CASE("residue classes partition the harmonic sum exactly (m <= 12, N <= 1000)")
{
    for (int m = 1; m <= 12; ++m) {
        for (std::int64_t n : {1, 7, 1000}) {
            Rational total = 0;
            for (int i = 1; i <= m; ++i)
                total += *sigma(m, i, n, Precision::Exact).exact;
            CHECK(total == harmonic(m * n));
            CHECK(*sigma_total(m, n, Precision::Exact).exact == harmonic(m * n));
        }
    }
}

TEST_CASE("scaling: S(km, ki)(N) = S(m, i)(N)/k")
{
    for (int m = 1; m <= 6; ++m)
        for (int k = 2; k <= 4; ++k)
            for (int i = 1; i <= m; ++i)
                CHECK(*sigma(k * m, k * i, 50, Precision::Exact).exact * k == *sigma(m, i, 50, Precision::Exact).exact);
}

TEST_CASE("precision selection")
{
    CHECK(sigma(3, 1, 10).exact.has_value());
    CHECK_FALSE(sigma(3, 1, kExactPeriodLimit + 1).exact.has_value());
    CHECK_FALSE(sigma(3, 1, 10, Precision::Float).exact.has_value());
    CHECK(sigma(3, 1, 10, Precision::Float).value == doctest::Approx(sigma(3, 1, 10, Precision::Exact).value).epsilon(1e-15));
    CHECK_THROWS_AS(sigma(3, 0, 10), std::domain_error);
    CHECK_THROWS_AS(sigma(3, 4, 10), std::domain_error);
}

TEST_CASE("asymptotic constants are -Psi(i/m)/m")
{
    for (const auto& c : oracle::constants) {
        const auto e = asymptotic_expansion(c.m, c.i);
        CHECK(e.log_coefficient == make_rational(1, c.m));
        CHECK(std::fabs(e.constant.value() - c.value) <= 1e-14);
    }
    const auto gamma_ = term(Atom::euler_gamma());
    CHECK(asymptotic_expansion(3, 1).constant ==
          term(Atom::euler_gamma(), 1, 3) + term(Atom::log(3), 1, 2) + term(Atom::pi_over_sqrt(3), 1, 6));
    CHECK(asymptotic_expansion(4, 1).constant ==
          term(Atom::euler_gamma(), 1, 4) + term(Atom::log(2), 3, 4) + term(Atom::pi(), 1, 8));
    CHECK(asymptotic_expansion(1, 1).constant == gamma_);
    CHECK(asymptotic_expansion_total(3).constant == gamma_ + term(Atom::log(3)));
    CHECK(asymptotic_expansion_total(3).log_coefficient == 1);
}

TEST_CASE("S(m,i)(N) - log(N)/m approaches the constant within 2/(mN) (m <= 12)")
{
    for (int m = 1; m <= 12; ++m) {
        for (int i = 1; i <= m; ++i) {
            const double constant = asymptotic_expansion(m, i).constant.value();
            for (std::int64_t n : {100, 1000, 10000}) {
                const double renormalized = sigma(m, i, n, Precision::Float).value - std::log(static_cast<double>(n)) / m;
                CHECK(std::fabs(renormalized - constant) <= 2.0 / (m * static_cast<double>(n)));
            }
        }
    }
}

TEST_CASE("renormalized differences do not depend on the cutoff beyond the tail bound")
{
    for (const auto& d : oracle::differences) {
        if (d.m > 8)
            continue;
        for (std::int64_t n : {1000, 100000}) {
            const double v = renormalized_difference(d.m, d.i, d.j, n);
            CHECK(std::fabs(v - d.value) <= 2.0 / (d.m * static_cast<double>(n)));
        }
    }
}

TEST_CASE("extrapolated constants match -Psi(i/m)/m")
{
    for (const auto& c : oracle::constants) {
        if (c.m > 6)
            continue;
        const auto e = extrapolated_constant(c.m, c.i);
        CHECK(std::fabs(e.value - c.value) <= 1e-12);
    }
}
