#include "cyclosum/cyclotomic.hpp"
#include "cyclosum/polynomial.hpp"
#include "cyclosum/series.hpp"

#include <doctest.h>

#include <cmath>

using namespace cyclosum;

TEST_CASE("parse_rational accepts integers and fractions")
{
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("-2") == -2);
    CHECK(parse_rational("6/-4") == make_rational(-3, 2));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("polynomial arithmetic and division")
{
    const RationalPolynomial cube = RationalPolynomial::x_pow_minus_one(3);
    const RationalPolynomial line{-1, 1};
    CHECK(exact_divide(cube, line) == RationalPolynomial{1, 1, 1});
    CHECK(line * RationalPolynomial{1, 1, 1} == cube);
    CHECK(RationalPolynomial{1, 1, 1}.to_string() == "1 + x + x^2");
    CHECK(RationalPolynomial::one_minus_x_pow(2) == RationalPolynomial{1, 0, -1});

    auto [q, r] = divide_with_remainder(RationalPolynomial{1, 0, 0, 1}, RationalPolynomial{1, 1});
    CHECK(r.is_zero());
    CHECK(q == RationalPolynomial{1, -1, 1});

    CHECK_THROWS_AS(exact_divide(RationalPolynomial{1, 0, 1}, RationalPolynomial{1, 1}), NotDivisible);
    CHECK(gcd(RationalPolynomial{-1, 0, 1}, RationalPolynomial{1, 2, 1}) == RationalPolynomial{1, 1});
    CHECK(RationalPolynomial{2, 4}.evaluate(make_rational(1, 2)) == 4);
}

TEST_CASE("real factorization of x^m - 1 multiplies back (m <= 64, 16 points)")
{
    CHECK_THROWS_AS(real_factorization(1), std::domain_error);
    for (int m = 2; m <= 64; ++m) {
        const auto f = real_factorization(m);
        CHECK(f.has_root_plus_one);
        CHECK(f.has_root_minus_one == (m % 2 == 0));
        CHECK(static_cast<int>(f.quadratic_factors.size()) == (m - 1) / 2);
        for (int k = 0; k < 16; ++k) {
            const double x = std::cos(M_PI * (k + 0.5) / 16);
            const double expected = std::pow(x, m) - 1.0;
            CHECK(std::fabs(f.evaluate_product(x) - expected) <= 1e-12);
        }
    }
}

TEST_CASE("geometric blocks times (x^a - 1) give x^(ka) - 1")
{
    for (int a = 1; a <= 8; ++a)
        for (int k = 2; k <= 8; ++k)
            CHECK(geometric_block(k, a) * RationalPolynomial::x_pow_minus_one(a) ==
                  RationalPolynomial::x_pow_minus_one(static_cast<std::size_t>(k * a)));
}

TEST_CASE("quadratic factors are positive on [0,1]")
{
    for (int m = 3; m <= 64; ++m)
        for (const auto& q : real_factorization(m).quadratic_factors)
            for (int k = 0; k <= 127; ++k)
                CHECK(q.evaluate(k / 127.0) > 0.0);
}

TEST_CASE("integer-trace quadratic factors divide x^m - 1 exactly")
{
    int checked = 0;
    for (int m = 3; m <= 24; ++m) {
        for (const auto& q : real_factorization(m).quadratic_factors) {
            auto t = q.integer_trace();
            if (!t) {
                CHECK_FALSE(q.exact().has_value());
                continue;
            }
            ++checked;
            CHECK(*q.exact() == RationalPolynomial{1, -*t, 1});
            auto [quot, rem] = divide_with_remainder(RationalPolynomial::x_pow_minus_one(m), *q.exact());
            CHECK(rem.is_zero());
        }
    }
    CHECK(checked > 0);
    CHECK(real_factorization(4).to_string() == "(x - 1)(x + 1)(1 + x^2)");
}

TEST_CASE("reciprocal series")
{
    auto s = reciprocal_series(RationalPolynomial{1, 1, 1}, 7);
    const std::vector<Rational> expected{1, -1, 0, 1, -1, 0, 1};
    CHECK(s.coefficients == expected);
    CHECK_THROWS_AS(reciprocal_series(RationalPolynomial{2, 1}, 4), std::domain_error);
}

TEST_CASE("pattern certification round-trips for divisor-derived factors (m <= 24)")
{
    for (int m = 2; m <= 24; ++m) {
        std::vector<RationalPolynomial> blocks;
        for (int a = 1; a < m; ++a) {
            if (m % a)
                continue;
            blocks.push_back(geometric_block(m / a, a));
            if ((m / a) % 2 == 0)
                blocks.push_back(RationalPolynomial::one_minus_x_pow(a) + RationalPolynomial::monomial(2, a));
        }
        for (const auto& block : blocks) {
            auto pattern = certify_pattern(block, m);
            CHECK(pattern.certified);
            CHECK(pattern.quotient * block == RationalPolynomial::one_minus_x_pow(m));
            const auto series = reciprocal_series(block, static_cast<std::size_t>(4 * m));
            for (int n = 0; n < 4 * m; ++n)
                CHECK(series.coefficients[n] == pattern.weights[n % m]);
        }
    }
}

TEST_CASE("non-periodic reciprocals are rejected")
{
    CHECK_THROWS_AS(certify_pattern(RationalPolynomial{1, -2}, 4), NotPeriodic);
    CHECK_THROWS_AS(certify_pattern(RationalPolynomial{1, 1, 1}, 4), NotPeriodic);
}

TEST_CASE("integrate_and_map shifts exponents by one")
{
    auto c = integrate_and_map(certify_pattern(RationalPolynomial{1, 1}, 2));
    CHECK(c == SigmaCombination::difference(2, 1, 2));
    CHECK(c.to_string() == "S(2,1) - S(2,2)");
    CHECK(c.slug() == "sigma1-sigma2");

    auto m6 = integrate_and_map(certify_pattern(RationalPolynomial{1, -1, 1}, 6));
    CHECK(m6.weights() == std::vector<std::int64_t>{1, 1, 0, -1, -1, 0});
    CHECK_THROWS(integrate_and_map(pattern_from_weights(2, {1, -1})));
}

TEST_CASE("convergence dichotomy: zero weight sum is bounded, otherwise log growth")
{
    for (int m = 2; m <= 8; ++m) {
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= m; ++j) {
                std::vector<std::int64_t> w(m, 0);
                w[i - 1] += 1;
                w[j - 1] += 1;
                const SigmaCombination divergent(m, w);
                CHECK_FALSE(divergent.convergent());
                CHECK_FALSE(pattern_from_weights(m, w).summable());
                const double growth = truncated_sum_approx(divergent, 8000) - truncated_sum_approx(divergent, 1000);
                CHECK(growth == doctest::Approx(2.0 / m * std::log(8.0)).epsilon(1e-3));
                if (i == j)
                    continue;
                const auto c = SigmaCombination::difference(m, i, j);
                CHECK(c.convergent());
                const double drift = truncated_sum_approx(c, 8000) - truncated_sum_approx(c, 1000);
                CHECK(std::fabs(drift) <= 2.0 / (m * 1000.0));
            }
        }
    }
}

TEST_CASE("exact and binary64 truncated sums agree")
{
    const SigmaCombination c(6, {1, 1, 0, -1, -1, 0});
    for (std::int64_t n : {1, 2, 17, 500}) {
        const Rational exact = truncated_sum(c, n);
        CHECK(std::fabs(exact.get_d() - truncated_sum_approx(c, n)) <= 1e-15);
    }
    CHECK(truncated_sum(SigmaCombination::difference(2, 1, 2), 2) == make_rational(7, 12));
}

TEST_CASE("integer expansion search lists the integer-trace factors")
{
    auto found = integer_expansion_search(12);
    REQUIRE(found.size() == 3);
    CHECK(found[0].root_index == 2);
    CHECK(found[0].period == 6);
    CHECK(found[1].trace == 0);
    CHECK(found[2].prefix == std::vector<std::int64_t>{1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1, 0});
    CHECK(integer_expansion_search(5).empty());
}
