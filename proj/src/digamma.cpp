#include "cyclosum/digamma.hpp"

#include "quadratic_field.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace cyclosum {

using detail::QuadSurd;

double digamma(double x)
{
    if (!std::isfinite(x))
        throw std::domain_error("digamma of a non-finite argument");
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("digamma pole at a nonpositive integer");
    if (x < 0.0) {
        // Psi(x) = Psi(1 - x) - pi cot(pi x)
        const long double pi = std::numbers::pi_v<long double>;
        return static_cast<double>(digamma(1.0 - x) - pi / std::tan(pi * static_cast<long double>(x)));
    }
    long double z = x;
    long double acc = 0.0L;
    while (z < 10.0L) {
        acc -= 1.0L / z;
        z += 1.0L;
    }
    const long double w = 1.0L / (z * z);
    // Bernoulli tail: -1/(12z^2) + 1/(120z^4) - 1/(252z^6) + 1/(240z^8) - 1/(132z^10) + 691/(32760z^12)
    const long double tail =
        w * (-1.0L / 12 + w * (1.0L / 120 + w * (-1.0L / 252 + w * (1.0L / 240 + w * (-1.0L / 132 + w * 691.0L / 32760)))));
    return static_cast<double>(acc + std::log(z) - 0.5L / z + tail);
}

namespace {

// 2 sum_{k<q/2} cos(2 pi k p/q) log sin(pi k/q) written in logs of rationals
// and of quadratic units; nullopt when cos(2 pi/q) is not at most quadratic.
std::optional<ClosedFormConstant> log_sine_closed(std::int64_t p, std::int64_t q)
{
    if (!detail::cos_two_pi(1, q))
        return std::nullopt;
    std::vector<Term> terms;
    std::vector<Term> stray;
    for (std::int64_t k = 1; 2 * k < q; ++k) {
        const QuadSurd c = *detail::cos_two_pi(k * p, q);
        const QuadSurd ck = *detail::cos_two_pi(k, q);
        // sin^2(pi k/q) = (1 - cos(2 pi k/q))/2, so 2 log sin = log alpha
        const QuadSurd alpha{(1 - ck.a) / 2, -ck.b / 2, ck.d};
        const Rational norm = alpha.norm();
        // log alpha = (1/2) log N(alpha) + (r/2) log u  where alpha/conj(alpha) = u^r
        Rational r = 0;
        if (!alpha.is_rational()) {
            auto e = detail::unit_exponent(alpha / alpha.conjugate());
            if (!e)
                return std::nullopt;
            r = *e;
        }
        const Atom log_norm = Atom::log(numerator_i64(norm), denominator_i64(norm));
        terms.push_back({c.a / 2, log_norm});
        if (c.b != 0)
            stray.push_back({c.b / 2, log_norm});
        if (r != 0) {
            const QuadSurd u = detail::fundamental_unit(alpha.d);
            const auto ua = numerator_i64(u.a);
            const auto ub = numerator_i64(u.b);
            terms.push_back({c.a * r / 2, Atom::log_surd(ua, ub, alpha.d)});
            if (c.b != 0) {
                if (c.d != alpha.d)
                    return std::nullopt;
                terms.push_back({c.b * r * c.d / 2, Atom::log_surd_over_sqrt(ua, ub, alpha.d)});
            }
        }
    }
    // sqrt(d) * log(rational) has no atom; such sums must cancel
    if (!ClosedFormConstant(stray).is_zero())
        return std::nullopt;
    return ClosedFormConstant(terms);
}

// Psi(a/b) for 0 < a/b <= 1, reduced.
ClosedFormConstant digamma_unit_interval(std::int64_t a, std::int64_t b)
{
    const ClosedFormConstant gamma = ClosedFormConstant::of(Atom::euler_gamma(), -1);
    if (b == 1)
        return gamma;
    std::vector<Term> terms{
        {-1, Atom::euler_gamma()},
        {-1, Atom::log(2 * b)},
        {make_rational(-1, 2), Atom::pi_cot(a, b)},
    };
    ClosedFormConstant head(terms);
    if (auto closed = log_sine_closed(a, b))
        return head + *closed;
    return head + ClosedFormConstant::of(Atom::log_sine_series(a, b));
}

constexpr std::int64_t kMaxRecurrenceSteps = 1000000;

}  // namespace

ClosedFormConstant digamma_at(const Rational& z)
{
    if (z <= 0 && is_integer(z))
        throw std::domain_error("digamma pole at " + to_string(z));
    Rational f = z;
    Rational shift = 0;
    std::int64_t steps = 0;
    while (f > 1) {
        f -= 1;
        shift += 1 / f;
        if (++steps > kMaxRecurrenceSteps)
            throw std::domain_error("digamma argument too large for the recurrence: " + to_string(z));
    }
    while (f <= 0) {
        shift -= 1 / f;
        f += 1;
        if (++steps > kMaxRecurrenceSteps)
            throw std::domain_error("digamma argument too negative for the recurrence: " + to_string(z));
    }
    return digamma_unit_interval(numerator_i64(f), denominator_i64(f)) + ClosedFormConstant::rational(shift);
}

ClosedFormConstant digamma_rational(std::int64_t p, std::int64_t q)
{
    if (q == 0)
        throw std::domain_error("digamma_rational: zero denominator");
    const Rational z = make_rational(p, q);
    if (z <= 0)
        throw std::domain_error("digamma_rational requires p/q > 0, got " + to_string(z));
    return digamma_at(z);
}

ClosedFormConstant hansen_sum(const Rational& x, const Rational& y, const Rational& z)
{
    if (x <= 0)
        throw std::domain_error("hansen_sum requires x > 0");
    if (z == 0)
        throw std::domain_error("hansen_sum with z = 0 degenerates to a trigamma value");
    const Rational a = (y + z) / x;
    const Rational b = (y - z) / x;
    // (n x + y)^2 - z^2 = x^2 (n + b)(n + a): a zero factor is exactly a pole of Psi
    if ((a <= 0 && is_integer(a)) || (b <= 0 && is_integer(b)))
        throw std::domain_error("hansen_sum: a term of the series has a zero denominator (pole)");
    return (1 / (2 * x * z)) * (digamma_at(a) - digamma_at(b));
}

ClosedFormConstant digamma_combination(const SigmaCombination& combination)
{
    if (!combination.convergent())
        throw DivergentCombination("combination " + combination.to_string() + " diverges (weights sum to " +
                                   std::to_string(combination.weight_sum()) + ")");
    const int m = combination.modulus();
    ClosedFormConstant total;
    for (int i = 1; i <= m; ++i) {
        const auto w = combination.weight(i);
        if (w != 0)
            total += make_rational(-w, m) * digamma_rational(i, m);
    }
    return total;
}

std::vector<HansenPair> hansen_decomposition(const SigmaCombination& combination)
{
    if (!combination.convergent())
        throw DivergentCombination("combination " + combination.to_string() + " diverges");
    const int m = combination.modulus();
    int pivot = 0;
    for (int i = m; i >= 1 && pivot == 0; --i)
        if (combination.weight(i) != 0)
            pivot = i;
    std::vector<HansenPair> pairs;
    for (int i = 1; i < pivot; ++i) {
        const auto w = combination.weight(i);
        if (w == 0)
            continue;
        pairs.push_back({make_rational(w * (pivot - i)), make_rational(m), make_rational(i + pivot, 2),
                         make_rational(pivot - i, 2)});
    }
    return pairs;
}

ClosedFormConstant hansen_combination(const SigmaCombination& combination)
{
    ClosedFormConstant total;
    for (const auto& pair : hansen_decomposition(combination))
        total += pair.scale * hansen_sum(pair.x, pair.y, pair.z);
    return total;
}

ClosedFormConstant integral_closed_form(int m, int r)
{
    if (m < 2 || r < 1 || r > m - 1)
        throw std::domain_error("integral_closed_form requires 1 <= r <= m-1");
    if (2 * r == m)
        throw std::domain_error("integral_closed_form: r = m/2 gives the factor (x+1)^2, where the formula is 0/0");
    // pi / sin(t) = pi cot(t/2) - pi cot(t) with t = 2 pi r/m
    const Rational c = make_rational(m - 2 * r, 2 * m);
    return ClosedFormConstant({{c, Atom::pi_cot(r, m)}, {-c, Atom::pi_cot(2 * r, m)}});
}

}  // namespace cyclosum
