#include "cyclosum/series.hpp"

#include "cyclosum/compensated_sum.hpp"
#include "cyclosum/cyclotomic.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace cyclosum {

SigmaCombination::SigmaCombination(int modulus, std::vector<std::int64_t> weights)
    : modulus_(modulus), weights_(std::move(weights))
{
    if (modulus_ < 1)
        throw std::domain_error("modulus must be positive");
    if (static_cast<int>(weights_.size()) != modulus_)
        throw std::domain_error("weight vector length must equal the modulus");
}

SigmaCombination SigmaCombination::difference(int modulus, int i, int j)
{
    if (i < 1 || i > modulus || j < 1 || j > modulus)
        throw std::domain_error("residues must lie in 1..m");
    std::vector<std::int64_t> w(modulus, 0);
    w[i - 1] += 1;
    w[j - 1] -= 1;
    return {modulus, std::move(w)};
}

std::int64_t SigmaCombination::weight_sum() const
{
    return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

std::int64_t SigmaCombination::abs_weight_sum() const
{
    std::int64_t s = 0;
    for (auto w : weights_)
        s += std::llabs(w);
    return s;
}

std::string SigmaCombination::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (int i = 1; i <= modulus_; ++i) {
        auto w = weights_[i - 1];
        if (w == 0)
            continue;
        if (first)
            out << (w < 0 ? "-" : "");
        else
            out << (w < 0 ? " - " : " + ");
        first = false;
        if (std::llabs(w) != 1)
            out << std::llabs(w) << '*';
        out << "S(" << modulus_ << ',' << i << ')';
    }
    return first ? "0" : out.str();
}

std::string SigmaCombination::slug() const
{
    std::ostringstream out;
    bool first = true;
    for (int i = 1; i <= modulus_; ++i) {
        auto w = weights_[i - 1];
        if (w == 0)
            continue;
        if (!first || w < 0)
            out << (w < 0 ? '-' : '+');
        first = false;
        if (std::llabs(w) != 1)
            out << std::llabs(w);
        out << "sigma" << i;
    }
    return first ? "zero" : out.str();
}

bool PeriodicPattern::summable() const
{
    return std::accumulate(weights.begin(), weights.end(), std::int64_t{0}) == 0;
}

PowerSeriesPrefix reciprocal_series(const RationalPolynomial& p, std::size_t k)
{
    if (p.coefficient(0) != 1)
        throw std::domain_error("reciprocal_series requires p(0) = 1, got " + p.to_string());
    if (k < 1)
        throw std::domain_error("reciprocal_series requires k >= 1");
    std::vector<Rational> c(k);
    c[0] = 1;
    const auto coeffs = p.coefficients();
    for (std::size_t n = 1; n < k; ++n) {
        Rational acc = 0;
        const std::size_t top = std::min(n, coeffs.size() - 1);
        for (std::size_t j = 1; j <= top; ++j)
            acc += coeffs[j] * c[n - j];
        c[n] = -acc;
    }
    return {std::move(c), p};
}

PeriodicPattern certify_pattern(const RationalPolynomial& p, int m)
{
    if (p.coefficient(0) != 1)
        throw std::domain_error("certify_pattern requires p(0) = 1, got " + p.to_string());
    if (m < 1)
        throw std::domain_error("certify_pattern requires m >= 1");
    auto [q, r] = divide_with_remainder(RationalPolynomial::one_minus_x_pow(m), p);
    if (!r.is_zero())
        throw NotPeriodic("1/(" + p.to_string() + ") is not periodic with period " + std::to_string(m) +
                          ": remainder " + r.to_string());
    if (!q.has_integer_coefficients())
        throw NotPeriodic("1/(" + p.to_string() + ") has non-integer periodic coefficients " + q.to_string());

    PeriodicPattern pattern;
    pattern.period = m;
    pattern.weights.assign(m, 0);
    for (int i = 0; i < m; ++i)
        pattern.weights[i] = q.coefficient(i).get_num().get_si();
    pattern.certified = true;
    pattern.source = p;
    pattern.quotient = std::move(q);
    return pattern;
}

PeriodicPattern pattern_from_weights(int m, std::vector<std::int64_t> weights)
{
    if (static_cast<int>(weights.size()) != m)
        throw std::domain_error("pattern length must equal the period");
    PeriodicPattern pattern;
    pattern.period = m;
    pattern.weights = std::move(weights);
    return pattern;
}

SigmaCombination integrate_and_map(const PeriodicPattern& pattern)
{
    if (!pattern.certified)
        throw std::domain_error("integrate_and_map requires a certified pattern");
    // Coefficient of x^(km + i - 1) integrates to 1/(km + i): class i-1 -> Sigma_m^i.
    std::vector<std::int64_t> w(pattern.period);
    for (int i = 1; i <= pattern.period; ++i)
        w[i - 1] = pattern.weights[i - 1];
    return {pattern.period, std::move(w)};
}

namespace {

struct Fraction {
    mpz_class num;
    mpz_class den;
};

// Binary splitting over period indices [lo, hi).
Fraction split_sum(const SigmaCombination& c, std::int64_t lo, std::int64_t hi)
{
    const int m = c.modulus();
    if (hi - lo <= 8) {
        Rational acc = 0;
        for (std::int64_t k = lo; k < hi; ++k) {
            for (int i = 1; i <= m; ++i) {
                auto w = c.weight(i);
                if (w != 0)
                    acc += Rational(static_cast<long>(w), static_cast<unsigned long>(k * m + i));
            }
        }
        acc.canonicalize();
        return {acc.get_num(), acc.get_den()};
    }
    const std::int64_t mid = lo + (hi - lo) / 2;
    Fraction a = split_sum(c, lo, mid);
    Fraction b = split_sum(c, mid, hi);
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

}  // namespace

Rational truncated_sum(const SigmaCombination& combination, std::int64_t periods)
{
    if (periods < 1)
        throw std::domain_error("truncated_sum requires at least one period");
    Fraction f = split_sum(combination, 0, periods);
    Rational r(f.num, f.den);
    r.canonicalize();
    return r;
}

double truncated_sum_approx(const SigmaCombination& combination, std::int64_t periods)
{
    if (periods < 1)
        throw std::domain_error("truncated_sum requires at least one period");
    const int m = combination.modulus();
    std::vector<std::pair<int, double>> active;
    for (int i = 1; i <= m; ++i)
        if (combination.weight(i) != 0)
            active.emplace_back(i, static_cast<double>(combination.weight(i)));
    CompensatedSum total;
    for (std::int64_t k = 0; k < periods; ++k) {
        // Sum each block first: within a convergent block the terms nearly cancel.
        CompensatedSum block;
        for (auto [i, w] : active)
            block += w / static_cast<double>(k * m + i);
        total += block.value();
    }
    return total.value();
}

std::vector<IntegerExpansion> integer_expansion_search(int m, std::size_t prefix_length)
{
    std::vector<IntegerExpansion> found;
    for (const auto& q : real_factorization(m).quadratic_factors) {
        auto t = q.integer_trace();
        if (!t)
            continue;
        IntegerExpansion e;
        e.root_index = q.root_index;
        e.trace = *t;
        e.factor = *q.exact();
        e.period = m / std::gcd(q.root_index, m);
        for (const auto& c : reciprocal_series(e.factor, prefix_length).coefficients)
            e.prefix.push_back(c.get_num().get_si());
        found.push_back(std::move(e));
    }
    return found;
}

}  // namespace cyclosum
