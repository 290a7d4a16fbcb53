#include "cyclosum/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclosum {

std::optional<int> QuadraticFactor::integer_trace() const
{
    const int reduced = modulus / std::gcd(root_index, modulus);
    switch (reduced) {
    case 3:
        return -1;
    case 4:
        return 0;
    case 6:
        return 1;
    default:
        return std::nullopt;
    }
}

std::optional<RationalPolynomial> QuadraticFactor::exact() const
{
    auto t = integer_trace();
    if (!t)
        return std::nullopt;
    return RationalPolynomial{1, -*t, 1};
}

std::string QuadraticFactor::to_string() const
{
    std::ostringstream out;
    if (auto t = integer_trace()) {
        out << exact()->to_string();
    } else {
        out << "x^2 - 2cos(2pi*" << root_index << "/" << modulus << ")*x + 1";
    }
    return out.str();
}

double CyclotomicRealFactorization::evaluate_product(double x) const
{
    double p = x - 1.0;
    if (has_root_minus_one)
        p *= x + 1.0;
    for (const auto& q : quadratic_factors)
        p *= q.evaluate(x);
    return p;
}

std::string CyclotomicRealFactorization::to_string() const
{
    std::ostringstream out;
    out << "(x - 1)";
    if (has_root_minus_one)
        out << "(x + 1)";
    for (const auto& q : quadratic_factors)
        out << "(" << q.to_string() << ")";
    return out.str();
}

RationalPolynomial geometric_block(int m, int step)
{
    if (m < 2 || step < 1)
        throw std::domain_error("geometric_block requires m >= 2 and step >= 1");
    std::vector<Rational> v(static_cast<std::size_t>(m - 1) * step + 1);
    for (int k = 0; k < m; ++k)
        v[static_cast<std::size_t>(k) * step] = 1;
    return RationalPolynomial(std::move(v));
}

CyclotomicRealFactorization real_factorization(int m)
{
    if (m < 2)
        throw std::domain_error("real_factorization requires m >= 2");
    CyclotomicRealFactorization f;
    f.modulus = m;
    f.has_root_plus_one = true;
    f.has_root_minus_one = (m % 2 == 0);
    for (int r = 1; r <= (m - 1) / 2; ++r) {
        QuadraticFactor q{r, m, 2.0 * std::cos(2.0 * std::numbers::pi * r / m)};
        if (auto t = q.integer_trace())
            q.trace = *t;
        f.quadratic_factors.push_back(q);
    }
    return f;
}

}  // namespace cyclosum
