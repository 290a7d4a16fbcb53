#include "cyclosum/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cyclosum {

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending))
{
    trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<std::int64_t> ascending)
{
    coeffs_.reserve(ascending.size());
    for (auto c : ascending)
        coeffs_.emplace_back(make_rational(c));
    trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t power)
{
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::x_pow_minus_one(std::size_t m)
{
    return monomial(1, m) - constant(1);
}

RationalPolynomial RationalPolynomial::one_minus_x_pow(std::size_t m)
{
    return constant(1) - monomial(1, m);
}

void RationalPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Rational& RationalPolynomial::leading() const
{
    if (coeffs_.empty())
        throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational RationalPolynomial::coefficient(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

bool RationalPolynomial::has_integer_coefficients() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

Rational RationalPolynomial::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double RationalPolynomial::evaluate(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->get_d();
    return acc;
}

RationalPolynomial RationalPolynomial::operator-() const
{
    std::vector<Rational> v(coeffs_);
    for (auto& c : v)
        c = -c;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b)
{
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coefficient(i) + b.coefficient(i);
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) { return a + (-b); }

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p)
{
    std::vector<Rational> v(p.coeffs_);
    for (auto& x : v)
        x *= c;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::monic() const
{
    if (is_zero())
        return {};
    return Rational(1 / leading()) * *this;
}

std::string RationalPolynomial::to_string(char var) const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1)
            out << mag.get_str() << '*';
        out << var;
        if (i > 1)
            out << '^' << i;
    }
    return out.str();
}

PolynomialDivision divide_with_remainder(const RationalPolynomial& numerator,
                                         const RationalPolynomial& denominator)
{
    if (denominator.is_zero())
        throw std::domain_error("polynomial division by zero");
    const int dd = denominator.degree();
    std::vector<Rational> rem(numerator.coefficients().begin(), numerator.coefficients().end());
    if (numerator.degree() < dd)
        return {RationalPolynomial(), numerator};

    std::vector<Rational> quot(numerator.degree() - dd + 1);
    const Rational& lead = denominator.leading();
    auto den = denominator.coefficients();
    for (int k = numerator.degree() - dd; k >= 0; --k) {
        Rational q = rem[k + dd] / lead;
        quot[k] = q;
        if (q == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[k + j] -= q * den[j];
    }
    rem.resize(dd);
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

NotDivisible::NotDivisible(RationalPolynomial remainder)
    : std::domain_error("not divisible: remainder " + remainder.to_string()), remainder_(std::move(remainder))
{
}

RationalPolynomial exact_divide(const RationalPolynomial& numerator, const RationalPolynomial& denominator)
{
    auto [q, r] = divide_with_remainder(numerator, denominator);
    if (!r.is_zero())
        throw NotDivisible(std::move(r));
    return q;
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b)
{
    while (!b.is_zero()) {
        auto r = divide_with_remainder(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace cyclosum
