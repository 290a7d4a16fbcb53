#pragma once

#include "cyclosum/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclosum {

/// Dense univariate polynomial with exact rational coefficients,
/// indexed by ascending power. The zero polynomial has no coefficients
/// and degree -1; otherwise the leading coefficient is nonzero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> ascending);
    RationalPolynomial(std::initializer_list<std::int64_t> ascending);

    static RationalPolynomial constant(const Rational& c);
    static RationalPolynomial monomial(const Rational& c, std::size_t power);
    /// x^m - 1
    static RationalPolynomial x_pow_minus_one(std::size_t m);
    /// 1 - x^m
    static RationalPolynomial one_minus_x_pow(std::size_t m);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& leading() const;
    Rational coefficient(std::size_t power) const;
    std::span<const Rational> coefficients() const { return coeffs_; }
    bool has_integer_coefficients() const;

    Rational evaluate(const Rational& x) const;
    double evaluate(double x) const;

    RationalPolynomial operator-() const;
    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) = default;

    /// Scaled so the leading coefficient is 1 (zero stays zero).
    RationalPolynomial monic() const;

    /// Human-readable form in ascending powers, e.g. "1 - x + x^2".
    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct PolynomialDivision {
    RationalPolynomial quotient;
    RationalPolynomial remainder;
};

/// Long division: numerator = quotient * denominator + remainder, deg(remainder) < deg(denominator).
PolynomialDivision divide_with_remainder(const RationalPolynomial& numerator,
                                         const RationalPolynomial& denominator);

/// Thrown by exact_divide; carries the nonzero remainder.
class NotDivisible : public std::domain_error {
public:
    explicit NotDivisible(RationalPolynomial remainder);
    const RationalPolynomial& remainder() const { return remainder_; }

private:
    RationalPolynomial remainder_;
};

/// Quotient of an exact division; throws NotDivisible otherwise.
RationalPolynomial exact_divide(const RationalPolynomial& numerator,
                                const RationalPolynomial& denominator);

/// Monic greatest common divisor (zero if both are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

}  // namespace cyclosum
