#pragma once

#include "cyclosum/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyclosum {

/// 50-digit literal of the Euler-Mascheroni constant.
inline constexpr const char* kEulerGammaDigits = "0.57721566490153286060651209008240243104215933593992";
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243104215933593992;

/// Symbolic building blocks of closed forms. Each atom has a fixed real value:
///
///   Unit                    1
///   EulerGamma              gamma
///   Log(n, d)               log(n/d)               (normalized to primes)
///   PiOverSqrt(d)           pi/sqrt(d)             (d squarefree; d = 1 is pi)
///   PiCot(p, q)             pi*cot(pi p/q)         (0 < p < q/2, q without a quadratic cot)
///   LogSurd(a, b, d)        log(a + b sqrt(d))
///   LogSurdOverSqrt(a,b,d)  log(a + b sqrt(d))/sqrt(d)
///   LogSineSeries(p, q)     2 sum_{k<q/2} cos(2pi k p/q) log sin(pi k/q)
///   Psi(p, q)               digamma(p/q)
///
/// Kinds are ordered as listed; that order is the canonical term order.
enum class AtomKind : int {
    Unit = 0,
    EulerGamma,
    Log,
    PiOverSqrt,
    PiCot,
    LogSurd,
    LogSurdOverSqrt,
    LogSineSeries,
    Psi,
};

class Atom {
public:
    static Atom unit() { return Atom(AtomKind::Unit, {0, 0, 0}); }
    static Atom euler_gamma() { return Atom(AtomKind::EulerGamma, {0, 0, 0}); }
    static Atom log(std::int64_t num, std::int64_t den = 1) { return Atom(AtomKind::Log, {num, den, 0}); }
    static Atom pi_over_sqrt(std::int64_t d) { return Atom(AtomKind::PiOverSqrt, {d, 0, 0}); }
    static Atom pi() { return pi_over_sqrt(1); }
    static Atom pi_cot(std::int64_t p, std::int64_t q) { return Atom(AtomKind::PiCot, {p, q, 0}); }
    static Atom log_surd(std::int64_t a, std::int64_t b, std::int64_t d)
    {
        return Atom(AtomKind::LogSurd, {a, b, d});
    }
    static Atom log_surd_over_sqrt(std::int64_t a, std::int64_t b, std::int64_t d)
    {
        return Atom(AtomKind::LogSurdOverSqrt, {a, b, d});
    }
    static Atom log_sine_series(std::int64_t p, std::int64_t q) { return Atom(AtomKind::LogSineSeries, {p, q, 0}); }
    static Atom psi(std::int64_t p, std::int64_t q) { return Atom(AtomKind::Psi, {p, q, 0}); }

    AtomKind kind() const { return kind_; }
    const std::array<std::int64_t, 3>& args() const { return args_; }
    /// Number of meaningful entries in args() for this kind.
    std::size_t arity() const;

    double value() const;
    std::string to_string() const;

    friend auto operator<=>(const Atom&, const Atom&) = default;

private:
    Atom(AtomKind kind, std::array<std::int64_t, 3> args) : kind_(kind), args_(args) {}
    AtomKind kind_;
    std::array<std::int64_t, 3> args_;
};

std::string kind_name(AtomKind kind);
std::optional<AtomKind> parse_kind(const std::string& name);
/// Builds an atom from a kind and its argument list (as stored in catalog files).
Atom make_atom(AtomKind kind, const std::vector<std::int64_t>& args);

struct Term {
    Rational coefficient;
    Atom atom;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Finite sum of rational multiples of atoms, kept normalized: atoms are
/// rewritten to canonical representatives (prime logs, squarefree radicands,
/// fundamental units, reduced cotangent arguments), merged, sorted, and
/// zero coefficients dropped. Two constants are equal iff their term lists are.
class ClosedFormConstant {
public:
    ClosedFormConstant() = default;
    explicit ClosedFormConstant(const std::vector<Term>& raw_terms);

    static ClosedFormConstant rational(const Rational& r);
    static ClosedFormConstant of(const Atom& atom, const Rational& coefficient = 1);
    static ClosedFormConstant log(const Rational& q);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    double value() const { return value_; }
    Rational coefficient_of(const Atom& atom) const;

    ClosedFormConstant operator-() const;
    friend ClosedFormConstant operator+(const ClosedFormConstant& a, const ClosedFormConstant& b);
    friend ClosedFormConstant operator-(const ClosedFormConstant& a, const ClosedFormConstant& b);
    friend ClosedFormConstant operator*(const Rational& c, const ClosedFormConstant& a);
    ClosedFormConstant& operator+=(const ClosedFormConstant& other);
    friend bool operator==(const ClosedFormConstant& a, const ClosedFormConstant& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    std::vector<Term> terms_;
    double value_ = 0.0;
};

}  // namespace cyclosum
