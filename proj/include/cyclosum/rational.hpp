#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cyclosum {

/// Exact rational number (GMP); always kept in canonical form.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    Rational r(static_cast<long>(num), static_cast<unsigned long>(den < 0 ? -den : den));
    if (den < 0)
        r = -r;
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Numerator/denominator as 64-bit integers; throws std::overflow_error if they do not fit.
std::int64_t numerator_i64(const Rational& r);
std::int64_t denominator_i64(const Rational& r);

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

}  // namespace cyclosum
