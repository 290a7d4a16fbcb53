#include "cyclosum/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace cyclosum {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && s.front() == ' ')
        s.erase(s.begin());
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    if (!s.empty() && s.front() == '+')
        s.erase(s.begin());
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    r.canonicalize();
    return r;
}

namespace {

std::int64_t to_i64(const mpz_class& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

}  // namespace

std::int64_t numerator_i64(const Rational& r) { return to_i64(r.get_num()); }

std::int64_t denominator_i64(const Rational& r) { return to_i64(r.get_den()); }

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace cyclosum
