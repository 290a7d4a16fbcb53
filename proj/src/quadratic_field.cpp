#include "quadratic_field.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cyclosum::detail {

namespace {

std::int64_t common_d(const QuadSurd& x, const QuadSurd& y)
{
    if (x.b == 0)
        return y.d;
    if (y.b == 0 || x.d == y.d)
        return x.d;
    throw std::logic_error("mixing surds of different quadratic fields");
}

int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

int QuadSurd::sign() const
{
    const int sa = sgn(a);
    const int sb = sgn(b);
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb;
    return (a * a > b * b * d) ? sa : sb;
}

double QuadSurd::to_double() const { return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(d)); }

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) { return {x.a + y.a, x.b + y.b, common_d(x, y)}; }

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return {x.a - y.a, x.b - y.b, common_d(x, y)}; }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y)
{
    const auto d = common_d(x, y);
    return {x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d};
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y)
{
    const Rational n = y.norm();
    if (n == 0)
        throw std::domain_error("division by zero surd");
    QuadSurd num = x * y.conjugate();
    return {num.a / n, num.b / n, num.d};
}

bool operator==(const QuadSurd& x, const QuadSurd& y)
{
    return x.a == y.a && x.b == y.b && (x.b == 0 || x.d == y.d);
}

QuadSurd pow(QuadSurd x, int e)
{
    if (e < 0) {
        x = QuadSurd::rational(1, x.d) / x;
        e = -e;
    }
    QuadSurd result = QuadSurd::rational(1, x.d);
    while (e > 0) {
        if (e & 1)
            result = result * x;
        x = x * x;
        e >>= 1;
    }
    return result;
}

namespace {

std::optional<std::int64_t> exact_sqrt(std::int64_t n)
{
    if (n < 0)
        return std::nullopt;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    for (auto c = r - 1; c <= r + 1; ++c)
        if (c >= 0 && c * c == n)
            return c;
    return std::nullopt;
}

}  // namespace

QuadSurd fundamental_unit(std::int64_t d)
{
    if (d < 2)
        throw std::domain_error("fundamental_unit requires a squarefree d > 1");
    for (std::int64_t b = 1; b < 1000000; ++b) {
        for (std::int64_t delta : {-1, 1}) {
            if (auto a = exact_sqrt(d * b * b + delta); a && *a > 0)
                return {Rational(static_cast<long>(*a)), Rational(static_cast<long>(b)), d};
        }
    }
    throw std::runtime_error("fundamental unit search exhausted for d = " + std::to_string(d));
}

std::optional<Rational> unit_exponent(const QuadSurd& eps)
{
    if (eps.sign() <= 0)
        return std::nullopt;
    if (eps.b == 0)
        return eps.a == 1 ? std::optional<Rational>(Rational(0)) : std::nullopt;
    const Rational n = eps.norm();
    if (n != 1 && n != -1)
        return std::nullopt;
    const QuadSurd u = fundamental_unit(eps.d);
    const double r = std::log(eps.to_double()) / std::log(u.to_double());
    for (int t = 1; t <= 12; ++t) {
        const double st = r * t;
        const auto s = std::llround(st);
        if (std::fabs(st - static_cast<double>(s)) > 1e-6)
            continue;
        if (pow(eps, t) == pow(u, static_cast<int>(s)))
            return make_rational(s, t);
    }
    return std::nullopt;
}

namespace {

QuadSurd surd(std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd, std::int64_t d)
{
    return {make_rational(an, ad), make_rational(bn, bd), d};
}

}  // namespace

std::optional<QuadSurd> cos_two_pi(std::int64_t p, std::int64_t q)
{
    if (q <= 0)
        throw std::domain_error("cos_two_pi requires q > 0");
    p %= q;
    if (p < 0)
        p += q;
    const auto g = std::gcd(p, q);
    p /= g;
    q /= g;
    // cos is symmetric under p -> q - p
    if (2 * p > q)
        p = q - p;
    switch (q) {
    case 1:
        return QuadSurd::rational(1);
    case 2:
        return QuadSurd::rational(-1);
    case 3:
        return QuadSurd::rational(make_rational(-1, 2));
    case 4:
        return QuadSurd::rational(0);
    case 6:
        return QuadSurd::rational(make_rational(1, 2));
    case 5:
        return p == 1 ? surd(-1, 4, 1, 4, 5) : surd(-1, 4, -1, 4, 5);
    case 8:
        return p == 1 ? surd(0, 1, 1, 2, 2) : surd(0, 1, -1, 2, 2);
    case 10:
        return p == 1 ? surd(1, 4, 1, 4, 5) : surd(1, 4, -1, 4, 5);
    case 12:
        return p == 1 ? surd(0, 1, 1, 2, 3) : surd(0, 1, -1, 2, 3);
    default:
        return std::nullopt;
    }
}

std::optional<QuadSurd> cot_pi(std::int64_t p, std::int64_t q)
{
    if (q <= 0 || p <= 0 || p >= q)
        throw std::domain_error("cot_pi requires 0 < p/q < 1");
    const auto g = std::gcd(p, q);
    p /= g;
    q /= g;
    // cot(pi - x) = -cot(x)
    if (2 * p > q) {
        auto c = cot_pi(q - p, q);
        if (!c)
            return std::nullopt;
        return QuadSurd::rational(0, c->d) - *c;
    }
    switch (q) {
    case 2:
        return QuadSurd::rational(0);
    case 3:
        return surd(0, 1, 1, 3, 3);
    case 4:
        return QuadSurd::rational(1);
    case 6:
        return surd(0, 1, 1, 1, 3);
    case 8:
        return p == 1 ? surd(1, 1, 1, 1, 2) : surd(-1, 1, 1, 1, 2);
    case 12:
        return p == 1 ? surd(2, 1, 1, 1, 3) : surd(2, 1, -1, 1, 3);
    default:
        return std::nullopt;
    }
}

std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t n)
{
    if (n <= 0)
        throw std::domain_error("squarefree_split requires n > 0");
    std::int64_t s = 1;
    std::int64_t core = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k)
            s *= p;
        if (e % 2)
            core *= p;
    }
    core *= n;
    return {s, core};
}

}  // namespace cyclosum::detail
