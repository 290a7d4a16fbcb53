#include "cyclosum/closed_form.hpp"

#include "cyclosum/digamma.hpp"
#include "quadratic_field.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclosum {

using detail::QuadSurd;

std::size_t Atom::arity() const
{
    switch (kind_) {
    case AtomKind::Unit:
    case AtomKind::EulerGamma:
        return 0;
    case AtomKind::PiOverSqrt:
        return 1;
    case AtomKind::Log:
    case AtomKind::PiCot:
    case AtomKind::LogSineSeries:
    case AtomKind::Psi:
        return 2;
    case AtomKind::LogSurd:
    case AtomKind::LogSurdOverSqrt:
        return 3;
    }
    return 0;
}

namespace {

double surd_value(std::int64_t a, std::int64_t b, std::int64_t d)
{
    return static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(d));
}

}  // namespace

double Atom::value() const
{
    constexpr double pi = std::numbers::pi;
    const auto [x, y, z] = args_;
    switch (kind_) {
    case AtomKind::Unit:
        return 1.0;
    case AtomKind::EulerGamma:
        return kEulerGamma;
    case AtomKind::Log:
        return std::log(static_cast<double>(x)) - std::log(static_cast<double>(y));
    case AtomKind::PiOverSqrt:
        return pi / std::sqrt(static_cast<double>(x));
    case AtomKind::PiCot:
        return pi / std::tan(pi * static_cast<double>(x) / static_cast<double>(y));
    case AtomKind::LogSurd:
        return std::log(surd_value(x, y, z));
    case AtomKind::LogSurdOverSqrt:
        return std::log(surd_value(x, y, z)) / std::sqrt(static_cast<double>(z));
    case AtomKind::LogSineSeries: {
        long double acc = 0.0L;
        for (std::int64_t k = 1; 2 * k < y; ++k)
            acc += std::cos(2.0L * std::numbers::pi_v<long double> * (k * x % y) / y) *
                   std::log(std::sin(std::numbers::pi_v<long double> * k / y));
        return static_cast<double>(2.0L * acc);
    }
    case AtomKind::Psi:
        return digamma(static_cast<double>(x) / static_cast<double>(y));
    }
    return 0.0;
}

namespace {

std::string surd_text(std::int64_t a, std::int64_t b, std::int64_t d)
{
    std::ostringstream out;
    if (b == 0)
        return std::to_string(a);
    if (a != 0)
        out << a << (b < 0 ? "-" : "+");
    else if (b < 0)
        out << '-';
    const auto mag = b < 0 ? -b : b;
    if (mag != 1)
        out << mag << '*';
    out << "sqrt(" << d << ')';
    return out.str();
}

}  // namespace

std::string Atom::to_string() const
{
    const auto [x, y, z] = args_;
    switch (kind_) {
    case AtomKind::Unit:
        return "1";
    case AtomKind::EulerGamma:
        return "gamma";
    case AtomKind::Log:
        return y == 1 ? "log(" + std::to_string(x) + ")" : "log(" + std::to_string(x) + "/" + std::to_string(y) + ")";
    case AtomKind::PiOverSqrt:
        return x == 1 ? "pi" : "pi/sqrt(" + std::to_string(x) + ")";
    case AtomKind::PiCot:
        return "pi*cot(pi*" + std::to_string(x) + "/" + std::to_string(y) + ")";
    case AtomKind::LogSurd:
        return "log(" + surd_text(x, y, z) + ")";
    case AtomKind::LogSurdOverSqrt:
        return "log(" + surd_text(x, y, z) + ")/sqrt(" + std::to_string(z) + ")";
    case AtomKind::LogSineSeries:
        return "logsine(" + std::to_string(x) + "/" + std::to_string(y) + ")";
    case AtomKind::Psi:
        return "psi(" + std::to_string(x) + "/" + std::to_string(y) + ")";
    }
    return "?";
}

std::string kind_name(AtomKind kind)
{
    switch (kind) {
    case AtomKind::Unit:
        return "UNIT";
    case AtomKind::EulerGamma:
        return "EULER_GAMMA";
    case AtomKind::Log:
        return "LOG";
    case AtomKind::PiOverSqrt:
        return "PI_OVER_SQRT";
    case AtomKind::PiCot:
        return "PI_COT";
    case AtomKind::LogSurd:
        return "LOG_SURD";
    case AtomKind::LogSurdOverSqrt:
        return "LOG_SURD_OVER_SQRT";
    case AtomKind::LogSineSeries:
        return "LOG_SINE_SERIES";
    case AtomKind::Psi:
        return "PSI";
    }
    return "?";
}

std::optional<AtomKind> parse_kind(const std::string& name)
{
    for (int k = 0; k <= static_cast<int>(AtomKind::Psi); ++k) {
        auto kind = static_cast<AtomKind>(k);
        if (kind_name(kind) == name)
            return kind;
    }
    return std::nullopt;
}

Atom make_atom(AtomKind kind, const std::vector<std::int64_t>& args)
{
    auto arg = [&](std::size_t i, std::int64_t fallback) { return i < args.size() ? args[i] : fallback; };
    switch (kind) {
    case AtomKind::Unit:
        return Atom::unit();
    case AtomKind::EulerGamma:
        return Atom::euler_gamma();
    case AtomKind::Log:
        if (args.empty())
            throw std::invalid_argument("LOG atom needs an argument");
        return Atom::log(arg(0, 1), arg(1, 1));
    case AtomKind::PiOverSqrt:
        return Atom::pi_over_sqrt(arg(0, 1));
    case AtomKind::PiCot:
    case AtomKind::LogSineSeries:
    case AtomKind::Psi:
        if (args.size() != 2)
            throw std::invalid_argument(kind_name(kind) + " atom needs two arguments");
        if (kind == AtomKind::PiCot)
            return Atom::pi_cot(args[0], args[1]);
        if (kind == AtomKind::LogSineSeries)
            return Atom::log_sine_series(args[0], args[1]);
        return Atom::psi(args[0], args[1]);
    case AtomKind::LogSurd:
    case AtomKind::LogSurdOverSqrt:
        if (args.size() != 3)
            throw std::invalid_argument(kind_name(kind) + " atom needs three arguments");
        return kind == AtomKind::LogSurd ? Atom::log_surd(args[0], args[1], args[2])
                                         : Atom::log_surd_over_sqrt(args[0], args[1], args[2]);
    }
    throw std::invalid_argument("unknown atom kind");
}

namespace {

using Accumulator = std::map<Atom, Rational>;

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n)
{
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

void add_log_integer(Accumulator& acc, const Rational& c, std::int64_t n)
{
    if (n <= 0)
        throw std::domain_error("logarithm of a nonpositive number");
    for (auto [p, e] : factor(n))
        acc[Atom::log(p)] += c * e;
}

void add_log_rational(Accumulator& acc, const Rational& c, const Rational& q)
{
    if (q <= 0)
        throw std::domain_error("logarithm of a nonpositive number");
    add_log_integer(acc, c, numerator_i64(q));
    add_log_integer(acc, -c, denominator_i64(q));
}

// log(g)/sqrt(d) for integer g, split over primes.
void add_log_over_sqrt_integer(Accumulator& acc, const Rational& c, std::int64_t g, std::int64_t d)
{
    for (auto [p, e] : factor(g))
        acc[Atom::log_surd_over_sqrt(p, 0, d)] += c * e;
}

// log(a + b sqrt(d)) (over_sqrt = false) or log(a + b sqrt(d))/sqrt(d) (over_sqrt = true).
void add_log_surd(Accumulator& acc, Rational c, std::int64_t a, std::int64_t b, std::int64_t d, bool over_sqrt)
{
    if (d <= 0)
        throw std::domain_error("surd radicand must be positive");
    const auto [s, core] = detail::squarefree_split(d);
    b *= s;
    if (over_sqrt)
        c /= s;
    if (b == 0 || core == 1) {
        const std::int64_t v = a + b;
        if (!over_sqrt) {
            add_log_integer(acc, c, v);
        } else if (core == 1) {
            add_log_integer(acc, c, v);
        } else {
            if (v <= 0)
                throw std::domain_error("logarithm of a nonpositive number");
            add_log_over_sqrt_integer(acc, c, v, core);
        }
        return;
    }
    QuadSurd alpha{make_rational(a), make_rational(b), core};
    if (alpha.sign() <= 0)
        throw std::domain_error("logarithm of a nonpositive surd");
    const std::int64_t g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
    if (g > 1) {
        if (over_sqrt)
            add_log_over_sqrt_integer(acc, c, g, core);
        else
            add_log_integer(acc, c, g);
        alpha = {make_rational(a / g), make_rational(b / g), core};
    }
    if (auto r = detail::unit_exponent(alpha)) {
        if (*r == 0)
            return;
        const QuadSurd u = detail::fundamental_unit(core);
        const auto ua = numerator_i64(u.a);
        const auto ub = numerator_i64(u.b);
        acc[over_sqrt ? Atom::log_surd_over_sqrt(ua, ub, core) : Atom::log_surd(ua, ub, core)] += c * *r;
        return;
    }
    const auto aa = a / g;
    const auto bb = b / g;
    acc[over_sqrt ? Atom::log_surd_over_sqrt(aa, bb, core) : Atom::log_surd(aa, bb, core)] += c;
}

void add_normalized(Accumulator& acc, const Rational& c, const Atom& atom)
{
    if (c == 0)
        return;
    const auto [x, y, z] = atom.args();
    switch (atom.kind()) {
    case AtomKind::Unit:
    case AtomKind::EulerGamma:
        acc[atom] += c;
        return;
    case AtomKind::Log:
        if (x <= 0 || y <= 0)
            throw std::domain_error("LOG atom needs a positive rational argument");
        add_log_rational(acc, c, make_rational(x, y));
        return;
    case AtomKind::PiOverSqrt: {
        if (x <= 0)
            throw std::domain_error("PI_OVER_SQRT needs a positive radicand");
        const auto [s, core] = detail::squarefree_split(x);
        acc[Atom::pi_over_sqrt(core)] += c / s;
        return;
    }
    case AtomKind::PiCot: {
        if (y <= 0)
            throw std::domain_error("PI_COT needs a positive denominator");
        std::int64_t p = x % y;
        if (p < 0)
            p += y;
        if (p == 0)
            throw std::domain_error("pi*cot(pi*k) is a pole");
        const auto g = std::gcd(p, y);
        p /= g;
        const std::int64_t q = y / g;
        if (2 * p == q)
            return;
        Rational coef = c;
        if (2 * p > q) {
            p = q - p;
            coef = -coef;
        }
        if (auto cot = detail::cot_pi(p, q)) {
            // pi (a + b sqrt(d)) = a*pi + (b d) * pi/sqrt(d)
            acc[Atom::pi()] += coef * cot->a;
            if (cot->b != 0)
                acc[Atom::pi_over_sqrt(cot->d)] += coef * cot->b * cot->d;
            return;
        }
        acc[Atom::pi_cot(p, q)] += coef;
        return;
    }
    case AtomKind::LogSurd:
        add_log_surd(acc, c, x, y, z, false);
        return;
    case AtomKind::LogSurdOverSqrt:
        add_log_surd(acc, c, x, y, z, true);
        return;
    case AtomKind::LogSineSeries: {
        if (y <= 0)
            throw std::domain_error("LOG_SINE_SERIES needs a positive denominator");
        std::int64_t p = x % y;
        if (p < 0)
            p += y;
        if (2 * p > y)
            p = y - p;
        acc[Atom::log_sine_series(p, y)] += c;
        return;
    }
    case AtomKind::Psi: {
        if (y == 0)
            throw std::domain_error("PSI needs a nonzero denominator");
        const Rational r = make_rational(x, y);
        if (r <= 0 && is_integer(r))
            throw std::domain_error("digamma pole at a nonpositive integer");
        acc[Atom::psi(numerator_i64(r), denominator_i64(r))] += c;
        return;
    }
    }
}

}  // namespace

ClosedFormConstant::ClosedFormConstant(const std::vector<Term>& raw_terms)
{
    Accumulator acc;
    for (const auto& t : raw_terms)
        add_normalized(acc, t.coefficient, t.atom);
    long double v = 0.0L;
    for (auto& [atom, coef] : acc) {
        if (coef == 0)
            continue;
        coef.canonicalize();
        v += static_cast<long double>(coef.get_d()) * atom.value();
        terms_.push_back({coef, atom});
    }
    value_ = static_cast<double>(v);
}

ClosedFormConstant ClosedFormConstant::rational(const Rational& r) { return ClosedFormConstant({{r, Atom::unit()}}); }

ClosedFormConstant ClosedFormConstant::of(const Atom& atom, const Rational& coefficient)
{
    return ClosedFormConstant({{coefficient, atom}});
}

ClosedFormConstant ClosedFormConstant::log(const Rational& q)
{
    return ClosedFormConstant({{1, Atom::log(numerator_i64(q), denominator_i64(q))}});
}

Rational ClosedFormConstant::coefficient_of(const Atom& atom) const
{
    for (const auto& t : terms_)
        if (t.atom == atom)
            return t.coefficient;
    return 0;
}

ClosedFormConstant ClosedFormConstant::operator-() const { return Rational(-1) * *this; }

ClosedFormConstant operator+(const ClosedFormConstant& a, const ClosedFormConstant& b)
{
    std::vector<Term> all(a.terms_);
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return ClosedFormConstant(all);
}

ClosedFormConstant operator-(const ClosedFormConstant& a, const ClosedFormConstant& b) { return a + (-b); }

ClosedFormConstant operator*(const Rational& c, const ClosedFormConstant& a)
{
    std::vector<Term> all(a.terms_);
    for (auto& t : all)
        t.coefficient *= c;
    return ClosedFormConstant(all);
}

ClosedFormConstant& ClosedFormConstant::operator+=(const ClosedFormConstant& other)
{
    *this = *this + other;
    return *this;
}

std::string ClosedFormConstant::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [coef, atom] : terms_) {
        const bool negative = coef < 0;
        const Rational mag = abs(coef);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (atom.kind() == AtomKind::Unit) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) {
            if (is_integer(mag))
                out << mag.get_str() << '*';
            else
                out << '(' << mag.get_str() << ")*";
        }
        out << atom.to_string();
    }
    return out.str();
}

}  // namespace cyclosum
