#include "cyclosum/oracle.hpp"

#include "cyclosum/compensated_sum.hpp"
#include "cyclosum/digamma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

namespace cyclosum {

namespace {

constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for the odd Kronrod nodes 1, 3, 5 and the center.
constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double pair = f(c - h * kKronrodNodes[j]) + f(c + h * kKronrodNodes[j]);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1)
            gauss += kGaussWeights[j / 2] * pair;
    }
    return {a, b, kronrod * h, std::fabs((kronrod - gauss) * h)};
}

struct WorseFirst {
    bool operator()(const Panel& x, const Panel& y) const
    {
        if (x.error != y.error)
            return x.error < y.error;
        return x.a > y.a;
    }
};

}  // namespace

QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                    double abs_tolerance, int max_panels)
{
    if (!(abs_tolerance > 0.0))
        throw std::domain_error("quadrature tolerance must be positive");
    std::priority_queue<Panel, std::vector<Panel>, WorseFirst> queue;
    Panel first = gauss_kronrod(f, a, b);
    if (!std::isfinite(first.value))
        throw SingularIntegrand("integrand is not finite on the interval");
    queue.push(first);
    double total_error = first.error;
    int panels = 1;
    while (total_error > abs_tolerance) {
        if (panels >= max_panels)
            throw ToleranceNotReached("quadrature did not reach " + std::to_string(abs_tolerance) + " within " +
                                      std::to_string(max_panels) + " panels");
        const Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gauss_kronrod(f, worst.a, mid);
        const Panel right = gauss_kronrod(f, mid, worst.b);
        if (!std::isfinite(left.value) || !std::isfinite(right.value))
            throw SingularIntegrand("integrand is not finite on the interval");
        queue.push(left);
        queue.push(right);
        ++panels;
        // Re-add from scratch now and then so the running total does not drift.
        if (panels % 256 == 0) {
            auto copy = queue;
            CompensatedSum e;
            while (!copy.empty()) {
                e += copy.top().error;
                copy.pop();
            }
            total_error = e.value();
        } else {
            total_error += left.error + right.error - worst.error;
        }
    }
    std::vector<Panel> done;
    done.reserve(queue.size());
    while (!queue.empty()) {
        done.push_back(queue.top());
        queue.pop();
    }
    std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    CompensatedSum value;
    CompensatedSum error;
    for (const auto& p : done) {
        value += p.value;
        error += p.error;
    }
    return {value.value(), error.value(), panels};
}

namespace {

RationalPolynomial derivative(const RationalPolynomial& p)
{
    std::vector<Rational> c;
    const auto coeffs = p.coefficients();
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        c.push_back(coeffs[k] * static_cast<long>(k));
    return RationalPolynomial(std::move(c));
}

int sign_changes(const std::vector<RationalPolynomial>& seq, const Rational& x)
{
    int changes = 0;
    int last = 0;
    for (const auto& p : seq) {
        const Rational v = p.evaluate(x);
        const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

std::vector<double> to_doubles(const RationalPolynomial& p)
{
    std::vector<double> out;
    for (const auto& c : p.coefficients())
        out.push_back(c.get_d());
    return out;
}

double horner(const std::vector<double>& c, double x)
{
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

}  // namespace

int count_roots(const RationalPolynomial& p, const Rational& a, const Rational& b)
{
    if (p.is_zero())
        throw std::domain_error("count_roots of the zero polynomial");
    int at_ends = 0;
    if (p.evaluate(a) == 0)
        ++at_ends;
    if (b != a && p.evaluate(b) == 0)
        ++at_ends;
    if (p.degree() < 1)
        return at_ends;
    std::vector<RationalPolynomial> seq{p, derivative(p)};
    while (seq.back().degree() > 0) {
        auto r = divide_with_remainder(seq[seq.size() - 2], seq.back()).remainder;
        if (r.is_zero())
            break;
        seq.push_back(-r);
    }
    // Sturm's theorem counts distinct roots in (a, b]; the b endpoint is counted above.
    int interior = sign_changes(seq, a) - sign_changes(seq, b);
    if (p.evaluate(b) == 0)
        --interior;
    return interior + at_ends;
}

RationalIntegrand::RationalIntegrand(const RationalPolynomial& numerator, const RationalPolynomial& denominator)
    : numerator_(numerator), denominator_(denominator)
{
    if (denominator_.is_zero())
        throw std::domain_error("integrand denominator is zero");
    if (!numerator_.is_zero()) {
        const RationalPolynomial g = gcd(numerator_, denominator_);
        if (g.degree() > 0) {
            numerator_ = exact_divide(numerator_, g);
            denominator_ = exact_divide(denominator_, g);
            reduced_ = true;
        }
    }
    const Rational scale = denominator_.coefficient(0) != 0 ? denominator_.coefficient(0) : denominator_.leading();
    numerator_ = (1 / scale) * numerator_;
    denominator_ = (1 / scale) * denominator_;
    if (count_roots(denominator_, 0, 1) > 0)
        throw SingularIntegrand("denominator " + denominator_.to_string() + " vanishes on [0,1]");
    num_d_ = to_doubles(numerator_);
    den_d_ = to_doubles(denominator_);
}

double RationalIntegrand::evaluate(double x) const { return horner(num_d_, x) / horner(den_d_, x); }

std::string RationalIntegrand::to_string() const
{
    return "(" + numerator_.to_string() + ")/(" + denominator_.to_string() + ")";
}

QuadratureResult integrate(const RationalIntegrand& f, double abs_tolerance)
{
    if (!(abs_tolerance >= 1e-13))
        throw std::domain_error("quadrature tolerance must be at least 1e-13");
    return adaptive_integrate([&f](double x) { return f.evaluate(x); }, 0.0, 1.0, abs_tolerance);
}

RationalIntegrand combination_integrand(const SigmaCombination& combination)
{
    if (!combination.convergent())
        throw DivergentCombination("combination " + combination.to_string() +
                                   " diverges: its integrand keeps a pole at x = 1");
    const int m = combination.modulus();
    std::vector<Rational> num(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        num[static_cast<std::size_t>(i - 1)] = make_rational(combination.weight(i));
    return {RationalPolynomial(std::move(num)), RationalPolynomial::one_minus_x_pow(static_cast<std::size_t>(m))};
}

SeriesEstimate accelerated_sum(const SigmaCombination& combination, double target_tolerance,
                               std::int64_t max_periods)
{
    if (!combination.convergent())
        throw DivergentCombination("combination " + combination.to_string() + " diverges");
    if (!(target_tolerance > 0.0))
        throw std::domain_error("target tolerance must be positive");
    constexpr int kMaxColumns = 10;
    const int m = combination.modulus();
    CompensatedSum partial;
    std::int64_t done = 0;
    std::vector<double> previous_row;
    double previous_diagonal = 0.0;
    for (std::int64_t n = 8, level = 0;; n *= 2, ++level) {
        if (n > max_periods)
            throw ToleranceNotReached("series acceleration did not reach " + std::to_string(target_tolerance) +
                                      " within " + std::to_string(max_periods) + " periods");
        for (; done < n; ++done) {
            long double block = 0.0L;
            for (int i = 1; i <= m; ++i) {
                const auto w = combination.weight(i);
                if (w != 0)
                    block += static_cast<long double>(w) / static_cast<long double>(done * m + i);
            }
            partial += static_cast<double>(block);
        }
        std::vector<double> row{partial.value()};
        for (std::size_t k = 1; k < previous_row.size() + 1 && k <= kMaxColumns; ++k) {
            const double factor = std::ldexp(1.0, static_cast<int>(k)) - 1.0;
            row.push_back(row[k - 1] + (row[k - 1] - previous_row[k - 1]) / factor);
        }
        const double diagonal = row.back();
        const double error = std::fabs(diagonal - previous_diagonal);
        if (level >= 3 && error <= target_tolerance)
            return {diagonal, error, n};
        previous_row = std::move(row);
        previous_diagonal = diagonal;
    }
}

SeriesEstimate hansen_direct_series(const Rational& x, const Rational& y, const Rational& z, std::int64_t terms)
{
    if (x <= 0)
        throw std::domain_error("hansen series requires x > 0");
    if (z == 0)
        throw std::domain_error("hansen series requires z != 0");
    if (terms < 1)
        throw std::domain_error("hansen series needs at least one term");
    const double dx = x.get_d();
    const double lo = Rational(y - z).get_d();
    const double hi = Rational(y + z).get_d();
    CompensatedSum sum;
    for (std::int64_t n = 0; n < terms; ++n) {
        const double u = static_cast<double>(n) * dx + lo;
        const double v = static_cast<double>(n) * dx + hi;
        if (u == 0.0 || v == 0.0)
            throw std::domain_error("hansen series has a zero denominator");
        sum += 1.0 / (u * v);
    }
    const double u = static_cast<double>(terms) * dx + lo;
    const double v = static_cast<double>(terms) * dx + hi;
    if (u <= 0.0 || v <= 0.0)
        throw std::domain_error("hansen series: too few terms for the remainder estimate");
    // Euler-Maclaurin: sum_{n>=N} f = int_N^inf f + f/2 - f'/12 + f'''/720 - ...
    const double dz = z.get_d();
    const double integral = std::log1p(2.0 * dz / u) / (2.0 * dx * dz);
    const double f0 = 1.0 / (u * v);
    const double f1 = -dx * (u + v) * f0 * f0;
    const double f3 = -6.0 * dx * dx * dx * (u + v) * (u * u + v * v) * (f0 * f0) * (f0 * f0);
    sum += integral;
    sum += 0.5 * f0;
    sum += -f1 / 12.0;
    sum += f3 / 720.0;
    const double roundoff = 4e-16 * std::fabs(sum.value());
    return {sum.value(), std::fabs(f3) / 720.0 + roundoff, terms};
}

SeriesEstimate hansen_direct_combination(const SigmaCombination& combination, std::int64_t terms)
{
    CompensatedSum value;
    double error = 0.0;
    for (const auto& pair : hansen_decomposition(combination)) {
        const auto s = hansen_direct_series(pair.x, pair.y, pair.z, terms);
        const double scale = pair.scale.get_d();
        value += scale * s.value;
        error += std::fabs(scale) * s.error;
    }
    return {value.value(), error, terms};
}

}  // namespace cyclosum
