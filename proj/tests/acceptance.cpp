// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "cyclosum/characters.hpp"
#include "cyclosum/cyclotomic.hpp"
#include "cyclosum/digamma.hpp"
#include "cyclosum/harness.hpp"
#include "cyclosum/oracle.hpp"
#include "cyclosum/sigma.hpp"
#include "oracle_values.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

using namespace cyclosum;

namespace {

constexpr double kMethodTol = 1e-9;
constexpr double kCutoffTol = 5e-7;
constexpr double kHansenTol = 1e-12;
constexpr double kIntegralTol = 1e-10;
constexpr double kQuadratureTol = 1e-12;
constexpr double kSeriesTol = 1e-10;
constexpr double kGammaTol = 1e-10;
constexpr double kProductTol = 1e-12;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

ClosedFormConstant term(const Atom& a, std::int64_t num = 1, std::int64_t den = 1)
{
    return ClosedFormConstant::of(a, make_rational(num, den));
}

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

struct Methods {
    double digamma, quadrature, accelerated;
};

Methods strict_methods(const SigmaCombination& c)
{
    return {digamma_combination(c).value(), integrate(combination_integrand(c), kQuadratureTol).value,
            accelerated_sum(c, kSeriesTol).value};
}

double spread(std::initializer_list<double> values)
{
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
}

double quadratic_integral(int m, int r)
{
    const double t = 2 * std::cos(2 * M_PI * r / m);
    return adaptive_integrate([t](double x) { return 1.0 / ((x - t) * x + 1.0); }, 0.0, 1.0, 1e-13).value;
}

const IdentityRecord& catalog_row(const std::string& id)
{
    static const auto catalog = default_catalog();
    for (const auto& r : catalog)
        if (r.id == id)
            return r;
    throw std::runtime_error("missing catalog row " + id);
}

bool any_annotation(const VerificationRecord& r, const std::string& needle)
{
    return std::any_of(r.annotations.begin(), r.annotations.end(),
                       [&](const std::string& a) { return a.find(needle) != std::string::npos; });
}

Outcome mercator()
{
    Outcome o;
    const auto c = SigmaCombination::difference(2, 1, 2);
    o.require(digamma_combination(c) == ClosedFormConstant::log(2), "closed form is not log(2)");
    const auto m = strict_methods(c);
    const double cutoff = renormalized_difference(2, 1, 2, 1000000);
    const double dev = spread({m.digamma, m.quadrature, m.accelerated, oracle::log2});
    o.require(dev <= kMethodTol, "methods spread " + sci(dev));
    o.require(std::fabs(cutoff - oracle::log2) <= kCutoffTol, "cutoff off by " + sci(cutoff - oracle::log2));
    if (o.ok)
        o.detail = "log(2), spread " + sci(dev) + ", cutoff N=1e6 off by " + sci(std::fabs(cutoff - oracle::log2));
    return o;
}

Outcome gregory_leibniz()
{
    Outcome o;
    const auto c = SigmaCombination::difference(4, 1, 3);
    const auto m = strict_methods(c);
    const double dev = spread({m.digamma, m.quadrature, m.accelerated, oracle::pi_over_4});
    o.require(dev <= kMethodTol, "methods spread " + sci(dev));
    o.require(digamma_combination(c) == term(Atom::pi(), 1, 4), "closed form is not pi/4");
    const auto match = match_pattern(pattern_from_weights(4, c.weights()));
    o.require(match.character.has_value() && match.label == "chi^(4)_2", "pattern label " + match.label);
    if (o.ok)
        o.detail = "pi/4, spread " + sci(dev) + ", " + match.label;
    return o;
}

Outcome m3()
{
    Outcome o;
    const auto pattern = certify_pattern(RationalPolynomial{1, 1, 1}, 3);
    const auto c = integrate_and_map(pattern);
    o.require(c == SigmaCombination::difference(3, 1, 2), "1/(1+x+x^2) maps to " + c.to_string());
    const auto m = strict_methods(c);
    const double hansen_closed = hansen_sum(3, make_rational(3, 2), make_rational(1, 2)).value();
    const double hansen_direct = hansen_direct_series(3, make_rational(3, 2), make_rational(1, 2)).value;
    const double dev = spread({m.digamma, m.quadrature, m.accelerated, hansen_closed, hansen_direct, oracle::pi_over_3_sqrt3});
    o.require(dev <= kMethodTol, "methods spread " + sci(dev));
    const auto match = match_pattern(pattern);
    o.require(match.character.has_value() && match.label == "chi^(3)_2", "pattern label " + match.label);
    if (o.ok)
        o.detail = "pi/(3 sqrt 3), spread " + sci(dev) + " incl. sum 1/((3n+1)(3n+2)), " + match.label;
    return o;
}

Outcome digamma_anchors()
{
    Outcome o;
    const auto g = term(Atom::euler_gamma());
    o.require(digamma_rational(1, 1) == -g, "Psi(1) = " + digamma_rational(1, 1).to_string());
    o.require(digamma_rational(1, 2) == -g - term(Atom::log(2), 2), "Psi(1/2) = " + digamma_rational(1, 2).to_string());
    const auto h = hansen_sum(1, make_rational(3, 4), make_rational(1, 4));
    o.require(h == term(Atom::log(2), 4), "Hansen(1,3/4,1/4) = " + h.to_string());
    const double direct = hansen_direct_series(1, make_rational(3, 4), make_rational(1, 4)).value;
    const double dev = std::max(std::fabs(direct - 4 * oracle::log2), std::fabs(h.value() - 4 * oracle::log2));
    o.require(dev <= kHansenTol, "Hansen numeric off by " + sci(dev));
    if (o.ok)
        o.detail = "Psi(1) = -gamma, Psi(1/2) = -gamma - 2*log(2), Hansen = 4*log(2) (numeric " + sci(dev) + ")";
    return o;
}

Outcome integral_formula()
{
    Outcome o;
    int cases = 0;
    double worst = 0.0;
    for (int m = 2; m <= 12; ++m) {
        for (int r = 1; r < m; ++r) {
            if (2 * r == m)
                continue;
            ++cases;
            const double dev = std::fabs(integral_closed_form(m, r).value() - quadratic_integral(m, r));
            worst = std::max(worst, dev);
            o.require(dev <= kIntegralTol, "m=" + std::to_string(m) + " r=" + std::to_string(r) + " off by " + sci(dev));
        }
    }
    o.detail = (o.ok ? "" : o.detail + "; ") + std::to_string(cases) + " cases, worst " + sci(worst);
    return o;
}

Outcome m4_redundancy()
{
    Outcome o;
    const auto stated = term(Atom::log(2), 1, 4) + term(Atom::pi(), 1, 8);
    const double quad = integrate(RationalIntegrand(RationalPolynomial{1}, RationalPolynomial{1, 1, 1, 1}), kQuadratureTol).value;
    const double dev = std::fabs(quad - stated.value());
    o.require(dev <= kIntegralTol, "quadrature off by " + sci(dev));
    const auto via_digamma = digamma_combination(SigmaCombination::difference(4, 1, 2));
    o.require(via_digamma == stated, "digamma form " + via_digamma.to_string());
    if (o.ok)
        o.detail = stated.to_string() + " = " + std::to_string(stated.value()) + ", quadrature off by " + sci(dev);
    return o;
}

Outcome m6_suite()
{
    Outcome o;
    const auto c14 = SigmaCombination::difference(6, 1, 4);
    const double v14 = term(Atom::log(2), 1, 3).value() + term(Atom::pi_over_sqrt(3), 1, 3).value();
    const double quad14 = integrate(RationalIntegrand(RationalPolynomial{1}, RationalPolynomial{1, 0, 0, 1}), kQuadratureTol).value;
    const double d14 = spread({digamma_combination(c14).value(), quad14, v14});
    o.require(d14 <= kMethodTol, "S(6,1)-S(6,4) spread " + sci(d14));

    const SigmaCombination c4(6, {1, 1, 0, -1, -1, 0});
    const double v4 = term(Atom::pi_over_sqrt(3), 2, 3).value();
    const auto m4 = strict_methods(c4);
    const double d4 = spread({m4.digamma, m4.quadrature, m4.accelerated, v4});
    o.require(d4 <= kMethodTol, "four-term spread " + sci(d4));

    const VerifyOptions options;
    const auto chi = verify_identity(catalog_row("m6.character-chi2"), options);
    o.require(chi.status == Status::PaperMismatch, "chi2 row status " + status_name(chi.status));
    o.require(std::fabs(chi.computed.value() - oracle::pi_over_2_sqrt3) <= kMethodTol, "chi2 value " + chi.computed.to_string());

    const auto s15 = verify_identity(catalog_row("m6.sigma1-sigma5"), options);
    o.require(s15.status == Status::PaperMismatch, "S(6,1)-S(6,5) row status " + status_name(s15.status));
    o.require(any_annotation(s15, "constant term of S(6,1)") && any_annotation(s15, "stated - computed = (1/3)*log(2)"),
              "no annotation of the duplicated log(2)/3");
    o.require(any_annotation(s15, "S(6,1) - S(6,4)") && any_annotation(s15, "(1/3)*log(3)"),
              "no annotation of the (1/3)log(3) difference claim");
    const auto constant = asymptotic_expansion(6, 1).constant;
    const auto expected = term(Atom::euler_gamma(), 1, 6) + term(Atom::log(2), 1, 3) + term(Atom::log(3), 1, 4) +
                          term(Atom::pi_over_sqrt(3), 1, 4);
    o.require(constant == expected, "S(6,1) constant " + constant.to_string());
    if (o.ok)
        o.detail = "spreads " + sci(d14) + ", " + sci(d4) + "; 2 PAPER_MISMATCH rows, both annotations present";
    return o;
}

Outcome m5()
{
    Outcome o;
    const double stated = (1 + std::sqrt(5.0)) * M_PI / (5 * std::sqrt(2 * (5 - std::sqrt(5.0))));
    const auto c = SigmaCombination::difference(5, 1, 4);
    const double d = digamma_combination(c).value();
    const double q = integrate(combination_integrand(c), kQuadratureTol).value;
    const double dev = spread({d, q, stated});
    o.require(dev <= kMethodTol, "spread " + sci(dev));
    const auto match = match_pattern(pattern_from_weights(5, {1, -1, 0, 0, 0}));
    o.require(!match.character.has_value(), "(1,-1,0,0,0) matched " + match.label);
    o.require(match.label == "f^(5)_2", "label " + match.label);
    if (o.ok)
        o.detail = "0.864806..., spread " + sci(dev) + ", (1,-1,0,0,0) -> " + match.label;
    return o;
}

Outcome m8()
{
    Outcome o;
    const double stated = (M_PI + std::log(3 + 2 * std::sqrt(2.0))) / (4 * std::sqrt(2.0));
    const auto c15 = SigmaCombination::difference(8, 1, 5);
    const double d15 = spread({digamma_combination(c15).value(), integrate(combination_integrand(c15), kQuadratureTol).value, stated});
    o.require(d15 <= kMethodTol, "S(8,1)-S(8,5) spread " + sci(d15));
    const auto c13 = SigmaCombination::difference(8, 1, 3);
    const double d13 = spread({digamma_combination(c13).value(), integrate(combination_integrand(c13), kQuadratureTol).value});
    o.require(d13 <= kMethodTol, "S(8,1)-S(8,3) spread " + sci(d13));
    if (o.ok)
        o.detail = "S(8,1)-S(8,5) = " + std::to_string(stated) + " spread " + sci(d15) + "; S(8,1)-S(8,3) spread " + sci(d13);
    return o;
}

Outcome asymptotic_constants()
{
    Outcome o;
    int rows = 0;
    double worst = 0.0;
    for (const auto& s : stated_constants()) {
        if (s.modulus > 4)
            continue;
        ++rows;
        const auto e = s.residue == 0 ? asymptotic_expansion_total(s.modulus) : asymptotic_expansion(s.modulus, s.residue);
        const std::string name = "(" + std::to_string(s.modulus) + "," + std::to_string(s.residue) + ")";
        o.require(e.constant == s.stated, name + " constant " + e.constant.to_string());
        for (std::int64_t n : {1000, 10000, 100000}) {
            const auto sum = s.residue == 0 ? sigma_total(s.modulus, n, Precision::Float)
                                            : sigma(s.modulus, s.residue, n, Precision::Float);
            const double dev = std::fabs(sum.value - e.log_coefficient.get_d() * std::log(static_cast<double>(n)) -
                                         e.constant.value());
            worst = std::max(worst, dev * s.modulus * n);
            o.require(dev <= 2.0 / (s.modulus * static_cast<double>(n)), name + " N=" + std::to_string(n) + " off by " + sci(dev));
        }
    }
    o.detail = (o.ok ? "" : o.detail + "; ") + std::to_string(rows) + " stated constants, worst m*N*deviation " + sci(worst);
    return o;
}

Outcome property_suites()
{
    Outcome o;
    for (int m = 2; m <= 64; ++m) {
        const auto f = real_factorization(m);
        for (int k = 0; k < 16; ++k) {
            const double x = std::cos(M_PI * (k + 0.5) / 16);
            if (std::fabs(f.evaluate_product(x) - (std::pow(x, m) - 1)) > kProductTol)
                o.require(false, "factorization m=" + std::to_string(m));
        }
    }
    for (int m = 2; m <= 24; ++m) {
        for (int a = 1; a < m; ++a) {
            if (m % a)
                continue;
            const auto block = geometric_block(m / a, a);
            const auto pattern = certify_pattern(block, m);
            const auto series = reciprocal_series(block, static_cast<std::size_t>(4 * m));
            for (int n = 0; n < 4 * m; ++n)
                if (series.coefficients[n] != pattern.weights[n % m])
                    o.require(false, "pattern m=" + std::to_string(m) + " a=" + std::to_string(a));
        }
    }
    for (int m = 1; m <= 24; ++m) {
        const auto chars = enumerate_characters(m);
        if (static_cast<int>(chars.size()) != euler_phi(m))
            o.require(false, "character count m=" + std::to_string(m));
        for (std::size_t a = 0; a < chars.size(); ++a)
            for (std::size_t b = 0; b < chars.size(); ++b) {
                std::complex<double> s = 0;
                for (int n = 1; n <= m; ++n)
                    s += chars[a].value(n) * std::conj(chars[b].value(n));
                if (std::abs(s - (a == b ? double(euler_phi(m)) : 0.0)) > 1e-12)
                    o.require(false, "orthogonality m=" + std::to_string(m));
            }
    }
    for (int q = 2; q <= 12; ++q)
        for (int p = 1; p < q; ++p) {
            if (digamma_rational(q - p, q) - digamma_rational(p, q) != term(Atom::pi_cot(p, q)))
                o.require(false, "reflection " + std::to_string(p) + "/" + std::to_string(q));
            const Rational z = make_rational(p, q);
            if (digamma_at(z + 1) != digamma_at(z) + ClosedFormConstant::rational(1 / z))
                o.require(false, "recurrence " + std::to_string(p) + "/" + std::to_string(q));
        }
    for (int m = 1; m <= 12; ++m)
        for (std::int64_t n : {1, 1000}) {
            Rational total = 0;
            for (int i = 1; i <= m; ++i)
                total += *sigma(m, i, n, Precision::Exact).exact;
            if (total != harmonic(m * n))
                o.require(false, "partition m=" + std::to_string(m));
        }
    for (std::int64_t n : {100, 1000, 10000}) {
        const double residual = harmonic_value(n) - std::log(static_cast<double>(n)) - kEulerGamma - 0.5 / n;
        if (std::fabs(residual) > 1.0 / (8.0 * n * n))
            o.require(false, "harmonic residual N=" + std::to_string(n));
    }
    if (o.ok)
        o.detail = "factorization, patterns, characters, reflection/recurrence, partition, harmonic residual";
    return o;
}

Outcome gamma_consistency()
{
    Outcome o;
    const double n = 1e6;
    const double estimate = harmonic_value(1000000) - std::log(n) - 1 / (2 * n);
    const double dev = std::fabs(estimate - kEulerGamma);
    o.require(dev <= kGammaTol, "off by " + sci(dev));
    o.require(kEulerGamma == oracle::euler_gamma, "embedded literal differs from the reference");
    o.detail = (o.ok ? "" : o.detail + "; ") + "H(1e6) - log(1e6) - 1/2e6 = " + std::to_string(estimate) + ", off by " + sci(dev);
    return o;
}

}  // namespace

int main()
{
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"Mercator log 2", mercator},
        {"Gregory-Leibniz pi/4", gregory_leibniz},
        {"m=3 value, character, Hansen route", m3},
        {"digamma anchors", digamma_anchors},
        {"quadratic factor integral formula", integral_formula},
        {"m=4 redundancy", m4_redundancy},
        {"m=6 suite and errata", m6_suite},
        {"m=5 surd value and labeling", m5},
        {"m=8 identities", m8},
        {"asymptotic constants", asymptotic_constants},
        {"property suites", property_suites},
        {"gamma consistency", gamma_consistency},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.ok;
        std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str());
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
