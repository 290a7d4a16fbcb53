// cyclosum: command-line front end.

#include "cyclosum/catalog_match.hpp"
#include "cyclosum/characters.hpp"
#include "cyclosum/cyclotomic.hpp"
#include "cyclosum/digamma.hpp"
#include "cyclosum/harness.hpp"
#include "cyclosum/oracle.hpp"
#include "cyclosum/sigma.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace cyclosum;
using json = nlohmann::json;

namespace {

/// Bad user input that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string roman(int n)
{
    static const std::pair<int, const char*> table[] = {{10, "X"}, {9, "IX"}, {5, "V"}, {4, "IV"}, {1, "I"}};
    std::string out;
    for (auto [v, s] : table)
        while (n >= v) {
            out += s;
            n -= v;
        }
    return out;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (item.find_first_not_of(" \t") != std::string::npos)
            out.push_back(item.substr(item.find_first_not_of(" \t")));
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text)
{
    std::vector<std::int64_t> out;
    for (const auto& s : split_list(text)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(s, &used));
            if (s.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument(s);
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + s + "'");
        }
    }
    return out;
}

void emit(const std::string& text) { std::cout << text << std::flush; }

// ---------------------------------------------------------------- factor

struct Grouping {
    std::string label;
    int divisor;
    RationalPolynomial cofactor;
    SigmaCombination combination;
    std::string note;
};

std::vector<Grouping> groupings(int m)
{
    std::vector<Grouping> out;
    for (int a = m - 1; a >= 1; --a) {
        if (m % a)
            continue;
        auto block = geometric_block(m / a, a);
        // 1/block = (1 - x^a)/(1 - x^m): the pipeline gives S(m,1) - S(m,a+1).
        auto combination = integrate_and_map(certify_pattern(block, m));
        std::string note;
        const int other = a + 1;
        if (const int g = std::gcd(other, m); g > 1)
            note = fmt::format("S({},{}) = (1/{})*S({},{}) comes from a smaller modulus, so this grouping fixes S({},1)",
                               m, other, g, m / g, other / g, m);
        out.push_back({roman(static_cast<int>(out.size()) + 1), a, std::move(block), std::move(combination), note});
    }
    return out;
}

std::string x_pow_minus_one_text(int a) { return a == 1 ? "(x - 1)" : fmt::format("(x^{} - 1)", a); }

int cmd_factor(int m, const std::string& format)
{
    const auto f = real_factorization(m);
    const auto groups = groupings(m);
    struct FactorIntegral {
        int r;
        ClosedFormConstant closed;
        double quadrature;
    };
    std::vector<FactorIntegral> integrals;
    for (const auto& q : f.quadratic_factors) {
        const double trace = q.trace;
        const auto quad = adaptive_integrate([trace](double x) { return 1.0 / ((x - trace) * x + 1.0); }, 0.0, 1.0, 1e-13);
        integrals.push_back({q.root_index, integral_closed_form(m, q.root_index), quad.value});
    }

    if (format == "json") {
        json doc;
        doc["schema_version"] = "1";
        doc["modulus"] = m;
        doc["real_factorization"] = f.to_string();
        doc["has_root_minus_one"] = f.has_root_minus_one;
        json quads = json::array();
        for (std::size_t k = 0; k < f.quadratic_factors.size(); ++k) {
            const auto& q = f.quadratic_factors[k];
            quads.push_back({{"r", q.root_index},
                             {"trace", q.trace},
                             {"factor", q.to_string()},
                             {"integral_closed_form", integrals[k].closed.to_string()},
                             {"integral_value", integrals[k].closed.value()},
                             {"integral_quadrature", integrals[k].quadrature}});
        }
        doc["quadratic_factors"] = quads;
        json gs = json::array();
        for (const auto& g : groups) {
            const auto value = digamma_combination(g.combination);
            gs.push_back({{"label", g.label},
                          {"factorization", x_pow_minus_one_text(g.divisor) + "(" + g.cofactor.to_string() + ")"},
                          {"combination", g.combination.to_string()},
                          {"weights", g.combination.weights()},
                          {"closed_form", value.to_string()},
                          {"value", value.value()},
                          {"note", g.note}});
        }
        doc["groupings"] = gs;
        emit(doc.dump(2) + "\n");
        return kExitPass;
    }

    std::string out = fmt::format("x^{} - 1 = {}\n", m, f.to_string());
    if (!f.quadratic_factors.empty()) {
        out += "\nquadratic factors, integral of 1/factor over [0,1]:\n";
        for (std::size_t k = 0; k < f.quadratic_factors.size(); ++k) {
            const auto& q = f.quadratic_factors[k];
            out += fmt::format("  r = {}: {}  (trace {:.12f})\n", q.root_index, q.to_string(), q.trace);
            out += fmt::format("         = {} = {:.15f}  (quadrature {:.15f})\n", integrals[k].closed.to_string(),
                               integrals[k].closed.value(), integrals[k].quadrature);
        }
    }
    out += "\ngroupings:\n";
    for (const auto& g : groups) {
        const auto value = digamma_combination(g.combination);
        out += fmt::format("  {:<4} {}({})\n", g.label, x_pow_minus_one_text(g.divisor), g.cofactor.to_string());
        out += fmt::format("       -> {} = {} = {:.15f}\n", g.combination.to_string(), value.to_string(), value.value());
        if (!g.note.empty())
            out += fmt::format("       note: {}\n", g.note);
    }
    emit(out);
    return kExitPass;
}

// ---------------------------------------------------------------- series

RationalPolynomial parse_polynomial(const std::string& text)
{
    std::vector<Rational> coeffs;
    for (const auto& s : split_list(text)) {
        try {
            coeffs.push_back(parse_rational(s));
        } catch (const std::exception&) {
            throw UsageError("not a rational coefficient: '" + s + "'");
        }
    }
    if (coeffs.empty())
        throw UsageError("--poly needs at least one coefficient");
    return RationalPolynomial(std::move(coeffs));
}

int cmd_series(const std::string& poly_text, int terms, int m, bool search_integer)
{
    std::string out;
    if (search_integer) {
        if (m < 2)
            throw UsageError("--search-integer needs --modulus m >= 2");
        out += fmt::format("experimental: quadratic factors of x^{} - 1 with integer reciprocal expansions\n", m);
        const auto found = integer_expansion_search(m, static_cast<std::size_t>(std::max(terms, 1)));
        if (found.empty())
            out += "  none\n";
        for (const auto& e : found) {
            std::string prefix;
            for (auto c : e.prefix)
                prefix += fmt::format("{}{}", prefix.empty() ? "" : ", ", c);
            out += fmt::format("  r = {}: {}  period {}  1/factor = {}, ...\n", e.root_index, e.factor.to_string(),
                               e.period, prefix);
        }
        if (poly_text.empty()) {
            emit(out);
            return kExitPass;
        }
        out += "\n";
    }
    if (poly_text.empty())
        throw UsageError("series needs --poly");
    const auto p = parse_polynomial(poly_text);
    const auto prefix = reciprocal_series(p, static_cast<std::size_t>(terms));
    std::string coeffs;
    for (const auto& c : prefix.coefficients)
        coeffs += (coeffs.empty() ? "" : ", ") + c.get_str();
    out += fmt::format("1/({}) = {}, ...\n", p.to_string(), coeffs);

    std::optional<PeriodicPattern> pattern;
    if (m > 0) {
        try {
            pattern = certify_pattern(p, m);
        } catch (const NotPeriodic& e) {
            emit(out + fmt::format("{}\n", e.what()));
            return kExitRuntime;
        }
    } else {
        for (int period = 1; period <= 64 && !pattern; ++period) {
            try {
                pattern = certify_pattern(p, period);
            } catch (const NotPeriodic&) {
            }
        }
        if (!pattern) {
            emit(out + "no period m <= 64 with (1 - x^m) divisible by the polynomial\n");
            return kExitPass;
        }
    }
    std::string weights;
    for (auto w : pattern->weights)
        weights += fmt::format("{}{}", weights.empty() ? "" : ", ", w);
    const auto combination = integrate_and_map(*pattern);
    const auto match = match_pattern(*pattern);
    out += fmt::format("period {}: (1 - x^{}) = ({}) * ({})\n", pattern->period, pattern->period, p.to_string(),
                       pattern->quotient.to_string());
    out += fmt::format("pattern ({})  {}\n", weights, match.label);
    out += fmt::format("integral over [0,1] -> {}\n", combination.to_string());
    if (combination.convergent()) {
        const auto value = digamma_combination(combination);
        out += fmt::format("  = {} = {:.15f}\n", value.to_string(), value.value());
    } else {
        out += fmt::format("  diverges: weights sum to {}\n", combination.weight_sum());
    }
    emit(out);
    return kExitPass;
}

// ---------------------------------------------------------------- identity / verify

std::string render(const std::vector<VerificationRecord>& records, const VerifyOptions& options,
                   const std::string& format)
{
    if (format == "json")
        return render_json(records, options);
    if (format == "csv")
        return render_csv(records);
    return render_text(records, options);
}

std::vector<IdentityRecord> catalog_from(const std::string& path)
{
    return path.empty() ? default_catalog() : load_catalog(path);
}

int cmd_identity(int m, const std::vector<int>& residues, const std::string& pattern_text, const VerifyOptions& options,
                 const std::string& format, const std::string& catalog_path)
{
    std::vector<std::int64_t> weights;
    if (!residues.empty()) {
        if (residues.size() != 2)
            throw UsageError("--residues takes exactly two residues");
        for (int r : residues)
            if (r < 1 || r > m)
                throw UsageError(fmt::format("residue {} is outside 1..{}", r, m));
        if (residues[0] == residues[1])
            throw UsageError("the two residues must differ");
        weights = SigmaCombination::difference(m, residues[0], residues[1]).weights();
    } else {
        weights = parse_int_list(pattern_text);
        if (static_cast<int>(weights.size()) != m)
            throw UsageError(fmt::format("--pattern needs {} weights", m));
    }
    const SigmaCombination c(m, weights);
    if (!c.convergent())
        throw UsageError(fmt::format("{} diverges: the weights sum to {}, so the log N terms do not cancel",
                                     c.to_string(), c.weight_sum()));

    std::vector<VerificationRecord> records;
    auto catalog = catalog_from(catalog_path);
    std::stable_sort(catalog.begin(), catalog.end(),
                     [](const IdentityRecord& a, const IdentityRecord& b) { return natural_less(a.id, b.id); });
    for (const auto& r : catalog)
        if (r.combination == c)
            records.push_back(verify_identity(r, options));
    if (records.empty())
        records.push_back(verify_identity(adhoc_identity(c), options));

    std::string out = render(records, options, format);
    if (format == "text") {
        const auto matches = match_catalog(records.front().computed.value(), 1e-10);
        if (!matches.empty())
            out += fmt::format("recognized as {}\n", matches.front().to_string());
    }
    emit(out);
    return exit_code(records);
}

int cmd_verify(bool all, int m, const VerifyOptions& options, const std::string& format, const std::string& catalog_path)
{
    if (!all && m < 1)
        throw UsageError("verify needs --all or --modulus");
    const auto catalog = catalog_from(catalog_path);
    const auto records = verify_batch(catalog, all ? std::nullopt : std::optional<int>(m), options);
    emit(render(records, options, format));
    return exit_code(records);
}

// ---------------------------------------------------------------- constants

int cmd_constants(int m, bool flag_errata, const std::string& format)
{
    struct Row {
        std::string label;
        int residue;
        AsymptoticExpansion expansion;
        std::optional<Extrapolation> extrapolated;
        std::string note;
    };
    std::vector<Row> rows;
    auto note_for = [&](int residue, const ClosedFormConstant& computed) -> std::string {
        if (!flag_errata)
            return std::string();
        for (const auto& s : stated_constants()) {
            if (s.modulus != m || s.residue != residue)
                continue;
            if (s.stated == computed)
                return "matches the stated constant";
            return "stated " + s.stated.to_string() + "; stated - computed = " + (s.stated - computed).to_string();
        }
        return std::string();
    };
    for (int i = 1; i <= m; ++i) {
        auto e = asymptotic_expansion(m, i);
        auto note = note_for(i, e.constant);
        rows.push_back({fmt::format("S({},{})", m, i), i, e, extrapolated_constant(m, i), note});
    }
    {
        auto e = asymptotic_expansion_total(m);
        auto note = note_for(0, e.constant);
        rows.push_back({fmt::format("S({})", m), 0, e, std::nullopt, note});
    }

    if (format == "json") {
        json doc;
        doc["schema_version"] = "1";
        doc["modulus"] = m;
        json list = json::array();
        for (const auto& r : rows) {
            json row{{"sum", r.label},
                     {"residue", r.residue},
                     {"log_coefficient", r.expansion.log_coefficient.get_str()},
                     {"constant", r.expansion.constant.to_string()},
                     {"value", r.expansion.constant.value()},
                     {"remainder", r.expansion.remainder_order},
                     {"note", r.note}};
            if (r.extrapolated) {
                row["extrapolated"] = r.extrapolated->value;
                row["extrapolation_deviation"] = std::fabs(r.extrapolated->value - r.expansion.constant.value());
            }
            list.push_back(row);
        }
        doc["rows"] = list;
        emit(doc.dump(2) + "\n");
        return kExitPass;
    }
    std::string out = fmt::format("sum(N) = c*log(N) + C + O(1/N), N periods of {} terms\n\n", m);
    for (const auto& r : rows) {
        out += fmt::format("{:<9} c = {:<5} C = {}\n", r.label, r.expansion.log_coefficient.get_str(),
                           r.expansion.constant.to_string());
        out += fmt::format("          C = {:.15f}", r.expansion.constant.value());
        if (r.extrapolated)
            out += fmt::format("  extrapolated {:.15f} (deviation {:.1e})", r.extrapolated->value,
                               std::fabs(r.extrapolated->value - r.expansion.constant.value()));
        out += "\n";
        if (!r.note.empty())
            out += fmt::format("          note: {}\n", r.note);
    }
    emit(out);
    return kExitPass;
}

// ---------------------------------------------------------------- sum

Precision precision_from_env()
{
    const char* env = std::getenv("CYCLOSUM_PRECISION");
    if (!env || !*env)
        return Precision::Auto;
    const std::string v(env);
    if (v == "exact")
        return Precision::Exact;
    if (v == "float")
        return Precision::Float;
    throw UsageError("CYCLOSUM_PRECISION must be 'exact' or 'float', got '" + v + "'");
}

std::string exact_text(const Rational& r)
{
    const std::string s = r.get_str();
    if (s.size() <= 120)
        return s;
    return fmt::format("<{}-digit numerator>/<{}-digit denominator>", r.get_num().get_str().size(),
                       r.get_den().get_str().size());
}

int cmd_sum(int m, const std::vector<int>& residues, std::int64_t periods, const std::string& format)
{
    const Precision precision = precision_from_env();
    for (int r : residues)
        if (r < 1 || r > m)
            throw UsageError(fmt::format("residue {} is outside 1..{}", r, m));
    if (residues.size() > 2)
        throw UsageError("sum takes at most two residues");

    json doc;
    doc["schema_version"] = "1";
    doc["modulus"] = m;
    doc["periods"] = periods;
    std::string out;
    const double log_n = std::log(static_cast<double>(periods));
    if (residues.size() == 2) {
        const auto c = SigmaCombination::difference(m, residues[0], residues[1]);
        const bool exact = precision == Precision::Exact || (precision == Precision::Auto && periods <= kExactPeriodLimit);
        std::optional<Rational> value;
        double v = 0.0;
        if (residues[0] == residues[1]) {
            value = Rational(0);
        } else if (exact) {
            value = truncated_sum(c, periods);
            v = value->get_d();
        } else {
            v = truncated_sum_approx(c, periods);
        }
        const auto limit = residues[0] == residues[1] ? ClosedFormConstant() : digamma_combination(c);
        doc["sum"] = c.to_string();
        doc["exact"] = value ? json(value->get_str()) : json(nullptr);
        doc["value"] = v;
        doc["limit"] = limit.to_string();
        doc["limit_value"] = limit.value();
        doc["tail_bound"] = static_cast<double>(c.abs_weight_sum()) / (m * static_cast<double>(periods));
        out += fmt::format("{} over {} periods = {:.15f}\n", c.to_string(), periods, v);
        if (value)
            out += fmt::format("  exact {}\n", exact_text(*value));
        out += fmt::format("  limit {} = {:.15f}, difference {:.3e} (tail bound {:.1e})\n", limit.to_string(),
                           limit.value(), v - limit.value(), doc["tail_bound"].get<double>());
    } else {
        const CutoffSum s = residues.empty() ? sigma_total(m, periods, precision) : sigma(m, residues[0], periods, precision);
        const auto e = residues.empty() ? asymptotic_expansion_total(m) : asymptotic_expansion(m, residues[0]);
        const std::string name = residues.empty() ? fmt::format("S({})", m) : fmt::format("S({},{})", m, residues[0]);
        const double renormalized = s.value - e.log_coefficient.get_d() * log_n;
        doc["sum"] = name;
        doc["exact"] = s.exact ? json(s.exact->get_str()) : json(nullptr);
        doc["value"] = s.value;
        doc["renormalized"] = renormalized;
        doc["constant"] = e.constant.to_string();
        doc["constant_value"] = e.constant.value();
        out += fmt::format("{} over {} periods = {:.15f}\n", name, periods, s.value);
        if (s.exact)
            out += fmt::format("  exact {}\n", exact_text(*s.exact));
        out += fmt::format("  minus ({})*log(N) = {:.15f}\n", e.log_coefficient.get_str(), renormalized);
        out += fmt::format("  constant {} = {:.15f}, difference {:.3e}\n", e.constant.to_string(), e.constant.value(),
                           renormalized - e.constant.value());
    }
    emit(format == "json" ? doc.dump(2) + "\n" : out);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cyclotomic factorizations, residue-class harmonic sums and their closed forms"};
    app.require_subcommand(1);

    int m = 0;
    std::string format = "text";
    VerifyOptions options;
    std::string flag_errata = "on";
    std::string catalog_path;
    std::vector<int> residues;

    auto* factor = app.add_subcommand("factor", "real factorization of x^m - 1 and its groupings");
    factor->add_option("-m,--modulus", m, "modulus")->required()->check(CLI::Range(2, 64));
    factor->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string poly;
    int terms = 12;
    bool search_integer = false;
    auto* series = app.add_subcommand("series", "reciprocal series of a polynomial and its periodic pattern");
    series->add_option("--poly", poly, "ascending coefficients, e.g. 1,1,1 for 1+x+x^2");
    series->add_option("--terms", terms, "number of coefficients to print")->check(CLI::Range(1, 10000));
    series->add_option("-m,--modulus", m, "period to certify (default: search 1..64)")->check(CLI::Range(1, 4096));
    series->add_flag("--search-integer", search_integer,
                     "experimental: list quadratic factors of x^m - 1 with integer reciprocal expansions");

    std::string pattern;
    auto* identity = app.add_subcommand("identity", "verify one combination by every method");
    identity->add_option("-m,--modulus", m, "modulus")->required()->check(CLI::Range(1, 4096));
    auto* res_opt = identity->add_option("--residues", residues, "residues i j for S(m,i) - S(m,j)")->expected(2);
    auto* pat_opt = identity->add_option("--pattern", pattern, "comma-separated weights w_1..w_m");
    res_opt->excludes(pat_opt);
    identity->add_option("--tol", options.tolerance, "method tolerance")->check(CLI::Range(1e-12, 1.0));
    identity->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    identity->add_option("--catalog", catalog_path, "catalog file (JSON lines)");
    identity->add_option("--flag-errata", flag_errata, "compare with stated values")->check(CLI::IsMember({"on", "off"}));

    auto* constants = app.add_subcommand("constants", "asymptotic expansions of S(m,i)(N)");
    constants->add_option("-m,--modulus", m, "modulus")->required()->check(CLI::Range(2, 24));
    constants->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    constants->add_option("--flag-errata", flag_errata, "compare with stated constants")
        ->check(CLI::IsMember({"on", "off"}));

    bool all = false;
    auto* verify = app.add_subcommand("verify", "run the identity catalog");
    auto* all_opt = verify->add_flag("--all", all, "whole catalog plus every two-term difference for m <= 12");
    auto* mod_opt = verify->add_option("-m,--modulus", m, "only this modulus")->check(CLI::Range(1, 64));
    all_opt->excludes(mod_opt);
    verify->add_option("--tol", options.tolerance, "method tolerance")->check(CLI::Range(1e-12, 1.0));
    verify->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--catalog", catalog_path, "catalog file (JSON lines)");
    verify->add_option("--flag-errata", flag_errata, "compare with stated values")->check(CLI::IsMember({"on", "off"}));

    std::int64_t periods = 1000;
    auto* sum = app.add_subcommand("sum", "partial sums S(m,i)(N), S(m,i) - S(m,j), or S(m) (CYCLOSUM_PRECISION=exact|float)");
    sum->add_option("-m,--modulus", m, "modulus")->required()->check(CLI::Range(1, 4096));
    sum->add_option("--residues", residues, "one residue i, or two residues i j")->expected(1, 2);
    sum->add_option("--periods", periods, "cutoff N in periods")->check(CLI::Range(std::int64_t{1}, std::int64_t{100000000}));
    sum->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }
    options.flag_errata = flag_errata == "on";

    try {
        if (*factor)
            return cmd_factor(m, format);
        if (*series)
            return cmd_series(poly, terms, series->count("--modulus") ? m : 0, search_integer);
        if (*identity) {
            if (residues.empty() && pattern.empty())
                throw UsageError("identity needs --residues i j or --pattern");
            return cmd_identity(m, residues, pattern, options, format, catalog_path);
        }
        if (*constants)
            return cmd_constants(m, options.flag_errata, format);
        if (*verify)
            return cmd_verify(all, verify->count("--modulus") ? m : 0, options, format, catalog_path);
        if (*sum)
            return cmd_sum(m, residues, periods, format);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DivergentCombination& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
