#include "cyclosum/harness.hpp"

#include "cyclosum/characters.hpp"
#include "cyclosum/digamma.hpp"
#include "cyclosum/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace cyclosum {

using json = nlohmann::json;

namespace {

ClosedFormConstant parse_atoms(const json& list, const std::string& where)
{
    if (!list.is_array())
        throw CatalogError(where + ": atom list must be an array");
    std::vector<Term> terms;
    for (const auto& item : list) {
        if (!item.is_object() || !item.contains("coef") || !item.contains("atom"))
            throw CatalogError(where + ": every atom needs \"coef\" and \"atom\"");
        const auto kind = parse_kind(item.at("atom").get<std::string>());
        if (!kind)
            throw CatalogError(where + ": unknown atom kind " + item.at("atom").dump());
        std::vector<std::int64_t> args;
        if (item.contains("args"))
            args = item.at("args").get<std::vector<std::int64_t>>();
        const auto& coef = item.at("coef");
        Rational c = coef.is_string() ? parse_rational(coef.get<std::string>()) : make_rational(coef.get<std::int64_t>());
        try {
            terms.push_back({c, make_atom(*kind, args)});
        } catch (const std::exception& e) {
            throw CatalogError(where + ": " + e.what());
        }
    }
    try {
        return ClosedFormConstant(terms);
    } catch (const std::exception& e) {
        throw CatalogError(where + ": " + e.what());
    }
}

SigmaCombination parse_weights(const json& obj, int m, const std::string& where)
{
    auto w = obj.at("weights").get<std::vector<std::int64_t>>();
    if (m < 1 || static_cast<int>(w.size()) != m)
        throw CatalogError(where + ": weights must have length m");
    return {m, std::move(w)};
}

IdentityRecord parse_record(const json& obj, const std::string& where)
{
    if (!obj.is_object())
        throw CatalogError(where + ": expected a JSON object");
    for (const char* key : {"id", "m", "weights"})
        if (!obj.contains(key))
            throw CatalogError(where + ": missing \"" + std::string(key) + "\"");
    IdentityRecord r;
    r.id = obj.at("id").get<std::string>();
    const int m = obj.at("m").get<int>();
    r.combination = parse_weights(obj, m, where);
    if (!r.combination.convergent())
        throw CatalogError(where + ": combination " + r.combination.to_string() + " diverges");
    if (obj.contains("paper_value_atoms") && !obj.at("paper_value_atoms").empty())
        r.paper_value = parse_atoms(obj.at("paper_value_atoms"), where);
    r.citation = obj.value("citation", "");
    if (obj.contains("character") && !obj.at("character").is_null())
        r.character = obj.at("character").get<std::string>();
    if (obj.contains("side_claims")) {
        for (const auto& sc : obj.at("side_claims")) {
            SideClaim claim;
            const auto kind = sc.at("kind").get<std::string>();
            if (kind == "value") {
                claim.kind = SideClaim::Kind::Value;
                claim.combination = parse_weights(sc, m, where);
                if (!claim.combination->convergent())
                    throw CatalogError(where + ": side claim combination diverges");
            } else if (kind == "asymptotic") {
                claim.kind = SideClaim::Kind::AsymptoticConstant;
                claim.residue = sc.at("residue").get<int>();
                if (claim.residue < 1 || claim.residue > m)
                    throw CatalogError(where + ": side claim residue out of range");
            } else {
                throw CatalogError(where + ": unknown side claim kind \"" + kind + "\"");
            }
            claim.stated = parse_atoms(sc.at("stated"), where);
            claim.citation = sc.value("citation", "");
            r.side_claims.push_back(std::move(claim));
        }
    }
    return r;
}

}  // namespace

std::vector<IdentityRecord> parse_catalog(std::istream& in)
{
    std::vector<IdentityRecord> out;
    std::set<std::string> ids;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }))
            continue;
        const std::string where = "catalog line " + std::to_string(number);
        json obj;
        try {
            obj = json::parse(line);
            out.push_back(parse_record(obj, where));
        } catch (const json::exception& e) {
            throw CatalogError(where + ": " + e.what());
        }
        if (!ids.insert(out.back().id).second)
            throw CatalogError(where + ": duplicate id " + out.back().id);
    }
    return out;
}

std::vector<IdentityRecord> default_catalog()
{
    std::istringstream in(default_catalog_text());
    return parse_catalog(in);
}

std::vector<IdentityRecord> load_catalog(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CatalogError("cannot open catalog " + path);
    return parse_catalog(in);
}

std::string status_name(Status s)
{
    switch (s) {
    case Status::Pass:
        return "PASS";
    case Status::PaperMismatch:
        return "PAPER_MISMATCH";
    case Status::MethodDisagreement:
        return "METHOD_DISAGREEMENT";
    }
    return "?";
}

namespace {

double max_pairwise(const std::vector<MethodResult>& methods)
{
    double worst = 0.0;
    for (std::size_t a = 0; a < methods.size(); ++a)
        for (std::size_t b = a + 1; b < methods.size(); ++b)
            if (methods[a].strict && methods[b].strict)
                worst = std::max(worst, std::fabs(methods[a].value - methods[b].value));
    return worst;
}

std::string sci(double x)
{
    std::ostringstream out;
    out.precision(2);
    out << std::scientific << x;
    return out.str();
}

std::string fixed(double x, int digits = 12)
{
    std::ostringstream out;
    out.precision(digits);
    out << std::fixed << x;
    return out.str();
}

// Applies the agreement rules to the method list and fills max_deviation/status.
void settle_methods(VerificationRecord& v, double reference)
{
    v.max_deviation = max_pairwise(v.methods);
    bool ok = v.max_deviation <= v.tolerance;
    if (!ok)
        v.annotations.push_back("methods disagree: max pairwise deviation " + sci(v.max_deviation) +
                                " exceeds tolerance " + sci(v.tolerance));
    for (const auto& m : v.methods) {
        if (m.strict)
            continue;
        const double dev = std::fabs(m.value - reference);
        if (dev > m.bound) {
            ok = false;
            v.annotations.push_back(m.name + " deviates by " + sci(dev) + ", beyond its bound " + sci(m.bound));
        }
    }
    v.status = ok ? Status::Pass : Status::MethodDisagreement;
}

void flag(VerificationRecord& v)
{
    if (v.status == Status::Pass)
        v.status = Status::PaperMismatch;
}

}  // namespace

VerificationRecord verify_identity(const IdentityRecord& record, const VerifyOptions& options)
{
    const SigmaCombination& c = record.combination;
    if (!c.convergent())
        throw DivergentCombination("combination " + c.to_string() + " diverges (weights sum to " +
                                   std::to_string(c.weight_sum()) + ")");
    const int m = c.modulus();
    VerificationRecord v;
    v.id = record.id;
    v.kind = "identity";
    v.modulus = m;
    v.weights = c.weights();
    v.description = c.to_string();
    v.tolerance = options.tolerance;
    v.paper_tolerance = options.paper_tolerance;
    v.citation = record.citation;
    v.computed = digamma_combination(c);
    const double reference = v.computed.value();
    const double inner_tol = std::max(options.tolerance / 10.0, 1e-13);

    v.methods.push_back({"digamma", reference, true, 0.0});
    v.methods.push_back({"hansen", hansen_direct_combination(c, options.hansen_terms).value, true, 0.0});
    v.methods.push_back({"quadrature", integrate(combination_integrand(c), inner_tol).value, true, 0.0});
    v.methods.push_back({"accelerated-series", accelerated_sum(c, inner_tol).value, true, 0.0});
    v.methods.push_back({"renormalized-cutoff", truncated_sum_approx(c, options.cutoff_periods), false,
                         static_cast<double>(c.abs_weight_sum()) / (static_cast<double>(m) *
                                                                     static_cast<double>(options.cutoff_periods))});
    const auto match = match_pattern(pattern_from_weights(m, c.weights()));
    v.character = match.label;
    if (match.character)
        v.methods.push_back(
            {"character-series", character_series(*match.character, options.character_periods).real(), false, 1e-8});
    settle_methods(v, reference);

    v.paper_value = record.paper_value;
    if (!options.flag_errata)
        return v;
    if (record.paper_value) {
        const double dev = std::fabs(record.paper_value->value() - reference);
        v.paper_deviation = dev;
        if (dev > options.paper_tolerance) {
            flag(v);
            v.annotations.push_back("stated value " + record.paper_value->to_string() + " = " +
                                    fixed(record.paper_value->value()) + " differs from computed " +
                                    v.computed.to_string() + " = " + fixed(reference) + " by " + sci(dev));
        }
    }
    if (record.character && *record.character != match.label) {
        flag(v);
        v.annotations.push_back("stated pattern label " + *record.character + ", computed " + match.label);
    }
    for (const auto& claim : record.side_claims) {
        std::string subject;
        ClosedFormConstant truth;
        if (claim.kind == SideClaim::Kind::Value) {
            subject = claim.combination->to_string();
            truth = digamma_combination(*claim.combination);
        } else {
            subject = "constant term of S(" + std::to_string(m) + "," + std::to_string(claim.residue) + ")";
            truth = make_rational(-1, m) * digamma_rational(claim.residue, m);
        }
        const std::string where = claim.citation.empty() ? "" : " [" + claim.citation + "]";
        if (std::fabs(claim.stated.value() - truth.value()) <= options.paper_tolerance) {
            v.annotations.push_back("side claim " + subject + where + ": stated value confirmed");
            continue;
        }
        v.annotations.push_back("side claim " + subject + where + ": stated " + claim.stated.to_string() +
                                ", computed " + truth.to_string() +
                                "; stated - computed = " + (claim.stated - truth).to_string());
    }
    return v;
}

VerificationRecord verify_factor_integral(int m, int r, const VerifyOptions& options)
{
    VerificationRecord v;
    v.id = "m" + std::to_string(m) + ".factor-integral-r" + std::to_string(r);
    v.kind = "factor-integral";
    v.modulus = m;
    v.description = "integral of 1/(x^2 - 2cos(2pi*" + std::to_string(r) + "/" + std::to_string(m) + ")x + 1) over [0,1]";
    v.tolerance = options.tolerance;
    v.paper_tolerance = options.paper_tolerance;
    v.computed = integral_closed_form(m, r);
    const double trace = 2.0 * std::cos(2.0 * std::numbers::pi * r / m);
    const auto q = adaptive_integrate([trace](double x) { return 1.0 / ((x - trace) * x + 1.0); }, 0.0, 1.0,
                                      std::max(options.tolerance / 10.0, 1e-13));
    v.methods.push_back({"closed-form", v.computed.value(), true, 0.0});
    v.methods.push_back({"quadrature", q.value, true, 0.0});
    settle_methods(v, v.computed.value());
    return v;
}

IdentityRecord adhoc_identity(const SigmaCombination& combination)
{
    IdentityRecord r;
    r.id = "m" + std::to_string(combination.modulus()) + "." + combination.slug();
    r.combination = combination;
    return r;
}

bool natural_less(const std::string& a, const std::string& b)
{
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t ie = i;
            std::size_t je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie])))
                ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je])))
                ++je;
            const auto na = std::stoull(a.substr(i, ie - i));
            const auto nb = std::stoull(b.substr(j, je - j));
            if (na != nb)
                return na < nb;
            i = ie;
            j = je;
            continue;
        }
        if (a[i] != b[j])
            return a[i] < b[j];
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

std::vector<VerificationRecord> verify_batch(const std::vector<IdentityRecord>& catalog, std::optional<int> modulus,
                                             const VerifyOptions& options)
{
    std::vector<VerificationRecord> out;
    for (const auto& r : catalog)
        if (!modulus || r.combination.modulus() == *modulus)
            out.push_back(verify_identity(r, options));

    std::vector<int> moduli;
    if (modulus)
        moduli.push_back(*modulus);
    else
        for (int m = 2; m <= 12; ++m)
            moduli.push_back(m);
    for (int m : moduli) {
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                const auto c = SigmaCombination::difference(m, i, j);
                const bool listed =
                    std::any_of(catalog.begin(), catalog.end(), [&](const IdentityRecord& r) { return r.combination == c; });
                if (!listed)
                    out.push_back(verify_identity(adhoc_identity(c), options));
            }
        for (int r = 1; 2 * r < m; ++r)
            out.push_back(verify_factor_integral(m, r, options));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const VerificationRecord& a, const VerificationRecord& b) { return natural_less(a.id, b.id); });
    return out;
}

int exit_code(const std::vector<VerificationRecord>& records)
{
    bool mismatch = false;
    for (const auto& r : records) {
        if (r.status == Status::MethodDisagreement)
            return kExitMethodDisagreement;
        mismatch = mismatch || r.status == Status::PaperMismatch;
    }
    return mismatch ? kExitPaperMismatch : kExitPass;
}

const std::vector<StatedConstant>& stated_constants()
{
    static const std::vector<StatedConstant> table = [] {
        const auto g = [](std::int64_t den) { return Term{make_rational(1, den), Atom::euler_gamma()}; };
        const auto t = [](std::int64_t num, std::int64_t den, Atom a) { return Term{make_rational(num, den), a}; };
        const Atom log2 = Atom::log(2);
        const Atom log3 = Atom::log(3);
        const Atom pi = Atom::pi();
        const Atom pi3 = Atom::pi_over_sqrt(3);
        return std::vector<StatedConstant>{
            {2, 1, ClosedFormConstant({g(2), t(1, 1, log2)}), "S(2,1) from the full and even harmonic sums"},
            {3, 0, ClosedFormConstant({g(1), t(1, 1, log3)}), "m = 3: full sum"},
            {3, 3, ClosedFormConstant({g(3)}), "m = 3: multiples of 3"},
            {3, 1, ClosedFormConstant({g(3), t(1, 2, log3), t(1, 6, pi3)}), "m = 3: residue 1"},
            {3, 2, ClosedFormConstant({g(3), t(1, 2, log3), t(-1, 6, pi3)}), "m = 3: residue 2"},
            {4, 4, ClosedFormConstant({g(4)}), "m = 4: multiples of 4"},
            {4, 2, ClosedFormConstant({g(4), t(1, 2, log2)}), "m = 4: residue 2"},
            {4, 1, ClosedFormConstant({g(4), t(3, 4, log2), t(1, 8, pi)}), "m = 4: residue 1"},
            {4, 3, ClosedFormConstant({g(4), t(3, 4, log2), t(-1, 8, pi)}), "m = 4: residue 3"},
            {6, 1, ClosedFormConstant({g(6), t(1, 3, log2), t(1, 4, log3), t(1, 3, log2), t(1, 4, pi3)}),
             "m = 6: table of divergent sums, residue 1"},
            {6, 4, ClosedFormConstant({g(6), t(1, 4, log3), t(-1, 12, pi3)}), "m = 6: table of divergent sums, residue 4"},
        };
    }();
    return table;
}

}  // namespace cyclosum
