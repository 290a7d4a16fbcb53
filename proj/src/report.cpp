#include "cyclosum/harness.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <map>

namespace cyclosum {

using json = nlohmann::json;

namespace {

std::map<std::string, int> tally(const std::vector<VerificationRecord>& records)
{
    std::map<std::string, int> counts{{"PASS", 0}, {"PAPER_MISMATCH", 0}, {"METHOD_DISAGREEMENT", 0}};
    for (const auto& r : records)
        ++counts[status_name(r.status)];
    return counts;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string joined(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

}  // namespace

std::string render_text(const std::vector<VerificationRecord>& records, const VerifyOptions& options)
{
    std::string out = fmt::format("method tolerance {:.0e}, stated-value tolerance {:.0e}, errata flags {}\n\n",
                                  options.tolerance, options.paper_tolerance, options.flag_errata ? "on" : "off");
    for (const auto& r : records) {
        out += fmt::format("[{}] {}: {}\n", status_name(r.status), r.id, r.description);
        out += fmt::format("    value      {:.12f} = {}\n", r.computed.value(), r.computed.to_string());
        std::string methods;
        for (const auto& m : r.methods)
            methods += fmt::format("{}{} {:.15f}", methods.empty() ? "" : ", ", m.name, m.value);
        out += fmt::format("    methods    {}\n", methods);
        out += fmt::format("    deviation  {:.2e} (tolerance {:.0e})\n", r.max_deviation, r.tolerance);
        if (r.paper_value) {
            out += fmt::format("    stated     {} = {:.12f}", r.paper_value->to_string(), r.paper_value->value());
            if (r.paper_deviation)
                out += fmt::format(" (deviation {:.2e})", *r.paper_deviation);
            out += "\n";
        }
        if (!r.citation.empty())
            out += fmt::format("    source     {}\n", r.citation);
        if (!r.character.empty())
            out += fmt::format("    pattern    {}\n", r.character);
        for (const auto& a : r.annotations)
            out += fmt::format("    note       {}\n", a);
    }
    const auto counts = tally(records);
    out += fmt::format("\nsummary: {} PASS, {} PAPER_MISMATCH, {} METHOD_DISAGREEMENT ({} records)\n",
                       counts.at("PASS"), counts.at("PAPER_MISMATCH"), counts.at("METHOD_DISAGREEMENT"), records.size());
    return out;
}

std::string render_json(const std::vector<VerificationRecord>& records, const VerifyOptions& options)
{
    json doc;
    doc["schema_version"] = "1";
    doc["tolerance"] = options.tolerance;
    doc["paper_tolerance"] = options.paper_tolerance;
    doc["flag_errata"] = options.flag_errata;
    json list = json::array();
    for (const auto& r : records) {
        json rec;
        rec["id"] = r.id;
        rec["kind"] = r.kind;
        rec["modulus"] = r.modulus;
        rec["weights"] = r.weights;
        rec["description"] = r.description;
        json methods = json::array();
        for (const auto& m : r.methods) {
            json jm{{"name", m.name}, {"value", m.value}, {"strict", m.strict}};
            if (!m.strict)
                jm["bound"] = m.bound;
            methods.push_back(jm);
        }
        rec["methods"] = methods;
        rec["max_deviation"] = r.max_deviation;
        rec["closed_form"] = r.computed.to_string();
        rec["value"] = r.computed.value();
        rec["paper_value"] = r.paper_value ? json(r.paper_value->to_string()) : json(nullptr);
        rec["paper_value_numeric"] = r.paper_value ? json(r.paper_value->value()) : json(nullptr);
        rec["paper_deviation"] = r.paper_deviation ? json(*r.paper_deviation) : json(nullptr);
        rec["citation"] = r.citation;
        rec["character"] = r.character.empty() ? json(nullptr) : json(r.character);
        rec["annotations"] = r.annotations;
        rec["status"] = status_name(r.status);
        list.push_back(rec);
    }
    doc["records"] = list;
    json summary;
    for (const auto& [name, n] : tally(records))
        summary[name] = n;
    summary["total"] = records.size();
    doc["summary"] = summary;
    return doc.dump(2) + "\n";
}

std::string render_csv(const std::vector<VerificationRecord>& records)
{
    std::string out = "id,kind,status,modulus,combination,value,closed_form,max_deviation,paper_value,"
                      "paper_deviation,character,citation,annotations\r\n";
    for (const auto& r : records) {
        const std::vector<std::string> fields{
            r.id,
            r.kind,
            status_name(r.status),
            std::to_string(r.modulus),
            r.description,
            fmt::format("{:.17g}", r.computed.value()),
            r.computed.to_string(),
            fmt::format("{:.3e}", r.max_deviation),
            r.paper_value ? r.paper_value->to_string() : "",
            r.paper_deviation ? fmt::format("{:.3e}", *r.paper_deviation) : "",
            r.character,
            r.citation,
            joined(r.annotations, "; "),
        };
        std::string line;
        for (std::size_t i = 0; i < fields.size(); ++i)
            line += (i ? "," : "") + csv_field(fields[i]);
        out += line + "\r\n";
    }
    return out;
}

}  // namespace cyclosum
