#pragma once

#include "cyclosum/closed_form.hpp"
#include "cyclosum/series.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclosum {

/// A further statement attached to a catalog row: either the value of
/// another combination, or the constant term of one divergent sum.
struct SideClaim {
    enum class Kind { Value, AsymptoticConstant };
    Kind kind = Kind::Value;
    std::optional<SigmaCombination> combination;  // Value
    int residue = 0;                              // AsymptoticConstant
    ClosedFormConstant stated;
    std::string citation;
};

struct IdentityRecord {
    std::string id;
    SigmaCombination combination{1, {0}};
    std::optional<ClosedFormConstant> paper_value;
    std::string citation;
    std::optional<std::string> character;
    std::vector<SideClaim> side_claims;
};

/// Thrown for malformed catalog input.
class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The built-in identity catalog (line-delimited JSON compiled into the library).
const std::string& default_catalog_text();
std::vector<IdentityRecord> default_catalog();
/// One JSON object per non-empty line: {id, m, weights, paper_value_atoms, citation,
/// character?, side_claims?}. Ids must be unique and combinations convergent.
std::vector<IdentityRecord> parse_catalog(std::istream& in);
std::vector<IdentityRecord> load_catalog(const std::string& path);

enum class Status { Pass, PaperMismatch, MethodDisagreement };
std::string status_name(Status s);

struct MethodResult {
    std::string name;
    double value = 0.0;
    /// Strict methods must agree pairwise within the tolerance; auxiliary
    /// ones within their own bound of the closed form.
    bool strict = true;
    double bound = 0.0;
};

struct VerificationRecord {
    std::string id;
    std::string kind;  ///< "identity" or "factor-integral"
    int modulus = 0;
    std::vector<std::int64_t> weights;
    std::string description;
    std::vector<MethodResult> methods;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    double paper_tolerance = 0.0;
    ClosedFormConstant computed;
    std::optional<ClosedFormConstant> paper_value;
    std::optional<double> paper_deviation;
    std::string citation;
    std::string character;  ///< chi^(m)_k or f^(m)_j; empty for factor integrals
    std::vector<std::string> annotations;
    Status status = Status::Pass;
};

struct VerifyOptions {
    double tolerance = 1e-9;
    double paper_tolerance = 1e-6;
    bool flag_errata = true;
    std::int64_t cutoff_periods = 1000000;
    std::int64_t character_periods = 100000;
    std::int64_t hansen_terms = 100000;
};

/// Runs every applicable method on one identity. Throws DivergentCombination
/// for a divergent combination.
VerificationRecord verify_identity(const IdentityRecord& record, const VerifyOptions& options);

/// integral_0^1 dx/(x^2 - 2cos(2 pi r/m) x + 1): closed form against quadrature.
VerificationRecord verify_factor_integral(int m, int r, const VerifyOptions& options);

/// Identity record for sum_i w_i Sigma_m^i with a generated id and no stated value.
IdentityRecord adhoc_identity(const SigmaCombination& combination);

/// The catalog (all of it, or the rows with the given modulus), every
/// two-term difference Sigma_m^i - Sigma_m^j not already in the catalog
/// (m <= 12, or the given modulus), and the integrals of the real quadratic
/// factors. Sorted by id in natural order.
std::vector<VerificationRecord> verify_batch(const std::vector<IdentityRecord>& catalog,
                                             std::optional<int> modulus, const VerifyOptions& options);

/// Natural ordering (digit runs compared numerically).
bool natural_less(const std::string& a, const std::string& b);

/// PASS -> 0, only PAPER_MISMATCH -> 3, any METHOD_DISAGREEMENT -> 4.
int exit_code(const std::vector<VerificationRecord>& records);

inline constexpr int kExitPass = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPaperMismatch = 3;
inline constexpr int kExitMethodDisagreement = 4;

/// Asymptotic constants stated for individual residue classes.
struct StatedConstant {
    int modulus;
    int residue;  ///< 0 for the full sum Sigma_m
    ClosedFormConstant stated;
    std::string citation;
};
const std::vector<StatedConstant>& stated_constants();

std::string render_text(const std::vector<VerificationRecord>& records, const VerifyOptions& options);
std::string render_json(const std::vector<VerificationRecord>& records, const VerifyOptions& options);
std::string render_csv(const std::vector<VerificationRecord>& records);

}  // namespace cyclosum
