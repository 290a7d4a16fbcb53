#pragma once

#include "cyclosum/series.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyclosum {

int euler_phi(int m);

/// A Dirichlet character mod m stored with exact phases: on a unit n,
/// chi(n) = exp(2 pi i phase(n) / order). Off the units chi vanishes.
class DirichletCharacter {
public:
    DirichletCharacter(int modulus, int index, int order, std::vector<int> phases);

    int modulus() const { return modulus_; }
    /// 1-based position in enumerate_characters(modulus); 1 is the principal character.
    int index() const { return index_; }
    /// "chi^(m)_k"
    std::string label() const;
    /// Common denominator of the phases.
    int order() const { return order_; }

    /// Phase numerator at residue n (any integer), or nullopt when gcd(n, m) > 1.
    std::optional<int> phase(std::int64_t n) const;
    std::complex<double> value(std::int64_t n) const;
    /// Values at residues 1..m.
    std::vector<std::complex<double>> values() const;

    bool is_principal() const;
    /// Takes only the values -1, 0, 1.
    bool is_real() const;
    /// Integer values at residues 1..m; only for real characters.
    std::vector<std::int64_t> real_values() const;

private:
    int modulus_;
    int index_;
    int order_;
    std::vector<int> phases_;  // residue n-1 -> phase numerator, -1 off the units
};

/// All phi(m) characters, built from the CRT decomposition of the unit
/// group (primitive roots for odd prime powers, -1 and 5 for powers of 2).
/// The principal character comes first.
std::vector<DirichletCharacter> enumerate_characters(int m);

struct PatternMatch {
    std::optional<DirichletCharacter> character;
    /// "chi^(m)_k" on a match, otherwise "f^(m)_j" with j the highest residue of nonzero weight.
    std::string label;
};

/// Finds the non-principal real character whose values equal the pattern
/// weights exactly; otherwise labels the pattern as a plain periodic function.
PatternMatch match_pattern(const PeriodicPattern& pattern);

/// sum_n chi(n)/n truncated after `periods` * m terms. Returns the mean of
/// the partial sums S_{Pm}, ..., S_{Pm+m-1}, which cancels the oscillating
/// 1/N part of the tail. Throws std::domain_error for the principal character.
std::complex<double> character_series(const DirichletCharacter& chi, std::int64_t periods);

/// sum_i chi(i) Sigma_m^i for a real character.
SigmaCombination character_combination(const DirichletCharacter& chi);

}  // namespace cyclosum
