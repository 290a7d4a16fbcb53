#include "cyclosum/characters.hpp"

#include "cyclosum/compensated_sum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cyclosum {

int euler_phi(int m)
{
    if (m < 1)
        throw std::domain_error("euler_phi requires m >= 1");
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

DirichletCharacter::DirichletCharacter(int modulus, int index, int order, std::vector<int> phases)
    : modulus_(modulus), index_(index), order_(order), phases_(std::move(phases))
{
}

std::string DirichletCharacter::label() const
{
    return "chi^(" + std::to_string(modulus_) + ")_" + std::to_string(index_);
}

std::optional<int> DirichletCharacter::phase(std::int64_t n) const
{
    auto r = n % modulus_;
    if (r <= 0)
        r += modulus_;
    const int ph = phases_[static_cast<std::size_t>(r - 1)];
    if (ph < 0)
        return std::nullopt;
    return ph;
}

std::complex<double> DirichletCharacter::value(std::int64_t n) const
{
    const auto ph = phase(n);
    if (!ph)
        return {0.0, 0.0};
    const int k = *ph;
    if (k == 0)
        return {1.0, 0.0};
    if (2 * k == order_)
        return {-1.0, 0.0};
    if (4 * k == order_)
        return {0.0, 1.0};
    if (4 * k == 3 * order_)
        return {0.0, -1.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * k / order_);
}

std::vector<std::complex<double>> DirichletCharacter::values() const
{
    std::vector<std::complex<double>> out;
    for (int n = 1; n <= modulus_; ++n)
        out.push_back(value(n));
    return out;
}

bool DirichletCharacter::is_principal() const
{
    for (int ph : phases_)
        if (ph > 0)
            return false;
    return true;
}

bool DirichletCharacter::is_real() const
{
    for (int ph : phases_)
        if (ph > 0 && 2 * ph != order_)
            return false;
    return true;
}

std::vector<std::int64_t> DirichletCharacter::real_values() const
{
    if (!is_real())
        throw std::domain_error(label() + " is not a real character");
    std::vector<std::int64_t> out;
    for (int ph : phases_)
        out.push_back(ph < 0 ? 0 : (ph == 0 ? 1 : -1));
    return out;
}

namespace {

struct Generator {
    int residue;  // generator lifted to Z/m
    int order;
};

int mult_order(std::int64_t g, std::int64_t n)
{
    std::int64_t x = g % n;
    int k = 1;
    while (x != 1 % n) {
        x = x * g % n;
        ++k;
    }
    return k;
}

// x = g (mod pe), x = 1 (mod rest)
int crt_lift(int g, int pe, int m)
{
    const int rest = m / pe;
    for (int t = 0; t < rest; ++t) {
        const int x = g + pe * t;
        if (x % rest == 1 % rest)
            return x;
    }
    throw std::logic_error("CRT lift failed");
}

std::vector<Generator> unit_group_generators(int m)
{
    std::vector<Generator> gens;
    int n = m;
    for (int p = 2; p <= n; ++p) {
        if (n % p)
            continue;
        int pe = 1;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            pe *= p;
            ++e;
        }
        if (p == 2) {
            if (e >= 2)
                gens.push_back({crt_lift(pe - 1, pe, m), 2});
            if (e >= 3)
                gens.push_back({crt_lift(5, pe, m), pe / 4});
            continue;
        }
        const int phi = euler_phi(pe);
        int g = 2;
        while (std::gcd(g, pe) != 1 || mult_order(g, pe) != phi)
            ++g;
        gens.push_back({crt_lift(g, pe, m), phi});
    }
    return gens;
}

}  // namespace

std::vector<DirichletCharacter> enumerate_characters(int m)
{
    if (m < 1)
        throw std::domain_error("enumerate_characters requires m >= 1");
    const auto gens = unit_group_generators(m);
    const std::size_t r = gens.size();
    int order = 1;
    for (const auto& g : gens)
        order = std::lcm(order, g.order);

    // Discrete logarithms: dlog[n] holds the exponent vector of unit n.
    std::vector<std::vector<int>> dlog(static_cast<std::size_t>(m));
    std::vector<int> exps(r, 0);
    for (;;) {
        std::int64_t x = 1 % m;
        for (std::size_t j = 0; j < r; ++j)
            for (int e = 0; e < exps[j]; ++e)
                x = x * gens[j].residue % m;
        dlog[static_cast<std::size_t>(x)] = exps;
        std::size_t j = r;
        while (j > 0 && ++exps[j - 1] == gens[j - 1].order)
            exps[--j] = 0;
        if (j == 0)
            break;
    }

    std::vector<DirichletCharacter> chars;
    std::vector<int> k(r, 0);
    for (int index = 1;; ++index) {
        std::vector<int> phases(static_cast<std::size_t>(m), -1);
        for (int n = 1; n <= m; ++n) {
            if (std::gcd(n, m) != 1)
                continue;
            const auto& a = dlog[static_cast<std::size_t>(n % m)];
            std::int64_t ph = 0;
            for (std::size_t j = 0; j < r; ++j)
                ph += static_cast<std::int64_t>(k[j]) * a[j] * (order / gens[j].order);
            phases[static_cast<std::size_t>(n - 1)] = static_cast<int>(ph % order);
        }
        chars.emplace_back(m, index, order, std::move(phases));
        std::size_t j = r;
        while (j > 0 && ++k[j - 1] == gens[j - 1].order)
            k[--j] = 0;
        if (j == 0)
            break;
    }
    return chars;
}

PatternMatch match_pattern(const PeriodicPattern& pattern)
{
    const int m = pattern.period;
    if (m < 1 || static_cast<int>(pattern.weights.size()) != m)
        throw std::domain_error("malformed pattern");
    for (const auto& chi : enumerate_characters(m)) {
        if (chi.is_principal() || !chi.is_real())
            continue;
        if (chi.real_values() == pattern.weights)
            return {chi, chi.label()};
    }
    int top = 0;
    for (int i = 1; i <= m; ++i)
        if (pattern.weights[static_cast<std::size_t>(i - 1)] != 0)
            top = i;
    return {std::nullopt, "f^(" + std::to_string(m) + ")_" + std::to_string(top)};
}

std::complex<double> character_series(const DirichletCharacter& chi, std::int64_t periods)
{
    if (chi.is_principal())
        throw std::domain_error("the series of the principal character diverges");
    if (periods < 1)
        throw std::domain_error("character_series needs at least one period");
    const int m = chi.modulus();
    const auto vals = chi.values();
    CompensatedSum re;
    CompensatedSum im;
    auto add_term = [&](std::int64_t n) {
        const auto v = vals[static_cast<std::size_t>((n - 1) % m)];
        if (v.real() != 0.0)
            re += v.real() / static_cast<double>(n);
        if (v.imag() != 0.0)
            im += v.imag() / static_cast<double>(n);
    };
    const std::int64_t last = periods * m;
    for (std::int64_t n = 1; n <= last; ++n)
        add_term(n);
    CompensatedSum mean_re;
    CompensatedSum mean_im;
    for (int r = 0; r < m; ++r) {
        if (r > 0)
            add_term(last + r);
        mean_re += re.value();
        mean_im += im.value();
    }
    return {mean_re.value() / m, mean_im.value() / m};
}

SigmaCombination character_combination(const DirichletCharacter& chi)
{
    return {chi.modulus(), chi.real_values()};
}

}  // namespace cyclosum
