#include "cyclosum/catalog_match.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace cyclosum {

const std::vector<Atom>& catalog_atoms()
{
    static const std::vector<Atom> atoms{
        Atom::unit(),
        Atom::euler_gamma(),
        Atom::pi(),
        Atom::pi_over_sqrt(2),
        Atom::pi_over_sqrt(3),
        Atom::log(2),
        Atom::log(3),
        Atom::log(5),
        Atom::log_surd(1, 1, 2),
        Atom::log_surd_over_sqrt(1, 1, 2),
        Atom::log_surd_over_sqrt(2, 1, 3),
        Atom::log_surd_over_sqrt(2, 1, 5),
        Atom::pi_cot(1, 5),
        Atom::pi_cot(2, 5),
    };
    return atoms;
}

namespace {

constexpr int kMaxCoefficient = 24;

struct Coefficient {
    int num;
    int den;
    double value;
};

const std::vector<Coefficient>& coefficient_grid()
{
    static const std::vector<Coefficient> grid = [] {
        std::vector<Coefficient> g;
        for (int q = 1; q <= kMaxCoefficient; ++q)
            for (int p = 1; p <= kMaxCoefficient; ++p)
                if (std::gcd(p, q) == 1) {
                    g.push_back({p, q, static_cast<double>(p) / q});
                    g.push_back({-p, q, -static_cast<double>(p) / q});
                }
        return g;
    }();
    return grid;
}

struct Scaled {
    double value;
    int coef;  // index into the coefficient grid
};

// c * atom for every grid coefficient, sorted by value.
std::vector<Scaled> scaled_values(double atom_value)
{
    const auto& grid = coefficient_grid();
    std::vector<Scaled> out;
    out.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        out.push_back({grid[k].value * atom_value, static_cast<int>(k)});
    std::sort(out.begin(), out.end(), [](const Scaled& a, const Scaled& b) {
        return a.value < b.value || (a.value == b.value && a.coef < b.coef);
    });
    return out;
}

struct Candidate {
    std::vector<std::pair<int, int>> parts;  // (atom index, coefficient index)
    double deviation;

    int size() const
    {
        int s = 0;
        for (auto [a, c] : parts) {
            const auto& g = coefficient_grid()[static_cast<std::size_t>(c)];
            s += std::abs(g.num) + g.den;
        }
        return s;
    }
};

template <typename F>
void for_each_near(const std::vector<Scaled>& sorted, double target, double tol, F&& f)
{
    auto it = std::lower_bound(sorted.begin(), sorted.end(), target - tol,
                               [](const Scaled& s, double v) { return s.value < v; });
    for (; it != sorted.end() && it->value <= target + tol; ++it)
        f(*it);
}

}  // namespace

std::vector<ClosedFormConstant> match_catalog(double value, double tolerance)
{
    if (!(tolerance > 0.0))
        throw std::domain_error("match_catalog tolerance must be positive");
    if (!std::isfinite(value))
        return {};
    const auto& atoms = catalog_atoms();
    const auto& grid = coefficient_grid();
    const std::size_t n = atoms.size();
    std::vector<std::vector<Scaled>> scaled;
    for (const auto& a : atoms)
        scaled.push_back(scaled_values(a.value()));

    std::vector<Candidate> found;
    for (std::size_t a = 0; a < n; ++a)
        for_each_near(scaled[a], value, tolerance, [&](const Scaled& s) {
            found.push_back({{{static_cast<int>(a), s.coef}}, std::fabs(s.value - value)});
        });

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (const auto& sa : scaled[a])
                for_each_near(scaled[b], value - sa.value, tolerance, [&](const Scaled& sb) {
                    found.push_back({{{static_cast<int>(a), sa.coef}, {static_cast<int>(b), sb.coef}},
                                     std::fabs(sa.value + sb.value - value)});
                });

    std::vector<std::vector<double>> plain;
    for (const auto& list : scaled) {
        plain.emplace_back();
        for (const auto& s : list)
            plain.back().push_back(s.value);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const double* va = plain[a].data();
            const double* vb = plain[b].data();
            const std::size_t na = plain[a].size();
            const std::size_t nb = plain[b].size();
            for (std::size_t c = b + 1; c < n; ++c)
                for (const auto& sc : scaled[c]) {
                    // two-pointer sweep for va[i] + vb[j] near target
                    const double target = value - sc.value;
                    std::size_t j = nb;
                    for (std::size_t i = 0; i < na; ++i) {
                        const double hi = target + tolerance - va[i];
                        while (j > 0 && vb[j - 1] > hi)
                            --j;
                        const double lo = target - tolerance - va[i];
                        for (std::size_t k = j; k > 0 && vb[k - 1] >= lo; --k) {
                            const double total = va[i] + vb[k - 1] + sc.value;
                            found.push_back({{{static_cast<int>(a), scaled[a][i].coef},
                                              {static_cast<int>(b), scaled[b][k - 1].coef},
                                              {static_cast<int>(c), sc.coef}},
                                             std::fabs(total - value)});
                        }
                    }
                }
        }

    std::stable_sort(found.begin(), found.end(), [](const Candidate& x, const Candidate& y) {
        return std::make_tuple(x.parts.size(), x.size(), x.deviation) <
               std::make_tuple(y.parts.size(), y.size(), y.deviation);
    });
    std::vector<ClosedFormConstant> out;
    for (const auto& cand : found) {
        std::vector<Term> terms;
        for (auto [a, c] : cand.parts) {
            const auto& g = grid[static_cast<std::size_t>(c)];
            terms.push_back({make_rational(g.num, g.den), atoms[static_cast<std::size_t>(a)]});
        }
        out.emplace_back(terms);
    }
    return out;
}

}  // namespace cyclosum
