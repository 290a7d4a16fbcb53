#pragma once

#include "cyclosum/closed_form.hpp"

#include <vector>

namespace cyclosum {

/// Atoms the recognizer combines: 1, gamma, pi, pi/sqrt(2), pi/sqrt(3),
/// log 2, log 3, log 5, log(1+sqrt 2), log(1+sqrt 2)/sqrt 2,
/// log(2+sqrt 3)/sqrt 3, log(2+sqrt 5)/sqrt 5, pi cot(pi/5), pi cot(2pi/5).
const std::vector<Atom>& catalog_atoms();

/// All combinations of at most three catalog atoms with coefficients p/q
/// (1 <= |p|, q <= 24) whose value lies within `tolerance` of `value`.
/// Ordered by number of atoms, then coefficient size, then distance.
std::vector<ClosedFormConstant> match_catalog(double value, double tolerance);

}  // namespace cyclosum
