#pragma once

#include <utility>
#include <vector>

#include "mmr/model.hpp"

namespace mmr {

// Exhaustive-enumeration oracle. Intentionally naive and independent of the
// LP/MILP machinery; used to cross-check the solvers on small instances.
// All entry points reject n > 25.

// Every feasible assignment in lexicographic order (x read as a big-endian
// bit string).
std::vector<BinarySolution> enumerate_feasible(const IntervalIlpInstance& instance);

// Z(x) via the worst-case scenario and a full scan of the feasible set.
double exact_robustness(const IntervalIlpInstance& instance, const BinarySolution& x);

// The lexicographically smallest minimizer of Z together with its value.
std::pair<BinarySolution, double> exact_minmax_regret(const IntervalIlpInstance& instance);

}  // namespace mmr
