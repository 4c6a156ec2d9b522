#pragma once

#include <limits>
#include <vector>

#include "mmr/model.hpp"

namespace mmr {

// Tolerance for LP primal feasibility (bounds and rows).
inline constexpr double kLpTol = 1e-7;

struct ColumnBounds {
    double lo = -kInf;
    double hi = kInf;
};

// Minimization LP over bounded columns with LE rows only.
struct LpProblem {
    std::vector<double> objective;
    std::vector<ColumnBounds> bounds;
    std::vector<LinearConstraint> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;  // structural values, valid iff Optimal
    double objective = 0.0;
    int iterations = 0;
};

// Dense bounded-variable primal simplex. Phase 1 minimizes the sum of
// artificial infeasibilities; Bland's rule takes over after
// 2*(rows+cols) degenerate pivots; the total pivot count is capped at
// 100*(rows+cols+1). Deterministic: identical inputs give bit-identical
// results. Throws NumericalBreakdown when the only blocking pivots fall
// below 1e-10 in magnitude.
LpSolution solve_lp(const LpProblem& p);

}  // namespace mmr
