#pragma once

#include <optional>
#include <vector>

#include "mmr/lp.hpp"
#include "mmr/model.hpp"

namespace mmr {

// Optional free continuous column appended after the binary block. Rows may
// reference it by column index num_binaries(); its bounds come solely from
// the rows it appears in.
struct ThetaSpec {
    double objective_coefficient = -1.0;
};

// Minimization MILP over binary columns, optionally extended by one free
// continuous column ("theta"). All rows have sense LE.
struct MilpProblem {
    std::vector<double> objective;  // binary columns only
    std::optional<ThetaSpec> theta;
    std::vector<LinearConstraint> rows;
    double time_limit_sec = kInf;
    std::optional<double> cutoff;  // prune nodes with bound >= cutoff - 1e-9

    int num_binaries() const { return static_cast<int>(objective.size()); }
};

enum class MilpStatus { Optimal, Infeasible, TimeLimit };

struct MilpResult {
    MilpStatus status = MilpStatus::Infeasible;
    std::optional<BinarySolution> x;  // best found; absent when Infeasible
    std::optional<double> theta;
    double objective = kInf;
    long nodes = 0;
    double dual_bound = -kInf;
};

// Depth-first branch and bound with LP relaxation bounds. The search order
// is fixed: branch on the lowest-index unfixed variable whose LP value is
// fractional by more than 1e-6 (else the lowest-index unfixed variable),
// 0-branch first, incumbent replaced only on improvement beyond 1e-9. This
// makes the returned optimum reproducible across runs, including which of
// several optimal solutions is reported. The wall clock is checked every 64
// nodes. A supplied cutoff turns "no solution better than the cutoff" into
// status Infeasible.
MilpResult solve_milp(const MilpProblem& p);

}  // namespace mmr
