#pragma once

#include "mmr/milp.hpp"
#include "mmr/model.hpp"
#include "mmr/report.hpp"

namespace mmr {

// Ordered pool of adversary solutions; each member y contributes the master
// row  theta <= sum_i (l_i + (u_i - l_i) x_i) y_i.
struct CutPool {
    std::vector<BinarySolution> cuts;

    bool contains(const BinarySolution& y) const;
    int size() const { return static_cast<int>(cuts.size()); }
};

// Master problem over the current pool: minimize sum_i u_i x_i - theta
// subject to the instance constraints and one row per pooled cut.
// Throws EmptyPool (an empty pool leaves theta unbounded).
MilpProblem build_master(const IntervalIlpInstance& instance, const CutPool& pool);

// Exact decomposition: alternates the relaxed master with a regret
// evaluation of its solution until the bounds meet within epsilon. The pool
// is seeded with the optimal solution of the mean scenario, which also
// serves as the feasibility check.
SolveReport solve_bda(const IntervalIlpInstance& instance, double epsilon = 1e-6,
                      double time_limit_sec = kInf);

}  // namespace mmr
