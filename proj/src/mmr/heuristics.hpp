#pragma once

#include "mmr/model.hpp"
#include "mmr/report.hpp"

namespace mmr {

// Scenario sweep parameters: start alpha, end beta, step gamma, all in [0, 1].
struct SbaParams {
    double alpha = 0.5;
    double beta = 1.0;
    double gamma = 0.05;
};

// The sweep grid alpha, alpha+gamma, ... up to beta (with 1e-9 slack for
// accumulated rounding), each value clamped to at most 1.
std::vector<double> target_lambdas(const SbaParams& p);

// Mean + upper scenario heuristic: solves the deterministic ILP at
// lambda = 0.5 and lambda = 1.0, evaluates the robustness cost of both
// candidates, and keeps the smaller (ties go to the mean candidate).
SolveReport solve_amu(const IntervalIlpInstance& instance, double time_limit_sec = kInf);

// Scenario sweep heuristic: same procedure over the full lambda grid.
// Candidates repeated across lambdas are evaluated once. Ties go to the
// smallest lambda, so the default grid can never lose to solve_amu.
SolveReport solve_sba(const IntervalIlpInstance& instance, const SbaParams& p = {},
                      double time_limit_sec = kInf);

}  // namespace mmr
