#include "mmr/regret.hpp"

#include <algorithm>
#include <utility>

namespace mmr {

Scenario worst_case_scenario(const IntervalIlpInstance& instance, const BinarySolution& x) {
    const int n = instance.num_vars();
    if (x.size() != n) {
        throw DimensionMismatch("worst_case_scenario: solution/instance dimensions differ");
    }
    std::vector<double> costs(n);
    for (int i = 0; i < n; ++i) {
        costs[i] = x.x[i] ? instance.upper[i] : instance.lower[i];
    }
    return Scenario{std::move(costs)};
}

Scenario scenario_at(const IntervalIlpInstance& instance, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw LambdaOutOfRange("lambda = " + std::to_string(lambda) + " outside [0, 1]");
    }
    const int n = instance.num_vars();
    std::vector<double> costs(n);
    for (int i = 0; i < n; ++i) {
        const double l = instance.lower[i];
        const double u = instance.upper[i];
        costs[i] = std::clamp(l + lambda * (u - l), l, u);
    }
    return Scenario{std::move(costs)};
}

RegretEvaluation robustness_cost(const IntervalIlpInstance& instance, const BinarySolution& x,
                                 double time_limit_sec) {
    if (!is_feasible(instance, x)) {
        throw InfeasibleSolution("robustness_cost: solution violates the constraints");
    }

    RegretEvaluation eval;
    eval.x = x;
    eval.worst = worst_case_scenario(instance, x);
    eval.f_x = cost(x, eval.worst);

    MilpProblem adversary;
    adversary.objective = eval.worst.costs;
    adversary.rows = instance.constraints;
    adversary.time_limit_sec = time_limit_sec;
    const MilpResult res = solve_milp(adversary);

    switch (res.status) {
        case MilpStatus::Optimal:
            eval.f_star = res.objective;
            eval.adversary = *res.x;
            eval.status = RegretStatus::Exact;
            break;
        case MilpStatus::TimeLimit:
            // Dual bound <= true optimum, so z overestimates the regret.
            eval.f_star = res.dual_bound;
            eval.adversary = res.x ? *res.x : x;
            eval.status = RegretStatus::TimeLimit;
            break;
        case MilpStatus::Infeasible:
            // x itself is feasible, so the adversary ILP cannot be empty.
            throw Error("robustness_cost: adversary ILP reported infeasible");
    }
    eval.z = eval.f_x - eval.f_star;
    return eval;
}

}  // namespace mmr
