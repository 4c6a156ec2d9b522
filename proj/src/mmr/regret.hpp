#pragma once

#include "mmr/milp.hpp"
#include "mmr/model.hpp"

namespace mmr {

enum class RegretStatus { Exact, TimeLimit };

// Regret audit of one solution: the scenario that maximizes its regret, the
// two costs under that scenario, the adversary solution, and z = f_x - f_star.
struct RegretEvaluation {
    BinarySolution x;
    Scenario worst;
    double f_x = 0.0;
    double f_star = 0.0;
    BinarySolution adversary;
    double z = 0.0;
    RegretStatus status = RegretStatus::Exact;
};

// The regret of x is maximized by the scenario that charges u_i wherever
// x_i = 1 and l_i elsewhere.
Scenario worst_case_scenario(const IntervalIlpInstance& instance, const BinarySolution& x);

// Componentwise interpolation l + lambda*(u - l); lambda in [0, 1].
// lambda = 0.5 is the mean scenario, 1.0 the upper, 0.0 the lower.
Scenario scenario_at(const IntervalIlpInstance& instance, double lambda);

// Computes Z(x) by solving the adversary ILP in the worst-case scenario.
// If the adversary solve hits the time limit, f_star falls back to its dual
// bound, so z is an overestimate of the true regret (never an underestimate)
// and status reports TimeLimit. Infeasible x is rejected loudly.
RegretEvaluation robustness_cost(const IntervalIlpInstance& instance, const BinarySolution& x,
                                 double time_limit_sec = kInf);

}  // namespace mmr
