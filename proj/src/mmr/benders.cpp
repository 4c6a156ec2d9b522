#include "mmr/benders.hpp"

#include <algorithm>
#include <chrono>

#include "mmr/regret.hpp"

namespace mmr {

bool CutPool::contains(const BinarySolution& y) const {
    return std::find(cuts.begin(), cuts.end(), y) != cuts.end();
}

MilpProblem build_master(const IntervalIlpInstance& instance, const CutPool& pool) {
    if (pool.cuts.empty()) {
        throw EmptyPool("build_master: empty cut pool leaves theta unbounded");
    }
    const int n = instance.num_vars();

    MilpProblem master;
    master.objective = instance.upper;
    master.theta = ThetaSpec{-1.0};
    master.rows = instance.constraints;

    for (const BinarySolution& y : pool.cuts) {
        // theta - sum_i (u_i - l_i) y_i x_i <= sum_i l_i y_i
        LinearConstraint row;
        row.terms.emplace_back(n, 1.0);
        double rhs = 0.0;
        for (int i = 0; i < n; ++i) {
            if (!y.x[i]) continue;
            rhs += instance.lower[i];
            const double width = instance.upper[i] - instance.lower[i];
            if (width != 0.0) row.terms.emplace_back(i, -width);
        }
        row.rhs = rhs;
        master.rows.push_back(std::move(row));
    }
    return master;
}

SolveReport solve_bda(const IntervalIlpInstance& instance, double epsilon,
                      double time_limit_sec) {
    const auto start = std::chrono::steady_clock::now();
    const auto remaining = [&] {
        const double used =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::max(0.0, time_limit_sec - used);
    };
    const auto wall_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    };

    SolveReport report;
    report.algorithm = "bda";

    // Seed: optimal solution of the mean scenario. Doubles as the
    // feasibility check for the instance.
    MilpProblem seed;
    seed.objective = scenario_at(instance, 0.5).costs;
    seed.rows = instance.constraints;
    seed.time_limit_sec = remaining();
    const MilpResult seed_res = solve_milp(seed);
    if (seed_res.status == MilpStatus::Infeasible) {
        report.status = SolveStatus::Infeasible;
        report.wall_ms = wall_ms();
        return report;
    }
    if (!seed_res.x) {
        report.status = SolveStatus::TimeLimit;
        report.lower_bound = 0.0;
        report.wall_ms = wall_ms();
        return report;
    }

    const BinarySolution seed_x = *seed_res.x;
    RegretEvaluation seed_eval = robustness_cost(instance, seed_x, remaining());

    double lb = 0.0;  // regret is never negative
    double ub = seed_eval.z;
    BinarySolution incumbent = seed_x;
    CutPool pool;
    pool.cuts.push_back(seed_x);

    SolveStatus status = SolveStatus::TimeLimit;
    while (true) {
        if (remaining() <= 0.0) {
            status = SolveStatus::TimeLimit;
            break;
        }

        MilpProblem master = build_master(instance, pool);
        master.time_limit_sec = remaining();
        const MilpResult mres = solve_milp(master);
        if (mres.status == MilpStatus::TimeLimit) {
            // An unfinished master still yields a valid lower bound.
            if (mres.dual_bound > lb) lb = mres.dual_bound;
            status = SolveStatus::TimeLimit;
            break;
        }
        if (mres.status == MilpStatus::Infeasible) {
            throw Error("solve_bda: master reported infeasible on a feasible instance");
        }

        ++report.iterations;
        lb = std::max(lb, mres.objective);
        const BinarySolution master_x = *mres.x;

        const RegretEvaluation eval = robustness_cost(instance, master_x, remaining());
        if (eval.z < ub) {
            ub = eval.z;
            incumbent = master_x;
        }
        report.history.push_back(IterationBounds{lb, ub});

        if (pool.contains(eval.adversary)) {
            if (ub - lb <= epsilon) {
                status = SolveStatus::Optimal;
            } else if (eval.status == RegretStatus::TimeLimit || remaining() <= 0.0) {
                status = SolveStatus::TimeLimit;
            } else {
                throw StalledDecomposition(
                    "solve_bda: repeated adversary cut with gap above epsilon");
            }
            break;
        }
        pool.cuts.push_back(eval.adversary);

        if (ub - lb <= epsilon) {
            status = SolveStatus::Optimal;
            break;
        }
    }

    report.status = status;
    report.incumbent = incumbent;
    report.z = ub;
    report.lower_bound = lb;
    report.cuts = pool.size();
    report.wall_ms = wall_ms();
    return report;
}

}  // namespace mmr
