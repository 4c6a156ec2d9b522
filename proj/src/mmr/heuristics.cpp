#include "mmr/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "mmr/milp.hpp"
#include "mmr/regret.hpp"

namespace mmr {

namespace {

void validate_params(const SbaParams& p) {
    if (!(p.alpha >= 0.0 && p.alpha <= p.beta && p.beta <= 1.0)) {
        throw InvalidParams("sba: need 0 <= alpha <= beta <= 1");
    }
    if (!(p.gamma > 0.0)) {
        throw InvalidParams("sba: step gamma must be positive");
    }
}

// Shared sweep: one deterministic ILP per lambda, robustness cost per
// distinct candidate, minimum z wins with ties to the smallest lambda.
SolveReport scenario_sweep(const IntervalIlpInstance& instance,
                           const std::vector<double>& lambdas, const char* label,
                           double time_limit_sec) {
    const auto start = std::chrono::steady_clock::now();
    const auto remaining = [&] {
        const double used =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::max(0.0, time_limit_sec - used);
    };
    // Remaining budget split evenly over the scenarios still to solve, but
    // never below one second so every scenario gets a real attempt.
    const auto budget = [&](std::size_t idx) {
        const double rem = remaining();
        if (rem == kInf) return kInf;
        return std::max(rem / static_cast<double>(lambdas.size() - idx), 1.0);
    };

    SolveReport report;
    report.algorithm = label;

    std::map<std::vector<std::uint8_t>, RegretEvaluation> memo;
    bool have_best = false;
    RegretEvaluation best;

    for (std::size_t idx = 0; idx < lambdas.size(); ++idx) {
        MilpProblem scenario_ilp;
        scenario_ilp.objective = scenario_at(instance, lambdas[idx]).costs;
        scenario_ilp.rows = instance.constraints;
        scenario_ilp.time_limit_sec = budget(idx);
        const MilpResult res = solve_milp(scenario_ilp);
        ++report.scenario_solves;
        if (res.status == MilpStatus::Infeasible) {
            throw InfeasibleInstance(std::string(label) + ": instance has no feasible solution");
        }
        if (!res.x) continue;  // timed out before any incumbent

        const BinarySolution& candidate = *res.x;
        auto it = memo.find(candidate.x);
        if (it == memo.end()) {
            it = memo.emplace(candidate.x, robustness_cost(instance, candidate, budget(idx)))
                     .first;
        }
        const RegretEvaluation& eval = it->second;
        if (!have_best || eval.z < best.z) {
            best = eval;
            have_best = true;
        }
    }

    report.iterations = report.scenario_solves;
    if (have_best) {
        report.incumbent = best.x;
        report.z = best.z;
        report.status =
            best.status == RegretStatus::Exact ? SolveStatus::Feasible : SolveStatus::TimeLimit;
    } else {
        report.status = SolveStatus::TimeLimit;
    }
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

}  // namespace

std::vector<double> target_lambdas(const SbaParams& p) {
    validate_params(p);
    std::vector<double> lambdas;
    for (int step = 0;; ++step) {
        const double lambda = p.alpha + step * p.gamma;
        if (lambda > p.beta + 1e-9) break;
        lambdas.push_back(std::min(lambda, 1.0));
    }
    return lambdas;
}

SolveReport solve_amu(const IntervalIlpInstance& instance, double time_limit_sec) {
    return scenario_sweep(instance, {0.5, 1.0}, "amu", time_limit_sec);
}

SolveReport solve_sba(const IntervalIlpInstance& instance, const SbaParams& p,
                      double time_limit_sec) {
    return scenario_sweep(instance, target_lambdas(p), "sba", time_limit_sec);
}

}  // namespace mmr
