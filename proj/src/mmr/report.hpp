#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmr/model.hpp"

namespace mmr {

enum class SolveStatus { Optimal, Feasible, TimeLimit, Infeasible };

const char* to_string(SolveStatus s);

struct IterationBounds {
    double lower = 0.0;
    double upper = kInf;
};

// Common output record of the exact method, the heuristics, and the
// enumeration oracle when driven through the benchmark harness.
struct SolveReport {
    std::string algorithm;
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<BinarySolution> incumbent;
    double z = kInf;  // robustness cost of the incumbent (upper bound)
    std::optional<double> lower_bound;
    int iterations = 0;
    int cuts = 0;             // final pool size (decomposition only)
    int scenario_solves = 0;  // deterministic ILPs solved (heuristics only)
    std::vector<IterationBounds> history;  // per-iteration bounds (decomposition only)
    double wall_ms = 0.0;
};

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Feasible: return "feasible";
        case SolveStatus::TimeLimit: return "time_limit";
        case SolveStatus::Infeasible: return "infeasible";
    }
    return "unknown";
}

}  // namespace mmr
