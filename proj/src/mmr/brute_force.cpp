#include "mmr/brute_force.hpp"

#include <cstdint>

namespace mmr {

namespace {

constexpr int kMaxVars = 25;

void guard_size(const IntervalIlpInstance& instance) {
    if (instance.num_vars() > kMaxVars) {
        throw TooLarge("enumeration limited to " + std::to_string(kMaxVars) + " variables");
    }
}

BinarySolution from_mask(std::uint32_t mask, int n) {
    BinarySolution sol;
    sol.x.resize(n);
    for (int i = 0; i < n; ++i) {
        sol.x[i] = (mask >> (n - 1 - i)) & 1u;
    }
    return sol;
}

// min over the feasible set of cost(y, scenario), scanning every y.
double min_cost_over(const std::vector<BinarySolution>& feasible,
                     const std::vector<double>& costs) {
    double best = kInf;
    for (const BinarySolution& y : feasible) {
        double c = 0.0;
        for (std::size_t i = 0; i < costs.size(); ++i) {
            if (y.x[i]) c += costs[i];
        }
        if (c < best) best = c;
    }
    return best;
}

std::vector<double> worst_costs(const IntervalIlpInstance& instance, const BinarySolution& x) {
    std::vector<double> costs(instance.num_vars());
    for (int i = 0; i < instance.num_vars(); ++i) {
        costs[i] = x.x[i] ? instance.upper[i] : instance.lower[i];
    }
    return costs;
}

}  // namespace

std::vector<BinarySolution> enumerate_feasible(const IntervalIlpInstance& instance) {
    guard_size(instance);
    const int n = instance.num_vars();
    std::vector<BinarySolution> out;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        BinarySolution sol = from_mask(static_cast<std::uint32_t>(mask), n);
        if (is_feasible(instance, sol)) out.push_back(std::move(sol));
    }
    return out;
}

double exact_robustness(const IntervalIlpInstance& instance, const BinarySolution& x) {
    guard_size(instance);
    if (!is_feasible(instance, x)) {
        throw InfeasibleSolution("exact_robustness: solution violates the constraints");
    }
    const std::vector<double> costs = worst_costs(instance, x);
    double f_x = 0.0;
    for (int i = 0; i < instance.num_vars(); ++i) {
        if (x.x[i]) f_x += costs[i];
    }
    const std::vector<BinarySolution> feasible = enumerate_feasible(instance);
    return f_x - min_cost_over(feasible, costs);
}

std::pair<BinarySolution, double> exact_minmax_regret(const IntervalIlpInstance& instance) {
    guard_size(instance);
    const std::vector<BinarySolution> feasible = enumerate_feasible(instance);
    if (feasible.empty()) {
        throw InfeasibleInstance("exact_minmax_regret: instance has no feasible solution");
    }

    // Masks + precomputed lower-bound costs keep the quadratic scan cheap:
    // F(y, S^x) = dot(y, l) + sum over bits of (x & y) of the interval width.
    const int n = instance.num_vars();
    std::vector<std::uint32_t> masks(feasible.size());
    std::vector<double> base(feasible.size());
    for (std::size_t k = 0; k < feasible.size(); ++k) {
        std::uint32_t mask = 0;
        double dot = 0.0;
        for (int i = 0; i < n; ++i) {
            if (feasible[k].x[i]) {
                mask |= std::uint32_t{1} << i;
                dot += instance.lower[i];
            }
        }
        masks[k] = mask;
        base[k] = dot;
    }
    std::vector<double> width(n);
    for (int i = 0; i < n; ++i) width[i] = instance.upper[i] - instance.lower[i];

    std::size_t best_idx = 0;
    double best_z = kInf;
    for (std::size_t k = 0; k < feasible.size(); ++k) {
        double f_x = base[k];
        for (int i = 0; i < n; ++i) {
            if (masks[k] & (std::uint32_t{1} << i)) f_x += width[i];
        }
        double f_star = kInf;
        for (std::size_t j = 0; j < feasible.size(); ++j) {
            double c = base[j];
            std::uint32_t common = masks[k] & masks[j];
            while (common) {
                const int bit = __builtin_ctz(common);
                c += width[bit];
                common &= common - 1;
            }
            if (c < f_star) f_star = c;
        }
        const double z = f_x - f_star;
        if (z < best_z) {
            best_z = z;
            best_idx = k;
        }
    }
    return {feasible[best_idx], best_z};
}

}  // namespace mmr
