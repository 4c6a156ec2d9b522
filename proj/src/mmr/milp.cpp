#include "mmr/milp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace mmr {

namespace {

constexpr double kIntTol = 1e-6;
constexpr double kImproveTol = 1e-9;

struct Node {
    std::vector<std::int8_t> fixed;  // -1 unfixed, else 0/1
    double bound = -kInf;            // best known lower bound for the subtree
};

}  // namespace

MilpResult solve_milp(const MilpProblem& p) {
    const int nb = p.num_binaries();
    if (nb < 1) throw Error("milp: problem has no binary columns");
    const int ncols = nb + (p.theta ? 1 : 0);
    for (const LinearConstraint& row : p.rows) {
        if (row.sense != Sense::LE) throw Error("milp: non-LE row");
        for (const auto& [idx, coeff] : row.terms) {
            (void)coeff;
            if (idx < 0 || idx >= ncols) throw Error("milp: row references unknown column");
        }
    }

    const auto start = std::chrono::steady_clock::now();
    const auto elapsed_sec = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    // One LP skeleton per solve; nodes only rewrite the column bounds.
    LpProblem relax;
    relax.objective = p.objective;
    relax.bounds.assign(nb, ColumnBounds{0.0, 1.0});
    if (p.theta) {
        relax.objective.push_back(p.theta->objective_coefficient);
        relax.bounds.push_back(ColumnBounds{-kInf, kInf});
    }
    relax.rows = p.rows;

    double incumbent_obj = kInf;
    std::optional<BinarySolution> incumbent;
    std::optional<double> incumbent_theta;

    const double cutoff_threshold = p.cutoff ? *p.cutoff - kImproveTol : kInf;
    const auto prune_threshold = [&] {
        return std::min(incumbent_obj - kImproveTol, cutoff_threshold);
    };

    // Fully fixed assignment: closed-form theta from its bounding rows.
    const auto eval_leaf = [&](const Node& node) {
        double theta_lo = -kInf;
        double theta_hi = kInf;
        for (const LinearConstraint& row : p.rows) {
            double acc = 0.0;
            double tcoef = 0.0;
            for (const auto& [idx, coeff] : row.terms) {
                if (idx == nb) {
                    tcoef = coeff;
                } else if (node.fixed[idx] > 0) {
                    acc += coeff;
                }
            }
            if (tcoef == 0.0) {
                if (acc > row.rhs + kFeasTol) return;
            } else if (tcoef > 0.0) {
                theta_hi = std::min(theta_hi, (row.rhs - acc) / tcoef);
            } else {
                theta_lo = std::max(theta_lo, (row.rhs - acc) / tcoef);
            }
        }
        double obj = 0.0;
        for (int j = 0; j < nb; ++j) {
            if (node.fixed[j] > 0) obj += p.objective[j];
        }
        std::optional<double> theta_val;
        if (p.theta) {
            if (theta_hi < theta_lo - kFeasTol) return;
            const double c = p.theta->objective_coefficient;
            double t;
            if (c < 0.0) {
                if (!std::isfinite(theta_hi)) {
                    throw UnboundedModel("milp: theta has no upper bounding row");
                }
                t = theta_hi;
            } else if (c > 0.0) {
                if (!std::isfinite(theta_lo)) {
                    throw UnboundedModel("milp: theta has no lower bounding row");
                }
                t = theta_lo;
            } else {
                t = std::min(std::max(0.0, theta_lo), theta_hi);
            }
            theta_val = t;
            obj += c * t;
        }
        if (obj < incumbent_obj - kImproveTol) {
            incumbent_obj = obj;
            BinarySolution sol;
            sol.x.resize(nb);
            for (int j = 0; j < nb; ++j) sol.x[j] = node.fixed[j] > 0 ? 1 : 0;
            incumbent = std::move(sol);
            incumbent_theta = theta_val;
        }
    };

    std::vector<Node> stack;
    stack.push_back(Node{std::vector<std::int8_t>(nb, -1), -kInf});

    bool timed_out = false;
    long nodes = 0;

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        ++nodes;
        if ((nodes & 63) == 0 && elapsed_sec() >= p.time_limit_sec) {
            stack.push_back(std::move(node));  // keep it open for the dual bound
            timed_out = true;
            break;
        }
        if (node.bound >= prune_threshold()) continue;

        int branch_var = -1;
        for (int j = 0; j < nb; ++j) {
            if (node.fixed[j] < 0) {
                branch_var = j;
                break;
            }
        }
        if (branch_var < 0) {
            eval_leaf(node);
            continue;
        }

        for (int j = 0; j < nb; ++j) {
            const double v = node.fixed[j] < 0 ? -1.0 : static_cast<double>(node.fixed[j]);
            relax.bounds[j] = node.fixed[j] < 0 ? ColumnBounds{0.0, 1.0} : ColumnBounds{v, v};
        }
        const LpSolution lp = solve_lp(relax);
        if (lp.status == LpStatus::Infeasible) continue;
        if (lp.status == LpStatus::Unbounded) {
            throw UnboundedModel("milp: LP relaxation unbounded");
        }
        if (lp.status == LpStatus::Optimal) {
            node.bound = std::max(node.bound, lp.objective);
            if (node.bound >= prune_threshold()) continue;
            for (int j = 0; j < nb; ++j) {
                if (node.fixed[j] >= 0) continue;
                const double v = lp.x[j];
                const double frac = std::min(v - std::floor(v), std::ceil(v) - v);
                if (frac > kIntTol) {
                    branch_var = j;
                    break;
                }
            }
        }
        // IterationLimit: keep the inherited bound and branch without pruning.

        Node one = node;
        one.fixed[branch_var] = 1;
        Node zero = std::move(node);
        zero.fixed[branch_var] = 0;
        stack.push_back(std::move(one));
        stack.push_back(std::move(zero));  // explored first
    }

    MilpResult res;
    res.nodes = nodes;
    if (timed_out) {
        res.status = MilpStatus::TimeLimit;
        double dual = incumbent_obj;
        for (const Node& open : stack) dual = std::min(dual, open.bound);
        res.dual_bound = dual;
        if (incumbent) {
            res.x = incumbent;
            res.theta = incumbent_theta;
            res.objective = incumbent_obj;
        }
    } else if (incumbent) {
        res.status = MilpStatus::Optimal;
        res.x = incumbent;
        res.theta = incumbent_theta;
        res.objective = incumbent_obj;
        res.dual_bound = incumbent_obj;
    } else {
        res.status = MilpStatus::Infeasible;
        res.objective = kInf;
        res.dual_bound = kInf;
    }
    return res;
}

}  // namespace mmr
