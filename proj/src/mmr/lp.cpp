#include "mmr/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace mmr {

namespace {

constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-10;
constexpr double kDegenTol = 1e-9;

enum class VarState : std::uint8_t { Basic, AtLower, AtUpper, FreeZero };

class Simplex {
public:
    explicit Simplex(const LpProblem& p)
        : n_(static_cast<int>(p.objective.size())), m_(static_cast<int>(p.rows.size())) {
        if (static_cast<int>(p.bounds.size()) != n_) {
            throw Error("lp: objective/bounds size mismatch");
        }
        for (const ColumnBounds& b : p.bounds) {
            if (b.lo > b.hi) throw Error("lp: column with lo > hi");
        }
        for (const LinearConstraint& row : p.rows) {
            if (row.sense != Sense::LE) throw Error("lp: non-LE row");
            for (const auto& [idx, c] : row.terms) {
                (void)c;
                if (idx < 0 || idx >= n_) throw Error("lp: row references unknown column");
            }
        }

        ncap_ = n_ + 2 * m_;  // structural + slacks + room for artificials
        lo_.assign(ncap_, 0.0);
        hi_.assign(ncap_, kInf);
        xval_.assign(ncap_, 0.0);
        state_.assign(ncap_, VarState::AtLower);
        tab_.assign(static_cast<std::size_t>(m_) * ncap_, 0.0);
        basis_.assign(m_, -1);
        rhs_.assign(m_, 0.0);

        for (int j = 0; j < n_; ++j) {
            lo_[j] = p.bounds[j].lo;
            hi_[j] = p.bounds[j].hi;
        }
        for (int i = 0; i < m_; ++i) {
            for (const auto& [idx, coeff] : p.rows[i].terms) at(i, idx) += coeff;
            at(i, n_ + i) = 1.0;  // slack
            rhs_[i] = p.rows[i].rhs;
        }

        // Nonbasic starting point: finite lower bound if any, else finite
        // upper, else free at zero.
        for (int j = 0; j < n_; ++j) {
            if (std::isfinite(lo_[j])) {
                state_[j] = VarState::AtLower;
                xval_[j] = lo_[j];
            } else if (std::isfinite(hi_[j])) {
                state_[j] = VarState::AtUpper;
                xval_[j] = hi_[j];
            } else {
                state_[j] = VarState::FreeZero;
                xval_[j] = 0.0;
            }
        }

        nart_ = 0;
        for (int i = 0; i < m_; ++i) {
            double act = 0.0;
            for (int j = 0; j < n_; ++j) act += at(i, j) * xval_[j];
            const double slack = rhs_[i] - act;
            if (slack >= 0.0) {
                basis_[i] = n_ + i;
                state_[n_ + i] = VarState::Basic;
                xval_[n_ + i] = slack;
            } else {
                const int a = n_ + m_ + nart_++;
                at(i, a) = -1.0;
                // Negate the row so the basis column carries +1 and the
                // tableau stays B^-1 E.
                for (int j = 0; j <= a; ++j) at(i, j) = -at(i, j);
                basis_[i] = a;
                state_[a] = VarState::Basic;
                xval_[a] = -slack;
                xval_[n_ + i] = 0.0;  // slack stays nonbasic at its lower bound
            }
        }
        ntot_ = n_ + m_ + nart_;

        max_iterations_ = 100 * (m_ + n_ + 1);
        bland_threshold_ = 2 * (m_ + n_);
    }

    LpSolution run(const LpProblem& p) {
        LpSolution sol;

        if (nart_ > 0) {
            std::vector<double> phase1(ntot_, 0.0);
            for (int a = n_ + m_; a < ntot_; ++a) phase1[a] = 1.0;
            const LpStatus st = iterate(phase1);
            if (st == LpStatus::IterationLimit) {
                sol.status = st;
                sol.iterations = iterations_;
                return sol;
            }
            double infeas = 0.0;
            for (int a = n_ + m_; a < ntot_; ++a) infeas += xval_[a];
            if (infeas > kLpTol) {
                sol.status = LpStatus::Infeasible;
                sol.iterations = iterations_;
                return sol;
            }
            // Pin artificials at zero for phase 2.
            for (int a = n_ + m_; a < ntot_; ++a) {
                lo_[a] = hi_[a] = 0.0;
                if (state_[a] != VarState::Basic) {
                    state_[a] = VarState::AtLower;
                    xval_[a] = 0.0;
                }
            }
        }

        std::vector<double> costs(ntot_, 0.0);
        for (int j = 0; j < n_; ++j) costs[j] = p.objective[j];
        const LpStatus st = iterate(costs);
        sol.status = st;
        sol.iterations = iterations_;
        if (st == LpStatus::Optimal) {
            sol.x.assign(xval_.begin(), xval_.begin() + n_);
            double obj = 0.0;
            for (int j = 0; j < n_; ++j) obj += p.objective[j] * sol.x[j];
            sol.objective = obj;
        }
        return sol;
    }

private:
    double& at(int i, int j) { return tab_[static_cast<std::size_t>(i) * ncap_ + j]; }
    double at(int i, int j) const { return tab_[static_cast<std::size_t>(i) * ncap_ + j]; }

    // Reduced costs for the current basis: d_j = c_j - c_B^T B^-1 E_j.
    void compute_reduced_costs(const std::vector<double>& costs, std::vector<double>& d) const {
        d.assign(ntot_, 0.0);
        for (int j = 0; j < ntot_; ++j) d[j] = costs[j];
        for (int i = 0; i < m_; ++i) {
            const double cb = costs[basis_[i]];
            if (cb == 0.0) continue;
            for (int j = 0; j < ntot_; ++j) d[j] -= cb * at(i, j);
        }
    }

    // One simplex phase with the given cost vector; returns Optimal when no
    // improving nonbasic column remains.
    LpStatus iterate(const std::vector<double>& costs) {
        std::vector<double> d;
        compute_reduced_costs(costs, d);
        int degenerate_streak = 0;
        bool bland = false;

        while (true) {
            if (iterations_ >= max_iterations_) return LpStatus::IterationLimit;

            int enter = -1;
            int dir = 0;
            double best_score = kDualTol;
            for (int j = 0; j < ntot_; ++j) {
                if (state_[j] == VarState::Basic || lo_[j] == hi_[j]) continue;
                int cand_dir = 0;
                if (state_[j] == VarState::AtLower && d[j] < -kDualTol) {
                    cand_dir = +1;
                } else if (state_[j] == VarState::AtUpper && d[j] > kDualTol) {
                    cand_dir = -1;
                } else if (state_[j] == VarState::FreeZero && std::abs(d[j]) > kDualTol) {
                    cand_dir = d[j] < 0.0 ? +1 : -1;
                }
                if (cand_dir == 0) continue;
                if (bland) {
                    enter = j;
                    dir = cand_dir;
                    break;
                }
                const double score = std::abs(d[j]);
                if (score > best_score) {
                    best_score = score;
                    enter = j;
                    dir = cand_dir;
                }
            }
            if (enter < 0) return LpStatus::Optimal;

            // Ratio test: how far can the entering variable move.
            double t_own = kInf;
            if (std::isfinite(lo_[enter]) && std::isfinite(hi_[enter])) {
                t_own = hi_[enter] - lo_[enter];
            }
            double t_row = kInf;
            int leave_row = -1;
            int leave_dir = 0;  // bound the leaving variable lands on: -1 lower, +1 upper
            bool tiny_blocker = false;
            const auto consider = [&](double t, int i, int bound_dir) {
                // Ties keep the first row scanned; under Bland's rule the
                // lowest basic variable index wins instead.
                const bool better =
                    t < t_row ||
                    (bland && t == t_row && leave_row >= 0 && basis_[i] < basis_[leave_row]);
                if (better) {
                    t_row = t;
                    leave_row = i;
                    leave_dir = bound_dir;
                }
            };
            for (int i = 0; i < m_; ++i) {
                const double alpha = dir * at(i, enter);
                const int b = basis_[i];
                if (alpha > kPivotTol) {
                    if (!std::isfinite(lo_[b])) continue;
                    consider(std::max(0.0, (xval_[b] - lo_[b]) / alpha), i, -1);
                } else if (alpha < -kPivotTol) {
                    if (!std::isfinite(hi_[b])) continue;
                    consider(std::max(0.0, (hi_[b] - xval_[b]) / (-alpha)), i, +1);
                } else if (alpha != 0.0) {
                    // A pivot exists but is numerically unusable; remember it in
                    // case nothing else blocks this column.
                    const bool blocks = (alpha > 0.0 && std::isfinite(lo_[b])) ||
                                        (alpha < 0.0 && std::isfinite(hi_[b]));
                    if (blocks) tiny_blocker = true;
                }
            }

            ++iterations_;

            if (t_own == kInf && t_row == kInf) {
                if (tiny_blocker) {
                    throw NumericalBreakdown("simplex: blocking pivots below 1e-10");
                }
                return LpStatus::Unbounded;
            }

            if (t_own <= t_row) {
                // Bound flip: nonbasic variable jumps to its other bound.
                apply_step(enter, dir, t_own);
                state_[enter] = (dir > 0) ? VarState::AtUpper : VarState::AtLower;
                xval_[enter] = (dir > 0) ? hi_[enter] : lo_[enter];
                if (t_own <= kDegenTol) ++degenerate_streak; else degenerate_streak = 0;
            } else {
                apply_step(enter, dir, t_row);
                const int leaving = basis_[leave_row];
                xval_[leaving] = (leave_dir > 0) ? hi_[leaving] : lo_[leaving];
                state_[leaving] = (leave_dir > 0) ? VarState::AtUpper : VarState::AtLower;
                pivot(leave_row, enter, d);
                if (t_row <= kDegenTol) ++degenerate_streak; else degenerate_streak = 0;
            }
            if (!bland && degenerate_streak > bland_threshold_) bland = true;
        }
    }

    // Move the entering variable by step in the given direction and update
    // the values of all basic variables.
    void apply_step(int enter, int dir, double step) {
        if (step == 0.0) return;
        const double delta = dir * step;
        xval_[enter] += delta;
        for (int i = 0; i < m_; ++i) {
            const double a = at(i, enter);
            if (a != 0.0) xval_[basis_[i]] -= a * delta;
        }
    }

    // Gauss-Jordan pivot on (row, col); updates the reduced-cost vector in place.
    void pivot(int row, int col, std::vector<double>& d) {
        const double piv = at(row, col);
        const double inv = 1.0 / piv;
        for (int j = 0; j < ntot_; ++j) at(row, j) *= inv;
        at(row, col) = 1.0;
        for (int i = 0; i < m_; ++i) {
            if (i == row) continue;
            const double f = at(i, col);
            if (f == 0.0) continue;
            for (int j = 0; j < ntot_; ++j) at(i, j) -= f * at(row, j);
            at(i, col) = 0.0;
        }
        const double dcol = d[col];
        if (dcol != 0.0) {
            for (int j = 0; j < ntot_; ++j) d[j] -= dcol * at(row, j);
        }
        d[col] = 0.0;
        basis_[row] = col;
        state_[col] = VarState::Basic;
    }

    int n_, m_;
    int ncap_ = 0;
    int ntot_ = 0;
    int nart_ = 0;
    int iterations_ = 0;
    int max_iterations_ = 0;
    int bland_threshold_ = 0;
    std::vector<double> tab_;
    std::vector<double> lo_, hi_, xval_, rhs_;
    std::vector<VarState> state_;
    std::vector<int> basis_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
    Simplex s(p);
    return s.run(p);
}

}  // namespace mmr
