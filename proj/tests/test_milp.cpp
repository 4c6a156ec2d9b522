#include <cmath>
#include <optional>

#include "doctest.h"
#include "helpers.hpp"
#include "mmr/milp.hpp"

using namespace mmr;

namespace {

// Independent oracle: enumerate all binary assignments, resolve theta in
// closed form per assignment, and keep the best objective.
std::optional<double> enumerate_optimum(const MilpProblem& p) {
    const int n = p.num_binaries();
    std::optional<double> best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        double theta_lo = -kInf, theta_hi = kInf;
        bool ok = true;
        for (const LinearConstraint& row : p.rows) {
            double acc = 0.0, tcoef = 0.0;
            for (const auto& [idx, coeff] : row.terms) {
                if (idx == n) tcoef = coeff;
                else if (mask & (1u << idx)) acc += coeff;
            }
            if (tcoef == 0.0) {
                if (acc > row.rhs + 1e-9) { ok = false; break; }
            } else if (tcoef > 0.0) {
                theta_hi = std::min(theta_hi, (row.rhs - acc) / tcoef);
            } else {
                theta_lo = std::max(theta_lo, (row.rhs - acc) / tcoef);
            }
        }
        if (!ok) continue;
        double obj = 0.0;
        for (int j = 0; j < n; ++j) {
            if (mask & (1u << j)) obj += p.objective[j];
        }
        if (p.theta) {
            if (theta_hi < theta_lo - 1e-9) continue;
            REQUIRE(p.theta->objective_coefficient < 0.0);
            REQUIRE(std::isfinite(theta_hi));
            obj += p.theta->objective_coefficient * theta_hi;
        }
        if (!best || obj < *best) best = obj;
    }
    return best;
}

MilpProblem ex1_under(std::vector<double> costs) {
    MilpProblem p;
    p.objective = std::move(costs);
    p.rows = test::ex1().constraints;
    return p;
}

}  // namespace

TEST_CASE("covering instance under scenario (3,2)") {
    const MilpResult res = solve_milp(ex1_under({3.0, 2.0}));
    REQUIRE(res.status == MilpStatus::Optimal);
    CHECK(res.objective == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(*res.x == test::bits({0, 1}));
    CHECK(res.dual_bound == doctest::Approx(res.objective));
}

TEST_CASE("unconstrained negative objective takes the variable") {
    MilpProblem p;
    p.objective = {-1.0};
    const MilpResult res = solve_milp(p);
    REQUIRE(res.status == MilpStatus::Optimal);
    CHECK(res.objective == doctest::Approx(-1.0));
    CHECK(*res.x == test::bits({1}));
}

TEST_CASE("master shape: binary block plus one free theta column") {
    // min 3 x1 + 2 x2 - theta, covering row, theta <= 2.
    MilpProblem p = ex1_under({3.0, 2.0});
    p.theta = ThetaSpec{-1.0};
    LinearConstraint cut;
    cut.terms = {{2, 1.0}};
    cut.rhs = 2.0;
    p.rows.push_back(cut);

    const MilpResult res = solve_milp(p);
    REQUIRE(res.status == MilpStatus::Optimal);
    CHECK(res.objective == doctest::Approx(0.0));
    CHECK(*res.x == test::bits({0, 1}));
    CHECK(*res.theta == doctest::Approx(2.0));
}

TEST_CASE("ties are broken by the fixed search order") {
    // Both (1,0) and (0,1) cost 2 in the mean scenario; the 0-first
    // depth-first order must settle on (0,1).
    const MilpResult res = solve_milp(ex1_under({2.0, 2.0}));
    REQUIRE(res.status == MilpStatus::Optimal);
    CHECK(res.objective == doctest::Approx(2.0));
    CHECK(*res.x == test::bits({0, 1}));
}

TEST_CASE("infeasible instance is reported via status") {
    MilpProblem p = ex1_under({1.0, 1.0});
    LinearConstraint row;  // x1 + x2 <= 0 contradicts the covering row
    row.terms = {{0, 1.0}, {1, 1.0}};
    row.rhs = 0.0;
    p.rows.push_back(row);
    const MilpResult res = solve_milp(p);
    CHECK(res.status == MilpStatus::Infeasible);
    CHECK_FALSE(res.x.has_value());
}

TEST_CASE("matches full enumeration on random instances") {
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + (trial % 7);
        const IntervalIlpInstance inst = test::small_random(5000 + trial, n, 2 + (trial % 4));
        MilpProblem p;
        p.objective = inst.lower;
        p.rows = inst.constraints;
        const MilpResult res = solve_milp(p);
        const std::optional<double> oracle = enumerate_optimum(p);
        REQUIRE(oracle.has_value());
        REQUIRE(res.status == MilpStatus::Optimal);
        CHECK(res.objective == doctest::Approx(*oracle).epsilon(1e-6));
    }
}

TEST_CASE("master problems match enumeration too") {
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + (trial % 5);
        const IntervalIlpInstance inst = test::small_random(7000 + trial, n, 2);
        MilpProblem p;
        p.objective = inst.upper;
        p.theta = ThetaSpec{-1.0};
        p.rows = inst.constraints;
        // Two synthetic bounding rows: theta <= const and theta - x0 <= const.
        LinearConstraint a;
        a.terms = {{n, 1.0}};
        a.rhs = 10.0 + trial;
        LinearConstraint b;
        b.terms = {{n, 1.0}, {0, -5.0}};
        b.rhs = 8.0;
        p.rows.push_back(a);
        p.rows.push_back(b);

        const MilpResult res = solve_milp(p);
        const std::optional<double> oracle = enumerate_optimum(p);
        REQUIRE(res.status == MilpStatus::Optimal);
        REQUIRE(oracle.has_value());
        CHECK(res.objective == doctest::Approx(*oracle).epsilon(1e-6));
    }
}

TEST_CASE("determinism: identical runs, identical answers") {
    const IntervalIlpInstance inst = test::small_random(42, 9, 4);
    MilpProblem p;
    p.objective = inst.lower;
    p.rows = inst.constraints;
    const MilpResult a = solve_milp(p);
    const MilpResult b = solve_milp(p);
    CHECK(a.objective == b.objective);
    CHECK(a.nodes == b.nodes);
    CHECK(*a.x == *b.x);
}

TEST_CASE("cutoff prunes and reports accordingly") {
    MilpProblem p = ex1_under({3.0, 2.0});
    p.cutoff = 2.0;  // optimum is exactly 2: nothing strictly better exists
    CHECK(solve_milp(p).status == MilpStatus::Infeasible);

    p.cutoff = 2.5;  // optimum beats this cutoff
    const MilpResult res = solve_milp(p);
    REQUIRE(res.status == MilpStatus::Optimal);
    CHECK(res.objective == doctest::Approx(2.0));
}

TEST_CASE("zero time limit on a tiny instance still finishes") {
    // The clock is only consulted every 64 nodes; the whole tree here is
    // smaller than that.
    MilpProblem p = ex1_under({2.0, 2.0});
    p.time_limit_sec = 0.0;
    const MilpResult res = solve_milp(p);
    CHECK(res.status == MilpStatus::Optimal);
}

TEST_CASE("zero time limit on a large instance reports TIME_LIMIT") {
    // All-negative objective with no rows: the 0-first order reaches the
    // all-ones optimum last, so the tree far exceeds the first clock check.
    MilpProblem p;
    p.objective.assign(25, -1.0);
    p.time_limit_sec = 0.0;
    const MilpResult res = solve_milp(p);
    CHECK(res.status == MilpStatus::TimeLimit);
    if (res.x) {
        CHECK(res.dual_bound <= res.objective);
    }
}
