#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mmr/errors.hpp"

namespace mmr {

// Absolute tolerance used for all feasibility comparisons.
inline constexpr double kFeasTol = 1e-9;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { LE, GE, EQ };

// Sparse linear row: sum of coeff * x[col] compared against rhs.
struct LinearConstraint {
    std::vector<std::pair<int, double>> terms;  // (column, coefficient), columns unique
    Sense sense = Sense::LE;
    double rhs = 0.0;

    bool operator==(const LinearConstraint&) const = default;
};

// A 0-1 ILP whose objective coefficients are only known to lie in
// per-variable intervals [lower[i], upper[i]].
struct IntervalIlpInstance {
    std::string name;
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<LinearConstraint> constraints;

    int num_vars() const { return static_cast<int>(lower.size()); }
};

// One concrete cost vector inside the instance's interval box.
struct Scenario {
    std::vector<double> costs;
};

struct BinarySolution {
    std::vector<std::uint8_t> x;

    bool operator==(const BinarySolution&) const = default;
    int size() const { return static_cast<int>(x.size()); }
};

// Checks the field invariants that do not depend on normalization:
// matching vector sizes, n >= 1, finite bounds with lower <= upper, and
// structurally valid constraint rows. Throws MalformedInstance.
void validate_instance(const IntervalIlpInstance& instance);

// Canonical form: every row has sense LE and index-sorted terms.
// GE rows are negated, EQ rows split into a LE pair. Idempotent.
IntervalIlpInstance normalize(const IntervalIlpInstance& instance);

// Row-wise feasibility of a binary assignment, within kFeasTol.
// Accepts non-normalized instances (GE/EQ rows are evaluated directly).
bool is_feasible(const IntervalIlpInstance& instance, const BinarySolution& x);

// Objective value of x under scenario s, summed in index order.
double cost(const BinarySolution& x, const Scenario& s);

// Builds a Scenario and checks lower <= costs <= upper componentwise.
Scenario make_scenario(const IntervalIlpInstance& instance, std::vector<double> costs);

}  // namespace mmr
