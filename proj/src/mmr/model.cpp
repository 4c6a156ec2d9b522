#include "mmr/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mmr {

namespace {

void validate_row(const LinearConstraint& row, int n) {
    if (row.terms.empty()) {
        throw MalformedInstance("constraint has no terms");
    }
    std::set<int> seen;
    for (const auto& [idx, coeff] : row.terms) {
        if (idx < 0 || idx >= n) {
            throw MalformedInstance("constraint references variable index " +
                                    std::to_string(idx + 1) + " outside 1.." +
                                    std::to_string(n));
        }
        if (!seen.insert(idx).second) {
            throw MalformedInstance("duplicate variable index " + std::to_string(idx + 1) +
                                    " in one constraint");
        }
        if (!std::isfinite(coeff)) {
            throw MalformedInstance("non-finite constraint coefficient");
        }
    }
    if (!std::isfinite(row.rhs)) {
        throw MalformedInstance("non-finite right-hand side");
    }
}

}  // namespace

void validate_instance(const IntervalIlpInstance& instance) {
    const int n = instance.num_vars();
    if (n < 1) {
        throw MalformedInstance("instance needs at least one variable");
    }
    if (static_cast<int>(instance.upper.size()) != n) {
        throw MalformedInstance("lower/upper interval vectors differ in length");
    }
    for (int i = 0; i < n; ++i) {
        const double l = instance.lower[i];
        const double u = instance.upper[i];
        if (!std::isfinite(l) || !std::isfinite(u)) {
            throw MalformedInstance("non-finite objective interval for variable " +
                                    std::to_string(i + 1));
        }
        if (l > u) {
            throw MalformedInstance("empty objective interval for variable " +
                                    std::to_string(i + 1) + " (l > u)");
        }
    }
    for (const LinearConstraint& row : instance.constraints) {
        validate_row(row, n);
    }
}

IntervalIlpInstance normalize(const IntervalIlpInstance& instance) {
    validate_instance(instance);

    IntervalIlpInstance out;
    out.name = instance.name;
    out.lower = instance.lower;
    out.upper = instance.upper;
    out.constraints.reserve(instance.constraints.size());

    const auto sorted = [](LinearConstraint row) {
        std::sort(row.terms.begin(), row.terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return row;
    };
    const auto negated = [](LinearConstraint row) {
        for (auto& [idx, coeff] : row.terms) {
            (void)idx;
            coeff = -coeff;
        }
        row.rhs = -row.rhs;
        row.sense = Sense::LE;
        return row;
    };

    for (const LinearConstraint& row : instance.constraints) {
        switch (row.sense) {
            case Sense::LE:
                out.constraints.push_back(sorted(row));
                break;
            case Sense::GE:
                out.constraints.push_back(sorted(negated(row)));
                break;
            case Sense::EQ: {
                LinearConstraint le = sorted(row);
                le.sense = Sense::LE;
                out.constraints.push_back(le);
                out.constraints.push_back(negated(le));
                break;
            }
        }
    }
    return out;
}

bool is_feasible(const IntervalIlpInstance& instance, const BinarySolution& x) {
    const int n = instance.num_vars();
    if (x.size() != n) {
        throw DimensionMismatch("solution has " + std::to_string(x.size()) +
                                " entries, instance has " + std::to_string(n));
    }
    for (const LinearConstraint& row : instance.constraints) {
        double lhs = 0.0;
        for (const auto& [idx, coeff] : row.terms) {
            if (x.x[idx]) lhs += coeff;
        }
        switch (row.sense) {
            case Sense::LE:
                if (lhs > row.rhs + kFeasTol) return false;
                break;
            case Sense::GE:
                if (lhs < row.rhs - kFeasTol) return false;
                break;
            case Sense::EQ:
                if (std::abs(lhs - row.rhs) > kFeasTol) return false;
                break;
        }
    }
    return true;
}

double cost(const BinarySolution& x, const Scenario& s) {
    if (x.x.size() != s.costs.size()) {
        throw DimensionMismatch("solution and scenario dimensions differ");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < s.costs.size(); ++i) {
        if (x.x[i]) total += s.costs[i];
    }
    return total;
}

Scenario make_scenario(const IntervalIlpInstance& instance, std::vector<double> costs) {
    if (static_cast<int>(costs.size()) != instance.num_vars()) {
        throw DimensionMismatch("scenario has " + std::to_string(costs.size()) +
                                " costs, instance has " + std::to_string(instance.num_vars()) +
                                " variables");
    }
    for (int i = 0; i < instance.num_vars(); ++i) {
        if (costs[i] < instance.lower[i] || costs[i] > instance.upper[i]) {
            throw InvalidScenario("scenario cost for variable " + std::to_string(i + 1) +
                                  " lies outside its interval");
        }
    }
    return Scenario{std::move(costs)};
}

}  // namespace mmr
