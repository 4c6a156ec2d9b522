#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "mmr/instance_io.hpp"
#include "mmr/model.hpp"

namespace test {

// Canonical worked example: two variables, one covering row x1 + x2 >= 1
// (stored as -x1 - x2 <= -1), c1 in [1,3], c2 fixed at 2.
inline mmr::IntervalIlpInstance ex1() {
    mmr::IntervalIlpInstance inst;
    inst.name = "ex1";
    inst.lower = {1.0, 2.0};
    inst.upper = {3.0, 2.0};
    mmr::LinearConstraint row;
    row.terms = {{0, -1.0}, {1, -1.0}};
    row.sense = mmr::Sense::LE;
    row.rhs = -1.0;
    inst.constraints.push_back(row);
    return inst;
}

inline mmr::BinarySolution bits(std::vector<std::uint8_t> v) {
    return mmr::BinarySolution{std::move(v)};
}

// Instance with collapsed intervals (l = u), derived from the generator so
// all endpoints are integers.
inline mmr::IntervalIlpInstance degenerate(std::uint64_t seed, int n = 6, int m = 3) {
    mmr::GeneratorParams params;
    params.n = n;
    params.m = m;
    params.seed = seed;
    mmr::IntervalIlpInstance inst = mmr::generate_instance(params);
    for (int i = 0; i < inst.num_vars(); ++i) {
        const double c = std::floor(inst.upper[i]);
        inst.lower[i] = c;
        inst.upper[i] = c;
    }
    return inst;
}

inline mmr::IntervalIlpInstance small_random(std::uint64_t seed, int n, int m) {
    mmr::GeneratorParams params;
    params.n = n;
    params.m = m;
    params.seed = seed;
    return mmr::generate_instance(params);
}

}  // namespace test
