#pragma once

#include <cstdint>
#include <string>

#include "mmr/model.hpp"

namespace mmr {

// Knobs of the seeded random instance generator. Instances are knapsack-like
// cover problems: every row has nonnegative coefficients and a positive
// right-hand side, so the all-zeros solution is always feasible.
struct GeneratorParams {
    int n = 10;
    int m = 5;
    double density = 0.3;      // probability a variable enters a row, in (0, 1]
    int c_min = 1;             // base cost range
    int c_max = 100;
    double rho = 0.5;          // interval spread around the base cost, in (0, 1]
    double rhs_fraction = 0.5; // rhs = ceil(fraction * row coefficient sum), in (0, 1]
    std::uint64_t seed = 1;
    std::string name;          // empty: derived from n, m, and seed
};

// Parses the RILP text format, normalizes, and validates. Format problems
// raise ParseError with a line number; semantic problems (l > u, bad
// indices) raise MalformedInstance.
IntervalIlpInstance parse_rilp(const std::string& text);

// Canonical serialization: normalized rows only (all LE, sorted terms),
// numbers in plain decimal with at most 12 significant digits. Guarantees
// parse_rilp(write_rilp(I)) == normalize(I).
std::string write_rilp(const IntervalIlpInstance& instance);

// Deterministic function of the seed (SplitMix64 stream, fixed draw order).
// Interval endpoints are quantized to 1e-6 so serialization round-trips
// exactly.
IntervalIlpInstance generate_instance(const GeneratorParams& p);

}  // namespace mmr
