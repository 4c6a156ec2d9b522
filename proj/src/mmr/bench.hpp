#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmr/heuristics.hpp"
#include "mmr/model.hpp"
#include "mmr/report.hpp"

namespace mmr {

// One (instance, algorithm) run. status is one of optimal, feasible,
// time_limit, infeasible, error.
struct BenchRecord {
    std::string instance;
    std::string algorithm;
    std::string status;
    std::optional<double> z;
    std::optional<double> lower_bound;
    std::optional<double> gap;
    double time_ms = 0.0;
    std::optional<std::uint64_t> seed;
    std::string error;  // message when status == "error"
};

// (heuristic - baseline) / baseline. Throws ZeroBaseline when the baseline
// is at or below 1e-12; such records are flagged and left out of the
// deviation aggregates.
double relative_deviation(double heuristic_z, double baseline_z);

struct AggregateRow {
    std::string algorithm;
    int runs = 0;
    std::optional<double> dev_mean;  // percent
    std::optional<double> dev_sd;    // percent, sample (n-1)
    int dev_samples = 0;
    int dev_excluded = 0;  // zero-baseline or missing-baseline records
    double time_mean_s = 0.0;
    double time_sd_s = 0.0;
};

struct WilcoxonResult {
    double w_plus = 0.0;
    double p = 1.0;
    int informative = 0;  // pairs left after dropping zero differences
    bool exact = false;
};

// Two-sided Wilcoxon signed-rank test on paired samples. Zero differences
// are dropped, tied magnitudes get average ranks. Exact p by enumerating
// sign assignments up to k = 20 pairs, normal approximation with tie and
// continuity correction beyond that (or always, when forced).
WilcoxonResult wilcoxon_signed_rank(const std::vector<std::pair<double, double>>& pairs,
                                    bool force_normal_approximation = false);

struct NamedInstance {
    std::string name;
    IntervalIlpInstance instance;
    std::optional<std::uint64_t> seed;
};

struct BenchOptions {
    std::vector<std::string> algorithms;  // of bda, amu, sba, brute
    std::string baseline = "bda";
    double time_limit_sec = 7200.0;
    double epsilon = 1e-6;
    SbaParams sba;
    int jobs = 1;
};

struct BenchResult {
    std::vector<BenchRecord> records;  // sorted by (instance, algorithm)
    std::vector<AggregateRow> rows;    // baseline first, then options order
    std::optional<WilcoxonResult> wilcoxon;
    std::string wilcoxon_a, wilcoxon_b;
    std::string baseline;
    bool had_errors = false;
};

// Runs every (instance, algorithm) pair under the per-run time limit,
// computes deviations against the baseline algorithm's robustness cost, and
// the Wilcoxon test between the two non-baseline algorithms. Individual
// failures become error records; the batch always completes.
BenchResult run_benchmark(const std::vector<NamedInstance>& instances, const BenchOptions& opt);

// CSV with the fixed header instance,algorithm,status,z,lower_bound,gap,
// time_ms,seed and RFC 4180 quoting.
std::string to_csv(const std::vector<BenchRecord>& records);

// Inverse of to_csv; throws ParseError on schema or syntax problems.
std::vector<BenchRecord> parse_csv(const std::string& text);

// Recomputes aggregates and the Wilcoxon test from stored records, for
// post-hoc comparison of two algorithms against a baseline.
BenchResult compare_records(const std::vector<BenchRecord>& records, const std::string& baseline,
                            const std::string& algo_a, const std::string& algo_b);

// Fixed-width summary table: baseline time column, then per-algorithm
// deviation/time column pairs, plus the Wilcoxon verdict line.
std::string render_summary(const BenchResult& result);

}  // namespace mmr
