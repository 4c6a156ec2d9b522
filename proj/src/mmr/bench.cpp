#include "mmr/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

#include "mmr/benders.hpp"
#include "mmr/brute_force.hpp"

namespace mmr {

double relative_deviation(double heuristic_z, double baseline_z) {
    if (baseline_z <= 1e-12) {
        throw ZeroBaseline("relative deviation undefined for baseline <= 1e-12");
    }
    return (heuristic_z - baseline_z) / baseline_z;
}

WilcoxonResult wilcoxon_signed_rank(const std::vector<std::pair<double, double>>& pairs,
                                    bool force_normal_approximation) {
    std::vector<double> diffs;
    diffs.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        const double d = a - b;
        if (std::abs(d) > 1e-12) diffs.push_back(d);
    }

    WilcoxonResult res;
    res.informative = static_cast<int>(diffs.size());
    if (diffs.empty()) {
        res.p = 1.0;
        res.exact = true;
        return res;
    }

    const int k = static_cast<int>(diffs.size());
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::abs(diffs[a]) < std::abs(diffs[b]);
    });

    std::vector<double> rank(k, 0.0);
    std::vector<int> tie_sizes;
    for (int i = 0; i < k;) {
        int j = i;
        while (j < k && std::abs(diffs[order[j]]) == std::abs(diffs[order[i]])) ++j;
        const double avg = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (int t = i; t < j; ++t) rank[order[t]] = avg;
        tie_sizes.push_back(j - i);
        i = j;
    }

    double w = 0.0;
    for (int i = 0; i < k; ++i) {
        if (diffs[i] > 0.0) w += rank[i];
    }
    res.w_plus = w;

    if (k <= 20 && !force_normal_approximation) {
        // Exact two-sided p: distribution of W+ over all 2^k sign
        // assignments, tracked on doubled ranks so ties stay integral.
        res.exact = true;
        std::vector<long long> r2(k);
        long long total2 = 0;
        for (int i = 0; i < k; ++i) {
            r2[i] = std::llround(2.0 * rank[i]);
            total2 += r2[i];
        }
        std::vector<double> count(static_cast<std::size_t>(total2) + 1, 0.0);
        count[0] = 1.0;
        for (int i = 0; i < k; ++i) {
            for (long long s = total2; s >= r2[i]; --s) {
                count[s] += count[s - r2[i]];
            }
        }
        const long long w2 = std::llround(2.0 * w);
        double below = 0.0;
        double above = 0.0;
        for (long long s = 0; s <= total2; ++s) {
            if (s <= w2) below += count[s];
            if (s >= w2) above += count[s];
        }
        const double denom = std::ldexp(1.0, k);
        res.p = std::min(1.0, 2.0 * std::min(below, above) / denom);
    } else {
        // Normal approximation with tie and continuity corrections.
        res.exact = false;
        const double kk = static_cast<double>(k);
        const double mu = kk * (kk + 1.0) / 4.0;
        double tie_corr = 0.0;
        for (int t : tie_sizes) {
            const double td = static_cast<double>(t);
            tie_corr += td * td * td - td;
        }
        const double var = kk * (kk + 1.0) * (2.0 * kk + 1.0) / 24.0 - tie_corr / 48.0;
        if (var <= 0.0) {
            res.p = 1.0;
            return res;
        }
        double z = 0.0;
        if (w > mu) {
            z = (w - mu - 0.5) / std::sqrt(var);
        } else if (w < mu) {
            z = (w - mu + 0.5) / std::sqrt(var);
        }
        res.p = std::clamp(std::erfc(std::abs(z) / std::sqrt(2.0)), 0.0, 1.0);
    }
    return res;
}

namespace {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

BenchRecord run_one(const NamedInstance& ni, const std::string& algo, const BenchOptions& opt) {
    BenchRecord rec;
    rec.instance = ni.name;
    rec.algorithm = algo;
    rec.seed = ni.seed;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (algo == "bda") {
            const SolveReport r = solve_bda(ni.instance, opt.epsilon, opt.time_limit_sec);
            rec.status = to_string(r.status);
            if (r.incumbent) rec.z = r.z;
            rec.lower_bound = r.lower_bound;
            if (rec.z && rec.lower_bound) rec.gap = *rec.z - *rec.lower_bound;
        } else if (algo == "amu" || algo == "sba") {
            try {
                const SolveReport r = algo == "amu"
                                          ? solve_amu(ni.instance, opt.time_limit_sec)
                                          : solve_sba(ni.instance, opt.sba, opt.time_limit_sec);
                rec.status = to_string(r.status);
                if (r.incumbent) rec.z = r.z;
            } catch (const InfeasibleInstance&) {
                rec.status = "infeasible";
            }
        } else if (algo == "brute") {
            try {
                const auto [x, z] = exact_minmax_regret(ni.instance);
                (void)x;
                rec.status = "optimal";
                rec.z = z;
                rec.lower_bound = z;
                rec.gap = 0.0;
            } catch (const InfeasibleInstance&) {
                rec.status = "infeasible";
            }
        } else {
            throw InvalidParams("unknown algorithm '" + algo + "'");
        }
    } catch (const std::exception& e) {
        rec.status = "error";
        rec.error = e.what();
    }
    rec.time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

struct Stats {
    double mean = 0.0;
    double sd = 0.0;
};

Stats sample_stats(const std::vector<double>& xs) {
    Stats s;
    if (xs.empty()) return s;
    s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double acc = 0.0;
        for (double x : xs) acc += (x - s.mean) * (x - s.mean);
        s.sd = std::sqrt(acc / static_cast<double>(xs.size() - 1));
    }
    return s;
}

// Aggregate rows plus the Wilcoxon test over per-instance deviations.
void aggregate_into(BenchResult& result, const std::vector<std::string>& algo_order) {
    std::map<std::string, std::map<std::string, const BenchRecord*>> by_instance;
    for (const BenchRecord& rec : result.records) {
        by_instance[rec.instance][rec.algorithm] = &rec;
    }

    std::map<std::string, std::map<std::string, double>> devs;  // algo -> instance -> dev %
    for (const auto& [instance, recs] : by_instance) {
        const auto base_it = recs.find(result.baseline);
        const bool base_ok =
            base_it != recs.end() && base_it->second->z && *base_it->second->z > 1e-12;
        for (const auto& [algo, rec] : recs) {
            if (algo == result.baseline || !rec->z) continue;
            if (base_ok) {
                devs[algo][instance] =
                    100.0 * relative_deviation(*rec->z, *base_it->second->z);
            }
        }
    }

    result.rows.clear();
    for (const std::string& algo : algo_order) {
        AggregateRow row;
        row.algorithm = algo;
        std::vector<double> times;
        std::vector<double> dev_values;
        for (const BenchRecord& rec : result.records) {
            if (rec.algorithm != algo) continue;
            ++row.runs;
            times.push_back(rec.time_ms / 1000.0);
            if (algo != result.baseline && rec.z) {
                const auto it = devs.find(algo);
                if (it != devs.end() && it->second.count(rec.instance)) {
                    dev_values.push_back(it->second.at(rec.instance));
                } else {
                    ++row.dev_excluded;
                }
            }
        }
        const Stats ts = sample_stats(times);
        row.time_mean_s = ts.mean;
        row.time_sd_s = ts.sd;
        if (algo != result.baseline && !dev_values.empty()) {
            const Stats ds = sample_stats(dev_values);
            row.dev_mean = ds.mean;
            row.dev_sd = ds.sd;
            row.dev_samples = static_cast<int>(dev_values.size());
        }
        result.rows.push_back(std::move(row));
    }

    if (!result.wilcoxon_a.empty() && !result.wilcoxon_b.empty()) {
        std::vector<std::pair<double, double>> pairs;
        const auto a_it = devs.find(result.wilcoxon_a);
        const auto b_it = devs.find(result.wilcoxon_b);
        if (a_it != devs.end() && b_it != devs.end()) {
            for (const auto& [instance, dev_a] : a_it->second) {
                const auto b_dev = b_it->second.find(instance);
                if (b_dev != b_it->second.end()) {
                    pairs.emplace_back(dev_a, b_dev->second);
                }
            }
        }
        result.wilcoxon = wilcoxon_signed_rank(pairs);
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

BenchResult run_benchmark(const std::vector<NamedInstance>& instances, const BenchOptions& opt) {
    if (opt.algorithms.empty()) {
        throw InvalidParams("run_benchmark: no algorithms requested");
    }
    if (std::find(opt.algorithms.begin(), opt.algorithms.end(), opt.baseline) ==
        opt.algorithms.end()) {
        throw InvalidParams("run_benchmark: baseline '" + opt.baseline +
                            "' is not among the requested algorithms");
    }

    BenchResult result;
    result.baseline = opt.baseline;

    struct Task {
        const NamedInstance* instance;
        const std::string* algo;
    };
    std::vector<Task> tasks;
    for (const NamedInstance& ni : instances) {
        for (const std::string& algo : opt.algorithms) {
            tasks.push_back(Task{&ni, &algo});
        }
    }

    result.records.resize(tasks.size());
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || tasks.size() <= 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            result.records[t] = run_one(*tasks[t].instance, *tasks[t].algo, opt);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const int nworkers = static_cast<int>(
            std::min(static_cast<std::size_t>(jobs), tasks.size()));
        workers.reserve(nworkers);
        for (int wk = 0; wk < nworkers; ++wk) {
            workers.emplace_back([&] {
                while (true) {
                    const std::size_t t = next.fetch_add(1);
                    if (t >= tasks.size()) break;
                    result.records[t] = run_one(*tasks[t].instance, *tasks[t].algo, opt);
                }
            });
        }
        for (std::thread& w : workers) w.join();
    }

    std::sort(result.records.begin(), result.records.end(),
              [](const BenchRecord& a, const BenchRecord& b) {
                  return std::tie(a.instance, a.algorithm) < std::tie(b.instance, b.algorithm);
              });
    result.had_errors = std::any_of(result.records.begin(), result.records.end(),
                                    [](const BenchRecord& r) { return r.status == "error"; });

    // Row order: baseline first, then the rest as requested.
    std::vector<std::string> order{opt.baseline};
    for (const std::string& algo : opt.algorithms) {
        if (algo != opt.baseline) order.push_back(algo);
    }

    // Wilcoxon between the two heuristics when both ran, otherwise the first
    // two non-baseline algorithms.
    const auto has = [&](const char* a) {
        return std::find(opt.algorithms.begin(), opt.algorithms.end(), a) != opt.algorithms.end();
    };
    if (has("amu") && has("sba")) {
        result.wilcoxon_a = "amu";
        result.wilcoxon_b = "sba";
    } else if (order.size() >= 3) {
        result.wilcoxon_a = order[1];
        result.wilcoxon_b = order[2];
    }

    aggregate_into(result, order);
    return result;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
    std::string out = "instance,algorithm,status,z,lower_bound,gap,time_ms,seed\n";
    char buf[64];
    for (const BenchRecord& rec : records) {
        out += csv_field(rec.instance) + "," + csv_field(rec.algorithm) + "," +
               csv_field(rec.status) + ",";
        if (rec.z) out += format_value(*rec.z);
        out += ",";
        if (rec.lower_bound) out += format_value(*rec.lower_bound);
        out += ",";
        if (rec.gap) out += format_value(*rec.gap);
        out += ",";
        std::snprintf(buf, sizeof(buf), "%.3f", rec.time_ms);
        out += buf;
        out += ",";
        if (rec.seed) out += std::to_string(*rec.seed);
        out += "\n";
    }
    return out;
}

std::vector<BenchRecord> parse_csv(const std::string& text) {
    // RFC 4180-style reader: quoted fields may contain commas, quotes, and
    // newlines.
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    int line = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
                if (c == '\n') ++line;
            }
        } else if (c == '"') {
            if (!field.empty()) throw ParseError(line, "stray quote inside CSV field");
            quoted = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            row.push_back(std::move(field));
            field.clear();
            if (row.size() > 1 || !row[0].empty()) rows.push_back(std::move(row));
            row.clear();
            ++line;
        } else {
            field += c;
        }
    }
    if (quoted) throw ParseError(line, "unterminated quoted CSV field");
    if (!field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }

    if (rows.empty()) throw ParseError(1, "empty CSV");
    const std::vector<std::string> header{"instance", "algorithm", "status",  "z",
                                          "lower_bound", "gap",    "time_ms", "seed"};
    if (rows[0] != header) {
        throw ParseError(1, "unexpected CSV header; expected "
                            "instance,algorithm,status,z,lower_bound,gap,time_ms,seed");
    }

    const auto opt_number = [](const std::string& s, int line_no) -> std::optional<double> {
        if (s.empty()) return std::nullopt;
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size()) {
            throw ParseError(line_no, "bad numeric CSV field '" + s + "'");
        }
        return v;
    };

    std::vector<BenchRecord> records;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& cells = rows[r];
        const int line_no = static_cast<int>(r + 1);
        if (cells.size() != header.size()) {
            throw ParseError(line_no, "expected " + std::to_string(header.size()) +
                                          " CSV fields, got " + std::to_string(cells.size()));
        }
        BenchRecord rec;
        rec.instance = cells[0];
        rec.algorithm = cells[1];
        rec.status = cells[2];
        rec.z = opt_number(cells[3], line_no);
        rec.lower_bound = opt_number(cells[4], line_no);
        rec.gap = opt_number(cells[5], line_no);
        rec.time_ms = opt_number(cells[6], line_no).value_or(0.0);
        if (!cells[7].empty()) {
            rec.seed = static_cast<std::uint64_t>(std::strtoull(cells[7].c_str(), nullptr, 10));
        }
        records.push_back(std::move(rec));
    }
    return records;
}

BenchResult compare_records(const std::vector<BenchRecord>& records, const std::string& baseline,
                            const std::string& algo_a, const std::string& algo_b) {
    const auto present = [&](const std::string& algo) {
        return std::any_of(records.begin(), records.end(),
                           [&](const BenchRecord& r) { return r.algorithm == algo; });
    };
    for (const std::string& algo : {baseline, algo_a, algo_b}) {
        if (!present(algo)) {
            throw InvalidParams("compare: no records for algorithm '" + algo + "'");
        }
    }

    BenchResult result;
    result.baseline = baseline;
    result.records = records;
    result.wilcoxon_a = algo_a;
    result.wilcoxon_b = algo_b;
    std::vector<std::string> order{baseline};
    if (algo_a != baseline) order.push_back(algo_a);
    if (algo_b != baseline && algo_b != algo_a) order.push_back(algo_b);
    aggregate_into(result, order);
    return result;
}

std::string render_summary(const BenchResult& result) {
    const auto cell = [](double mean, double sd) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.2f \xc2\xb1 %.2f", mean, sd);
        return std::string(buf);
    };

    // One column group per algorithm: the baseline shows only its time,
    // every other algorithm a dev/time pair.
    std::vector<std::string> names, heads, values;
    for (const AggregateRow& row : result.rows) {
        if (row.algorithm == result.baseline) {
            names.push_back(row.algorithm);
            heads.push_back("time (s)");
            values.push_back(cell(row.time_mean_s, row.time_sd_s));
        } else {
            names.push_back(row.algorithm);
            heads.push_back("dev (%)");
            values.push_back(row.dev_mean ? cell(*row.dev_mean, *row.dev_sd) : "-");
            names.push_back("");
            heads.push_back("time (s)");
            values.push_back(cell(row.time_mean_s, row.time_sd_s));
        }
    }

    std::string line1, line2, line3;
    for (std::size_t c = 0; c < heads.size(); ++c) {
        std::size_t width = std::max(heads[c].size(), names[c].size());
        // the +/- sign is two bytes in UTF-8 but one display column
        const std::size_t display = values[c].size() - (values[c].find('\xc2') != std::string::npos ? 1 : 0);
        width = std::max(width, display);
        const auto pad = [&](std::string& out, const std::string& s, std::size_t disp) {
            out += std::string(width - std::min(width, disp), ' ') + s + "  ";
        };
        pad(line1, names[c], names[c].size());
        pad(line2, heads[c], heads[c].size());
        pad(line3, values[c], display);
    }

    std::string out = line1 + "\n" + line2 + "\n" + line3 + "\n";
    if (result.wilcoxon) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "wilcoxon %s vs %s: W+ = %.1f, p = %.6g (%s, %d pairs)\n",
                      result.wilcoxon_a.c_str(), result.wilcoxon_b.c_str(),
                      result.wilcoxon->w_plus, result.wilcoxon->p,
                      result.wilcoxon->exact ? "exact" : "normal approx",
                      result.wilcoxon->informative);
        out += buf;
    }
    return out;
}

}  // namespace mmr
