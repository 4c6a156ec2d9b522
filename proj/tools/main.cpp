// Command-line front end. Talks to the solver library exclusively through
// the C interface in mmrilp.h.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mmrilp.h"

namespace {

// Exit codes: 0 success, 1 completed with failures or infeasible instance,
// 2 usage/parse error, 3 time limit without an incumbent, 4 numerical
// failure.
enum ExitCode {
    kOk = 0,
    kFailures = 1,
    kUsage = 2,
    kNoIncumbent = 3,
    kNumeric = 4,
};

int exit_code_for(mmr_status status) {
    switch (status) {
        case MMR_OK:
            return kOk;
        case MMR_ERROR_PARSE:
        case MMR_ERROR_MALFORMED:
        case MMR_ERROR_INVALID_ARG:
        case MMR_ERROR_TOO_LARGE:
        case MMR_ERROR_IO:
            return kUsage;
        case MMR_ERROR_INFEASIBLE:
            return kFailures;
        case MMR_ERROR_NUMERIC:
            return kNumeric;
        case MMR_ERROR_INTERNAL:
        default:
            return kNumeric;
    }
}

int fail(mmr_status status) {
    std::cerr << "error: " << mmr_last_error() << "\n";
    return exit_code_for(status);
}

struct InstanceDeleter {
    void operator()(mmr_instance* p) const { mmr_instance_free(p); }
};
struct ReportDeleter {
    void operator()(mmr_report* p) const { mmr_report_free(p); }
};
struct RegretDeleter {
    void operator()(mmr_regret* p) const { mmr_regret_free(p); }
};
using InstancePtr = std::unique_ptr<mmr_instance, InstanceDeleter>;
using ReportPtr = std::unique_ptr<mmr_report, ReportDeleter>;
using RegretPtr = std::unique_ptr<mmr_regret, RegretDeleter>;

std::string owned_string(char* s) {
    std::string out = s ? s : "";
    mmr_string_free(s);
    return out;
}

std::string bits_to_string(const std::vector<int>& bits) {
    std::string out;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i) out += ' ';
        out += bits[i] ? '1' : '0';
    }
    return out;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

int cmd_solve(const std::string& path, const std::string& algo, const mmr_solve_options& opt,
              bool explain, const std::string& csv_path) {
    mmr_instance* raw_inst = nullptr;
    mmr_status st = mmr_instance_read_file(path.c_str(), &raw_inst);
    if (st != MMR_OK) return fail(st);
    InstancePtr inst(raw_inst);

    mmr_report* raw_rep = nullptr;
    st = mmr_solve(inst.get(), algo.c_str(), &opt, &raw_rep);
    if (st == MMR_ERROR_INFEASIBLE) {
        std::cout << "instance    " << mmr_instance_name(inst.get()) << "\n"
                  << "algorithm   " << algo << "\n"
                  << "status      infeasible\n";
        return kFailures;
    }
    if (st != MMR_OK) return fail(st);
    ReportPtr rep(raw_rep);

    const int n = mmr_instance_num_vars(inst.get());
    std::cout << "instance    " << mmr_instance_name(inst.get()) << " (n=" << n
              << ", m=" << mmr_instance_num_constraints(inst.get()) << ")\n";
    std::cout << "algorithm   " << mmr_report_algorithm(rep.get()) << "\n";
    std::cout << "status      " << mmr_report_status(rep.get()) << "\n";

    const bool has_solution = mmr_report_has_solution(rep.get()) != 0;
    double lb = 0.0;
    const bool has_lb = mmr_report_lower_bound(rep.get(), &lb) != 0;
    if (has_solution) {
        std::cout << "z           " << format_value(mmr_report_z(rep.get())) << "\n";
    }
    if (has_lb) {
        std::cout << "lower_bound " << format_value(lb) << "\n";
        if (has_solution) {
            std::cout << "gap         " << format_value(mmr_report_z(rep.get()) - lb) << "\n";
        }
    }
    if (mmr_report_iterations(rep.get()) > 0) {
        std::cout << "iterations  " << mmr_report_iterations(rep.get()) << "\n";
    }
    if (mmr_report_cuts(rep.get()) > 0) {
        std::cout << "cuts        " << mmr_report_cuts(rep.get()) << "\n";
    }
    std::cout << "time_ms     " << format_value(mmr_report_wall_ms(rep.get())) << "\n";

    std::vector<int> bits(n);
    if (has_solution) {
        mmr_report_solution(rep.get(), bits.data(), n);
        std::cout << "solution    " << bits_to_string(bits) << "\n";
    }

    if (explain && has_solution) {
        mmr_regret* raw_ev = nullptr;
        st = mmr_evaluate_regret(inst.get(), bits.data(), n, opt.time_limit_sec, &raw_ev);
        if (st != MMR_OK) return fail(st);
        RegretPtr ev(raw_ev);
        std::vector<double> costs(n);
        std::vector<int> adversary(n);
        mmr_regret_worst_scenario(ev.get(), costs.data(), n);
        mmr_regret_adversary(ev.get(), adversary.data(), n);
        std::cout << "worst_scenario";
        for (double c : costs) std::cout << ' ' << format_value(c);
        std::cout << "\n";
        std::cout << "f_x         " << format_value(mmr_regret_f_x(ev.get())) << "\n";
        std::cout << "f_star      " << format_value(mmr_regret_f_star(ev.get()))
                  << (mmr_regret_exact(ev.get()) ? "" : " (dual bound)") << "\n";
        std::cout << "adversary   " << bits_to_string(adversary) << "\n";
    }

    if (!csv_path.empty() && has_solution) {
        const bool fresh = !std::filesystem::exists(csv_path);
        std::ofstream out(csv_path, std::ios::app);
        if (!out) {
            std::cerr << "error: cannot open '" << csv_path << "' for append\n";
            return kUsage;
        }
        if (fresh) out << "instance,algorithm,status,z,lower_bound,gap,time_ms,seed\n";
        out << mmr_instance_name(inst.get()) << ',' << mmr_report_algorithm(rep.get()) << ','
            << mmr_report_status(rep.get()) << ',' << format_value(mmr_report_z(rep.get()))
            << ',';
        if (has_lb) out << format_value(lb);
        out << ',';
        if (has_lb) out << format_value(mmr_report_z(rep.get()) - lb);
        out << ',' << format_value(mmr_report_wall_ms(rep.get())) << ",\n";
    }

    if (!has_solution) {
        return std::string(mmr_report_status(rep.get())) == "time_limit" ? kNoIncumbent
                                                                         : kFailures;
    }
    return kOk;
}

int cmd_generate(const mmr_generator_params& params, const std::string& out_path) {
    mmr_instance* raw_inst = nullptr;
    const mmr_status st = mmr_instance_generate(&params, &raw_inst);
    if (st != MMR_OK) return fail(st);
    InstancePtr inst(raw_inst);

    char* text = nullptr;
    const mmr_status wst = mmr_instance_write(inst.get(), &text);
    if (wst != MMR_OK) return fail(wst);
    const std::string body = owned_string(text);

    if (out_path == "-") {
        std::cout << body;
        return kOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kUsage;
    }
    out << body;
    std::cout << out_path << ": n=" << params.n << " m=" << params.m << " seed=" << params.seed
              << "\n";
    return kOk;
}

int cmd_bench(const std::string& dir, const std::string& algos, double time_limit,
              const std::string& baseline, int jobs, const std::string& out_csv) {
    std::vector<std::string> paths;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".rilp") {
            paths.push_back(entry.path().string());
        }
    }
    if (ec) {
        std::cerr << "error: cannot read directory '" << dir << "'\n";
        return kUsage;
    }
    std::sort(paths.begin(), paths.end());

    std::vector<const char*> cpaths;
    cpaths.reserve(paths.size());
    for (const std::string& p : paths) cpaths.push_back(p.c_str());

    char* csv = nullptr;
    char* summary = nullptr;
    int n_errors = 0;
    const mmr_status st =
        mmr_bench_run(cpaths.data(), static_cast<int>(cpaths.size()), algos.c_str(), time_limit,
                      baseline.c_str(), jobs, &csv, &summary, &n_errors);
    if (st != MMR_OK) return fail(st);
    const std::string csv_text = owned_string(csv);
    const std::string summary_text = owned_string(summary);

    std::ofstream out(out_csv, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_csv << "'\n";
        return kUsage;
    }
    out << csv_text;
    std::cout << summary_text;
    std::cout << "wrote " << paths.size() << " instance(s) x " << algos << " to " << out_csv
              << "\n";
    if (n_errors > 0) {
        std::cerr << n_errors << " run(s) failed\n";
        return kFailures;
    }
    return kOk;
}

int cmd_compare(const std::string& csv_path, const std::string& baseline, const std::string& a,
                const std::string& b) {
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << csv_path << "'\n";
        return kUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    char* summary = nullptr;
    double w = 0.0;
    double p = 1.0;
    const mmr_status st =
        mmr_compare_csv(text.c_str(), baseline.c_str(), a.c_str(), b.c_str(), &summary, &w, &p);
    if (st != MMR_OK) return fail(st);
    std::cout << owned_string(summary);
    std::cout << (p > 0.05 ? "not significant (p > 0.05)" : "significant (p <= 0.05)") << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"min-max regret 0-1 ILP solver suite"};
    app.require_subcommand(1);

    // solve
    std::string solve_path, solve_algo = "bda", solve_csv;
    mmr_solve_options opt;
    mmr_solve_options_init(&opt);
    bool explain = false;
    CLI::App* solve = app.add_subcommand("solve", "solve one RILP instance");
    solve->add_option("instance", solve_path, "instance file (.rilp)")->required();
    solve->add_option("--algo", solve_algo, "bda | amu | sba | brute")
        ->check(CLI::IsMember({"bda", "amu", "sba", "brute"}));
    solve->add_option("--time-limit", opt.time_limit_sec, "seconds (default 7200)");
    solve->add_option("--epsilon", opt.epsilon, "decomposition stopping gap");
    solve->add_option("--sba-alpha", opt.sba_alpha, "sweep start (default 0.5)");
    solve->add_option("--sba-beta", opt.sba_beta, "sweep end (default 1.0)");
    solve->add_option("--sba-gamma", opt.sba_gamma, "sweep step (default 0.05)");
    solve->add_flag("--explain", explain, "print the worst-case scenario and adversary");
    solve->add_option("--out", solve_csv, "append a CSV record to this file");

    // generate
    mmr_generator_params gen;
    mmr_generator_params_init(&gen);
    std::string gen_out = "-", gen_name;
    CLI::App* generate = app.add_subcommand("generate", "write a random RILP instance");
    generate->add_option("--vars", gen.n, "variable count")->required();
    generate->add_option("--cons", gen.m, "constraint count")->required();
    generate->add_option("--density", gen.density, "row membership probability (default 0.3)");
    generate->add_option("--cmin", gen.c_min, "minimum base cost (default 1)");
    generate->add_option("--cmax", gen.c_max, "maximum base cost (default 100)");
    generate->add_option("--spread", gen.rho, "interval spread rho (default 0.5)");
    generate->add_option("--rhs-fraction", gen.rhs_fraction, "rhs fraction (default 0.5)");
    generate->add_option("--seed", gen.seed, "generator seed (default 1)");
    generate->add_option("--name", gen_name, "instance name");
    generate->add_option("-o,--out", gen_out, "output path, '-' for stdout");

    // bench
    std::string bench_dir, bench_algos = "bda,amu,sba", bench_baseline = "bda";
    std::string bench_out = "results.csv";
    double bench_limit = 7200.0;
    int bench_jobs = 1;
    CLI::App* bench = app.add_subcommand("bench", "run a directory of instances");
    bench->add_option("dir", bench_dir, "directory of .rilp files")->required();
    bench->add_option("--algos", bench_algos, "comma-separated algorithms (default bda,amu,sba)");
    bench->add_option("--time-limit", bench_limit, "per-run seconds (default 7200)");
    bench->add_option("--baseline", bench_baseline, "deviation baseline (default bda)");
    bench->add_option("--jobs", bench_jobs, "parallel runs (default 1)");
    bench->add_option("--out", bench_out, "CSV output path (default results.csv)");

    // compare
    std::string cmp_csv, cmp_baseline = "bda", cmp_a = "amu", cmp_b = "sba";
    CLI::App* compare = app.add_subcommand("compare", "aggregate a results CSV");
    compare->add_option("csv", cmp_csv, "results CSV from bench")->required();
    compare->add_option("--baseline", cmp_baseline, "deviation baseline (default bda)");
    compare->add_option("--a", cmp_a, "first algorithm (default amu)");
    compare->add_option("--b", cmp_b, "second algorithm (default sba)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    if (solve->parsed()) return cmd_solve(solve_path, solve_algo, opt, explain, solve_csv);
    if (generate->parsed()) {
        if (!gen_name.empty()) gen.name = gen_name.c_str();
        return cmd_generate(gen, gen_out);
    }
    if (bench->parsed()) {
        std::stringstream algos(bench_algos);
        std::string item;
        bool has_baseline = false;
        while (std::getline(algos, item, ',')) {
            if (item == bench_baseline) has_baseline = true;
        }
        if (!has_baseline) {
            std::cerr << "error: baseline '" << bench_baseline << "' must be in --algos\n";
            return kUsage;
        }
        return cmd_bench(bench_dir, bench_algos, bench_limit, bench_baseline, bench_jobs,
                         bench_out);
    }
    if (compare->parsed()) return cmd_compare(cmp_csv, cmp_baseline, cmp_a, cmp_b);
    return kUsage;
}
