#include "mmrilp.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "mmr/bench.hpp"
#include "mmr/benders.hpp"
#include "mmr/brute_force.hpp"
#include "mmr/heuristics.hpp"
#include "mmr/instance_io.hpp"
#include "mmr/regret.hpp"
#include "mmr/report.hpp"

struct mmr_instance {
    mmr::IntervalIlpInstance inst;
};

struct mmr_report {
    mmr::SolveReport report;
};

struct mmr_regret {
    mmr::RegretEvaluation eval;
};

namespace {

thread_local std::string g_last_error;

class IoError : public mmr::Error {
public:
    using Error::Error;
};

mmr_status record_error(mmr_status code, const char* what) {
    g_last_error = what ? what : "";
    return code;
}

// Maps the C++ error taxonomy onto the C status codes.
template <typename Fn>
mmr_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return MMR_OK;
    } catch (const mmr::ParseError& e) {
        return record_error(MMR_ERROR_PARSE, e.what());
    } catch (const mmr::MalformedInstance& e) {
        return record_error(MMR_ERROR_MALFORMED, e.what());
    } catch (const mmr::InfeasibleInstance& e) {
        return record_error(MMR_ERROR_INFEASIBLE, e.what());
    } catch (const mmr::InfeasibleSolution& e) {
        return record_error(MMR_ERROR_INVALID_ARG, e.what());
    } catch (const mmr::InvalidParams& e) {
        return record_error(MMR_ERROR_INVALID_ARG, e.what());
    } catch (const mmr::LambdaOutOfRange& e) {
        return record_error(MMR_ERROR_INVALID_ARG, e.what());
    } catch (const mmr::DimensionMismatch& e) {
        return record_error(MMR_ERROR_INVALID_ARG, e.what());
    } catch (const mmr::ZeroBaseline& e) {
        return record_error(MMR_ERROR_INVALID_ARG, e.what());
    } catch (const mmr::TooLarge& e) {
        return record_error(MMR_ERROR_TOO_LARGE, e.what());
    } catch (const mmr::NumericalBreakdown& e) {
        return record_error(MMR_ERROR_NUMERIC, e.what());
    } catch (const mmr::StalledDecomposition& e) {
        return record_error(MMR_ERROR_NUMERIC, e.what());
    } catch (const mmr::UnboundedModel& e) {
        return record_error(MMR_ERROR_NUMERIC, e.what());
    } catch (const IoError& e) {
        return record_error(MMR_ERROR_IO, e.what());
    } catch (const std::exception& e) {
        return record_error(MMR_ERROR_INTERNAL, e.what());
    } catch (...) {
        return record_error(MMR_ERROR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

extern "C" {

const char* mmr_version(void) { return "0.1.0"; }

const char* mmr_last_error(void) { return g_last_error.c_str(); }

void mmr_string_free(char* s) { std::free(s); }

void mmr_generator_params_init(mmr_generator_params* p) {
    if (!p) return;
    const mmr::GeneratorParams defaults;
    p->n = defaults.n;
    p->m = defaults.m;
    p->density = defaults.density;
    p->c_min = defaults.c_min;
    p->c_max = defaults.c_max;
    p->rho = defaults.rho;
    p->rhs_fraction = defaults.rhs_fraction;
    p->seed = defaults.seed;
    p->name = nullptr;
}

mmr_status mmr_instance_parse(const char* text, mmr_instance** out) {
    if (!text || !out) return record_error(MMR_ERROR_INVALID_ARG, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new mmr_instance{mmr::parse_rilp(text)}; });
}

mmr_status mmr_instance_read_file(const char* path, mmr_instance** out) {
    if (!path || !out) return record_error(MMR_ERROR_INVALID_ARG, "null argument");
    *out = nullptr;
    return guarded([&] {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError(std::string("cannot open '") + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        *out = new mmr_instance{mmr::parse_rilp(buffer.str())};
    });
}

mmr_status mmr_instance_generate(const mmr_generator_params* p, mmr_instance** out) {
    if (!p || !out) return record_error(MMR_ERROR_INVALID_ARG, "null argument");
    *out = nullptr;
    return guarded([&] {
        mmr::GeneratorParams params;
        params.n = p->n;
        params.m = p->m;
        params.density = p->density;
        params.c_min = p->c_min;
        params.c_max = p->c_max;
        params.rho = p->rho;
        params.rhs_fraction = p->rhs_fraction;
        params.seed = p->seed;
        if (p->name) params.name = p->name;
        *out = new mmr_instance{mmr::generate_instance(params)};
    });
}

mmr_status mmr_instance_write(const mmr_instance* inst, char** text_out) {
    if (!inst || !text_out) return record_error(MMR_ERROR_INVALID_ARG, "null argument");
    *text_out = nullptr;
    return guarded([&] { *text_out = dup_string(mmr::write_rilp(inst->inst)); });
}

void mmr_instance_free(mmr_instance* inst) { delete inst; }

int mmr_instance_num_vars(const mmr_instance* inst) {
    return inst ? inst->inst.num_vars() : 0;
}

int mmr_instance_num_constraints(const mmr_instance* inst) {
    return inst ? static_cast<int>(inst->inst.constraints.size()) : 0;
}

const char* mmr_instance_name(const mmr_instance* inst) {
    return inst ? inst->inst.name.c_str() : "";
}

void mmr_solve_options_init(mmr_solve_options* opt) {
    if (!opt) return;
    opt->time_limit_sec = 7200.0;
    opt->epsilon = 1e-6;
    const mmr::SbaParams sba;
    opt->sba_alpha = sba.alpha;
    opt->sba_beta = sba.beta;
    opt->sba_gamma = sba.gamma;
}

mmr_status mmr_solve(const mmr_instance* inst, const char* algo, const mmr_solve_options* opt,
                     mmr_report** out) {
    if (!inst || !algo || !out) return record_error(MMR_ERROR_INVALID_ARG, "null argument");
    *out = nullptr;
    mmr_solve_options defaults;
    mmr_solve_options_init(&defaults);
    const mmr_solve_options& o = opt ? *opt : defaults;
    return guarded([&] {
        const std::string name = algo;
        mmr::SolveReport report;
        if (name == "bda") {
            report = mmr::solve_bda(inst->inst, o.epsilon, o.time_limit_sec);
            if (report.status == mmr::SolveStatus::Infeasible) {
                throw mmr::InfeasibleInstance("instance has no feasible solution");
            }
        } else if (name == "amu") {
            report = mmr::solve_amu(inst->inst, o.time_limit_sec);
        } else if (name == "sba") {
            report = mmr::solve_sba(inst->inst,
                                    mmr::SbaParams{o.sba_alpha, o.sba_beta, o.sba_gamma},
                                    o.time_limit_sec);
        } else if (name == "brute") {
            const auto [x, z] = mmr::exact_minmax_regret(inst->inst);
            report.algorithm = "brute";
            report.status = mmr::SolveStatus::Optimal;
            report.incumbent = x;
            report.z = z;
            report.lower_bound = z;
        } else {
            throw mmr::InvalidParams("unknown algorithm '" + name + "'");
        }
        *out = new mmr_report{std::move(report)};
    });
}

void mmr_report_free(mmr_report* rep) { delete rep; }

const char* mmr_report_algorithm(const mmr_report* rep) {
    return rep ? rep->report.algorithm.c_str() : "";
}

const char* mmr_report_status(const mmr_report* rep) {
    return rep ? mmr::to_string(rep->report.status) : "";
}

int mmr_report_has_solution(const mmr_report* rep) {
    return rep && rep->report.incumbent ? 1 : 0;
}

int mmr_report_solution(const mmr_report* rep, int* buf, int buflen) {
    if (!rep || !rep->report.incumbent || !buf) return -1;
    const auto& x = rep->report.incumbent->x;
    if (buflen < static_cast<int>(x.size())) return -1;
    for (std::size_t i = 0; i < x.size(); ++i) buf[i] = x[i];
    return static_cast<int>(x.size());
}

double mmr_report_z(const mmr_report* rep) {
    return rep ? rep->report.z : std::nan("");
}

int mmr_report_lower_bound(const mmr_report* rep, double* out) {
    if (!rep || !rep->report.lower_bound) return 0;
    if (out) *out = *rep->report.lower_bound;
    return 1;
}

long mmr_report_iterations(const mmr_report* rep) {
    return rep ? rep->report.iterations : 0;
}

long mmr_report_cuts(const mmr_report* rep) { return rep ? rep->report.cuts : 0; }

long mmr_report_scenario_solves(const mmr_report* rep) {
    return rep ? rep->report.scenario_solves : 0;
}

double mmr_report_wall_ms(const mmr_report* rep) { return rep ? rep->report.wall_ms : 0.0; }

mmr_status mmr_evaluate_regret(const mmr_instance* inst, const int* x, int n,
                               double time_limit_sec, mmr_regret** out) {
    if (!inst || !x || !out) return record_error(MMR_ERROR_INVALID_ARG, "null argument");
    *out = nullptr;
    return guarded([&] {
        if (n != inst->inst.num_vars()) {
            throw mmr::DimensionMismatch("assignment length does not match the instance");
        }
        mmr::BinarySolution sol;
        sol.x.resize(n);
        for (int i = 0; i < n; ++i) {
            if (x[i] != 0 && x[i] != 1) {
                throw mmr::InvalidParams("assignment entries must be 0 or 1");
            }
            sol.x[i] = static_cast<std::uint8_t>(x[i]);
        }
        *out = new mmr_regret{mmr::robustness_cost(inst->inst, sol, time_limit_sec)};
    });
}

void mmr_regret_free(mmr_regret* ev) { delete ev; }

double mmr_regret_z(const mmr_regret* ev) { return ev ? ev->eval.z : std::nan(""); }

double mmr_regret_f_x(const mmr_regret* ev) { return ev ? ev->eval.f_x : std::nan(""); }

double mmr_regret_f_star(const mmr_regret* ev) { return ev ? ev->eval.f_star : std::nan(""); }

int mmr_regret_exact(const mmr_regret* ev) {
    return ev && ev->eval.status == mmr::RegretStatus::Exact ? 1 : 0;
}

int mmr_regret_adversary(const mmr_regret* ev, int* buf, int buflen) {
    if (!ev || !buf) return -1;
    const auto& y = ev->eval.adversary.x;
    if (buflen < static_cast<int>(y.size())) return -1;
    for (std::size_t i = 0; i < y.size(); ++i) buf[i] = y[i];
    return static_cast<int>(y.size());
}

int mmr_regret_worst_scenario(const mmr_regret* ev, double* buf, int buflen) {
    if (!ev || !buf) return -1;
    const auto& costs = ev->eval.worst.costs;
    if (buflen < static_cast<int>(costs.size())) return -1;
    for (std::size_t i = 0; i < costs.size(); ++i) buf[i] = costs[i];
    return static_cast<int>(costs.size());
}

mmr_status mmr_bench_run(const char* const* paths, int n_paths, const char* algos,
                         double time_limit_sec, const char* baseline, int jobs, char** csv_out,
                         char** summary_out, int* n_errors) {
    if ((!paths && n_paths > 0) || !algos) {
        return record_error(MMR_ERROR_INVALID_ARG, "null argument");
    }
    if (csv_out) *csv_out = nullptr;
    if (summary_out) *summary_out = nullptr;
    if (n_errors) *n_errors = 0;
    return guarded([&] {
        mmr::BenchOptions opt;
        opt.algorithms = split_csv_list(algos);
        opt.baseline = baseline && *baseline ? baseline : "bda";
        opt.time_limit_sec = time_limit_sec;
        opt.jobs = jobs;

        std::vector<mmr::NamedInstance> instances;
        std::vector<mmr::BenchRecord> load_failures;
        for (int i = 0; i < n_paths; ++i) {
            try {
                std::ifstream in(paths[i], std::ios::binary);
                if (!in) throw IoError(std::string("cannot open '") + paths[i] + "'");
                std::stringstream buffer;
                buffer << in.rdbuf();
                mmr::NamedInstance ni;
                ni.instance = mmr::parse_rilp(buffer.str());
                ni.name = ni.instance.name;
                instances.push_back(std::move(ni));
            } catch (const std::exception& e) {
                // A broken file becomes one error record per requested
                // algorithm; the batch keeps going.
                for (const std::string& algo : opt.algorithms) {
                    mmr::BenchRecord rec;
                    rec.instance = paths[i];
                    rec.algorithm = algo;
                    rec.status = "error";
                    rec.error = e.what();
                    load_failures.push_back(std::move(rec));
                }
            }
        }

        mmr::BenchResult result = mmr::run_benchmark(instances, opt);
        if (!load_failures.empty()) {
            result.records.insert(result.records.end(), load_failures.begin(),
                                  load_failures.end());
            result.had_errors = true;
        }

        if (csv_out) *csv_out = dup_string(mmr::to_csv(result.records));
        if (summary_out) *summary_out = dup_string(mmr::render_summary(result));
        if (n_errors) {
            int errors = 0;
            for (const mmr::BenchRecord& rec : result.records) {
                if (rec.status == "error") ++errors;
            }
            *n_errors = errors;
        }
    });
}

mmr_status mmr_compare_csv(const char* csv_text, const char* baseline, const char* algo_a,
                           const char* algo_b, char** summary_out, double* w_out, double* p_out) {
    if (!csv_text || !baseline || !algo_a || !algo_b) {
        return record_error(MMR_ERROR_INVALID_ARG, "null argument");
    }
    if (summary_out) *summary_out = nullptr;
    return guarded([&] {
        const std::vector<mmr::BenchRecord> records = mmr::parse_csv(csv_text);
        const mmr::BenchResult result = mmr::compare_records(records, baseline, algo_a, algo_b);
        if (summary_out) *summary_out = dup_string(mmr::render_summary(result));
        if (w_out) *w_out = result.wilcoxon ? result.wilcoxon->w_plus : 0.0;
        if (p_out) *p_out = result.wilcoxon ? result.wilcoxon->p : 1.0;
    });
}

}  // extern "C"
