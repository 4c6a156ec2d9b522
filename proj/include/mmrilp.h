/*
 * mmrilp — solvers for min-max regret 0-1 integer linear programs with
 * interval objective coefficients.
 *
 * C interface of the shared library. All functions return MMR_OK on
 * success or a negative-free error code; mmr_last_error() describes the
 * most recent failure on the calling thread. Objects are opaque handles
 * released with their matching *_free function. Strings returned through
 * char** out-parameters are owned by the caller and released with
 * mmr_string_free(); strings returned as const char* stay owned by the
 * handle they came from.
 */

#ifndef MMRILP_H
#define MMRILP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    MMR_OK = 0,
    MMR_ERROR_PARSE = 1,       /* malformed file or text */
    MMR_ERROR_MALFORMED = 2,   /* semantically invalid instance */
    MMR_ERROR_INVALID_ARG = 3, /* bad parameter or unknown algorithm */
    MMR_ERROR_INFEASIBLE = 4,  /* instance proven infeasible */
    MMR_ERROR_TOO_LARGE = 5,   /* enumeration guard tripped */
    MMR_ERROR_NUMERIC = 6,     /* numerical breakdown inside a solver */
    MMR_ERROR_IO = 7,          /* file could not be read or written */
    MMR_ERROR_INTERNAL = 8
} mmr_status;

typedef struct mmr_instance mmr_instance;
typedef struct mmr_report mmr_report;
typedef struct mmr_regret mmr_regret;

const char* mmr_version(void);

/* Description of the last error raised on this thread; empty string if none. */
const char* mmr_last_error(void);

void mmr_string_free(char* s);

/* ---- instances ------------------------------------------------------- */

typedef struct {
    int n;               /* variables, >= 1 */
    int m;               /* constraint rows, >= 0 */
    double density;      /* row membership probability, (0, 1] */
    int c_min, c_max;    /* base cost range, 1 <= c_min <= c_max */
    double rho;          /* interval spread, (0, 1] */
    double rhs_fraction; /* rhs = ceil(fraction * row sum), (0, 1] */
    uint64_t seed;
    const char* name;    /* optional; NULL derives one from n, m, seed */
} mmr_generator_params;

/* Fills the documented defaults: n=10, m=5, density=0.3, costs in [1,100],
 * rho=0.5, rhs_fraction=0.5, seed=1. */
void mmr_generator_params_init(mmr_generator_params* p);

mmr_status mmr_instance_parse(const char* text, mmr_instance** out);
mmr_status mmr_instance_read_file(const char* path, mmr_instance** out);
mmr_status mmr_instance_generate(const mmr_generator_params* p, mmr_instance** out);
mmr_status mmr_instance_write(const mmr_instance* inst, char** text_out);
void mmr_instance_free(mmr_instance* inst);

int mmr_instance_num_vars(const mmr_instance* inst);
int mmr_instance_num_constraints(const mmr_instance* inst);
const char* mmr_instance_name(const mmr_instance* inst);

/* ---- solving ---------------------------------------------------------- */

typedef struct {
    double time_limit_sec; /* wall clock budget; INFINITY for none */
    double epsilon;        /* decomposition stopping gap */
    double sba_alpha, sba_beta, sba_gamma;
} mmr_solve_options;

/* Defaults: 7200 s, epsilon 1e-6, sweep 0.5/1.0/0.05. */
void mmr_solve_options_init(mmr_solve_options* opt);

/* algo is one of "bda", "amu", "sba", "brute". Infeasible instances yield
 * MMR_ERROR_INFEASIBLE and no report. */
mmr_status mmr_solve(const mmr_instance* inst, const char* algo,
                     const mmr_solve_options* opt, mmr_report** out);
void mmr_report_free(mmr_report* rep);

const char* mmr_report_algorithm(const mmr_report* rep);
/* "optimal", "feasible", "time_limit", or "infeasible" */
const char* mmr_report_status(const mmr_report* rep);
int mmr_report_has_solution(const mmr_report* rep);
/* Copies the incumbent into buf (0/1 per variable); returns the variable
 * count, or -1 if there is no incumbent or buf is too small. */
int mmr_report_solution(const mmr_report* rep, int* buf, int buflen);
double mmr_report_z(const mmr_report* rep);
/* Returns 1 and stores the lower bound if one exists, else 0. */
int mmr_report_lower_bound(const mmr_report* rep, double* out);
long mmr_report_iterations(const mmr_report* rep);
long mmr_report_cuts(const mmr_report* rep);
long mmr_report_scenario_solves(const mmr_report* rep);
double mmr_report_wall_ms(const mmr_report* rep);

/* ---- regret audit ------------------------------------------------------ */

/* Evaluates the robustness cost of the assignment x (length n, entries 0/1)
 * and captures the worst-case scenario and adversary solution. */
mmr_status mmr_evaluate_regret(const mmr_instance* inst, const int* x, int n,
                               double time_limit_sec, mmr_regret** out);
void mmr_regret_free(mmr_regret* ev);

double mmr_regret_z(const mmr_regret* ev);
double mmr_regret_f_x(const mmr_regret* ev);
double mmr_regret_f_star(const mmr_regret* ev);
/* 1 when the adversary solve finished, 0 when z is a time-limit overestimate. */
int mmr_regret_exact(const mmr_regret* ev);
int mmr_regret_adversary(const mmr_regret* ev, int* buf, int buflen);
int mmr_regret_worst_scenario(const mmr_regret* ev, double* buf, int buflen);

/* ---- benchmarking ------------------------------------------------------ */

/* Runs every algorithm in the comma-separated list on every instance file,
 * each run capped at time_limit_sec. Deviations are computed against the
 * baseline algorithm (which must be in the list). csv_out receives the
 * result table, summary_out the aligned summary text; either may be NULL.
 * Per-run failures become "error" records and are counted in *n_errors
 * (also optional); the batch itself still succeeds. */
mmr_status mmr_bench_run(const char* const* paths, int n_paths, const char* algos,
                         double time_limit_sec, const char* baseline, int jobs,
                         char** csv_out, char** summary_out, int* n_errors);

/* Re-aggregates a result CSV: per-algorithm deviation statistics against
 * the baseline plus the two-sided Wilcoxon signed-rank p-value between
 * algo_a and algo_b. */
mmr_status mmr_compare_csv(const char* csv_text, const char* baseline, const char* algo_a,
                           const char* algo_b, char** summary_out, double* w_out, double* p_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MMRILP_H */
