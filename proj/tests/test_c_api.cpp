// Exercises the shared library exactly the way an external consumer would:
// through mmrilp.h only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "mmrilp.h"

namespace {

const char* kEx1 =
    "RILP 1\n"
    "NAME ex1\n"
    "VARS 2\n"
    "CONS 1\n"
    "OBJ\n"
    "1 1 3\n"
    "2 2 2\n"
    "ROW 1 LE -1\n"
    "1 -1\n"
    "2 -1\n"
    "END\n";

struct Instance {
    mmr_instance* ptr = nullptr;
    ~Instance() { mmr_instance_free(ptr); }
};

struct Report {
    mmr_report* ptr = nullptr;
    ~Report() { mmr_report_free(ptr); }
};

}  // namespace

TEST_CASE("version and error strings exist") {
    CHECK(std::strlen(mmr_version()) > 0);
    CHECK(mmr_last_error() != nullptr);
}

TEST_CASE("parse, inspect, and write an instance") {
    Instance inst;
    REQUIRE(mmr_instance_parse(kEx1, &inst.ptr) == MMR_OK);
    CHECK(mmr_instance_num_vars(inst.ptr) == 2);
    CHECK(mmr_instance_num_constraints(inst.ptr) == 1);
    CHECK(std::string(mmr_instance_name(inst.ptr)) == "ex1");

    char* text = nullptr;
    REQUIRE(mmr_instance_write(inst.ptr, &text) == MMR_OK);
    CHECK(std::string(text) == kEx1);
    mmr_string_free(text);
}

TEST_CASE("parse failures set the error code and message") {
    Instance inst;
    CHECK(mmr_instance_parse("RILP 2\n", &inst.ptr) == MMR_ERROR_PARSE);
    CHECK(inst.ptr == nullptr);
    CHECK(std::strlen(mmr_last_error()) > 0);

    const char* flipped =
        "RILP 1\nNAME x\nVARS 1\nCONS 0\nOBJ\n1 3 1\nEND\n";
    CHECK(mmr_instance_parse(flipped, &inst.ptr) == MMR_ERROR_MALFORMED);
}

TEST_CASE("every algorithm solves the worked example to z = 1") {
    Instance inst;
    REQUIRE(mmr_instance_parse(kEx1, &inst.ptr) == MMR_OK);
    mmr_solve_options opt;
    mmr_solve_options_init(&opt);

    for (const char* algo : {"bda", "amu", "sba", "brute"}) {
        Report rep;
        REQUIRE(mmr_solve(inst.ptr, algo, &opt, &rep.ptr) == MMR_OK);
        CHECK(mmr_report_z(rep.ptr) == doctest::Approx(1.0));
        CHECK(mmr_report_has_solution(rep.ptr) == 1);
        int bits[2] = {-1, -1};
        CHECK(mmr_report_solution(rep.ptr, bits, 2) == 2);
        CHECK(bits[0] + bits[1] >= 1);
    }

    Report rep;
    CHECK(mmr_solve(inst.ptr, "nope", &opt, &rep.ptr) == MMR_ERROR_INVALID_ARG);
}

TEST_CASE("decomposition report carries bounds and counters") {
    Instance inst;
    REQUIRE(mmr_instance_parse(kEx1, &inst.ptr) == MMR_OK);
    mmr_solve_options opt;
    mmr_solve_options_init(&opt);
    Report rep;
    REQUIRE(mmr_solve(inst.ptr, "bda", &opt, &rep.ptr) == MMR_OK);
    CHECK(std::string(mmr_report_status(rep.ptr)) == "optimal");
    double lb = -1.0;
    REQUIRE(mmr_report_lower_bound(rep.ptr, &lb) == 1);
    CHECK(lb == doctest::Approx(1.0));
    CHECK(mmr_report_iterations(rep.ptr) == 2);
    CHECK(mmr_report_cuts(rep.ptr) == 2);
    CHECK(mmr_report_wall_ms(rep.ptr) >= 0.0);
}

TEST_CASE("regret audit through the C surface") {
    Instance inst;
    REQUIRE(mmr_instance_parse(kEx1, &inst.ptr) == MMR_OK);
    const int x[2] = {1, 0};
    mmr_regret* raw = nullptr;
    REQUIRE(mmr_evaluate_regret(inst.ptr, x, 2, 60.0, &raw) == MMR_OK);
    CHECK(mmr_regret_z(raw) == doctest::Approx(1.0));
    CHECK(mmr_regret_f_x(raw) == doctest::Approx(3.0));
    CHECK(mmr_regret_f_star(raw) == doctest::Approx(2.0));
    CHECK(mmr_regret_exact(raw) == 1);
    int adv[2];
    REQUIRE(mmr_regret_adversary(raw, adv, 2) == 2);
    CHECK(adv[0] == 0);
    CHECK(adv[1] == 1);
    double costs[2];
    REQUIRE(mmr_regret_worst_scenario(raw, costs, 2) == 2);
    CHECK(costs[0] == doctest::Approx(3.0));
    CHECK(costs[1] == doctest::Approx(2.0));
    mmr_regret_free(raw);

    const int infeasible[2] = {0, 0};
    mmr_regret* bad = nullptr;
    CHECK(mmr_evaluate_regret(inst.ptr, infeasible, 2, 60.0, &bad) == MMR_ERROR_INVALID_ARG);
}

TEST_CASE("generator is deterministic through the C surface") {
    mmr_generator_params params;
    mmr_generator_params_init(&params);
    params.n = 8;
    params.m = 4;
    params.seed = 99;

    Instance a, b;
    REQUIRE(mmr_instance_generate(&params, &a.ptr) == MMR_OK);
    REQUIRE(mmr_instance_generate(&params, &b.ptr) == MMR_OK);
    char* ta = nullptr;
    char* tb = nullptr;
    REQUIRE(mmr_instance_write(a.ptr, &ta) == MMR_OK);
    REQUIRE(mmr_instance_write(b.ptr, &tb) == MMR_OK);
    CHECK(std::string(ta) == std::string(tb));
    mmr_string_free(ta);
    mmr_string_free(tb);

    params.n = 0;
    Instance bad;
    CHECK(mmr_instance_generate(&params, &bad.ptr) == MMR_ERROR_INVALID_ARG);
}

TEST_CASE("bench over files plus compare over the CSV") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "mmrilp_capi_bench";
    fs::create_directories(dir);

    mmr_generator_params params;
    mmr_generator_params_init(&params);
    std::vector<std::string> paths;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        params.n = 7;
        params.m = 3;
        params.seed = seed;
        Instance inst;
        REQUIRE(mmr_instance_generate(&params, &inst.ptr) == MMR_OK);
        char* text = nullptr;
        REQUIRE(mmr_instance_write(inst.ptr, &text) == MMR_OK);
        const fs::path file = dir / ("s" + std::to_string(seed) + ".rilp");
        std::ofstream out(file);
        out << text;
        mmr_string_free(text);
        paths.push_back(file.string());
    }

    std::vector<const char*> cpaths;
    for (const std::string& p : paths) cpaths.push_back(p.c_str());

    char* csv = nullptr;
    char* summary = nullptr;
    int errors = -1;
    REQUIRE(mmr_bench_run(cpaths.data(), static_cast<int>(cpaths.size()), "bda,amu,sba", 60.0,
                          "bda", 1, &csv, &summary, &errors) == MMR_OK);
    REQUIRE(csv != nullptr);
    REQUIRE(summary != nullptr);
    CHECK(errors == 0);
    CHECK(std::string(summary).find("wilcoxon") != std::string::npos);

    char* cmp_summary = nullptr;
    double w = -1.0;
    double p = -1.0;
    REQUIRE(mmr_compare_csv(csv, "bda", "amu", "sba", &cmp_summary, &w, &p) == MMR_OK);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    mmr_string_free(cmp_summary);

    CHECK(mmr_compare_csv("bogus", "bda", "amu", "sba", &cmp_summary, &w, &p) ==
          MMR_ERROR_PARSE);

    mmr_string_free(csv);
    mmr_string_free(summary);
    fs::remove_all(dir);
}

TEST_CASE("unreadable instance files become error records, not batch failures") {
    const char* missing = "/nonexistent/nowhere.rilp";
    char* csv = nullptr;
    int errors = 0;
    REQUIRE(mmr_bench_run(&missing, 1, "bda,amu", 10.0, "bda", 1, &csv, nullptr, &errors) ==
            MMR_OK);
    REQUIRE(csv != nullptr);
    CHECK(errors == 2);  // one per requested algorithm
    CHECK(std::string(csv).find("error") != std::string::npos);
    mmr_string_free(csv);
}
