// End-to-end checks of the command-line binary: spawns the real executable
// and asserts on exit codes and output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

#ifndef CLI_BIN
#error "CLI_BIN must point at the built binary"
#endif
#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must point at tests/fixtures"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CLI_BIN) + " " + args + " 2>&1";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) {
        res.output.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fixture(const char* name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "mmrilp_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("solve bda on the worked example") {
    const RunResult res = run("solve " + fixture("ex1.rilp") + " --algo bda");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("status      optimal") != std::string::npos);
    CHECK(res.output.find("z           1") != std::string::npos);
}

TEST_CASE("solve with explain prints the adversary") {
    const RunResult res = run("solve " + fixture("ex1.rilp") + " --algo amu --explain");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("adversary") != std::string::npos);
    CHECK(res.output.find("worst_scenario") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("solve " + fixture("ex1.rilp") + " --algo sba --sba-gamma 0").exit_code == 2);
    CHECK(run("solve " + fixture("missing.rilp") + " --algo amu").exit_code == 2);
    CHECK(run("solve " + fixture("ex1.rilp") + " --algo nope").exit_code == 2);
    CHECK(run("generate --vars 0 --cons 2 -o -").exit_code == 2);
}

TEST_CASE("generate is deterministic and writes parseable files") {
    const auto dir = temp_dir();
    const std::string a = (dir / "a.rilp").string();
    const std::string b = (dir / "b.rilp").string();
    CHECK(run("generate --vars 10 --cons 5 --seed 7 -o " + a).exit_code == 0);
    CHECK(run("generate --vars 10 --cons 5 --seed 7 -o " + b).exit_code == 0);

    std::ifstream fa(a), fb(b);
    const std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    const std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(ca == cb);
    CHECK_FALSE(ca.empty());

    const RunResult to_stdout = run("generate --vars 4 --cons 2 --spread 0.5 --seed 7 -o -");
    CHECK(to_stdout.exit_code == 0);
    CHECK(to_stdout.output.rfind("RILP 1", 0) == 0);

    const RunResult solved = run("solve " + a + " --algo bda");
    CHECK(solved.exit_code == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("bench a directory and compare the results") {
    const auto dir = temp_dir() / "suite";
    std::filesystem::create_directories(dir);
    for (int seed : {1, 2, 3}) {
        const std::string path = (dir / ("i" + std::to_string(seed) + ".rilp")).string();
        REQUIRE(run("generate --vars 7 --cons 3 --seed " + std::to_string(seed) + " -o " + path)
                    .exit_code == 0);
    }
    const std::string csv = (dir / "r.csv").string();
    const RunResult bench = run("bench " + dir.string() +
                                " --algos bda,amu,sba --time-limit 60 --out " + csv);
    CHECK(bench.exit_code == 0);
    CHECK(bench.output.find("dev (%)") != std::string::npos);

    std::ifstream check(csv);
    std::string header;
    std::getline(check, header);
    CHECK(header == "instance,algorithm,status,z,lower_bound,gap,time_ms,seed");

    const RunResult cmp = run("compare " + csv);
    CHECK(cmp.exit_code == 0);
    CHECK(cmp.output.find("significant") != std::string::npos);

    // baseline missing from --algos
    CHECK(run("bench " + dir.string() + " --algos amu --baseline bda --out " + csv).exit_code ==
          2);
    std::filesystem::remove_all(dir.parent_path());
}

TEST_CASE("bench of an empty directory succeeds with a header-only csv") {
    const auto dir = temp_dir() / "empty";
    std::filesystem::create_directories(dir);
    const std::string csv = (dir / "out.csv").string();
    const RunResult res = run("bench " + dir.string() + " --out " + csv);
    CHECK(res.exit_code == 0);
    std::ifstream check(csv);
    std::string header;
    std::getline(check, header);
    CHECK(header == "instance,algorithm,status,z,lower_bound,gap,time_ms,seed");
    std::filesystem::remove_all(dir.parent_path());
}

TEST_CASE("compare rejects a csv with a broken schema") {
    const auto dir = temp_dir();
    const std::string bad = (dir / "bad.csv").string();
    std::ofstream out(bad);
    out << "instance,algorithm\n";
    out.close();
    CHECK(run("compare " + bad).exit_code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("time limit without an incumbent exits with 3") {
    // 80 variables and one covering row: the 0-first depth-first search
    // cannot reach any leaf before the first clock check at 64 nodes, so a
    // zero budget leaves the seed solve without an incumbent.
    const auto dir = temp_dir();
    const std::string path = (dir / "deep.rilp").string();
    std::ofstream out(path);
    out << "RILP 1\nNAME deep\nVARS 80\nCONS 1\nOBJ\n";
    for (int i = 1; i <= 80; ++i) out << i << " 1 2\n";
    out << "ROW 1 GE 13\n";
    for (int i = 1; i <= 80; ++i) out << i << " 1\n";
    out << "END\n";
    out.close();
    const RunResult res = run("solve " + path + " --algo bda --time-limit 0");
    CHECK(res.exit_code == 3);
    CHECK(res.output.find("time_limit") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("solve appends a csv record on request") {
    const auto dir = temp_dir();
    const std::string csv = (dir / "solve.csv").string();
    CHECK(run("solve " + fixture("ex1.rilp") + " --algo bda --out " + csv).exit_code == 0);
    CHECK(run("solve " + fixture("ex1.rilp") + " --algo amu --out " + csv).exit_code == 0);
    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "instance,algorithm,status,z,lower_bound,gap,time_ms,seed");
    int rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("infeasible instances exit with 1") {
    const auto dir = temp_dir();
    const std::string path = (dir / "infeasible.rilp").string();
    std::ofstream out(path);
    out << "RILP 1\nNAME inf\nVARS 2\nCONS 2\nOBJ\n1 1 3\n2 2 2\n"
           "ROW 1 LE -1\n1 -1\n2 -1\nROW 2 LE 0\n1 1\n2 1\nEND\n";
    out.close();
    for (const char* algo : {"bda", "amu", "brute"}) {
        const RunResult res = run("solve " + path + " --algo " + algo);
        CHECK(res.exit_code == 1);
    }
    std::filesystem::remove_all(dir);
}
