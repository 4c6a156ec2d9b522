#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "mmr/brute_force.hpp"
#include "mmr/instance_io.hpp"

using namespace mmr;

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "tests/fixtures"
#endif

namespace {

std::string read_fixture(const char* name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool structurally_equal(const IntervalIlpInstance& a, const IntervalIlpInstance& b) {
    return a.name == b.name && a.lower == b.lower && a.upper == b.upper &&
           a.constraints == b.constraints;
}

}  // namespace

TEST_CASE("fixture parses into the worked example") {
    const IntervalIlpInstance parsed = parse_rilp(read_fixture("ex1.rilp"));
    CHECK(structurally_equal(parsed, normalize(test::ex1())));
    CHECK(parsed.name == "ex1");
    CHECK(parsed.num_vars() == 2);
}

TEST_CASE("writer reproduces the fixture byte for byte") {
    CHECK(write_rilp(test::ex1()) == read_fixture("ex1.rilp"));
}

TEST_CASE("GE and EQ input rows serialize in LE normal form") {
    IntervalIlpInstance inst = test::ex1();
    inst.constraints[0].terms = {{0, 1.0}, {1, 1.0}};
    inst.constraints[0].sense = Sense::GE;
    inst.constraints[0].rhs = 1.0;
    CHECK(write_rilp(inst) == read_fixture("ex1.rilp"));

    inst.constraints[0].sense = Sense::EQ;
    const std::string text = write_rilp(inst);
    CHECK(text.find("GE") == std::string::npos);
    CHECK(text.find("EQ") == std::string::npos);
    CHECK(parse_rilp(text).constraints.size() == 2);
}

TEST_CASE("parse errors carry line numbers") {
    const std::string good = read_fixture("ex1.rilp");

    // missing END
    const std::string no_end = good.substr(0, good.find("END"));
    CHECK_THROWS_AS(parse_rilp(no_end), ParseError);

    // trailing content
    CHECK_THROWS_AS(parse_rilp(good + "extra\n"), ParseError);

    // exponent notation is rejected
    std::string exponent = good;
    exponent.replace(exponent.find("1 1 3"), 5, "1 1e0 3");
    CHECK_THROWS_AS(parse_rilp(exponent), ParseError);

    // bad header
    CHECK_THROWS_AS(parse_rilp("RILP 2\n"), ParseError);

    try {
        parse_rilp(no_end);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() > 0);
    }
}

TEST_CASE("semantic violations raise MalformedInstance") {
    std::string flipped = read_fixture("ex1.rilp");
    flipped.replace(flipped.find("1 1 3"), 5, "1 3 1");  // l > u
    CHECK_THROWS_AS(parse_rilp(flipped), MalformedInstance);

    std::string bad_index = read_fixture("ex1.rilp");
    bad_index.replace(bad_index.find("2 -1"), 4, "3 -1");
    CHECK_THROWS_AS(parse_rilp(bad_index), MalformedInstance);
}

TEST_CASE("comments and blank lines are ignored") {
    const std::string text = "# preamble\nRILP 1\n\nNAME c  # trailing\nVARS 1\nCONS 0\nOBJ\n"
                             "1 0 1\nEND\n";
    const IntervalIlpInstance inst = parse_rilp(text);
    CHECK(inst.name == "c");
    CHECK(inst.num_vars() == 1);
}

TEST_CASE("round-trip equals normalize on generated instances") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        GeneratorParams params;
        params.n = 4 + static_cast<int>(seed % 9);
        params.m = static_cast<int>(seed % 5);
        params.seed = seed;
        const IntervalIlpInstance inst = generate_instance(params);
        const IntervalIlpInstance round = parse_rilp(write_rilp(inst));
        CHECK(structurally_equal(round, normalize(inst)));
    }
}

TEST_CASE("generation is deterministic in the seed") {
    GeneratorParams params;
    params.n = 12;
    params.m = 6;
    params.seed = 424242;
    const IntervalIlpInstance a = generate_instance(params);
    const IntervalIlpInstance b = generate_instance(params);
    CHECK(structurally_equal(a, b));
    CHECK(write_rilp(a) == write_rilp(b));

    params.seed = 424243;
    CHECK_FALSE(structurally_equal(a, generate_instance(params)));
}

TEST_CASE("generated instances are well formed and feasible") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GeneratorParams params;
        params.n = 8;
        params.m = 4;
        params.seed = seed;
        const IntervalIlpInstance inst = generate_instance(params);
        CHECK_NOTHROW(validate_instance(inst));
        for (int i = 0; i < inst.num_vars(); ++i) {
            CHECK(inst.lower[i] <= inst.upper[i]);
            CHECK(inst.lower[i] >= 0.0);
        }
        // The covering construction keeps the all-ones solution feasible.
        BinarySolution ones;
        ones.x.assign(inst.num_vars(), 1);
        CHECK(is_feasible(inst, ones));
        CHECK_FALSE(enumerate_feasible(inst).empty());
    }
}

TEST_CASE("vanishing spread collapses the intervals") {
    GeneratorParams params;
    params.n = 6;
    params.m = 3;
    params.rho = 1e-9;
    params.seed = 5;
    const IntervalIlpInstance inst = generate_instance(params);
    for (int i = 0; i < inst.num_vars(); ++i) {
        CHECK(inst.upper[i] - inst.lower[i] <= 2e-9 * inst.upper[i] + 1e-6);
    }
}

TEST_CASE("generator rejects invalid parameters") {
    GeneratorParams params;
    params.n = 0;
    CHECK_THROWS_AS(generate_instance(params), InvalidParams);
    params = GeneratorParams{};
    params.density = 0.0;
    CHECK_THROWS_AS(generate_instance(params), InvalidParams);
    params = GeneratorParams{};
    params.c_min = 5;
    params.c_max = 4;
    CHECK_THROWS_AS(generate_instance(params), InvalidParams);
}
