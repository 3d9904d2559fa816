#include <doctest.h>

#include <sstream>
#include <string>

#include <json.hpp>

#include "bvpkit/io.hpp"

using bvp::Lp;
using bvp::Matrix;
using nlohmann::json;

namespace {

const std::string kDataDir = BVPKIT_TEST_DATA_DIR;

json minimal_problem() {
    return json::parse(R"({
      "dims": {"m": 1, "r": 1, "n": 0, "l": 1, "p": 2},
      "interval": [0.0, 2.0],
      "coefficients": [{"order": 0, "kind": "constant", "data": [[1.0]]}],
      "rhs": {"kind": "constant", "data": [[0.0]]},
      "boundary": {"alphas": [[[1.0]]], "phi": null},
      "c": [[2.5, -1.0]]
    })");
}

}  // namespace

TEST_CASE("example files load with the declared shapes") {
    const bvp::BVProblem p = bvp::load_problem(kDataDir + "/example1_scalar.json");
    CHECK(p.dims.m == 1);
    CHECK(p.dims.r == 1);
    CHECK(p.dims.n == 2);
    CHECK(p.dims.l == 1);
    CHECK(p.dims.p == Lp::Two);
    CHECK(p.interval.a == 0.0);
    CHECK(p.interval.b == 1.0);
    REQUIRE(p.boundary.alphas.size() == 3);
    CHECK(p.boundary.alphas[1](0, 0) == bvp::Complex(3.0));
    CHECK_FALSE(p.boundary.phi.has_value());
    CHECK(p.c(0) == bvp::Complex(1.0));

    const bvp::BVProblem q = bvp::load_problem(kDataDir + "/twopoint.json");
    CHECK(q.dims.r == 2);
    REQUIRE(q.boundary.phi.has_value());
    CHECK(q.boundary.phi->rows() == 2);
}

TEST_CASE("complex entries parse from pairs and numbers") {
    const bvp::BVProblem p = bvp::problem_from_json(minimal_problem());
    CHECK(p.c(0) == bvp::Complex(2.5, -1.0));
}

TEST_CASE("norm exponent accepts 1, 2, and inf spellings") {
    json j = minimal_problem();
    j["dims"]["p"] = 1;
    CHECK(bvp::problem_from_json(j).dims.p == Lp::One);
    j["dims"]["p"] = "inf";
    CHECK(bvp::problem_from_json(j).dims.p == Lp::Inf);
    j["dims"]["p"] = "3";
    CHECK_THROWS_AS(bvp::problem_from_json(j), bvp::SchemaError);
}

TEST_CASE("missing keys raise schema errors that name the path") {
    json j = minimal_problem();
    j.erase("boundary");
    try {
        bvp::problem_from_json(j);
        FAIL("expected a schema error");
    } catch (const bvp::SchemaError& e) {
        CHECK(std::string(e.what()).find("boundary") != std::string::npos);
    }
}

TEST_CASE("malformed example file is rejected with exit-code semantics") {
    CHECK_THROWS_AS(bvp::load_problem(kDataDir + "/malformed.json"), bvp::SchemaError);
    CHECK_THROWS_AS(bvp::load_problem(kDataDir + "/does_not_exist.json"), bvp::SchemaError);
}

TEST_CASE("duplicate coefficient orders are rejected") {
    json j = minimal_problem();
    j["dims"]["r"] = 2;
    j["dims"]["n"] = 0;
    j["coefficients"] = json::array({
        json{{"order", 0}, {"kind", "constant"}, {"data", {{0.0}}}},
        json{{"order", 0}, {"kind", "constant"}, {"data", {{1.0}}}},
    });
    j["boundary"]["alphas"] = json::array({{{1.0}}, {{0.0}}});
    CHECK_THROWS_AS(bvp::problem_from_json(j), bvp::SchemaError);
}

TEST_CASE("wrong alpha count is named in the error") {
    json j = minimal_problem();
    j["boundary"]["alphas"] = json::array({{{1.0}}, {{0.0}}});  // 2 given, 1 expected
    try {
        bvp::problem_from_json(j);
        FAIL("expected a schema error");
    } catch (const bvp::SchemaError& e) {
        CHECK(std::string(e.what()).find("alphas") != std::string::npos);
    }
}

TEST_CASE("sampled descriptors parse points and values") {
    json j = minimal_problem();
    j["coefficients"][0] = json{
        {"order", 0},
        {"kind", "sampled"},
        {"data", {{"points", {0.0, 1.0, 2.0}}, {"values", {{{1.0}}, {{2.0}}, {{0.5}}}}}}};
    const bvp::BVProblem p = bvp::problem_from_json(j);
    CHECK(p.coefficients[0].kind() == bvp::MatrixFunction::Kind::Sampled);
    CHECK(std::abs(p.coefficients[0].eval(1.0)(0, 0).real() - 2.0) < 1e-14);
}

TEST_CASE("family schedules expand geometrically or verbatim") {
    json j;
    j["base"] = minimal_problem();
    j["schedule"] = json{{"start", 0.5}, {"factor", 0.5}, {"count", 3}};
    bvp::ProblemFamily family = bvp::family_from_json(j);
    REQUIRE(family.schedule.size() == 3);
    CHECK(family.schedule[0] == doctest::Approx(0.5));
    CHECK(family.schedule[2] == doctest::Approx(0.125));

    j["schedule"] = json::array({0.3, 0.1, 0.05});
    family = bvp::family_from_json(j);
    REQUIRE(family.schedule.size() == 3);
    CHECK(family.schedule[1] == 0.1);

    j["schedule"] = json{{"start", 0.5}, {"factor", 1.5}, {"count", 3}};
    CHECK_THROWS_AS(bvp::family_from_json(j), bvp::SchemaError);
    j["schedule"] = json::array({0.3, -0.1});
    CHECK_THROWS_AS(bvp::family_from_json(j), bvp::SchemaError);
}

TEST_CASE("family perturbations parse with shape checks") {
    json j;
    j["base"] = minimal_problem();
    j["schedule"] = json::array({0.1, 0.01});
    j["perturbations"] = json{
        {"coefficients", json::array({json{
            {"order", 0}, {"kind", "constant"}, {"data", {{0.5}}}}})},
        {"c", json::array({1.0})}};
    const bvp::ProblemFamily family = bvp::family_from_json(j);
    REQUIRE(family.coefficient_deltas.size() == 1);
    CHECK(family.coefficient_deltas[0].has_value());
    CHECK(family.c_delta.size() == 1);

    json bad = j;
    bad["perturbations"]["c"] = json::array({1.0, 2.0});  // l = 1
    CHECK_THROWS_AS(bvp::family_from_json(bad), bvp::SchemaError);
}

TEST_CASE("scientific formatting carries 17 significant digits") {
    CHECK(bvp::format_sci(1.0) == "1.0000000000000000e+00");
    CHECK(bvp::format_sci(-0.1) == "-1.0000000000000001e-01");
    CHECK(bvp::format_sci(2.718281828459045) == "2.7182818284590451e+00");
}

TEST_CASE("matrix CSV output is deterministic") {
    Matrix m(1, 2);
    m << bvp::Complex(1.0 / 3.0, -2.0), bvp::Complex(0.0, 5e-17);
    std::ostringstream a, b;
    bvp::write_matrix_csv(a, m);
    bvp::write_matrix_csv(b, m);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("c0_re,c0_im,c1_re,c1_im\n") == 0);
    CHECK(a.str().find("3.3333333333333331e-01") != std::string::npos);
}

TEST_CASE("trajectory CSV carries node abscissae and jet columns") {
    const bvp::Grid grid(bvp::Interval{0.0, 1.0}, 2);
    bvp::Trajectory y(grid, 1, 1, 1);
    y.value_mut(0, 1)(0, 0) = bvp::Complex(0.5, 0.25);
    std::ostringstream os;
    bvp::write_trajectory_csv(os, y);
    const std::string s = os.str();
    CHECK(s.find("t,d0_0_re,d0_0_im,d1_0_re,d1_0_im\n") == 0);
    CHECK(s.find("5.0000000000000000e-01,5.0000000000000000e-01,2.5000000000000000e-01")
          != std::string::npos);
}
