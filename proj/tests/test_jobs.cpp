#include "dyndeg/error.hpp"
#include "dyndeg/jobs.hpp"

#include <doctest.h>

using namespace dyndeg;
using nlohmann::json;

namespace {

std::string error_of(const std::string &text) {
    try {
        parse_job_text(text);
    } catch (const InvalidArgument &e) {
        return e.what();
    }
    return "";
}

template <typename Report> void round_trip(const Report &r) {
    const std::string text = to_json_text(r);
    const Report back = json::parse(text).get<Report>();
    CHECK(back == r);
    CHECK(to_json_text(back) == text);
}

const char *kFibered = R"({"type": "monomial", "matrix": [[2, 0], [1, 3]], "fibration_dim": 1, "n_max": 30})";
const char *kSkew = R"({"type": "rational", "factors": [1, 1], "fibration_dim": 1,
  "components": [["x0^3", "x1^3"], ["x0*y0^2", "x0*y1^2 + x1*y0^2"]], "n_max": 5})";

} // namespace

TEST_SUITE("jobs") {

TEST_CASE("parse diagnostics name the field") {
    CHECK(error_of("[1, 2]").find("JSON object") != std::string::npos);
    CHECK(error_of("{").find("not valid JSON") != std::string::npos);
    CHECK(error_of(R"({"matrix": [[1]]})").find("type") != std::string::npos);
    CHECK(error_of(R"({"type": "affine"})").find("type") != std::string::npos);
    CHECK(error_of(R"({"type": "monomial", "matrix": [[1]], "colour": 1})").find("colour") !=
          std::string::npos);
    CHECK(error_of(R"({"type": "monomial", "matrix": [[1, 2], [3]]})").find("matrix[1]") !=
          std::string::npos);
    CHECK(error_of(R"({"type": "monomial", "matrix": [[1, "a"], [3, 4]]})").find("matrix[0][1]") !=
          std::string::npos);
    CHECK(error_of(R"({"type": "monomial", "matrix": [[1, 2], [2, 4]]})").find("det") !=
          std::string::npos);
    CHECK(error_of(R"({"type": "monomial", "matrix": [[1]], "n_max": 0})").find("n_max") !=
          std::string::npos);
    CHECK(error_of(R"({"type": "monomial", "matrix": [[1]], "tolerance": -1})").find("tolerance") !=
          std::string::npos);
    CHECK(error_of(R"({"type": "rational", "factors": [1], "components": [["x0^2", "x9"]]})")
              .find("components[0][1]") != std::string::npos);
    CHECK(error_of(R"({"type": "rational", "factors": [1], "components": [["x0^2"]]})")
              .find("components[0]") != std::string::npos);
    CHECK(error_of(R"({"type": "rational", "factors": [1],
                       "components": [[{"coeffs": [[[1], 1]]}, "x1"]]})")
              .find("components[0][0].coeffs[0]") != std::string::npos);
}

TEST_CASE("fibration errors are validation errors") {
    CHECK_THROWS_AS(parse_job_text(R"({"type": "monomial", "matrix": [[2, 1], [1, 1]], "fibration_dim": 1})"),
                    FibrationError);
}

TEST_CASE("both polynomial encodings parse to the same map") {
    const JobSpec a = parse_job_text(kSkew);
    const JobSpec b = parse_job_text(R"({"type": "rational", "factors": [1, 1], "fibration_dim": 1,
      "components": [[{"coeffs": [[[3, 0, 0, 0], 1]]}, "x1^3"],
                     ["x0*y0^2", {"coeffs": [[[1, 0, 0, 2], 1], [[0, 1, 2, 0], 1]]}]]})");
    CHECK(build_rational(a) == build_rational(b));
}

TEST_CASE("defaults") {
    const JobSpec m = parse_job_text(R"({"type": "monomial", "matrix": [[1]]})");
    CHECK(m.n_max == 40);
    CHECK(m.tolerance == 5e-2);
    CHECK(m.oracle_tolerance == 1e-9);
    const JobSpec r = parse_job_text(R"({"type": "rational", "factors": [1], "components": [["x0", "x1"]]})");
    CHECK(r.n_max == kDefaultIterations);
    const JobSpec s = parse_suite_job(json::object());
    CHECK(s.count == 100);
    CHECK(s.k_max == 5);
    CHECK_THROWS_AS(parse_suite_job(json{{"matrix", json::array()}}), InvalidArgument);
}

TEST_CASE("degrees report for the golden mean map") {
    const DegreesReport r = cmd_degrees(parse_job_text(R"({"type": "monomial", "matrix": [[2, 1], [1, 1]]})"));
    REQUIRE(r.oracle);
    CHECK(r.oracle->degrees[1] == doctest::Approx(2.6180339887).epsilon(1e-10));
    REQUIRE(r.profile.degrees[1]);
    CHECK(r.profile.degrees[1]->value == doctest::Approx(2.6180).epsilon(1e-4));
    CHECK(r.profile.degrees[1]->converged);
    CHECK(render_table(r).find("CONVERGED") != std::string::npos);
    round_trip(r);
}

TEST_CASE("identity map has all degrees 1") {
    const DegreesReport r = cmd_degrees(parse_job_text(R"({"type": "monomial", "matrix": [[1, 0], [0, 1]]})"));
    for (const auto &d : r.profile.degrees)
        CHECK(d->value == 1.0);
}

TEST_CASE("verify-product on the worked example") {
    const VerifyReport r = cmd_verify_product(parse_job_text(kFibered));
    CHECK(r.verdict == Verdict::pass);
    REQUIRE(r.oracle_level);
    CHECK(r.oracle_level->rows[1].lhs == doctest::Approx(3.0));
    CHECK(r.oracle_level->rows[1].rhs == doctest::Approx(3.0));
    CHECK(r.oracle_level->rows[1].argmax == std::vector<int>{0});
    round_trip(r);
}

TEST_CASE("verify-product needs a fibration") {
    CHECK_THROWS_AS(cmd_verify_product(parse_job_text(R"({"type": "monomial", "matrix": [[2, 1], [1, 1]]})")),
                    FibrationError);
}

TEST_CASE("rational reports") {
    const DegreesReport d = cmd_degrees(parse_job_text(
        R"({"type": "rational", "factors": [2], "components": [["x1*x2", "x0*x2", "x0*x1"]], "n_max": 6})"));
    REQUIRE(d.multidegrees.size() == 7);
    CHECK(d.profile.degrees[1]->value == 1.0);
    CHECK(render_table(d).find("2,1,2,1,2,1") != std::string::npos);
    round_trip(d);
    const VerifyReport v = cmd_verify_product(parse_job_text(kSkew));
    CHECK_FALSE(v.oracle_level);
    round_trip(v);
}

TEST_CASE("sequence report and CSV") {
    const SequenceReport s = cmd_sequence(parse_job_text(kFibered));
    round_trip(s);
    const std::string csv = to_csv(s);
    CHECK(csv.rfind("p,n,lambda_p,root_est,ratio_est\n", 0) == 0);
    CHECK(csv.find("\n1,3,54,") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    CHECK(to_json_text(cmd_degrees(parse_job_text(kFibered))) ==
          to_json_text(cmd_degrees(parse_job_text(kFibered))));
    JobSpec suite = parse_suite_job(json{{"count", 15}, {"seed", 5}});
    const SuiteReport a = cmd_suite(suite);
    const SuiteReport b = cmd_suite(suite);
    CHECK(to_json_text(a) == to_json_text(b));
    CHECK(to_csv(a) == to_csv(b));
    round_trip(a);
    suite.seed = 6;
    CHECK(to_json_text(cmd_suite(suite)) != to_json_text(a));
}

TEST_CASE("short suites are inconclusive, not failing") {
    const SuiteReport r = cmd_suite(parse_suite_job(json{{"count", 20}, {"n_max", 2}}));
    CHECK(r.ok);
    for (const auto &p : r.properties)
        if (p.name == "engine_vs_oracle")
            CHECK(p.passed == 0);
}

}
