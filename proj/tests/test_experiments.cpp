#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "effbayes/errors.hpp"
#include "effbayes/experiments.hpp"

using namespace effbayes;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::filesystem::path scratch(const std::string& leaf) {
    return std::filesystem::temp_directory_path() / ("effbayes_test_" + leaf);
}

ExperimentConfig config_from(const char* text) {
    ExperimentConfig c = ExperimentConfig::from_json(Json::parse(text));
    c.out_dir = scratch(c.experiment);
    return c;
}

}  // namespace

TEST_CASE("json round trips: rationals, points, priors, models") {
    CHECK(rational_from_json(rational_to_json(Q("22/7"))) == Q("22/7"));
    CHECK(rational_from_json(Json(3)) == Rational(3));

    for (const ParameterPoint& p :
         {ParameterPoint(UnitPoint{Q("1/3")}),
          ParameterPoint(SimplexPoint::geometric(Q("1/2"), Q("1/2"))),
          ParameterPoint(SimplexPoint::finite({Q("1/2"), Q("1/2"), Rational(0)})),
          ParameterPoint(CantorPoint::eventually_constant({1, 0, 1}, 0))}) {
        auto back = point_from_json(point_to_json(p));
        auto eq = points_equal(p, back);
        REQUIRE(eq.has_value());
        CHECK(*eq);
    }

    for (const auto& m : builtin_models()) {
        ModelDescription back = model_from_json(model_to_json(m));
        CHECK(back.family == m.family);
        CHECK(back.prior.is_atomic() == m.prior.is_atomic());
        // spot-check a likelihood value through the round trip
        if (m.family == "bernoulli_product") {
            CHECK(back.likelihood.eval(UnitPoint{Q("1/3")}, {1, 0}) ==
                  m.likelihood.eval(UnitPoint{Q("1/3")}, {1, 0}));
        }
    }

    CHECK_THROWS_AS(point_from_json(Json{{"space", "unit"}, {"value", "1/2"}, {"junk", 1}}), ConfigError);
}

TEST_CASE("config parsing: validation and unknown keys") {
    ExperimentConfig c = config_from(R"({"experiment":"suite","seed":7,"horizon":12,"replicas":3,"precision":8})");
    CHECK(c.experiment == "suite");
    CHECK(c.seed == 7);
    CHECK(c.horizon == 12);

    CHECK_THROWS_AS(config_from(R"({"horizon":5})"), ConfigError);
    CHECK_THROWS_AS(config_from(R"({"experiment":"suite","horizon":0})"), ConfigError);
    CHECK_THROWS_AS(config_from(R"({"experiment":"suite","precision":2})"), ConfigError);
    CHECK_THROWS_AS(run_experiment(config_from(R"({"experiment":"suite","bogus":1})")), ConfigError);
    CHECK_THROWS_AS(run_experiment(config_from(R"({"experiment":"nope"})")), ConfigError);
}

TEST_CASE("doob experiment: small run converges and caches exactly") {
    ExperimentConfig c = config_from(
        R"({"experiment":"doob","horizon":400,"replicas":12,"seed":11,"thetas":["2/3","1/3"],"out":"ignored"})");
    RunReport r = run_doob(c);
    REQUIRE(r.rows.size() == 2);
    for (const auto& row : r.rows) {
        CHECK(row.holds);
        CHECK(row.name == "doob-consistency");
    }
    CHECK_FALSE(r.trajectories.empty());
    // trajectories of theta=2/3 end near 1
    for (const auto& t : r.trajectories) {
        if (t.n == 400 && t.event_id.find("theta=2/3") != std::string::npos) {
            CHECK(t.value > Q("9/10"));
        }
        if (t.n == 400 && t.event_id.find("theta=1/3") != std::string::npos) {
            CHECK(t.value < Q("1/10"));
        }
    }
}

TEST_CASE("freedman experiment: exactness and cdf bands at small scale") {
    ExperimentConfig c = config_from(
        R"({"experiment":"freedman","horizon":120,"replicas":400,"seed":5,"out":"ignored"})");
    RunReport r = run_freedman(c);
    bool saw_exact = false, saw_cert = false;
    for (const auto& row : r.rows) {
        CHECK(row.holds);
        saw_exact = saw_exact || row.name == "freedman-exact-after-hit";
        if (row.name == "freedman-certificate") {
            saw_cert = true;
            CHECK(row.lhs == (Q("25/27").pow(27)).to_string());
        }
    }
    CHECK(saw_exact);
    CHECK(saw_cert);
    CHECK(std::filesystem::exists(scratch("freedman") / "freedman_certificate.json"));
}

TEST_CASE("reversal experiment: all checks hold") {
    ExperimentConfig c = config_from(R"({"experiment":"reversal","horizon":5,"seed":3,"out":"ignored"})");
    RunReport r = run_reversal(c);
    CHECK(r.all_hold());
    bool saw_equality = false;
    for (const auto& row : r.rows) saw_equality = saw_equality || row.name == "reversal-copy-equality";
    CHECK(saw_equality);
}

TEST_CASE("suite: green by default, red under fault injection") {
    ExperimentConfig c = config_from(R"({"experiment":"suite","seed":2,"out":"ignored"})");
    // keep the expensive sections small here; acceptance runs them in full
    c.payload["sections"] = Json::array({"sigma2", "normalization", "cond-exp"});
    RunReport r = run_suite(c);
    CHECK(r.all_hold());

    ExperimentConfig bad = c;
    bad.inject_fault = true;
    RunReport rb = run_suite(bad);
    CHECK_FALSE(rb.all_hold());
}

TEST_CASE("reports are deterministic byte-for-byte") {
    ExperimentConfig c = config_from(
        R"({"experiment":"doob","horizon":60,"replicas":4,"seed":9,"thetas":["2/3"],"out":"ignored"})");
    RunReport r1 = run_doob(c);
    r1.write(scratch("det_a"), "doob");

    ExperimentConfig c2 = c;
    c2.out_dir = scratch("det_b");
    RunReport r2 = run_doob(c2);
    r2.write(scratch("det_b"), "doob");

    CHECK(slurp(scratch("det_a") / "doob_report.csv") == slurp(scratch("det_b") / "doob_report.csv"));
    CHECK(slurp(scratch("det_a") / "doob_trajectories.csv") == slurp(scratch("det_b") / "doob_trajectories.csv"));

    // a different seed changes the trajectories
    ExperimentConfig c3 = c;
    c3.seed = 10;
    c3.out_dir = scratch("det_c");
    RunReport r3 = run_doob(c3);
    r3.write(scratch("det_c"), "doob");
    CHECK(slurp(scratch("det_a") / "doob_trajectories.csv") != slurp(scratch("det_c") / "doob_trajectories.csv"));
}

TEST_CASE("exactness flags: num/den reproduce the decimal") {
    ExperimentConfig c = config_from(R"({"experiment":"suite","seed":2,"out":"ignored"})");
    c.payload["sections"] = Json::array({"sigma2"});
    RunReport r = run_suite(c);
    for (const auto& row : r.rows) {
        if (!row.exact) continue;
        Rational v = Rational::parse(row.lhs);
        CHECK(row.decimal == v.decimal_string(12));
    }
}
