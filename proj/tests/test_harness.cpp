#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "circfrechet/errors.hpp"
#include "circfrechet/harness.hpp"

using namespace circfr;

TEST_CASE("log-log slope fitting") {
  auto fit = fit_loglog_slope({{1.0, 1.0}, {10.0, 0.1}});
  CHECK(fit.slope == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-14));

  fit = fit_loglog_slope({{1.0, 2.0}, {10.0, 2.0}});
  CHECK(fit.slope == doctest::Approx(0.0).epsilon(1e-14));

  std::vector<std::pair<double, double>> pts;
  for (double n : {100.0, 300.0, 1000.0, 3000.0, 10000.0}) {
    pts.emplace_back(n, 3.0 * std::pow(n, -0.8));
  }
  fit = fit_loglog_slope(pts);
  CHECK(std::abs(fit.slope + 0.8) < 1e-12);
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-10));

  CHECK_THROWS_AS(fit_loglog_slope({{1.0, 1.0}}), DomainError);
  CHECK_THROWS_AS(fit_loglog_slope({{1.0, 1.0}, {2.0, -1.0}}), DomainError);
  CHECK_THROWS_AS(fit_loglog_slope({{1.0, 1.0}, {1.0, 2.0}}), DomainError);
}

TEST_CASE("experiment config validation") {
  ExperimentConfig c;
  c.estimator = EstimatorKind::LC;
  c.n_list = {100, 200};
  c.h_rule = {HRule::Type::PowerLaw, 0.0, 0.2, 1.0};
  c.reps = 2;
  CHECK_NOTHROW(c.validate());

  auto bad = c;
  bad.n_list = {200, 100};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = c;
  bad.reps = 1;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = c;
  bad.h_rule.gamma = 1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = c;
  bad.h_rule = {HRule::Type::Amise, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(bad.validate(), DomainError);  // AMISE rule is KDE-only
  bad.estimator = EstimatorKind::KDE;
  CHECK_NOTHROW(bad.validate());
  bad = c;
  bad.h_rule = {HRule::Type::Fixed, -0.5, 0.0, 0.0};
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("config json round trip") {
  const char* text = R"({
    "estimator": "ll",
    "kernel": "von_mises",
    "model": {"predictor": "vm:0,2", "truth": "sine", "noise_sigma": 0.15},
    "n_list": [100, 200, 400],
    "h_rule": {"type": "power_law", "gamma": 0.2, "c": 1.5},
    "reps": 3,
    "seed": 99,
    "query_angles": [0.0, 0.5]
  })";
  const auto c = ExperimentConfig::from_json(nlohmann::json::parse(text));
  CHECK(c.estimator == EstimatorKind::LL);
  CHECK(c.noise_sigma == 0.15);
  CHECK(c.n_list == std::vector<std::size_t>{100, 200, 400});
  CHECK(c.h_rule.c == 1.5);
  CHECK(c.query_angles == std::vector<double>{0.0, 0.5});
  const auto round = ExperimentConfig::from_json(c.to_json());
  CHECK(round.to_json() == c.to_json());
  CHECK_THROWS_AS(ExperimentConfig::from_json(nlohmann::json::parse(
                      R"({"estimator":"nope","model":{},"n_list":[10],
                          "h_rule":{"type":"fixed","h":0.3},"reps":2,"seed":1})")),
                  ParseError);
}

TEST_CASE("smallest valid experiment produces a full report") {
  ExperimentConfig c;
  c.estimator = EstimatorKind::KDE;
  c.density_model = "vm:0,1";
  c.n_list = {100, 200};
  c.h_rule = {HRule::Type::Fixed, 0.4, 0.0, 0.0};
  c.reps = 2;
  c.seed = 5;
  const auto report = run_rate_experiment(c);
  REQUIRE(report.points.size() == 2);
  CHECK(report.points[0].n == 100);
  CHECK(report.points[1].n == 200);
  CHECK(report.points[0].h == 0.4);
  CHECK(report.r_squared >= 0.0);
  CHECK(report.r_squared <= 1.0 + 1e-12);
  CHECK(report.theory_slope == -0.8);
  const auto j = report.to_json();
  CHECK(j.contains("config_echo"));
  CHECK(j["points"].size() == 2);
  CHECK(j["points"][0].contains("stderr"));
}

TEST_CASE("error decreases from the smallest to the largest n") {
  for (auto estimator : {EstimatorKind::KDE, EstimatorKind::LC, EstimatorKind::LL}) {
    ExperimentConfig c;
    c.estimator = estimator;
    c.n_list = {100, 1600};
    c.h_rule = {HRule::Type::PowerLaw, 0.0, 0.2, 1.0};
    c.reps = 20;
    c.seed = 1234;
    const auto report = run_rate_experiment(c);
    CHECK(report.points.back().error < report.points.front().error);
    CHECK(report.slope < 0.0);
  }
}

TEST_CASE("reports are identical across thread counts") {
  ExperimentConfig c;
  c.estimator = EstimatorKind::LL;
  c.n_list = {100, 200};
  c.h_rule = {HRule::Type::PowerLaw, 0.0, 0.2, 1.0};
  c.reps = 6;
  c.seed = 77;
  setenv("CIRC_THREADS", "1", 1);
  const auto serial = run_rate_experiment(c).to_json().dump();
  setenv("CIRC_THREADS", "7", 1);
  const auto threaded = run_rate_experiment(c).to_json().dump();
  unsetenv("CIRC_THREADS");
  CHECK(serial == threaded);
  CHECK(serial == run_rate_experiment(c).to_json().dump());
}

TEST_CASE("amise rule reproduces the oracle bandwidth per n") {
  ExperimentConfig c;
  c.estimator = EstimatorKind::KDE;
  c.density_model = "vm:0,1";
  c.n_list = {500, 16000};
  c.h_rule = {HRule::Type::Amise, 0.0, 0.0, 0.0};
  c.reps = 2;
  c.seed = 3;
  const auto report = run_rate_experiment(c);
  // n -> 32 n halves the bandwidth exactly under the n^{-1/5} law
  CHECK(report.points[1].h == doctest::Approx(0.5 * report.points[0].h).epsilon(1e-12));
}
