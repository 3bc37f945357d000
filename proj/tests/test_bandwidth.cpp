#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "circfrechet/bandwidth.hpp"
#include "circfrechet/circle.hpp"
#include "circfrechet/errors.hpp"
#include "circfrechet/kde.hpp"

using namespace circfr;

TEST_CASE("grid construction and parsing") {
  const auto g = BandwidthGrid::log_spaced(0.05, 1.5, 20);
  g.validate();
  CHECK(g.values.size() == 20);
  CHECK(g.values.front() == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(g.values.back() == doctest::Approx(1.5).epsilon(1e-14));
  for (std::size_t i = 2; i < g.values.size(); ++i) {
    CHECK(g.values[i] / g.values[i - 1] ==
          doctest::Approx(g.values[1] / g.values[0]).epsilon(1e-12));
  }

  const auto p = BandwidthGrid::parse("0.05:1.5:20log");
  for (std::size_t i = 0; i < 20; ++i) CHECK(p.values[i] == doctest::Approx(g.values[i]));

  const auto lin = BandwidthGrid::parse("0.1:0.5:5lin");
  REQUIRE(lin.values.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(lin.values[i] == doctest::Approx(0.1 + 0.1 * static_cast<double>(i)).epsilon(1e-14));
  }

  CHECK_THROWS_AS(BandwidthGrid::parse("nope"), ParseError);
  CHECK_THROWS_AS(BandwidthGrid::parse("0.5:0.1:5log"), DomainError);
}

TEST_CASE("plug-in bandwidth tracks the oracle and the n-scaling") {
  const auto kern = DirectionalKernel::von_mises();
  const auto model = DensityModel::von_mises(0.0, 1.0);
  const double oracle = amise_bandwidth(score_sf(model), kern, 4000);
  const double plug = plugin_bandwidth(model.sample(4000, 13), kern);
  CHECK(std::abs(plug / oracle - 1.0) < 0.35);

  const double h_small = plugin_bandwidth(model.sample(500, 29), kern);
  const double h_big = plugin_bandwidth(model.sample(16000, 29), kern);
  CHECK(std::abs(h_big / (h_small * std::pow(32.0, -0.2)) - 1.0) < 0.15);

  CHECK_THROWS_AS(plugin_bandwidth(model.sample(5, 1), kern), DomainError);
}

TEST_CASE("flat data is flagged as degenerate curvature") {
  // An equispaced design makes the pilot estimate exactly flat; a finite
  // random near-uniform draw instead yields a moderate h driven by pilot
  // noise, so the curvature flag is only reachable in this limit.
  const auto kern = DirectionalKernel::von_mises();
  CircularSample flat;
  for (int i = 0; i < 500; ++i) flat.angles.push_back(-kPi + kTwoPi * i / 500.0);
  CHECK_THROWS_AS(plugin_bandwidth(flat, kern), DegenerateCurvatureError);
}

TEST_CASE("plug-in bandwidth is rotation equivariant") {
  const auto kern = DirectionalKernel::von_mises();
  const auto model = DensityModel::von_mises(0.0, 1.5);
  const auto sample = model.sample(2000, 47);
  CircularSample rotated;
  for (double a : sample.angles) rotated.angles.push_back(canonical_angle(a + 1.234));
  CHECK(plugin_bandwidth(rotated, kern) ==
        doctest::Approx(plugin_bandwidth(sample, kern)).epsilon(1e-6));
}

TEST_CASE("cross-validation picks an interior bandwidth on the sine model") {
  const auto e = MetricSpace::euclidean_real(1);
  const auto kern = DirectionalKernel::von_mises();
  const auto model = RegressionModel::scalar_sine(0.2, DensityModel::von_mises(0.0, 1.0));
  const auto sample = model.sample(1000, 17);
  const auto grid = BandwidthGrid::log_spaced(0.05, 1.5, 20);
  for (auto which : {RegressionEstimator::LC, RegressionEstimator::LL}) {
    const auto cv = cv_bandwidth_frechet(e, sample, kern, grid, which);
    CHECK(cv.selected_h > grid.values.front());
    CHECK(cv.selected_h < grid.values.back());
    CHECK(cv.scores.size() == 20);
    double best = 1e300;
    for (const auto& [h, score] : cv.scores) best = std::min(best, score);
    for (const auto& [h, score] : cv.scores) {
      if (h == cv.selected_h) CHECK(score == best);
      CHECK(score >= best);
    }
  }
}

TEST_CASE("cv curve is sample-size-free and kernel-scale-free") {
  const auto e = MetricSpace::euclidean_real(1);
  const auto kern = DirectionalKernel::von_mises();
  const auto model = RegressionModel::scalar_sine(0.2, DensityModel::von_mises(0.0, 1.0));
  const auto sample = model.sample(60, 19);
  const auto grid = BandwidthGrid::log_spaced(0.1, 1.2, 8);
  const auto base = cv_bandwidth_frechet(e, sample, kern, grid, RegressionEstimator::LC);

  // The estimator itself is duplication-invariant (weights enter as
  // sample-size-free ratios). The leave-one-out curve is not: removing one
  // copy of a duplicated pair leaves its twin in the training fold.
  PairedSample doubled;
  for (int copy = 0; copy < 2; ++copy) {
    for (std::size_t i = 0; i < sample.size(); ++i) {
      doubled.predictors.angles.push_back(sample.predictors.angles[i]);
      doubled.responses.push_back(sample.responses[i]);
    }
  }
  for (double x : {-1.2, 0.0, 0.9}) {
    CHECK(lc_estimate(e, doubled, kern, 0.4, x).minimizer.values()[0] ==
          doctest::Approx(lc_estimate(e, sample, kern, 0.4, x).minimizer.values()[0])
              .epsilon(1e-12));
  }

  const auto scaled_kern = DirectionalKernel::custom([](double s) { return 7.0 * std::exp(-s); });
  const auto scaled = cv_bandwidth_frechet(e, sample, scaled_kern, grid, RegressionEstimator::LC);
  CHECK(scaled.selected_h == base.selected_h);
  for (std::size_t i = 0; i < base.scores.size(); ++i) {
    CHECK(scaled.scores[i].second == doctest::Approx(base.scores[i].second).epsilon(1e-12));
  }
}

TEST_CASE("singleton grid and failure penalties") {
  const auto e = MetricSpace::euclidean_real(1);
  const auto model = RegressionModel::scalar_sine(0.2, DensityModel::von_mises(0.0, 1.0));
  const auto sample = model.sample(40, 23);
  BandwidthGrid one;
  one.values = {0.4};
  CHECK(cv_bandwidth_frechet(e, sample, DirectionalKernel::von_mises(), one,
                             RegressionEstimator::LC)
            .selected_h == 0.4);

  // a uniform kernel with a tiny bandwidth fails on every fold
  BandwidthGrid tiny;
  tiny.values = {1e-6};
  CHECK_THROWS_AS(cv_bandwidth_frechet(e, sample, DirectionalKernel::uniform(), tiny,
                                       RegressionEstimator::LC),
                  NoValidBandwidthError);
}
