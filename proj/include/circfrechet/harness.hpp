#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "circfrechet/frechet_lc.hpp"

namespace circfr {

enum class EstimatorKind { KDE, LC, LL };

struct HRule {
  enum class Type { Fixed, Amise, PowerLaw } type = Type::Amise;
  double h = 0.0;      // Fixed
  double gamma = 0.2;  // PowerLaw: h = c * n^{-gamma}, 0 < gamma < 1
  double c = 1.0;
};

struct ExperimentConfig {
  EstimatorKind estimator = EstimatorKind::KDE;
  std::string kernel = "von_mises";
  std::string density_model = "vm:0,1";    // KDE target law
  std::string predictor_model = "vm:0,2";  // LC/LL predictor law
  std::string truth = "sine";
  double noise_sigma = 0.1;
  std::vector<std::size_t> n_list;
  HRule h_rule;
  std::size_t reps = 2;
  std::uint64_t seed = 0;
  std::vector<double> query_angles;  // empty = 16 equispaced angles

  void validate() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct RatePoint {
  std::size_t n = 0;
  double h = 0.0;
  double error = 0.0;
  double std_error = 0.0;  // Monte Carlo standard error of the mean
};

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

struct RateReport {
  nlohmann::json config_echo;
  std::vector<RatePoint> points;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double theory_slope = 0.0;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
};

// OLS on (log x, log y); all coordinates must be positive.
SlopeFit fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

// Draws reps datasets per n, computes the error measure (KDE: integrated
// squared error on a 256-grid; LC/LL: mean squared distance over the query
// angles), averages, and fits the log-log slope. Deterministic given the
// seed; parallel over (n, rep).
RateReport run_rate_experiment(const ExperimentConfig& config);

}  // namespace circfr
