#include "circfrechet/harness.hpp"

#include <cmath>
#include <sstream>

#include "circfrechet/errors.hpp"
#include "circfrechet/frechet_ll.hpp"
#include "circfrechet/kde.hpp"
#include "circfrechet/quadrature.hpp"
#include "circfrechet/rng.hpp"
#include "circfrechet/threading.hpp"

namespace circfr {
namespace {

std::function<double(double)> truth_function(const std::string& name) {
  if (name == "sine") return [](double t) { return std::sin(t); };
  if (name == "cosine") return [](double t) { return std::cos(t); };
  throw ParseError("unknown truth function '" + name + "'");
}

std::vector<double> default_query_grid() {
  std::vector<double> q(16);
  for (std::size_t i = 0; i < 16; ++i) q[i] = -kPi + kTwoPi * static_cast<double>(i) / 16.0;
  return q;
}

std::string estimator_name(EstimatorKind e) {
  switch (e) {
    case EstimatorKind::KDE: return "kde";
    case EstimatorKind::LC: return "lc";
    case EstimatorKind::LL: return "ll";
  }
  return "?";
}

EstimatorKind estimator_from_name(const std::string& s) {
  if (s == "kde") return EstimatorKind::KDE;
  if (s == "lc") return EstimatorKind::LC;
  if (s == "ll") return EstimatorKind::LL;
  throw ParseError("unknown estimator '" + s + "'");
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n_list.empty()) throw DomainError("n_list must be non-empty");
  std::size_t prev = 0;
  for (std::size_t n : n_list) {
    if (n <= prev) throw DomainError("n_list must be strictly increasing");
    prev = n;
  }
  if (reps < 2) throw DomainError("reps must be at least 2");
  switch (h_rule.type) {
    case HRule::Type::Fixed:
      if (!(h_rule.h > 0)) throw DomainError("fixed bandwidth must be positive");
      break;
    case HRule::Type::PowerLaw:
      if (!(h_rule.gamma > 0) || !(h_rule.gamma < 1)) {
        throw DomainError("power-law exponent gamma must lie in (0, 1)");
      }
      if (!(h_rule.c > 0)) throw DomainError("power-law constant must be positive");
      break;
    case HRule::Type::Amise:
      if (estimator != EstimatorKind::KDE) {
        throw DomainError("the AMISE rule applies to the density estimator only");
      }
      break;
  }
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.estimator = estimator_from_name(j.at("estimator").get<std::string>());
  c.kernel = j.value("kernel", std::string("von_mises"));
  const auto& model = j.at("model");
  if (c.estimator == EstimatorKind::KDE) {
    c.density_model = model.at("density").get<std::string>();
  } else {
    c.predictor_model = model.at("predictor").get<std::string>();
    c.truth = model.value("truth", std::string("sine"));
    c.noise_sigma = model.value("noise_sigma", 0.1);
  }
  c.n_list = j.at("n_list").get<std::vector<std::size_t>>();
  const auto& hr = j.at("h_rule");
  const std::string type = hr.at("type").get<std::string>();
  if (type == "fixed") {
    c.h_rule = {HRule::Type::Fixed, hr.at("h").get<double>(), 0.0, 0.0};
  } else if (type == "amise") {
    c.h_rule = {HRule::Type::Amise, 0.0, 0.0, 0.0};
  } else if (type == "power_law") {
    c.h_rule = {HRule::Type::PowerLaw, 0.0, hr.at("gamma").get<double>(), hr.value("c", 1.0)};
  } else {
    throw ParseError("unknown h_rule type '" + type + "'");
  }
  c.reps = j.at("reps").get<std::size_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("query_angles")) c.query_angles = j["query_angles"].get<std::vector<double>>();
  c.validate();
  return c;
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["estimator"] = estimator_name(estimator);
  j["kernel"] = kernel;
  if (estimator == EstimatorKind::KDE) {
    j["model"] = {{"density", density_model}};
  } else {
    j["model"] = {{"predictor", predictor_model}, {"truth", truth}, {"noise_sigma", noise_sigma}};
  }
  j["n_list"] = n_list;
  switch (h_rule.type) {
    case HRule::Type::Fixed:
      j["h_rule"] = {{"type", "fixed"}, {"h", h_rule.h}};
      break;
    case HRule::Type::Amise:
      j["h_rule"] = {{"type", "amise"}};
      break;
    case HRule::Type::PowerLaw:
      j["h_rule"] = {{"type", "power_law"}, {"gamma", h_rule.gamma}, {"c", h_rule.c}};
      break;
  }
  j["reps"] = reps;
  j["seed"] = seed;
  if (!query_angles.empty()) j["query_angles"] = query_angles;
  return j;
}

SlopeFit fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw DomainError("slope fit needs at least 2 points");
  std::vector<double> lx, ly;
  for (const auto& [x, y] : points) {
    if (!(x > 0) || !(y > 0)) throw DomainError("log-log fit needs positive coordinates");
    lx.push_back(std::log(x));
    ly.push_back(std::log(y));
  }
  const double n = static_cast<double>(points.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (!(sxx > 0)) throw DomainError("log-log fit needs at least two distinct abscissae");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

RateReport run_rate_experiment(const ExperimentConfig& config) {
  config.validate();
  const DirectionalKernel kernel = DirectionalKernel::from_name(config.kernel);

  // Per-n bandwidths.
  std::vector<double> bandwidths;
  DensityModel kde_model = DensityModel::uniform();
  if (config.estimator == EstimatorKind::KDE) kde_model = DensityModel::parse(config.density_model);
  for (std::size_t n : config.n_list) {
    switch (config.h_rule.type) {
      case HRule::Type::Fixed:
        bandwidths.push_back(config.h_rule.h);
        break;
      case HRule::Type::Amise:
        bandwidths.push_back(amise_bandwidth(score_sf(kde_model), kernel, n));
        break;
      case HRule::Type::PowerLaw:
        bandwidths.push_back(config.h_rule.c *
                             std::pow(static_cast<double>(n), -config.h_rule.gamma));
        break;
    }
  }

  const std::vector<double> queries =
      config.query_angles.empty() ? default_query_grid() : config.query_angles;

  RegressionModel reg_model =
      RegressionModel::scalar_additive(config.truth, truth_function(config.truth),
                                       config.noise_sigma, DensityModel::parse(config.predictor_model));
  const MetricSpace space = MetricSpace::euclidean_real(1);

  // Flattened (n-index, rep) task grid; per-rep seeds hashed from
  // (master, n, rep) so results do not depend on the schedule.
  const std::size_t ncount = config.n_list.size();
  std::vector<double> rep_error(ncount * config.reps, 0.0);
  std::vector<char> rep_failed(ncount * config.reps, 0);

  std::vector<double> kde_truth;
  constexpr std::size_t kGrid = 256;
  if (config.estimator == EstimatorKind::KDE) {
    kde_truth.resize(kGrid);
    for (std::size_t g = 0; g < kGrid; ++g) {
      kde_truth[g] = kde_model.pdf(-kPi + kTwoPi * static_cast<double>(g) / kGrid);
    }
  }

  parallel_for(ncount * config.reps, [&](std::size_t task) {
    const std::size_t ni = task / config.reps;
    const std::size_t rep = task % config.reps;
    const std::size_t n = config.n_list[ni];
    const double h = bandwidths[ni];
    const std::uint64_t rep_seed = derive_seed(config.seed, n, rep);
    try {
      if (config.estimator == EstimatorKind::KDE) {
        DensityEstimate est(kernel, kde_model.sample(n, rep_seed), h);
        const auto values = est.evaluate_grid(kGrid);
        std::vector<double> sq(kGrid);
        for (std::size_t g = 0; g < kGrid; ++g) {
          const double d = values[g] - kde_truth[g];
          sq[g] = d * d;
        }
        rep_error[task] = quad::periodic_trapezoid(sq, kTwoPi);
      } else {
        const PairedSample sample = reg_model.sample(n, rep_seed);
        double total = 0.0;
        for (double x : queries) {
          const FrechetEstimate est = (config.estimator == EstimatorKind::LC)
                                          ? lc_estimate(space, sample, kernel, h, x)
                                          : ll_estimate(space, sample, kernel, h, x);
          const double d = space.distance(est.minimizer, reg_model.truth(x));
          total += d * d;
        }
        rep_error[task] = total / static_cast<double>(queries.size());
      }
    } catch (const Error&) {
      rep_failed[task] = 1;
    }
  });

  RateReport report;
  report.config_echo = config.to_json();
  report.seed = config.seed;
  report.theory_slope = -0.8;  // n^{-4/5}: KDE MISE, and squared Frechet error with beta = 2

  std::vector<std::pair<double, double>> fit_points;
  for (std::size_t ni = 0; ni < ncount; ++ni) {
    std::size_t failures = 0;
    double sum = 0.0;
    std::size_t ok = 0;
    for (std::size_t rep = 0; rep < config.reps; ++rep) {
      const std::size_t task = ni * config.reps + rep;
      if (rep_failed[task]) {
        ++failures;
      } else {
        sum += rep_error[task];
        ++ok;
      }
    }
    if (static_cast<double>(failures) > 0.05 * static_cast<double>(config.reps)) {
      std::ostringstream census;
      census << "estimator failed on " << failures << " of " << config.reps << " reps at n = "
             << config.n_list[ni];
      throw ExperimentInvalidError(census.str());
    }
    const double mean = sum / static_cast<double>(ok);
    double var = 0.0;
    for (std::size_t rep = 0; rep < config.reps; ++rep) {
      const std::size_t task = ni * config.reps + rep;
      if (!rep_failed[task]) {
        const double d = rep_error[task] - mean;
        var += d * d;
      }
    }
    var = ok > 1 ? var / static_cast<double>(ok - 1) : 0.0;
    RatePoint point;
    point.n = config.n_list[ni];
    point.h = bandwidths[ni];
    point.error = mean;
    point.std_error = std::sqrt(var / static_cast<double>(ok));
    report.points.push_back(point);
    fit_points.emplace_back(static_cast<double>(point.n), point.error);
  }

  const SlopeFit fit = fit_loglog_slope(fit_points);
  report.slope = fit.slope;
  report.intercept = fit.intercept;
  report.r_squared = fit.r_squared;
  return report;
}

nlohmann::json RateReport::to_json() const {
  nlohmann::json j;
  j["config_echo"] = config_echo;
  j["points"] = nlohmann::json::array();
  for (const auto& p : points) {
    j["points"].push_back({{"n", p.n}, {"h", p.h}, {"error", p.error}, {"stderr", p.std_error}});
  }
  j["slope"] = slope;
  j["intercept"] = intercept;
  j["r_squared"] = r_squared;
  j["theory_slope"] = theory_slope;
  j["seed"] = seed;
  return j;
}

}  // namespace circfr
