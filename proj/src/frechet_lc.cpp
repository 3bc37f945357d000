#include "circfrechet/frechet_lc.hpp"

#include <cmath>
#include <utility>

#include "circfrechet/errors.hpp"
#include "circfrechet/quadrature.hpp"
#include "circfrechet/rng.hpp"

namespace circfr {

void PairedSample::validate() const {
  if (predictors.angles.empty()) throw EmptySampleError("paired sample has no observations");
  if (predictors.angles.size() != responses.size()) {
    throw DomainError("predictors and responses must have equal length");
  }
}

ResponsePoint RegressionModel::draw_response(double theta, Rng& rng) const {
  if (!draw_) throw UnsupportedModelError("regression model '" + name_ + "' has no response sampler");
  return draw_(theta, rng);
}

double RegressionModel::conditional_objective(double theta, const ResponsePoint& y) const {
  if (!conditional_) {
    throw UnsupportedModelError("regression model '" + name_ + "' has no conditional oracle");
  }
  return conditional_(theta, y);
}

PairedSample RegressionModel::sample(std::size_t n, std::uint64_t seed) const {
  if (n == 0) throw DomainError("sample size must be at least 1");
  Rng rng(seed);
  PairedSample out;
  out.predictors.seed = seed;
  out.predictors.angles.reserve(n);
  out.responses.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = canonical_angle(predictor_density_.draw(rng));
    out.predictors.angles.push_back(theta);
    out.responses.push_back(draw_response(theta, rng));
  }
  return out;
}

RegressionModel RegressionModel::scalar_additive(std::string name,
                                                 std::function<double(double)> mean,
                                                 double noise_sigma,
                                                 DensityModel predictor_density) {
  if (noise_sigma < 0) throw DomainError("noise sigma must be non-negative");
  RegressionModel m;
  m.name_ = std::move(name);
  m.predictor_density_ = std::move(predictor_density);
  auto mu = std::move(mean);
  m.truth_ = [mu](double theta) { return ResponsePoint::scalar(mu(theta)); };
  m.draw_ = [mu, noise_sigma](double theta, Rng& rng) {
    return ResponsePoint::scalar(noise_sigma > 0 ? rng.normal(mu(theta), noise_sigma) : mu(theta));
  };
  m.conditional_ = [mu, noise_sigma](double theta, const ResponsePoint& y) {
    const double d = mu(theta) - y.scalar_value();
    return d * d + noise_sigma * noise_sigma;
  };
  return m;
}

RegressionModel RegressionModel::scalar_sine(double noise_sigma, DensityModel predictor_density) {
  return scalar_additive("sine", [](double t) { return std::sin(t); }, noise_sigma,
                         std::move(predictor_density));
}

std::vector<double> kernel_weights(const CircularSample& predictors,
                                   const DirectionalKernel& kernel, double h, double x) {
  if (h <= 0) throw DomainError("bandwidth must be positive");
  const double h2 = h * h;
  std::vector<double> w(predictors.angles.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = kernel((1.0 - std::cos(predictors.angles[i] - x)) / h2);
  }
  return w;
}

double lc_objective(const MetricSpace& space, const PairedSample& sample,
                    const DirectionalKernel& kernel, double h, double x, const ResponsePoint& y) {
  sample.validate();
  const auto w = kernel_weights(sample.predictors, kernel, h, x);
  double wsum = 0.0;
  for (double v : w) wsum += v;
  if (!(wsum > 0)) {
    throw EmptyWindowError("no observation receives kernel weight at x = " + std::to_string(x));
  }
  return weighted_objective(space, sample.responses, w, y) / wsum;
}

FrechetEstimate lc_estimate(const MetricSpace& space, const PairedSample& sample,
                            const DirectionalKernel& kernel, double h, double x) {
  sample.validate();
  const auto w = kernel_weights(sample.predictors, kernel, h, x);
  double wsum = 0.0;
  for (double v : w) wsum += v;
  if (!(wsum > 0)) {
    throw EmptyWindowError("no observation receives kernel weight at x = " + std::to_string(x));
  }
  return weighted_frechet_mean(space, sample.responses, w);
}

double lc_population_objective(const RegressionModel& model, const DirectionalKernel& kernel,
                               double h, double x, const ResponsePoint& y) {
  if (h <= 0) throw DomainError("bandwidth must be positive");
  if (!model.has_conditional_oracle()) {
    throw UnsupportedModelError("population objective needs a conditional-mean oracle");
  }
  const double h2 = h * h;
  const auto& f = model.predictor_density();
  auto weight = [&](double t) { return kernel((1.0 - std::cos(t - x)) / h2) * f.pdf(t); };
  const double num = quad::integrate(
      [&](double t) { return weight(t) * model.conditional_objective(t, y); }, x - kPi, x + kPi);
  const double den = quad::integrate(weight, x - kPi, x + kPi);
  if (!(den > 0)) throw EmptyWindowError("population kernel weight vanishes at x = " + std::to_string(x));
  return num / den;
}

double lc_population_minimizer_scalar(const RegressionModel& model,
                                      const DirectionalKernel& kernel, double h, double x) {
  if (h <= 0) throw DomainError("bandwidth must be positive");
  const double h2 = h * h;
  const auto& f = model.predictor_density();
  auto weight = [&](double t) { return kernel((1.0 - std::cos(t - x)) / h2) * f.pdf(t); };
  const double num = quad::integrate(
      [&](double t) { return weight(t) * model.truth(t).scalar_value(); }, x - kPi, x + kPi);
  const double den = quad::integrate(weight, x - kPi, x + kPi);
  if (!(den > 0)) throw EmptyWindowError("population kernel weight vanishes at x = " + std::to_string(x));
  return num / den;
}

}  // namespace circfr
