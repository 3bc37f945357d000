#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "circfrechet/circle.hpp"
#include "circfrechet/density_model.hpp"
#include "circfrechet/kernel.hpp"
#include "circfrechet/metric.hpp"

namespace circfr {

struct PairedSample {
  CircularSample predictors;
  std::vector<ResponsePoint> responses;

  std::size_t size() const { return predictors.size(); }
  void validate() const;  // equal lengths >= 1
};

// Synthetic regression truth for tests and the harness: predictor density,
// the regression function m(x), a noise-injecting response sampler, and an
// optional closed-form conditional objective M(theta, y) = E[d^2(Y,y)|X=theta].
class RegressionModel {
 public:
  const DensityModel& predictor_density() const { return predictor_density_; }
  ResponsePoint truth(double theta) const { return truth_(theta); }
  ResponsePoint draw_response(double theta, Rng& rng) const;
  bool has_conditional_oracle() const { return static_cast<bool>(conditional_); }
  double conditional_objective(double theta, const ResponsePoint& y) const;
  const std::string& name() const { return name_; }

  PairedSample sample(std::size_t n, std::uint64_t seed) const;

  // Scalar response m(theta) = sin(theta) plus centered Gaussian noise.
  static RegressionModel scalar_sine(double noise_sigma, DensityModel predictor_density);
  // Generic scalar model with additive Gaussian noise: M(theta, y) = (m(theta)-y)^2 + sigma^2.
  static RegressionModel scalar_additive(std::string name, std::function<double(double)> mean,
                                         double noise_sigma, DensityModel predictor_density);

 private:
  RegressionModel() = default;

  std::string name_;
  DensityModel predictor_density_ = DensityModel::uniform();
  std::function<ResponsePoint(double)> truth_;
  std::function<ResponsePoint(double, Rng&)> draw_;
  std::function<double(double, const ResponsePoint&)> conditional_;
};

// M-hat_{h,0}(x, y): kernel-weighted mean squared distance (Eq-style ratio
// of weighted sums). Throws EmptyWindowError when all kernel weights vanish.
double lc_objective(const MetricSpace& space, const PairedSample& sample,
                    const DirectionalKernel& kernel, double h, double x, const ResponsePoint& y);

// m-hat_{h,0}(x): weighted Frechet mean of the responses with weights
// L((1 - X_i'x)/h^2).
FrechetEstimate lc_estimate(const MetricSpace& space, const PairedSample& sample,
                            const DirectionalKernel& kernel, double h, double x);

// Kernel weights at the query; shared by the estimators and cross-validation.
std::vector<double> kernel_weights(const CircularSample& predictors,
                                   const DirectionalKernel& kernel, double h, double x);

// Population objective M-tilde_{h,0}(x, y) for models with a conditional
// oracle, by angle quadrature against the predictor density.
double lc_population_objective(const RegressionModel& model, const DirectionalKernel& kernel,
                               double h, double x, const ResponsePoint& y);

// Population minimizer for scalar additive models: the L*f-weighted mean of
// m(theta), by quadrature.
double lc_population_minimizer_scalar(const RegressionModel& model, const DirectionalKernel& kernel,
                                      double h, double x);

}  // namespace circfr
