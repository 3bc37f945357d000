#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "circfrechet/circle.hpp"
#include "circfrechet/density_model.hpp"
#include "circfrechet/kernel.hpp"

namespace circfr {

// f-hat_h(x) = (1 / (n c_{h,0,1}(L))) sum_i L((1 - X_i'x)/h^2).
class DensityEstimate {
 public:
  DensityEstimate(DirectionalKernel kernel, CircularSample sample, double h);

  double operator()(double angle) const;
  std::vector<double> evaluate_grid(std::size_t grid_size) const;  // equispaced on [-pi, pi)

  double h() const { return h_; }
  double normalizer() const { return normalizer_; }
  const CircularSample& sample() const { return sample_; }
  const DirectionalKernel& kernel() const { return kernel_; }

 private:
  DirectionalKernel kernel_;
  CircularSample sample_;
  double h_;
  double normalizer_;  // c_{h,0,1}(L)
};

// Leading bias term (a_{1,1}/a_{0,1}) f''(x) h^2.
double theoretical_bias(const DensityModel& model, const DirectionalKernel& kernel, double h,
                        double x);

// Leading variance term 2^{-3/2} (nh)^{-1} (a_{0,2}/a_{0,1}^2) f(x).
double theoretical_variance(const DensityModel& model, const DirectionalKernel& kernel, double h,
                            std::size_t n, double x);

// S_f = integral of (f'')^2 over the circle, by quadrature.
double score_sf(const DensityModel& model);

// h_AMISE = 2^{-7/10} [a_{0,2} / (a_{1,1}^2 S_f)]^{1/5} n^{-1/5}.
double amise_bandwidth(double sf, const DirectionalKernel& kernel, std::size_t n);

// Leading asymptotic MISE expression h^4 (a11^2/a01^2) S_f + 2^{-3/2}(nh)^{-1} a02/a01^2.
double theoretical_amise(double sf, const DirectionalKernel& kernel, double h, std::size_t n);

// Monte Carlo estimate of E integral (f-hat_h - f)^2: per rep draws n points,
// evaluates on a fixed 256-point grid, trapezoid-integrates the squared
// error, and averages. Parallel over reps with per-rep derived seeds.
double empirical_mise(const DensityModel& model, const DirectionalKernel& kernel, double h,
                      std::size_t n, std::size_t reps, std::uint64_t seed,
                      std::size_t grid_size = 256);

}  // namespace circfr
