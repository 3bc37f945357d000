#pragma once

#include "circfrechet/frechet_lc.hpp"

namespace circfr {

struct LocalMoments {
  double mu0 = 0.0;  // mean of L_i
  double mu1 = 0.0;  // mean of L_i * Phi_x^{-1}(X_i)
  double mu2 = 0.0;  // mean of L_i * Phi_x^{-1}(X_i)^2
  double sigma2 = 0.0;  // mu0*mu2 - mu1^2
  double h = 0.0;
  double x = 0.0;
};

struct EffectiveWeights {
  std::vector<double> weights;  // W-hat_h(X_i, x), possibly negative
  LocalMoments moments;
};

// Empirical local moments mu-hat_{h,j}. Throws SingularDesignError when
// sigma2 <= 1e-12 * mu0 * mu2 (all angles effectively coincident).
LocalMoments local_moments(const CircularSample& predictors, const DirectionalKernel& kernel,
                           double h, double x);

// W-hat_h(X_i, x) = sigma2^{-1} L_i (mu2 - mu1 Phi_x^{-1}(X_i)).
// By construction mean(W) = 1 and the W-weighted mean angle is 0.
EffectiveWeights effective_weights(const CircularSample& predictors,
                                   const DirectionalKernel& kernel, double h, double x);

// M-hat_{h,1}(x, y) = (1/n) sum_i W_i d^2(Y_i, y); may be negative.
double ll_objective(const MetricSpace& space, const PairedSample& sample,
                    const DirectionalKernel& kernel, double h, double x, const ResponsePoint& y);

// Same value through the moment form sigma2^{-1}(nu0 mu2 - nu1 mu1);
// algebraically identical, kept as an independent code path.
double ll_objective_moment_form(const MetricSpace& space, const PairedSample& sample,
                                const DirectionalKernel& kernel, double h, double x,
                                const ResponsePoint& y);

// m-hat_{h,1}(x): minimizer of the effective-weight objective. On scalar
// euclidean responses this is the closed-form vertex (1/n) sum_i W_i Y_i.
FrechetEstimate ll_estimate(const MetricSpace& space, const PairedSample& sample,
                            const DirectionalKernel& kernel, double h, double x);

// Weighted least squares on (1, Phi_x^{-1}(X_i)); returns the intercept.
// Requires scalar euclidean responses.
double ll_scalar_closed_form(const PairedSample& sample, const DirectionalKernel& kernel, double h,
                             double x);

// Population local moments mu-tilde_{h,j} and sigma-tilde^2 by quadrature
// against a density model.
LocalMoments population_local_moments(const DensityModel& density, const DirectionalKernel& kernel,
                                      double h, double x);

// Population local linear minimizer beta-tilde_{h,0}(x) for scalar additive
// models, by quadrature.
double ll_population_minimizer_scalar(const RegressionModel& model, const DirectionalKernel& kernel,
                                      double h, double x);

}  // namespace circfr
