#include "circfrechet/frechet_ll.hpp"

#include <cmath>
#include <limits>

#include "circfrechet/errors.hpp"
#include "circfrechet/quadrature.hpp"

namespace circfr {
namespace {

constexpr double kSingularRel = 1e-12;

void check_singular(const LocalMoments& m) {
  if (!(m.sigma2 > kSingularRel * m.mu0 * m.mu2)) {
    throw SingularDesignError("local design spread sigma^2 vanishes at x = " + std::to_string(m.x));
  }
}

}  // namespace

LocalMoments local_moments(const CircularSample& predictors, const DirectionalKernel& kernel,
                           double h, double x) {
  if (h <= 0) throw DomainError("bandwidth must be positive");
  if (predictors.angles.size() < 2) {
    throw SingularDesignError("local moments need at least two observations");
  }
  const double h2 = h * h;
  const double n = static_cast<double>(predictors.angles.size());
  LocalMoments m;
  m.h = h;
  m.x = x;
  for (double xi : predictors.angles) {
    const double phi = canonical_angle(xi - x);
    const double l = kernel((1.0 - std::cos(xi - x)) / h2);
    m.mu0 += l;
    m.mu1 += l * phi;
    m.mu2 += l * phi * phi;
  }
  m.mu0 /= n;
  m.mu1 /= n;
  m.mu2 /= n;
  m.sigma2 = m.mu0 * m.mu2 - m.mu1 * m.mu1;
  check_singular(m);
  return m;
}

EffectiveWeights effective_weights(const CircularSample& predictors,
                                   const DirectionalKernel& kernel, double h, double x) {
  const LocalMoments m = local_moments(predictors, kernel, h, x);
  const double h2 = h * h;
  EffectiveWeights out;
  out.moments = m;
  out.weights.reserve(predictors.angles.size());
  for (double xi : predictors.angles) {
    const double phi = canonical_angle(xi - x);
    const double l = kernel((1.0 - std::cos(xi - x)) / h2);
    out.weights.push_back(l * (m.mu2 - m.mu1 * phi) / m.sigma2);
  }
  return out;
}

double ll_objective(const MetricSpace& space, const PairedSample& sample,
                    const DirectionalKernel& kernel, double h, double x, const ResponsePoint& y) {
  sample.validate();
  const auto w = effective_weights(sample.predictors, kernel, h, x);
  return weighted_objective(space, sample.responses, w.weights, y) /
         static_cast<double>(sample.size());
}

double ll_objective_moment_form(const MetricSpace& space, const PairedSample& sample,
                                const DirectionalKernel& kernel, double h, double x,
                                const ResponsePoint& y) {
  sample.validate();
  const LocalMoments m = local_moments(sample.predictors, kernel, h, x);
  const double h2 = h * h;
  const double n = static_cast<double>(sample.size());
  double nu0 = 0.0, nu1 = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double xi = sample.predictors.angles[i];
    const double phi = canonical_angle(xi - x);
    const double l = kernel((1.0 - std::cos(xi - x)) / h2);
    const double d = space.distance(sample.responses[i], y);
    nu0 += l * d * d;
    nu1 += l * phi * d * d;
  }
  nu0 /= n;
  nu1 /= n;
  return (nu0 * m.mu2 - nu1 * m.mu1) / m.sigma2;
}

FrechetEstimate ll_estimate(const MetricSpace& space, const PairedSample& sample,
                            const DirectionalKernel& kernel, double h, double x) {
  sample.validate();
  const auto w = effective_weights(sample.predictors, kernel, h, x);
  FrechetEstimate est = weighted_frechet_mean(space, sample.responses, w.weights);
  // Report the estimator's own objective normalization (1/n).
  est.objective /= static_cast<double>(sample.size());
  if (std::isfinite(est.runner_up_gap)) est.runner_up_gap /= static_cast<double>(sample.size());
  return est;
}

double ll_scalar_closed_form(const PairedSample& sample, const DirectionalKernel& kernel, double h,
                             double x) {
  sample.validate();
  const double h2 = h * h;
  double s0 = 0, s1 = 0, s2 = 0, t0 = 0, t1 = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double xi = sample.predictors.angles[i];
    const double phi = canonical_angle(xi - x);
    const double l = kernel((1.0 - std::cos(xi - x)) / h2);
    const double y = sample.responses[i].scalar_value();
    s0 += l;
    s1 += l * phi;
    s2 += l * phi * phi;
    t0 += l * y;
    t1 += l * phi * y;
  }
  const double det = s0 * s2 - s1 * s1;
  if (!(det > kSingularRel * s0 * s2)) {
    throw SingularDesignError("weighted least squares design is singular at x = " + std::to_string(x));
  }
  return (s2 * t0 - s1 * t1) / det;
}

LocalMoments population_local_moments(const DensityModel& density, const DirectionalKernel& kernel,
                                      double h, double x) {
  if (h <= 0) throw DomainError("bandwidth must be positive");
  const double h2 = h * h;
  LocalMoments m;
  m.h = h;
  m.x = x;
  auto mom = [&](int j) {
    return quad::integrate(
        [&](double t) {
          const double phi = t - x;  // t ranges over (x - pi, x + pi)
          return kernel((1.0 - std::cos(phi)) / h2) * std::pow(phi, j) * density.pdf(t);
        },
        x - kPi, x + kPi);
  };
  m.mu0 = mom(0);
  m.mu1 = mom(1);
  m.mu2 = mom(2);
  m.sigma2 = m.mu0 * m.mu2 - m.mu1 * m.mu1;
  return m;
}

double ll_population_minimizer_scalar(const RegressionModel& model,
                                      const DirectionalKernel& kernel, double h, double x) {
  const auto& f = model.predictor_density();
  const LocalMoments m = population_local_moments(f, kernel, h, x);
  if (!(m.sigma2 > 0)) {
    throw SingularDesignError("population design spread vanishes at x = " + std::to_string(x));
  }
  const double h2 = h * h;
  auto weighted = [&](int j) {
    return quad::integrate(
        [&](double t) {
          const double phi = t - x;
          return kernel((1.0 - std::cos(phi)) / h2) * std::pow(phi, j) * f.pdf(t) *
                 model.truth(t).scalar_value();
        },
        x - kPi, x + kPi);
  };
  const double ely = weighted(0);
  const double elpy = weighted(1);
  return (m.mu2 * ely - m.mu1 * elpy) / m.sigma2;
}

}  // namespace circfr
