#include "circfrechet/kde.hpp"

#include <cmath>
#include <utility>

#include "circfrechet/errors.hpp"
#include "circfrechet/quadrature.hpp"
#include "circfrechet/rng.hpp"
#include "circfrechet/threading.hpp"

namespace circfr {

DensityEstimate::DensityEstimate(DirectionalKernel kernel, CircularSample sample, double h)
    : kernel_(std::move(kernel)), sample_(std::move(sample)), h_(h) {
  if (h_ <= 0) throw DomainError("bandwidth must be positive");
  if (sample_.angles.empty()) throw EmptySampleError("density estimation needs a non-empty sample");
  normalizer_ = normalizing_c(kernel_, h_, 0, 1).value;
  if (!(normalizer_ > 0)) throw DomainError("normalizing constant c_{h,0,1} must be positive");
}

double DensityEstimate::operator()(double angle) const {
  const double h2 = h_ * h_;
  double sum = 0.0;
  for (double xi : sample_.angles) {
    sum += kernel_((1.0 - std::cos(xi - angle)) / h2);
  }
  return sum / (static_cast<double>(sample_.angles.size()) * normalizer_);
}

std::vector<double> DensityEstimate::evaluate_grid(std::size_t grid_size) const {
  std::vector<double> out(grid_size);
  const double step = kTwoPi / static_cast<double>(grid_size);
  for (std::size_t g = 0; g < grid_size; ++g) out[g] = (*this)(-kPi + step * static_cast<double>(g));
  return out;
}

double theoretical_bias(const DensityModel& model, const DirectionalKernel& kernel, double h,
                        double x) {
  const double a11 = moment_a(kernel, 1, 1).value;
  const double a01 = moment_a(kernel, 0, 1).value;
  return (a11 / a01) * model.d2(x) * h * h;
}

double theoretical_variance(const DensityModel& model, const DirectionalKernel& kernel, double h,
                            std::size_t n, double x) {
  if (n == 0) throw DomainError("n must be at least 1");
  if (h <= 0) throw DomainError("bandwidth must be positive");
  const double a01 = moment_a(kernel, 0, 1).value;
  const double a02 = moment_a(kernel, 0, 2).value;
  return std::pow(2.0, -1.5) / (static_cast<double>(n) * h) * (a02 / (a01 * a01)) * model.pdf(x);
}

double score_sf(const DensityModel& model) {
  return quad::integrate([&](double t) { const double d = model.d2(t); return d * d; }, -kPi, kPi,
                         {1e-12, 1e-10, 40});
}

double amise_bandwidth(double sf, const DirectionalKernel& kernel, std::size_t n) {
  if (n == 0) throw DomainError("n must be at least 1");
  if (!(sf > 0)) {
    throw DegenerateCurvatureError("S_f must be positive; a flat density has no AMISE minimizer");
  }
  const double a11 = moment_a(kernel, 1, 1).value;
  const double a02 = moment_a(kernel, 0, 2).value;
  return std::pow(2.0, -0.7) * std::pow(a02 / (a11 * a11 * sf), 0.2) *
         std::pow(static_cast<double>(n), -0.2);
}

double theoretical_amise(double sf, const DirectionalKernel& kernel, double h, std::size_t n) {
  const double a01 = moment_a(kernel, 0, 1).value;
  const double a11 = moment_a(kernel, 1, 1).value;
  const double a02 = moment_a(kernel, 0, 2).value;
  return std::pow(h, 4) * (a11 * a11) / (a01 * a01) * sf +
         std::pow(2.0, -1.5) / (static_cast<double>(n) * h) * a02 / (a01 * a01);
}

double empirical_mise(const DensityModel& model, const DirectionalKernel& kernel, double h,
                      std::size_t n, std::size_t reps, std::uint64_t seed,
                      std::size_t grid_size) {
  if (reps < 2) throw DomainError("reps must be at least 2");
  const std::uint64_t master = seed;

  std::vector<double> truth(grid_size);
  const double step = kTwoPi / static_cast<double>(grid_size);
  for (std::size_t g = 0; g < grid_size; ++g) truth[g] = model.pdf(-kPi + step * static_cast<double>(g));

  std::vector<double> ise(reps);
  parallel_for(reps, [&](std::size_t r) {
    const auto sample = model.sample(n, derive_seed(master, n, r));
    DensityEstimate est(kernel, sample, h);
    const auto values = est.evaluate_grid(grid_size);
    std::vector<double> sq(grid_size);
    for (std::size_t g = 0; g < grid_size; ++g) {
      const double d = values[g] - truth[g];
      sq[g] = d * d;
    }
    ise[r] = quad::periodic_trapezoid(sq, kTwoPi);
  });

  double total = 0.0;
  for (double v : ise) total += v;
  return total / static_cast<double>(reps);
}

}  // namespace circfr
