#include "circfrechet/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "circfrechet/circle.hpp"
#include "circfrechet/errors.hpp"
#include "circfrechet/quadrature.hpp"

namespace circfr {
namespace {

double double_factorial(int n) {
  double r = 1.0;
  for (int m = n; m > 1; m -= 2) r *= m;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int m = 2; m <= n; ++m) r *= m;
  return r;
}

// Geometric breakpoints 1, 2, 4, ... inside (0, b); seeds adaptive
// refinement when the mass sits near the origin.
std::vector<double> geometric_breaks(double b) {
  std::vector<double> bp;
  for (double t = 1.0; t < b; t *= 2.0) bp.push_back(t);
  return bp;
}

}  // namespace

DirectionalKernel::DirectionalKernel(KernelFamily family, std::function<double(double)> eval,
                                     std::optional<double> support_bound, std::string name)
    : family_(family),
      eval_(std::move(eval)),
      support_bound_(support_bound),
      name_(std::move(name)) {}

DirectionalKernel DirectionalKernel::von_mises() {
  return {KernelFamily::VonMises, [](double s) { return std::exp(-s); }, {}, "von_mises"};
}

DirectionalKernel DirectionalKernel::exponential() {
  return {KernelFamily::Exponential, [](double s) { return std::exp(-std::sqrt(s)); }, {},
          "exponential"};
}

DirectionalKernel DirectionalKernel::uniform() {
  return {KernelFamily::Uniform, [](double s) { return s <= 1.0 ? 1.0 : 0.0; }, 1.0, "uniform"};
}

DirectionalKernel DirectionalKernel::custom(std::function<double(double)> eval,
                                            std::optional<double> support_bound) {
  return {KernelFamily::Custom, std::move(eval), support_bound, "custom"};
}

DirectionalKernel DirectionalKernel::from_name(const std::string& name) {
  if (name == "von_mises") return von_mises();
  if (name == "exponential") return exponential();
  if (name == "uniform") return uniform();
  throw ParseError("unknown kernel family '" + name + "'");
}

double DirectionalKernel::operator()(double s) const {
  if (s < 0) throw DomainError("kernel argument must be non-negative");
  return eval_(s);
}

KernelMoment moment_a(const DirectionalKernel& kernel, int j, int k) {
  if (j < 0) throw DomainError("moment order j must be non-negative");
  if (k != 1 && k != 2) throw DomainError("moment power k must be 1 or 2");
  const double sqrt_pi = std::sqrt(kPi);
  switch (kernel.family()) {
    case KernelFamily::VonMises: {
      const double df = double_factorial(2 * j - 1);
      const double value = (k == 1) ? df / std::pow(2.0, j + 1) * sqrt_pi
                                    : df / std::pow(2.0, 2 * j + 1) * std::sqrt(kPi / 2.0);
      return {j, k, value, KernelMoment::Source::ClosedForm};
    }
    case KernelFamily::Exponential: {
      const double f = factorial(2 * j);
      const double value = (k == 1) ? f : f / std::pow(2.0, 2 * j + 1);
      return {j, k, value, KernelMoment::Source::ClosedForm};
    }
    case KernelFamily::Uniform:
      return {j, k, 1.0 / (2 * j + 1), KernelMoment::Source::ClosedForm};
    case KernelFamily::Custom:
      return moment_a_quadrature(kernel, j, k);
  }
  throw DomainError("unknown kernel family");
}

KernelMoment moment_a_quadrature(const DirectionalKernel& kernel, int j, int k) {
  if (j < 0) throw DomainError("moment order j must be non-negative");
  if (k != 1 && k != 2) throw DomainError("moment power k must be 1 or 2");
  auto integrand = [&](double r) {
    const double l = kernel(r * r);
    return (k == 2 ? l * l : l) * std::pow(r, 2 * j);
  };
  double value;
  if (kernel.support_bound()) {
    const double rmax = std::sqrt(*kernel.support_bound());
    value = quad::integrate(integrand, 0.0, rmax);
  } else {
    value = quad::integrate_to_infinity(integrand);
  }
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw IntegrabilityError("kernel moment a_{j,k} is not positive and finite");
  }
  return {j, k, value, KernelMoment::Source::Quadrature};
}

NormalizingConstant normalizing_c(const DirectionalKernel& kernel, double h, int j, int k) {
  if (h <= 0) throw DomainError("bandwidth must be positive");
  if (j < 0) throw DomainError("order j must be non-negative");
  if (k != 1 && k != 2) throw DomainError("power k must be 1 or 2");
  if (j % 2 == 1) return {h, j, k, 0.0};

  if (kernel.family() == KernelFamily::Uniform) {
    // Indicator support ends exactly at theta* = arccos(1 - h^2) when h^2 <= 2.
    const double theta_star = (h * h >= 2.0) ? kPi : std::acos(1.0 - h * h);
    const double value = 2.0 * std::pow(theta_star, j + 1) / (j + 1);
    return {h, j, k, value};
  }

  // t = h u; integrand in u stays O(1)-scaled for any h.
  double u_max = kPi / h;
  if (kernel.support_bound()) {
    const double s_max = *kernel.support_bound();
    const double theta_max = (s_max * h * h >= 2.0) ? kPi : std::acos(1.0 - s_max * h * h);
    u_max = theta_max / h;
  }
  const double h2 = h * h;
  auto integrand = [&](double u) {
    const double l = kernel((1.0 - std::cos(h * u)) / h2);
    return (k == 2 ? l * l : l) * std::pow(u, j);
  };
  const double value =
      2.0 * std::pow(h, j + 1) * quad::integrate_split(integrand, 0.0, u_max, geometric_breaks(u_max));
  return {h, j, k, value};
}

double lambda_h(const DirectionalKernel& kernel, double h, int j, int k) {
  if (h <= 0) throw DomainError("bandwidth must be positive");
  if (j < 0) throw DomainError("order j must be non-negative");
  if (k != 1 && k != 2) throw DomainError("power k must be 1 or 2");
  // r = (sqrt(2)/h) sin(u) maps the endpoint weight to du / h.
  const double scale = std::sqrt(2.0) / h;
  auto integrand = [&](double u) {
    const double r = scale * std::sin(u);
    const double l = kernel(r * r);
    return (k == 2 ? l * l : l) * std::pow(r, 2 * j) / h;
  };
  std::vector<double> breaks;
  if (kernel.family() == KernelFamily::Uniform && h <= std::sqrt(2.0)) {
    // Indicator jump at r = 1, i.e. u = asin(h / sqrt(2)).
    breaks.push_back(std::asin(h / std::sqrt(2.0)));
  }
  // Mass concentrates near u = 0 when h is small.
  for (double t = h; t < kPi / 2.0; t *= 2.0) breaks.push_back(t);
  std::sort(breaks.begin(), breaks.end());
  return quad::integrate_split(integrand, 0.0, kPi / 2.0, breaks);
}

}  // namespace circfr
