#include "circfrechet/circle.hpp"

#include <cmath>

#include "circfrechet/errors.hpp"
#include "circfrechet/rng.hpp"

namespace circfr {
namespace {

constexpr double kUnitTol = 1e-9;

void require_unit(const UnitVector2& v, const char* which) {
  const double n2 = v.x1 * v.x1 + v.x2 * v.x2;
  if (std::abs(n2 - 1.0) > kUnitTol) {
    throw DomainError(std::string(which) + " is not on the unit circle");
  }
}

}  // namespace

double canonical_angle(double theta) {
  double t = std::fmod(theta + kPi, kTwoPi);
  if (t < 0) t += kTwoPi;
  t -= kPi;
  // fmod rounding can land exactly on +pi; fold to the half-open range.
  if (t >= kPi) t -= kTwoPi;
  return t;
}

UnitVector2 UnitVector2::from_angle(double theta) {
  return {std::cos(theta), std::sin(theta)};
}

double UnitVector2::angle() const { return canonical_angle(std::atan2(x2, x1)); }

UnitVector2 rotate(const UnitVector2& x, double theta) {
  require_unit(x, "x");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {x.x1 * c - x.x2 * s, x.x2 * c + x.x1 * s};
}

double angle_between(const UnitVector2& x, const UnitVector2& z) {
  require_unit(x, "x");
  require_unit(z, "z");
  return canonical_angle(std::atan2(z.x2, z.x1) - std::atan2(x.x2, x.x1));
}

double chord_arg(const UnitVector2& x, const UnitVector2& z, double h) {
  require_unit(x, "x");
  require_unit(z, "z");
  if (h <= 0) throw DomainError("bandwidth must be positive");
  const double dot = x.x1 * z.x1 + x.x2 * z.x2;
  double s = (1.0 - dot) / (h * h);
  return s < 0 ? 0.0 : s;
}

double chord_arg_angles(double theta_x, double theta_z, double h) {
  if (h <= 0) throw DomainError("bandwidth must be positive");
  const double s = (1.0 - std::cos(theta_z - theta_x)) / (h * h);
  return s < 0 ? 0.0 : s;
}

double draw_von_mises(double mu, double kappa, Rng& rng) {
  if (kappa < 0) throw DomainError("kappa must be non-negative");
  if (kappa == 0.0) return rng.uniform(-kPi, kPi);

  // Best & Fisher (1979) wrapped-Cauchy envelope.
  const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
  const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
  const double r = (1.0 + rho * rho) / (2.0 * rho);
  for (;;) {
    const double u1 = rng.uniform01();
    const double u2 = rng.uniform01();
    const double z = std::cos(kPi * u1);
    const double f = (1.0 + r * z) / (r + z);
    const double c = kappa * (r - f);
    if (c * (2.0 - c) - u2 > 0.0 || (u2 > 0.0 && std::log(c / u2) + 1.0 - c >= 0.0)) {
      const double u3 = rng.uniform01();
      const double theta = (u3 < 0.5 ? -1.0 : 1.0) * std::acos(f);
      return canonical_angle(mu + theta);
    }
  }
}

CircularSample sample_von_mises(double mu, double kappa, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("sample size must be at least 1");
  Rng rng(seed);
  CircularSample out;
  out.seed = seed;
  out.angles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.angles.push_back(draw_von_mises(mu, kappa, rng));
  return out;
}

}  // namespace circfr
