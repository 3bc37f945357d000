#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace circfr {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Canonical angle representative in [-pi, pi). Idempotent.
double canonical_angle(double theta);

struct UnitVector2 {
  double x1 = 1.0;
  double x2 = 0.0;

  static UnitVector2 from_angle(double theta);
  double angle() const;  // canonical
};

// Phi_x(theta) = x cos(theta) + (R x) sin(theta), R the quarter rotation.
UnitVector2 rotate(const UnitVector2& x, double theta);

// Phi_x^{-1}(z): the unique theta in [-pi, pi) with Phi_x(theta) = z.
double angle_between(const UnitVector2& x, const UnitVector2& z);

// (1 - z'x) / h^2; angle overload takes the two canonical angles directly.
double chord_arg(const UnitVector2& x, const UnitVector2& z, double h);
double chord_arg_angles(double theta_x, double theta_z, double h);

struct CircularSample {
  std::vector<double> angles;  // canonical radians
  std::optional<std::uint64_t> seed;  // provenance when simulated

  std::size_t size() const { return angles.size(); }
};

// n i.i.d. von Mises(mu, kappa) draws; kappa = 0 is the uniform law.
// Best-Fisher rejection sampling, deterministic given the seed.
CircularSample sample_von_mises(double mu, double kappa, std::size_t n, std::uint64_t seed);

class Rng;
double draw_von_mises(double mu, double kappa, Rng& rng);

}  // namespace circfr
