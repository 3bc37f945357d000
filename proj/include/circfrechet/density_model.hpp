#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "circfrechet/circle.hpp"

namespace circfr {

class Rng;

// Synthetic ground-truth density on S^1 with its first two angle
// derivatives. The Hessian trace of the homogeneous extension equals the
// second angular derivative, so d2 doubles as tr(grad^2 f-bar).
class DensityModel {
 public:
  static DensityModel uniform();
  static DensityModel von_mises(double mu, double kappa);
  // Components with positive weights; weights are normalized to sum 1.
  static DensityModel von_mises_mixture(std::vector<double> weights, std::vector<double> mus,
                                        std::vector<double> kappas);
  // "uniform" | "vm:mu,kappa" | "mix:w*vm:mu,kappa+w*vm:mu,kappa[+...]"
  static DensityModel parse(const std::string& text);

  double pdf(double theta) const { return pdf_(theta); }
  double d1(double theta) const { return d1_(theta); }
  double d2(double theta) const { return d2_(theta); }
  const std::string& name() const { return name_; }
  bool can_sample() const { return static_cast<bool>(draw_); }

  double draw(Rng& rng) const;
  CircularSample sample(std::size_t n, std::uint64_t seed) const;

  static DensityModel custom(std::string name, std::function<double(double)> pdf,
                             std::function<double(double)> d1, std::function<double(double)> d2,
                             std::function<double(Rng&)> draw = {});

 private:
  DensityModel() = default;

  std::string name_;
  std::function<double(double)> pdf_, d1_, d2_;
  std::function<double(Rng&)> draw_;
};

}  // namespace circfr
