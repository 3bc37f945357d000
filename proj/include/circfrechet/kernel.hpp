#pragma once

#include <functional>
#include <optional>
#include <string>

namespace circfr {

enum class KernelFamily { VonMises, Exponential, Uniform, Custom };

// Directional kernel L: non-negative, non-increasing on [0, inf), applied to
// the scaled chord argument (1 - z'x)/h^2.
class DirectionalKernel {
 public:
  static DirectionalKernel von_mises();    // L(s) = exp(-s)
  static DirectionalKernel exponential();  // L(s) = exp(-sqrt(s))
  static DirectionalKernel uniform();      // L(s) = 1{s <= 1}
  static DirectionalKernel custom(std::function<double(double)> eval,
                                  std::optional<double> support_bound = {});
  // "von_mises" | "exponential" | "uniform"
  static DirectionalKernel from_name(const std::string& name);

  KernelFamily family() const { return family_; }
  std::optional<double> support_bound() const { return support_bound_; }
  const std::string& name() const { return name_; }

  // L(s); throws DomainError for s < 0.
  double operator()(double s) const;

 private:
  DirectionalKernel(KernelFamily family, std::function<double(double)> eval,
                    std::optional<double> support_bound, std::string name);

  KernelFamily family_;
  std::function<double(double)> eval_;
  std::optional<double> support_bound_;
  std::string name_;
};

struct KernelMoment {
  int j = 0;
  int k = 1;
  double value = 0.0;
  enum class Source { ClosedForm, Quadrature } source = Source::Quadrature;
};

// a_{j,k}(L) = integral_0^inf L^k(r^2) r^{2j} dr. Closed form for the three
// named families; adaptive quadrature with doubling tail truncation for
// Custom kernels.
KernelMoment moment_a(const DirectionalKernel& kernel, int j, int k);

// Quadrature route regardless of family; the independent side of the
// closed-form/quadrature pair.
KernelMoment moment_a_quadrature(const DirectionalKernel& kernel, int j, int k);

struct NormalizingConstant {
  double h = 0.0;
  int j = 0;
  int k = 1;
  double value = 0.0;
};

// c_{h,j,k}(L) = integral_{-pi}^{pi} L^k((1-cos t)/h^2) t^j dt.
// Exactly 0 for odd j; closed form for the Uniform kernel; otherwise
// quadrature after the substitution t = h u to keep relative accuracy at
// small h.
NormalizingConstant normalizing_c(const DirectionalKernel& kernel, double h, int j, int k);

// lambda_{h,j,k}(L) = integral_0^{sqrt(2)/h} L^k(r^2) r^{2j} (2-h^2 r^2)^{-1/2} dr,
// computed after r = (sqrt(2)/h) sin(u), which removes the endpoint
// singularity. Converges to 2^{-1/2} a_{j,k}(L) as h -> 0.
double lambda_h(const DirectionalKernel& kernel, double h, int j, int k);

}  // namespace circfr
