#include "circfrechet/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "circfrechet/errors.hpp"

namespace circfr::quad {
namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirrored).
constexpr int kHalf = 8;
constexpr double kNodes[kHalf] = {
    0.0,
    0.2011940939974345223006283033946,
    0.3941513470775633698972073709810,
    0.5709721726085388475372267372539,
    0.7244177313601700474161860546139,
    0.8482065834104272162006483207742,
    0.9372733924007059043077589477103,
    0.9879925180204854284895657185866,
};
constexpr double kWeights[kHalf] = {
    0.2025782419255612728806201999675,
    0.1984314853271115764561183264438,
    0.1861610000155622110268005618664,
    0.1662692058169939335532008604812,
    0.1395706779261543144478047945110,
    0.1071592204671719350118695466858,
    0.0703660474881081247092674164507,
    0.0307532419961172683546283935772,
};

double gauss15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  double sum = kWeights[0] * f(c);
  for (int i = 1; i < kHalf; ++i) {
    sum += kWeights[i] * (f(c - r * kNodes[i]) + f(c + r * kNodes[i]));
  }
  return sum * r;
}

double adapt(const std::function<double(double)>& f, double a, double b, double whole,
             const Options& opt, double scale, int depth) {
  const double m = 0.5 * (a + b);
  const double left = gauss15(f, a, m);
  const double right = gauss15(f, m, b);
  const double refined = left + right;
  const double err = std::abs(refined - whole);
  if (depth >= opt.max_depth ||
      err <= std::max(opt.abs_tol, opt.rel_tol * std::max(scale, std::abs(refined)))) {
    return refined;
  }
  const double half_scale = std::max(scale, std::abs(refined));
  return adapt(f, a, m, left, opt, half_scale, depth + 1) +
         adapt(f, m, b, right, opt, half_scale, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt) {
  if (a == b) return 0.0;
  return adapt(f, a, b, gauss15(f, a, b), opt, 0.0, 0);
}

double integrate_split(const std::function<double(double)>& f, double a, double b,
                       const std::vector<double>& breakpoints, const Options& opt) {
  double total = 0.0;
  double lo = a;
  for (double bp : breakpoints) {
    if (bp <= lo || bp >= b) continue;
    total += integrate(f, lo, bp, opt);
    lo = bp;
  }
  total += integrate(f, lo, b, opt);
  return total;
}

double integrate_to_infinity(const std::function<double(double)>& f, double r0,
                             const Options& opt, double tail_rel) {
  if (r0 <= 0) r0 = 1.0;
  double total = integrate(f, 0.0, r0, opt);
  double lo = r0;
  double prev_panel = std::abs(total);
  int quiet = 0;
  while (quiet < 2) {
    const double hi = 2.0 * lo;
    const double panel = integrate(f, lo, hi, opt);
    total += panel;
    const double mag = std::abs(panel);
    if (mag <= tail_rel * std::max(std::abs(total), 1e-300)) {
      ++quiet;
    } else {
      quiet = 0;
      if (lo > 1e6 && mag >= prev_panel) {
        throw IntegrabilityError("tail of the integrand does not decay (last panel at r > 1e6)");
      }
    }
    prev_panel = mag;
    lo = hi;
    if (lo > 1e12) {
      throw IntegrabilityError("tail truncation did not converge below the tolerance");
    }
  }
  return total;
}

double periodic_trapezoid(const std::vector<double>& values, double period) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum * period / static_cast<double>(values.size());
}

}  // namespace circfr::quad
