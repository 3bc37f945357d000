#pragma once

#include <functional>
#include <vector>

namespace circfr::quad {

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 40;
};

// Adaptive quadrature on [a, b]: 15-point Gauss-Legendre per panel,
// bisection until the two-half refinement agrees with the whole panel.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt = {});

// Same, but the interval is pre-split at the given interior breakpoints
// (sorted, inside (a, b)). Used to seed refinement where the integrand is
// concentrated or has a known jump.
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       const std::vector<double>& breakpoints, const Options& opt = {});

// Integral over [0, inf): [0, r0] plus doubling tail panels, stopping once
// two consecutive panels each contribute less than tail_rel of the running
// total. Throws IntegrabilityError if the tail fails to decay.
double integrate_to_infinity(const std::function<double(double)>& f, double r0 = 1.0,
                             const Options& opt = {}, double tail_rel = 1e-14);

// Trapezoid rule for smooth periodic integrands sampled on an equispaced
// grid covering one period (last point excluded).
double periodic_trapezoid(const std::vector<double>& values, double period);

}  // namespace circfr::quad
