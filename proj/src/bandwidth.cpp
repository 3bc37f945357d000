#include "circfrechet/bandwidth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "circfrechet/errors.hpp"
#include "circfrechet/frechet_ll.hpp"
#include "circfrechet/kde.hpp"
#include "circfrechet/quadrature.hpp"
#include "circfrechet/threading.hpp"

namespace circfr {

void BandwidthGrid::validate() const {
  if (values.empty()) throw DomainError("bandwidth grid must be non-empty");
  double prev = 0.0;
  for (double v : values) {
    if (!(v > prev)) throw DomainError("bandwidth grid must be strictly increasing and positive");
    prev = v;
  }
}

BandwidthGrid BandwidthGrid::log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0) || !(hi > lo) || count < 1) throw DomainError("invalid log grid parameters");
  BandwidthGrid g;
  g.scale = Scale::Log;
  if (count == 1) {
    g.values = {lo};
    return g;
  }
  const double llo = std::log(lo), lhi = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    g.values.push_back(std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                          static_cast<double>(count - 1)));
  }
  return g;
}

BandwidthGrid BandwidthGrid::linear_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0) || !(hi > lo) || count < 1) throw DomainError("invalid linear grid parameters");
  BandwidthGrid g;
  g.scale = Scale::Linear;
  if (count == 1) {
    g.values = {lo};
    return g;
  }
  for (std::size_t i = 0; i < count; ++i) {
    g.values.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return g;
}

BandwidthGrid BandwidthGrid::parse(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? 0 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw ParseError("bandwidth grid must look like 'lo:hi:COUNTlog', got '" + text + "'");
  }
  std::string tail = text.substr(c2 + 1);
  Scale scale = Scale::Log;
  if (tail.size() >= 3 && tail.substr(tail.size() - 3) == "log") {
    tail = tail.substr(0, tail.size() - 3);
  } else if (tail.size() >= 3 && tail.substr(tail.size() - 3) == "lin") {
    scale = Scale::Linear;
    tail = tail.substr(0, tail.size() - 3);
  }
  double lo, hi;
  long count;
  try {
    lo = std::stod(text.substr(0, c1));
    hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    count = std::stol(tail);
  } catch (const std::exception&) {
    throw ParseError("non-numeric bandwidth grid component in '" + text + "'");
  }
  if (count < 1) throw ParseError("bandwidth grid count must be at least 1");
  return scale == Scale::Log ? log_spaced(lo, hi, static_cast<std::size_t>(count))
                             : linear_spaced(lo, hi, static_cast<std::size_t>(count));
}

double plugin_bandwidth(const CircularSample& sample, const DirectionalKernel& kernel,
                        std::optional<double> pilot_h) {
  const std::size_t n = sample.angles.size();
  if (n < 10) throw DomainError("plug-in bandwidth needs n >= 10");
  const double pilot = pilot_h.value_or(std::pow(static_cast<double>(n), -0.2));
  if (pilot <= 0) throw DomainError("pilot bandwidth must be positive");

  constexpr std::size_t kGrid = 512;
  DensityEstimate est(kernel, sample, pilot);
  const auto fhat = est.evaluate_grid(kGrid);
  const double step = kTwoPi / static_cast<double>(kGrid);

  // Periodic second differences, then trapezoid on the squared curvature.
  std::vector<double> curv2(kGrid);
  for (std::size_t g = 0; g < kGrid; ++g) {
    const double prev = fhat[(g + kGrid - 1) % kGrid];
    const double next = fhat[(g + 1) % kGrid];
    const double d2 = (next - 2.0 * fhat[g] + prev) / (step * step);
    curv2[g] = d2 * d2;
  }
  const double sf = quad::periodic_trapezoid(curv2, kTwoPi);
  if (sf < 1e-12) {
    throw DegenerateCurvatureError("estimated S_f is near zero; the sample looks uniform");
  }
  return amise_bandwidth(sf, kernel, n);
}

CvResult cv_bandwidth_frechet(const MetricSpace& space, const PairedSample& sample,
                              const DirectionalKernel& kernel, const BandwidthGrid& grid,
                              RegressionEstimator estimator,
                              std::optional<double> failure_penalty) {
  sample.validate();
  grid.validate();
  const std::size_t n = sample.size();
  if (n < 20) throw DomainError("cross-validation needs n >= 20");

  double penalty;
  if (failure_penalty) {
    penalty = *failure_penalty;
  } else if (space.diameter_bound()) {
    penalty = *space.diameter_bound() * *space.diameter_bound();
  } else {
    double dmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        dmax = std::max(dmax, space.distance(sample.responses[i], sample.responses[j]));
      }
    }
    penalty = dmax * dmax;
  }

  const std::size_t hcount = grid.values.size();
  std::vector<double> fold_scores(hcount * n, 0.0);
  std::vector<char> fold_failed(hcount * n, 0);

  parallel_for(hcount * n, [&](std::size_t task) {
    const std::size_t hi = task / n;
    const std::size_t i = task % n;
    const double h = grid.values[hi];

    PairedSample loo;
    loo.predictors.angles.reserve(n - 1);
    loo.responses.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      loo.predictors.angles.push_back(sample.predictors.angles[j]);
      loo.responses.push_back(sample.responses[j]);
    }
    try {
      const double x = sample.predictors.angles[i];
      const FrechetEstimate est = (estimator == RegressionEstimator::LC)
                                      ? lc_estimate(space, loo, kernel, h, x)
                                      : ll_estimate(space, loo, kernel, h, x);
      const double d = space.distance(sample.responses[i], est.minimizer);
      fold_scores[task] = d * d;
    } catch (const EmptyWindowError&) {
      fold_failed[task] = 1;
    } catch (const SingularDesignError&) {
      fold_failed[task] = 1;
    }
  });

  CvResult result;
  result.scores.reserve(hcount);
  std::size_t best = hcount;  // sentinel
  bool any_valid = false;
  for (std::size_t hi = 0; hi < hcount; ++hi) {
    // Compensated (Kahan) summation in index order.
    double sum = 0.0, comp = 0.0;
    bool all_failed = true;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t task = hi * n + i;
      const double term = fold_failed[task] ? penalty : fold_scores[task];
      if (!fold_failed[task]) all_failed = false;
      const double y = term - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    const double score = sum / static_cast<double>(n);
    result.scores.emplace_back(grid.values[hi], score);
    if (!all_failed) any_valid = true;
    if (best == hcount || score < result.scores[best].second) best = hi;
  }
  if (!any_valid) {
    throw NoValidBandwidthError("every bandwidth failed on every leave-one-out fold");
  }
  result.selected_h = grid.values[best];
  return result;
}

}  // namespace circfr
