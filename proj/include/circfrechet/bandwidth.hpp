#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circfrechet/frechet_lc.hpp"

namespace circfr {

struct BandwidthGrid {
  enum class Scale { Log, Linear };

  std::vector<double> values;  // strictly increasing, all > 0
  Scale scale = Scale::Log;

  static BandwidthGrid log_spaced(double lo, double hi, std::size_t count);
  static BandwidthGrid linear_spaced(double lo, double hi, std::size_t count);
  // "lo:hi:COUNTlog" or "lo:hi:COUNTlin", e.g. "0.05:1.5:20log"
  static BandwidthGrid parse(const std::string& text);

  void validate() const;
};

// AMISE plug-in: S_f estimated from a pilot KDE by periodic second
// differences on a 512-point grid, then Eq-style h_AMISE. Pilot bandwidth
// defaults to n^{-1/5}.
double plugin_bandwidth(const CircularSample& sample, const DirectionalKernel& kernel,
                        std::optional<double> pilot_h = {});

enum class RegressionEstimator { LC, LL };

struct CvResult {
  double selected_h = 0.0;
  std::vector<std::pair<double, double>> scores;  // (h, cv score)
};

// Leave-one-out CV over the grid: CV(h) = (1/n) sum_i d^2(Y_i, m^{(-i)}_h(X_i)).
// Folds that fail (empty window / singular design) contribute the penalty
// (default diameter_bound^2 if set, else the max observed squared distance).
CvResult cv_bandwidth_frechet(const MetricSpace& space, const PairedSample& sample,
                              const DirectionalKernel& kernel, const BandwidthGrid& grid,
                              RegressionEstimator estimator,
                              std::optional<double> failure_penalty = {});

}  // namespace circfr
