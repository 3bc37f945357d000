#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace circfr {

enum class SpaceKind { EuclideanReal, CircleArc, Wasserstein1D };

// A point of one of the concrete response spaces. Euclidean points hold a
// coordinate vector, circle points a single canonical angle, Wasserstein
// points a non-decreasing quantile vector on equispaced probability levels.
class ResponsePoint {
 public:
  static ResponsePoint euclidean(std::vector<double> coords);
  static ResponsePoint scalar(double value) { return euclidean({value}); }
  static ResponsePoint circle_arc(double angle);
  static ResponsePoint wasserstein(std::vector<double> quantiles);

  SpaceKind kind() const { return kind_; }
  const std::vector<double>& values() const { return values_; }
  double scalar_value() const;  // first coordinate; TypeError unless Euclidean

 private:
  ResponsePoint(SpaceKind kind, std::vector<double> values)
      : kind_(kind), values_(std::move(values)) {}

  SpaceKind kind_;
  std::vector<double> values_;
};

struct CandidatePolicy {
  bool include_sample = true;
  std::size_t grid_resolution = 0;  // extra equispaced candidates (CircleArc only)
};

class MetricSpace {
 public:
  static MetricSpace euclidean_real(std::size_t dim = 1);
  static MetricSpace circle_arc(CandidatePolicy policy = {});
  static MetricSpace wasserstein1d(std::size_t levels = 101);
  // "euclidean" | "circle" | "wasserstein"
  static MetricSpace from_name(const std::string& name);

  double distance(const ResponsePoint& a, const ResponsePoint& b) const;

  SpaceKind kind() const { return kind_; }
  std::size_t dimension() const { return dim_; }
  std::optional<double> diameter_bound() const { return diameter_bound_; }
  const CandidatePolicy& candidate_policy() const { return policy_; }
  void set_candidate_policy(CandidatePolicy p) { policy_ = p; }
  void set_diameter_bound(double d) { diameter_bound_ = d; }

  // Probability levels of the Wasserstein discretization: 0.005 .. 0.995 by
  // default (101 levels).
  std::vector<double> wasserstein_levels() const;

 private:
  MetricSpace(SpaceKind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

  SpaceKind kind_;
  std::size_t dim_;
  CandidatePolicy policy_;
  std::optional<double> diameter_bound_;
};

struct FrechetEstimate {
  ResponsePoint minimizer;
  double objective = 0.0;
  std::size_t candidates_evaluated = 0;
  double runner_up_gap = 0.0;  // objective(second best) - objective(best)
};

// argmin_y sum_i w_i d^2(y_i, y). Exact closed forms for Euclidean
// (sum w != 0) and non-negatively weighted Wasserstein; candidate-set search
// otherwise, ties broken by lowest index.
FrechetEstimate weighted_frechet_mean(const MetricSpace& space,
                                      std::span<const ResponsePoint> points,
                                      std::span<const double> weights);

// The weighted objective sum_i w_i d^2(y_i, y) at a given y.
double weighted_objective(const MetricSpace& space, std::span<const ResponsePoint> points,
                          std::span<const double> weights, const ResponsePoint& y);

}  // namespace circfr
