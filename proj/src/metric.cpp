#include "circfrechet/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "circfrechet/circle.hpp"
#include "circfrechet/errors.hpp"
#include "circfrechet/threading.hpp"

namespace circfr {
namespace {

const char* kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::EuclideanReal: return "euclidean";
    case SpaceKind::CircleArc: return "circle";
    case SpaceKind::Wasserstein1D: return "wasserstein";
  }
  return "?";
}

void require_kind(const ResponsePoint& p, SpaceKind k) {
  if (p.kind() != k) {
    throw TypeError(std::string("response point of kind ") + kind_name(p.kind()) +
                    " used in a " + kind_name(k) + " space");
  }
}

}  // namespace

ResponsePoint ResponsePoint::euclidean(std::vector<double> coords) {
  if (coords.empty()) throw InvalidPointError("euclidean point needs at least one coordinate");
  return {SpaceKind::EuclideanReal, std::move(coords)};
}

ResponsePoint ResponsePoint::circle_arc(double angle) {
  return {SpaceKind::CircleArc, {canonical_angle(angle)}};
}

ResponsePoint ResponsePoint::wasserstein(std::vector<double> quantiles) {
  if (quantiles.empty()) throw InvalidPointError("quantile vector must be non-empty");
  for (std::size_t i = 1; i < quantiles.size(); ++i) {
    if (quantiles[i] < quantiles[i - 1]) {
      throw InvalidPointError("non-monotone quantiles at level " + std::to_string(i + 1));
    }
  }
  return {SpaceKind::Wasserstein1D, std::move(quantiles)};
}

double ResponsePoint::scalar_value() const {
  if (kind_ != SpaceKind::EuclideanReal) throw TypeError("scalar_value needs a euclidean point");
  return values_[0];
}

MetricSpace MetricSpace::euclidean_real(std::size_t dim) {
  if (dim == 0) throw DomainError("dimension must be at least 1");
  return {SpaceKind::EuclideanReal, dim};
}

MetricSpace MetricSpace::circle_arc(CandidatePolicy policy) {
  MetricSpace s{SpaceKind::CircleArc, 1};
  s.policy_ = policy;
  s.diameter_bound_ = kPi;
  return s;
}

MetricSpace MetricSpace::wasserstein1d(std::size_t levels) {
  if (levels < 2) throw DomainError("wasserstein discretization needs at least 2 levels");
  return {SpaceKind::Wasserstein1D, levels};
}

MetricSpace MetricSpace::from_name(const std::string& name) {
  if (name == "euclidean") return euclidean_real();
  if (name == "circle") return circle_arc();
  if (name == "wasserstein") return wasserstein1d();
  throw ParseError("unknown response space '" + name + "'");
}

std::vector<double> MetricSpace::wasserstein_levels() const {
  std::vector<double> p(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    p[i] = 0.005 + 0.99 * static_cast<double>(i) / static_cast<double>(dim_ - 1);
  }
  return p;
}

double MetricSpace::distance(const ResponsePoint& a, const ResponsePoint& b) const {
  require_kind(a, kind_);
  require_kind(b, kind_);
  switch (kind_) {
    case SpaceKind::EuclideanReal: {
      if (a.values().size() != b.values().size()) {
        throw TypeError("euclidean points of mismatched dimension");
      }
      double s = 0.0;
      for (std::size_t i = 0; i < a.values().size(); ++i) {
        const double d = a.values()[i] - b.values()[i];
        s += d * d;
      }
      return std::sqrt(s);
    }
    case SpaceKind::CircleArc: {
      // both angles are stored canonical, so |a - b| < 2*pi and the geodesic
      // arc is symmetric in the arguments bit-for-bit
      const double d = std::abs(a.values()[0] - b.values()[0]);
      return std::min(d, kTwoPi - d);
    }
    case SpaceKind::Wasserstein1D: {
      if (a.values().size() != b.values().size()) {
        throw TypeError("quantile vectors of mismatched length");
      }
      double s = 0.0;
      for (std::size_t i = 0; i < a.values().size(); ++i) {
        const double d = a.values()[i] - b.values()[i];
        s += d * d;
      }
      return std::sqrt(s / static_cast<double>(a.values().size()));
    }
  }
  throw TypeError("unknown space kind");
}

double weighted_objective(const MetricSpace& space, std::span<const ResponsePoint> points,
                          std::span<const double> weights, const ResponsePoint& y) {
  if (points.size() != weights.size()) {
    throw DomainError("points and weights must have equal length");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d = space.distance(points[i], y);
    s += weights[i] * d * d;
  }
  return s;
}

namespace {

FrechetEstimate candidate_search(const MetricSpace& space, std::span<const ResponsePoint> points,
                                 std::span<const double> weights) {
  std::vector<ResponsePoint> candidates;
  if (space.candidate_policy().include_sample) {
    candidates.assign(points.begin(), points.end());
  }
  if (space.kind() == SpaceKind::CircleArc && space.candidate_policy().grid_resolution > 0) {
    const std::size_t res = space.candidate_policy().grid_resolution;
    for (std::size_t g = 0; g < res; ++g) {
      candidates.push_back(
          ResponsePoint::circle_arc(-kPi + kTwoPi * static_cast<double>(g) / static_cast<double>(res)));
    }
  }
  if (candidates.empty()) throw DegenerateWeightsError("empty candidate set");

  std::vector<double> objectives(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t c) {
    objectives[c] = weighted_objective(space, points, weights, candidates[c]);
  });

  // (objective, index)-lexicographic minimum; schedule-independent.
  std::size_t best = 0;
  for (std::size_t c = 1; c < candidates.size(); ++c) {
    if (objectives[c] < objectives[best]) best = c;
  }
  double runner_up = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (c != best && objectives[c] < runner_up) runner_up = objectives[c];
  }
  return {candidates[best], objectives[best], candidates.size(), runner_up - objectives[best]};
}

}  // namespace

FrechetEstimate weighted_frechet_mean(const MetricSpace& space,
                                      std::span<const ResponsePoint> points,
                                      std::span<const double> weights) {
  if (points.empty() || points.size() != weights.size()) {
    throw DomainError("points and weights must be non-empty and of equal length");
  }
  bool any_nonzero = false;
  bool any_negative = false;
  double wsum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w)) throw DomainError("weights must be finite");
    if (w != 0.0) any_nonzero = true;
    if (w < 0.0) any_negative = true;
    wsum += w;
  }
  if (!any_nonzero) throw DegenerateWeightsError("all weights are zero");

  if (space.kind() == SpaceKind::EuclideanReal) {
    if (wsum == 0.0) throw DegenerateWeightsError("euclidean weighted mean needs sum of weights != 0");
    const std::size_t dim = points[0].values().size();
    std::vector<double> mean(dim, 0.0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      require_kind(points[i], SpaceKind::EuclideanReal);
      for (std::size_t d = 0; d < dim; ++d) mean[d] += weights[i] * points[i].values()[d];
    }
    for (double& m : mean) m /= wsum;
    ResponsePoint y = ResponsePoint::euclidean(std::move(mean));
    return {y, weighted_objective(space, points, weights, y), 1,
            std::numeric_limits<double>::infinity()};
  }

  if (space.kind() == SpaceKind::Wasserstein1D && !any_negative) {
    const std::size_t q = points[0].values().size();
    std::vector<double> mean(q, 0.0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      require_kind(points[i], SpaceKind::Wasserstein1D);
      for (std::size_t l = 0; l < q; ++l) mean[l] += weights[i] * points[i].values()[l];
    }
    for (double& m : mean) m /= wsum;
    // Per-level mean of monotone vectors with non-negative weights is monotone.
    ResponsePoint y = ResponsePoint::wasserstein(std::move(mean));
    return {y, weighted_objective(space, points, weights, y), 1,
            std::numeric_limits<double>::infinity()};
  }

  return candidate_search(space, points, weights);
}

}  // namespace circfr
