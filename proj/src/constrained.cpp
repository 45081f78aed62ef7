#include "ccc/constrained.hpp"

#include <cassert>
#include <cmath>

namespace ccc {

SpreadThreshold::SpreadThreshold(double s) : s_(s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("spread threshold must be positive and finite");
  }
}

SpreadThreshold SpreadThreshold::from_radius(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("radius must be positive and finite");
  }
  return SpreadThreshold(radius * radius);
}

double SpreadThreshold::radius() const { return std::sqrt(s_); }

std::size_t find_extremal(const Dataset& points) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("find_extremal needs at least 2 points");
  const std::size_t d = points.dim();

  Point total(d, 0.0);
  for (const auto& p : points.points()) {
    for (std::size_t j = 0; j < d; ++j) total[j] += p[j];
  }

  const double denom = static_cast<double>(n - 1);
  std::size_t best = 0;
  double best_dist = -1.0;
  Point loo(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) loo[j] = (total[j] - points[i][j]) / denom;
    const double dist = squared_distance(points[i], loo);
    if (dist > best_dist) {
      best_dist = dist;
      best = i;
    }
  }
  return best;
}

ConstrainedCenterResult constrained_centroid(const Dataset& remaining, std::span<const double> extremal,
                                             SpreadThreshold threshold) {
  const std::size_t m = remaining.size();
  if (m == 0) throw std::invalid_argument("constrained_centroid needs at least one remaining point");
  if (extremal.size() != remaining.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(remaining.dim()) + " vs " +
                                std::to_string(extremal.size()));
  }
  for (double v : extremal) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite extremal coordinate");
  }

  const std::size_t d = remaining.dim();
  const double s = threshold.value();
  const double mm = static_cast<double>(m);

  Point totals(d, 0.0);
  for (const auto& p : remaining.points()) {
    for (std::size_t j = 0; j < d; ++j) totals[j] += p[j];
  }

  ConstrainedCenterResult out;
  out.center.resize(d);
  for (std::size_t j = 0; j < d; ++j) out.center[j] = totals[j] / mm;
  out.squared_distance_to_extremal = squared_distance(out.center, extremal);
  if (out.squared_distance_to_extremal <= s) return out;

  double c = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const double t = totals[j] - mm * extremal[j];
    c += t * t;
  }
  // C = M^2 * dist^2 > M^2 * S > 0 here.
  assert(c > 0.0);

  const double lambda = std::sqrt(c / s) - mm;
  // Rounding can leave lambda at zero when the mean sits on the boundary;
  // Case 1 is then the answer to within an ulp.
  if (!(lambda > 0.0)) return out;
  out.lambda = lambda;
  out.constraint_active = true;
  for (std::size_t j = 0; j < d; ++j) {
    out.center[j] = (totals[j] + lambda * extremal[j]) / (mm + lambda);
  }
  out.squared_distance_to_extremal = squared_distance(out.center, extremal);
  return out;
}

Point project_to_ball(std::span<const double> point, std::span<const double> center,
                      SpreadThreshold threshold) {
  const double d2 = squared_distance(point, center);
  if (d2 <= threshold.value()) return Point(point.begin(), point.end());
  const double scale = threshold.radius() / std::sqrt(d2);
  Point out(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) {
    out[j] = center[j] + scale * (point[j] - center[j]);
  }
  return out;
}

}  // namespace ccc
