#pragma once

#include "ccc/core.hpp"

namespace ccc {

/// Upper bound S on the squared distance between a cluster centre and its
/// extremal pattern. sqrt(S) is the enforcement radius.
class SpreadThreshold {
 public:
  explicit SpreadThreshold(double s);
  static SpreadThreshold from_radius(double radius);

  double value() const { return s_; }
  double radius() const;

 private:
  double s_;
};

struct ConstrainedCenterResult {
  Point center;
  double lambda = 0.0;
  bool constraint_active = false;
  double squared_distance_to_extremal = 0.0;
};

/// Index of the point farthest from the mean of the other N-1 points.
/// Ties go to the lowest index. Requires N >= 2.
std::size_t find_extremal(const Dataset& points);

/// Minimiser of the within-cluster squared distance over `remaining`, subject
/// to squared_distance(center, extremal) <= S.
///
/// If the unconstrained mean already satisfies the bound it is returned with
/// lambda = 0. Otherwise, with A the coordinate totals of the M remaining
/// points and C = sum_j (A_j - M y_j)^2,
///
///   lambda = sqrt(C / S) - M,   center_j = (A_j + lambda y_j) / (M + lambda),
///
/// which puts the centre exactly on the sphere of radius sqrt(S) about the
/// extremal. Throws if `remaining` is empty or any input is non-finite.
ConstrainedCenterResult constrained_centroid(const Dataset& remaining, std::span<const double> extremal,
                                             SpreadThreshold threshold);

/// Pulls `point` radially onto the ball of radius sqrt(S) about `center`.
/// Points already inside the ball are returned unchanged.
Point project_to_ball(std::span<const double> point, std::span<const double> center,
                      SpreadThreshold threshold);

}  // namespace ccc
