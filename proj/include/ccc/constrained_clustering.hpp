#pragma once

#include "ccc/constrained.hpp"
#include "ccc/model.hpp"

namespace ccc {

struct CccConfig {
  std::size_t k = 4;
  /// sqrt(S).
  double radius = 1.25;
  std::size_t max_iter = 300;
  /// Stop once no centroid coordinate moves by this much or more.
  double tol = 1e-6;
  std::uint64_t seed = 0;
  /// When set, each centroid update first pulls the cluster's members onto
  /// the ball of radius `radius` about the previous centroid, then runs the
  /// extremal search and constrained update on the pulled copy. Without it
  /// the update sees the raw members, and a far extremal can drag the centre
  /// to the cluster's edge.
  bool project_members = false;
  /// Start from a converged k-means solution (same k, seed and tol, default
  /// KmeansConfig iteration cap) instead of bare k-means++ seeds. The constrained updates then
  /// refine an ordinary partition rather than chase peripheral seed points.
  bool warm_start = false;

  void validate() const;
};

/// Constrained Centroid Clustering.
///
/// k-means++ seeding (or a k-means warm start), then alternate nearest-centroid assignment with a
/// per-cluster constrained_centroid update (extremal re-identified every
/// iteration; singleton clusters keep their point with lambda = 0) until the
/// largest centroid coordinate shift drops below `tol` or `max_iter` updates
/// have run. Assignments in the returned model are against the final
/// centroids.
ClusterModel ccc_fit(const Dataset& data, const CccConfig& config);

/// Evaluation copy of `data` with every point pulled onto the ball of radius
/// model.radius about its assigned centroid. Noise points and points already
/// inside their ball are copied bit-for-bit.
Dataset enforce_spread(const Dataset& data, const ClusterModel& model);

}  // namespace ccc
