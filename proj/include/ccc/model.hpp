#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ccc/core.hpp"

namespace ccc {

enum class Algorithm { kCcc, kKmeans, kGmm, kDbscan, kAgglomerative };

std::string_view to_string(Algorithm a);
/// Accepts "ccc", "kmeans", "gmm", "dbscan", "agglomerative" and "agglo".
Algorithm parse_algorithm(std::string_view name);

/// Assignment value carried by DBSCAN noise points.
inline constexpr int kNoise = -1;

/// Result of any clustering fit.
///
/// `lambdas` is filled only for CCC (one per cluster). `radius` is sqrt(S) for
/// CCC and empty otherwise. `trace` holds the per-iteration objective: the
/// within-cluster sum of squares for k-means and the log-likelihood for GMM.
struct ClusterModel {
  Algorithm algorithm = Algorithm::kKmeans;
  std::size_t k = 0;
  std::vector<Point> centroids;
  std::vector<int> assignments;
  std::vector<double> lambdas;
  std::optional<double> radius;
  std::size_t iterations_run = 0;
  bool converged = false;
  std::uint64_t seed = 0;
  std::vector<double> trace;

  /// Throws std::invalid_argument if the model is internally inconsistent or
  /// does not match a dataset of `n_points` points of dimension `dim`.
  void validate(std::size_t n_points, std::size_t dim) const;

  /// Indices of the points assigned to each cluster, in index order.
  std::vector<std::vector<std::size_t>> members() const;
};

/// Within-cluster sum of squared distances; noise points are skipped.
double within_cluster_ss(const Dataset& data, const ClusterModel& model);

}  // namespace ccc
