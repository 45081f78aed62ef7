#pragma once

#include <Eigen/Dense>

#include "ccc/model.hpp"

namespace ccc {

struct KmeansConfig {
  std::size_t k = 4;
  std::size_t max_iter = 300;
  double tol = 1e-6;
  std::uint64_t seed = 0;
};

/// Lloyd's algorithm with k-means++ seeding. Shares seeding, tie-breaking,
/// empty-cluster repair and the convergence rule with ccc_fit, so the two are
/// directly comparable for equal seeds. model.trace records the within-cluster
/// sum of squares after every centroid update.
ClusterModel kmeans_fit(const Dataset& data, const KmeansConfig& config);

struct GmmConfig {
  std::size_t k = 4;
  std::size_t max_iter = 300;
  /// Convergence threshold on the change of mean per-point log-likelihood.
  double tol = 1e-6;
  /// Added to every covariance diagonal.
  double cov_reg = 1e-6;
  std::uint64_t seed = 0;

  void validate() const;
};

struct GaussianMixture {
  std::vector<double> weights;
  std::vector<Eigen::VectorXd> means;
  std::vector<Eigen::MatrixXd> covariances;
  /// Log-likelihood of the data under the parameters in effect at the start
  /// of each EM iteration, plus the final parameters.
  std::vector<double> log_likelihood;
  std::vector<int> labels;
  std::size_t iterations_run = 0;
  bool converged = false;
};

/// Full-covariance EM. Means start from k-means++ centres, weights uniform,
/// covariances at the population covariance of the data plus cov_reg * I.
/// Throws std::runtime_error if a component covariance is not positive
/// definite or a component loses all responsibility.
GaussianMixture gmm_em(const Dataset& data, const GmmConfig& config);

/// Hard clustering by maximum responsibility from gmm_em.
ClusterModel gmm_fit(const Dataset& data, const GmmConfig& config);

struct DbscanConfig {
  double eps = 1.0;
  std::size_t min_pts = 5;

  void validate() const;
};

/// Density-based clustering with brute-force region queries.
///
/// A point is core when at least min_pts points (itself included) lie within
/// distance eps. Points are scanned in index order; each unvisited core point
/// starts a new cluster that is expanded completely before the scan resumes,
/// so a border point reachable from several clusters joins the one found
/// first. Points reachable from no core point are noise (kNoise). Centroids
/// are the member means.
ClusterModel dbscan_fit(const Dataset& data, const DbscanConfig& config);

struct WardMerge {
  /// Cluster ids: 0..N-1 are the input points, N+s is the cluster created by
  /// merge s.
  std::size_t a = 0;
  std::size_t b = 0;
  /// Increase in within-cluster sum of squares caused by the merge.
  double cost = 0.0;
  std::size_t size = 0;
};

/// Full Ward dendrogram via the nearest-neighbour chain, O(N^2) time and
/// O(N d) memory. Merges are returned sorted by cost (stable), with ids
/// renumbered to match that order, so the sequence equals the one produced by
/// greedy agglomeration.
std::vector<WardMerge> ward_linkage(const Dataset& data);

/// Cuts the Ward dendrogram at k clusters. Labels are numbered by first
/// appearance in point order; centroids are cluster means.
ClusterModel agglomerative_fit(const Dataset& data, std::size_t k);

}  // namespace ccc
