#include "ccc/model.hpp"

#include <cmath>
#include <string>

namespace ccc {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kCcc: return "ccc";
    case Algorithm::kKmeans: return "kmeans";
    case Algorithm::kGmm: return "gmm";
    case Algorithm::kDbscan: return "dbscan";
    case Algorithm::kAgglomerative: return "agglomerative";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "ccc") return Algorithm::kCcc;
  if (name == "kmeans") return Algorithm::kKmeans;
  if (name == "gmm") return Algorithm::kGmm;
  if (name == "dbscan") return Algorithm::kDbscan;
  if (name == "agglomerative" || name == "agglo") return Algorithm::kAgglomerative;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

void ClusterModel::validate(std::size_t n_points, std::size_t dim) const {
  if (centroids.size() != k) {
    throw std::invalid_argument("model has " + std::to_string(centroids.size()) +
                                " centroids but k = " + std::to_string(k));
  }
  if (assignments.size() != n_points) {
    throw std::invalid_argument("model has " + std::to_string(assignments.size()) +
                                " assignments but the dataset has " + std::to_string(n_points) +
                                " points");
  }
  for (const auto& c : centroids) {
    if (c.size() != dim) throw std::invalid_argument("centroid dimension does not match dataset");
    for (double v : c) {
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite centroid");
    }
  }
  for (int a : assignments) {
    const bool noise_ok = algorithm == Algorithm::kDbscan && a == kNoise;
    if (!noise_ok && (a < 0 || static_cast<std::size_t>(a) >= k)) {
      throw std::invalid_argument("assignment " + std::to_string(a) + " out of range");
    }
  }
  if (algorithm == Algorithm::kCcc) {
    if (lambdas.size() != k) throw std::invalid_argument("ccc model needs one lambda per cluster");
    for (double l : lambdas) {
      if (!(l >= 0.0)) throw std::invalid_argument("negative lambda");
    }
    if (!radius || !(*radius > 0.0)) throw std::invalid_argument("ccc model needs a positive radius");
  }
}

std::vector<std::vector<std::size_t>> ClusterModel::members() const {
  std::vector<std::vector<std::size_t>> out(k);
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != kNoise) out[static_cast<std::size_t>(assignments[i])].push_back(i);
  }
  return out;
}

double within_cluster_ss(const Dataset& data, const ClusterModel& model) {
  double s = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const int a = model.assignments[i];
    if (a == kNoise) continue;
    s += squared_distance(data[i], model.centroids[static_cast<std::size_t>(a)]);
  }
  return s;
}

}  // namespace ccc
