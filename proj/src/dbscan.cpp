#include <cmath>

#include "ccc/baselines.hpp"

namespace ccc {

void DbscanConfig::validate() const {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be > 0");
  if (min_pts == 0) throw std::invalid_argument("min_pts must be >= 1");
}

namespace {

constexpr int kUnvisited = -2;

std::vector<std::size_t> region_query(const Dataset& data, std::size_t i, double eps2) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < data.size(); ++j) {
    if (squared_distance(data[i], data[j]) <= eps2) out.push_back(j);
  }
  return out;
}

}  // namespace

ClusterModel dbscan_fit(const Dataset& data, const DbscanConfig& config) {
  config.validate();
  if (data.empty()) throw std::invalid_argument("cannot fit an empty dataset");
  const double eps2 = config.eps * config.eps;

  std::vector<int> labels(data.size(), kUnvisited);
  int cluster = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (labels[i] != kUnvisited) continue;
    auto seeds = region_query(data, i, eps2);
    if (seeds.size() < config.min_pts) {
      labels[i] = kNoise;
      continue;
    }
    labels[i] = cluster;
    for (std::size_t q = 0; q < seeds.size(); ++q) {
      const std::size_t p = seeds[q];
      if (labels[p] == kNoise) labels[p] = cluster;  // border point
      if (labels[p] != kUnvisited) continue;
      labels[p] = cluster;
      auto more = region_query(data, p, eps2);
      if (more.size() >= config.min_pts) seeds.insert(seeds.end(), more.begin(), more.end());
    }
    ++cluster;
  }

  ClusterModel model;
  model.algorithm = Algorithm::kDbscan;
  model.k = static_cast<std::size_t>(cluster);
  model.assignments = std::move(labels);
  model.iterations_run = 1;
  model.converged = true;
  for (const auto& idx : model.members()) model.centroids.push_back(mean_vector(data.subset(idx)));
  return model;
}

}  // namespace ccc
