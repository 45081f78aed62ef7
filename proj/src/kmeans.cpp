#include "ccc/baselines.hpp"
#include "lloyd.hpp"

namespace ccc {

ClusterModel kmeans_fit(const Dataset& data, const KmeansConfig& config) {
  if (!(config.tol > 0.0) || config.max_iter == 0) {
    throw std::invalid_argument("kmeans needs tol > 0 and max_iter >= 1");
  }
  detail::check_fit_size(data, config.k);

  Rng rng(config.seed);
  ClusterModel model;
  model.algorithm = Algorithm::kKmeans;
  model.k = config.k;
  model.seed = config.seed;
  model.centroids = detail::kmeanspp_init(data, config.k, rng);

  for (std::size_t it = 1; it <= config.max_iter; ++it) {
    auto labels = detail::assign_nearest(data, model.centroids);
    detail::repair_empty_clusters(data, model.centroids, labels);

    std::vector<Point> next(config.k, Point(data.dim(), 0.0));
    std::vector<std::size_t> count(config.k, 0);
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto c = static_cast<std::size_t>(labels[i]);
      ++count[c];
      for (std::size_t j = 0; j < data.dim(); ++j) next[c][j] += data[i][j];
    }
    double wcss = 0.0;
    for (std::size_t c = 0; c < config.k; ++c) {
      for (double& v : next[c]) v /= static_cast<double>(count[c]);
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
      wcss += squared_distance(data[i], next[static_cast<std::size_t>(labels[i])]);
    }
    model.trace.push_back(wcss);

    const double shift = detail::max_coordinate_shift(model.centroids, next);
    model.centroids = std::move(next);
    model.iterations_run = it;
    if (shift < config.tol) {
      model.converged = true;
      break;
    }
  }

  model.assignments = detail::assign_nearest(data, model.centroids);
  return model;
}

}  // namespace ccc
