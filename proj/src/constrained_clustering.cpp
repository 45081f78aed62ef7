#include "ccc/constrained_clustering.hpp"

#include <cmath>

#include "ccc/baselines.hpp"
#include "lloyd.hpp"

namespace ccc {

void CccConfig::validate() const {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("radius must be > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  if (max_iter == 0) throw std::invalid_argument("max_iter must be >= 1");
}

namespace {

ConstrainedCenterResult update_cluster(const Dataset& members, SpreadThreshold threshold) {
  if (members.size() == 1) {
    ConstrainedCenterResult r;
    r.center = members[0];
    return r;
  }
  const std::size_t e = find_extremal(members);
  std::vector<std::size_t> rest;
  rest.reserve(members.size() - 1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i != e) rest.push_back(i);
  }
  return constrained_centroid(members.subset(rest), members[e], threshold);
}

}  // namespace

ClusterModel ccc_fit(const Dataset& data, const CccConfig& config) {
  config.validate();
  detail::check_fit_size(data, config.k);
  const auto threshold = SpreadThreshold::from_radius(config.radius);

  Rng rng(config.seed);
  ClusterModel model;
  model.algorithm = Algorithm::kCcc;
  model.k = config.k;
  model.radius = config.radius;
  model.seed = config.seed;
  if (config.warm_start) {
    KmeansConfig kc;
    kc.k = config.k;
    kc.tol = config.tol;
    kc.seed = config.seed;
    model.centroids = kmeans_fit(data, kc).centroids;
  } else {
    model.centroids = detail::kmeanspp_init(data, config.k, rng);
  }
  model.lambdas.assign(config.k, 0.0);

  for (std::size_t it = 1; it <= config.max_iter; ++it) {
    auto labels = detail::assign_nearest(data, model.centroids);
    detail::repair_empty_clusters(data, model.centroids, labels);

    std::vector<Dataset> groups(config.k, Dataset(data.dim()));
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto c = static_cast<std::size_t>(labels[i]);
      if (config.project_members) {
        groups[c].push_back(project_to_ball(data[i], model.centroids[c], threshold));
      } else {
        groups[c].push_back(data[i]);
      }
    }

    std::vector<Point> next(config.k);
    for (std::size_t c = 0; c < config.k; ++c) {
      auto r = update_cluster(groups[c], threshold);
      next[c] = std::move(r.center);
      model.lambdas[c] = r.lambda;
    }

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

Dataset enforce_spread(const Dataset& data, const ClusterModel& model) {
  if (model.assignments.size() != data.size()) {
    throw std::invalid_argument("model has " + std::to_string(model.assignments.size()) +
                                " assignments but the dataset has " + std::to_string(data.size()) +
                                " points");
  }
  if (!model.radius) throw std::invalid_argument("model has no spread radius");
  const auto threshold = SpreadThreshold::from_radius(*model.radius);

  Dataset out = data;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const int a = model.assignments[i];
    if (a == kNoise) continue;
    const auto& center = model.centroids.at(static_cast<std::size_t>(a));
    if (squared_distance(data[i], center) > threshold.value()) {
      out.set(i, project_to_ball(data[i], center, threshold));
    }
  }
  return out;
}

}  // namespace ccc
