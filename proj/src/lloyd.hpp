#pragma once

// Pieces shared by the Lloyd-style fits (ccc, kmeans) and GMM seeding.

#include <vector>

#include "ccc/core.hpp"

namespace ccc::detail {

/// k-means++ seeding: first centre uniform, the rest by D^2 sampling.
std::vector<Point> kmeanspp_init(const Dataset& data, std::size_t k, Rng& rng);

/// Nearest centroid per point (squared Euclidean, ties to the lowest index).
std::vector<int> assign_nearest(const Dataset& data, const std::vector<Point>& centroids);

/// Gives every empty cluster one member: the point farthest from its own
/// centroid, taken from a cluster that can spare it. The centroid of the
/// emptied cluster is moved onto that point.
void repair_empty_clusters(const Dataset& data, std::vector<Point>& centroids, std::vector<int>& labels);

double max_coordinate_shift(const std::vector<Point>& a, const std::vector<Point>& b);

void check_fit_size(const Dataset& data, std::size_t k);

}  // namespace ccc::detail
