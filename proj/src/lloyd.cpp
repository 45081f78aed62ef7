#include "lloyd.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ccc::detail {

std::vector<Point> kmeanspp_init(const Dataset& data, std::size_t k, Rng& rng) {
  const std::size_t n = data.size();
  std::vector<Point> centers;
  centers.reserve(k);
  centers.push_back(data[rng.below(n)]);

  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) d2[i] = squared_distance(data[i], centers[0]);

  while (centers.size() < k) {
    double total = 0.0;
    for (double v : d2) total += v;

    std::size_t pick = n - 1;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += d2[i];
        if (target < acc && d2[i] > 0.0) {
          pick = i;
          break;
        }
      }
      // Rounding can push target past the last positive weight.
      while (d2[pick] == 0.0 && pick > 0) --pick;
    } else {
      pick = rng.below(n);
    }

    centers.push_back(data[pick]);
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], squared_distance(data[i], centers.back()));
    }
  }
  return centers;
}

std::vector<int> assign_nearest(const Dataset& data, const std::vector<Point>& centroids) {
  std::vector<int> labels(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    for (std::size_t c = 0; c < centroids.size(); ++c) {
      const double d = squared_distance(data[i], centroids[c]);
      if (d < best) {
        best = d;
        arg = static_cast<int>(c);
      }
    }
    labels[i] = arg;
  }
  return labels;
}

void repair_empty_clusters(const Dataset& data, std::vector<Point>& centroids, std::vector<int>& labels) {
  std::vector<std::size_t> count(centroids.size(), 0);
  for (int l : labels) ++count[static_cast<std::size_t>(l)];

  for (std::size_t c = 0; c < centroids.size(); ++c) {
    if (count[c] != 0) continue;
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto own = static_cast<std::size_t>(labels[i]);
      if (count[own] < 2) continue;
      const double d = squared_distance(data[i], centroids[own]);
      if (d > best) {
        best = d;
        arg = i;
      }
    }
    if (best < 0.0) continue;  // N >= k makes this unreachable
    --count[static_cast<std::size_t>(labels[arg])];
    labels[arg] = static_cast<int>(c);
    count[c] = 1;
    centroids[c] = data[arg];
  }
}

double max_coordinate_shift(const std::vector<Point>& a, const std::vector<Point>& b) {
  double m = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    for (std::size_t j = 0; j < a[c].size(); ++j) m = std::max(m, std::abs(a[c][j] - b[c][j]));
  }
  return m;
}

void check_fit_size(const Dataset& data, std::size_t k) {
  if (data.empty()) throw std::invalid_argument("cannot fit an empty dataset");
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (data.size() < k) {
    throw std::invalid_argument("need at least k = " + std::to_string(k) + " points, got " +
                                std::to_string(data.size()));
  }
}

}  // namespace ccc::detail
