#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccc {

/// A d-dimensional pattern vector.
using Point = std::vector<double>;

/// A collection of points sharing one dimension.
///
/// The dimension is fixed at construction; every point added must match it
/// and carry only finite coordinates.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::size_t dim);
  Dataset(std::size_t dim, std::vector<Point> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  void push_back(Point p);
  void set(std::size_t i, Point p);

  /// Points whose index appears in `indices`, in that order.
  Dataset subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  void check(const Point& p) const;

  std::size_t dim_ = 0;
  std::vector<Point> points_;
};

double squared_distance(std::span<const double> a, std::span<const double> b);

/// Coordinate-wise arithmetic mean; throws on an empty list.
Point mean_vector(std::span<const Point> points);
Point mean_vector(const Dataset& data);

/// xoshiro256** seeded through splitmix64.
///
/// The integer stream is bit-identical across platforms for a given seed.
/// uniform() takes the top 53 bits; normal() is Box–Muller and caches the
/// second variate of each pair.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform integer on [0, n); n > 0. Uses rejection to stay unbiased.
  std::uint64_t below(std::uint64_t n);
  /// Standard normal variate.
  double normal();

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ccc
