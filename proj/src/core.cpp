#include "ccc/core.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace ccc {

Dataset::Dataset(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("dataset dimension must be >= 1");
}

Dataset::Dataset(std::size_t dim, std::vector<Point> points) : Dataset(dim) {
  for (const auto& p : points) check(p);
  points_ = std::move(points);
}

void Dataset::check(const Point& p) const {
  if (p.size() != dim_) {
    throw std::invalid_argument("point has " + std::to_string(p.size()) +
                                " coordinates, dataset dimension is " + std::to_string(dim_));
  }
  for (double v : p) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite coordinate");
  }
}

void Dataset::push_back(Point p) {
  check(p);
  points_.push_back(std::move(p));
}

void Dataset::set(std::size_t i, Point p) {
  check(p);
  points_.at(i) = std::move(p);
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  Dataset out(dim_);
  out.points_.reserve(indices.size());
  for (std::size_t i : indices) out.points_.push_back(points_.at(i));
  return out;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double t = a[j] - b[j];
    s += t * t;
  }
  return s;
}

Point mean_vector(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("mean of an empty point list");
  const std::size_t d = points.front().size();
  Point m(d, 0.0);
  for (const auto& p : points) {
    if (p.size() != d) {
      throw std::invalid_argument("dimension mismatch: " + std::to_string(d) + " vs " +
                                  std::to_string(p.size()));
    }
    for (std::size_t j = 0; j < d; ++j) m[j] += p[j];
  }
  for (double& v : m) v /= static_cast<double>(points.size());
  return m;
}

Point mean_vector(const Dataset& data) { return mean_vector(std::span(data.points())); }

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed) {
  std::uint64_t x = seed;
  for (auto& s : s_) s = splitmix64(x);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = -n % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = next();
    if (r >= limit) return r % n;
  }
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  spare_ = mag * std::sin(ang);
  has_spare_ = true;
  return mag * std::cos(ang);
}

}  // namespace ccc
