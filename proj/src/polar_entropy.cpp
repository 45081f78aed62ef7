#include "ccc/polar_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ccc {

PolarCoord to_polar(std::span<const double> point, std::span<const double> origin, AngleConvention convention) {
  if (point.size() != 2 || origin.size() != 2) {
    throw std::invalid_argument("polar transform needs 2-D points, got " + std::to_string(point.size()) +
                                " and " + std::to_string(origin.size()));
  }
  const double dx = point[0] - origin[0];
  const double dy = point[1] - origin[1];
  PolarCoord out;
  out.r = std::hypot(dx, dy);
  const double rad = convention == AngleConvention::kFirstAxis ? std::atan2(dx, dy) : std::atan2(dy, dx);
  double deg = rad * 180.0 / std::numbers::pi;
  if (deg < 0.0) deg += 360.0;
  if (deg >= 360.0) deg = 0.0;
  out.theta = deg;
  return out;
}

void RingSectorGrid::validate() const {
  if (center.size() != 2) throw std::invalid_argument("grid centre must be 2-D");
  if (rings == 0 || sectors == 0) throw std::invalid_argument("grid needs at least one ring and one sector");
  if (!(r_max >= 0.0) || !std::isfinite(r_max)) throw std::invalid_argument("grid r_max must be finite and >= 0");
}

std::size_t RingSectorGrid::ring_of(double r) const {
  if (!(r_max > 0.0)) return 0;
  const double idx = std::floor(r / (r_max / static_cast<double>(rings)));
  if (idx >= static_cast<double>(rings - 1)) return rings - 1;
  return idx < 0.0 ? 0 : static_cast<std::size_t>(idx);
}

std::size_t RingSectorGrid::sector_of(double theta) const {
  const double idx = std::floor(theta / (360.0 / static_cast<double>(sectors)));
  if (idx >= static_cast<double>(sectors - 1)) return sectors - 1;
  return idx < 0.0 ? 0 : static_cast<std::size_t>(idx);
}

CountMatrix::CountMatrix(std::size_t r, std::size_t s) : rings(r), sectors(s), counts(r * s, 0) {}

CountMatrix CountMatrix::from_rows(const std::vector<std::vector<std::size_t>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("count table is empty");
  CountMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.sectors) throw std::invalid_argument("ragged count table");
    for (std::size_t j = 0; j < m.sectors; ++j) {
      m.at(i, j) = rows[i][j];
      m.total += rows[i][j];
    }
  }
  return m;
}

CountMatrix bin_points(std::span<const Point> points, const RingSectorGrid& grid) {
  grid.validate();
  if (points.empty()) throw std::invalid_argument("no points to bin");
  CountMatrix m(grid.rings, grid.sectors);
  for (const auto& p : points) {
    const auto pc = to_polar(p, grid.center, grid.convention);
    ++m.at(grid.ring_of(pc.r), grid.sector_of(pc.theta));
    ++m.total;
  }
  return m;
}

namespace {

void require_mass(const CountMatrix& c) {
  if (c.total == 0) throw std::invalid_argument("count matrix has zero total");
}

}  // namespace

Pmf ring_pmf(const CountMatrix& counts) {
  require_mass(counts);
  Pmf p{std::vector<double>(counts.rings, 0.0)};
  for (std::size_t i = 0; i < counts.rings; ++i) {
    std::size_t row = 0;
    for (std::size_t j = 0; j < counts.sectors; ++j) row += counts.at(i, j);
    p.masses[i] = static_cast<double>(row) / static_cast<double>(counts.total);
  }
  return p;
}

Pmf sector_pmf(const CountMatrix& counts) {
  require_mass(counts);
  Pmf p{std::vector<double>(counts.sectors, 0.0)};
  for (std::size_t j = 0; j < counts.sectors; ++j) {
    std::size_t col = 0;
    for (std::size_t i = 0; i < counts.rings; ++i) col += counts.at(i, j);
    p.masses[j] = static_cast<double>(col) / static_cast<double>(counts.total);
  }
  return p;
}

Pmf joint_pmf(const CountMatrix& counts) {
  require_mass(counts);
  Pmf p{std::vector<double>(counts.counts.size())};
  for (std::size_t c = 0; c < counts.counts.size(); ++c) {
    p.masses[c] = static_cast<double>(counts.counts[c]) / static_cast<double>(counts.total);
  }
  return p;
}

double entropy_bits(const Pmf& pmf) {
  double h = 0.0;
  for (double m : pmf.masses) {
    if (m > 0.0) h -= m * std::log2(m);
  }
  return h;
}

EntropyReport entropies(const CountMatrix& counts) {
  return {entropy_bits(ring_pmf(counts)), entropy_bits(sector_pmf(counts)), entropy_bits(joint_pmf(counts))};
}

std::string_view to_string(EntropyMode mode) {
  return mode == EntropyMode::kGlobal ? "global" : "per-cluster";
}

EntropyMode parse_entropy_mode(std::string_view name) {
  if (name == "global") return EntropyMode::kGlobal;
  if (name == "per-cluster" || name == "per_cluster") return EntropyMode::kPerCluster;
  throw std::invalid_argument("unknown entropy mode '" + std::string(name) + "'");
}

namespace {

double max_radius(const Dataset& data, std::span<const std::size_t> idx, const Point& center) {
  double r = 0.0;
  for (std::size_t i : idx) r = std::max(r, std::sqrt(squared_distance(data[i], center)));
  return r;
}

}  // namespace

EntropyReport evaluate_clustering(const Dataset& data, const ClusterModel& model, const GridSpec& spec,
                                  const Dataset* extent_source) {
  if (data.dim() != 2) throw std::invalid_argument("entropy evaluation needs 2-D data");
  model.validate(data.size(), data.dim());
  const Dataset& extent = extent_source ? *extent_source : data;
  if (extent.size() != data.size() || extent.dim() != data.dim()) {
    throw std::invalid_argument("extent source does not match the evaluated data");
  }

  const auto clusters = model.members();
  std::vector<std::size_t> kept;
  for (const auto& c : clusters) kept.insert(kept.end(), c.begin(), c.end());
  if (kept.empty()) throw std::invalid_argument("no non-noise points to evaluate");

  RingSectorGrid grid;
  grid.rings = spec.rings;
  grid.sectors = spec.sectors;
  grid.convention = spec.convention;

  if (spec.mode == EntropyMode::kGlobal) {
    std::sort(kept.begin(), kept.end());
    grid.center = mean_vector(extent.subset(kept));
    grid.r_max = max_radius(extent, kept, grid.center);
    return entropies(bin_points(data.subset(kept).points(), grid));
  }

  EntropyReport avg;
  double weight = 0.0;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    if (clusters[c].empty()) continue;
    grid.center = model.centroids[c];
    grid.r_max = max_radius(extent, clusters[c], grid.center);
    const auto e = entropies(bin_points(data.subset(clusters[c]).points(), grid));
    const double w = static_cast<double>(clusters[c].size());
    avg.ring_entropy += w * e.ring_entropy;
    avg.sector_entropy += w * e.sector_entropy;
    avg.joint_entropy += w * e.joint_entropy;
    weight += w;
  }
  avg.ring_entropy /= weight;
  avg.sector_entropy /= weight;
  avg.joint_entropy /= weight;
  return avg;
}

}  // namespace ccc
