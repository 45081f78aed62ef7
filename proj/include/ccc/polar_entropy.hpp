#pragma once

#include <optional>
#include <string_view>

#include "ccc/model.hpp"

namespace ccc {

/// How the polar angle is measured.
///
/// kFirstAxis is atan2(dx, dy): zero along the positive second axis, growing
/// towards the positive first axis, so (-0.6, 0.7) -> 319.4 degrees and
/// (0.2, -1.4) -> 171.87 degrees. This is the default. kStandard is the usual
/// atan2(dy, dx).
enum class AngleConvention { kFirstAxis, kStandard };

struct PolarCoord {
  double r = 0.0;
  /// Degrees in [0, 360).
  double theta = 0.0;
};

PolarCoord to_polar(std::span<const double> point, std::span<const double> origin,
                    AngleConvention convention = AngleConvention::kFirstAxis);

/// R equal-width rings over [0, r_max] by J equal sectors over [0, 360).
struct RingSectorGrid {
  Point center;
  std::size_t rings = 1;
  std::size_t sectors = 1;
  double r_max = 1.0;
  AngleConvention convention = AngleConvention::kFirstAxis;

  void validate() const;
  std::size_t ring_of(double r) const;
  std::size_t sector_of(double theta) const;
};

/// Ring-by-sector histogram, row-major (ring, sector).
struct CountMatrix {
  std::size_t rings = 0;
  std::size_t sectors = 0;
  std::vector<std::size_t> counts;
  std::size_t total = 0;

  CountMatrix() = default;
  CountMatrix(std::size_t rings, std::size_t sectors);
  /// Takes a full R x J table; total is its sum.
  static CountMatrix from_rows(const std::vector<std::vector<std::size_t>>& rows);

  std::size_t& at(std::size_t ring, std::size_t sector) { return counts[ring * sectors + sector]; }
  std::size_t at(std::size_t ring, std::size_t sector) const { return counts[ring * sectors + sector]; }
};

struct Pmf {
  std::vector<double> masses;
};

/// Bins points on the grid. Radii beyond r_max land in the outer ring; a
/// radius exactly on an inner ring edge goes to the outer of the two rings,
/// and likewise for sector edges. Throws on an empty list or non-2-D points.
CountMatrix bin_points(std::span<const Point> points, const RingSectorGrid& grid);

Pmf ring_pmf(const CountMatrix& counts);
Pmf sector_pmf(const CountMatrix& counts);
/// Cell masses, flattened row-major.
Pmf joint_pmf(const CountMatrix& counts);

/// Shannon entropy in bits; zero masses contribute nothing.
double entropy_bits(const Pmf& pmf);

struct EntropyReport {
  double ring_entropy = 0.0;
  double sector_entropy = 0.0;
  double joint_entropy = 0.0;
};

EntropyReport entropies(const CountMatrix& counts);

enum class EntropyMode { kPerCluster, kGlobal };

std::string_view to_string(EntropyMode mode);
EntropyMode parse_entropy_mode(std::string_view name);

struct GridSpec {
  std::size_t rings = 5;
  std::size_t sectors = 8;
  EntropyMode mode = EntropyMode::kGlobal;
  AngleConvention convention = AngleConvention::kFirstAxis;
};

/// Ring, sector and joint entropy of a clustering of 2-D data.
///
/// Global mode builds one grid centred at the mean of all non-noise points.
/// Per-cluster mode builds one grid per non-empty cluster, centred at its
/// centroid, and averages the three entropies weighted by cluster size.
/// Noise points are left out in both modes.
///
/// The grid geometry (centre in global mode, and r_max in both) comes from
/// `extent_source` when given, otherwise from `data`; the counts always come
/// from `data`. Passing the unprojected data as `extent_source` evaluates a
/// projected copy on exactly the grid the raw data defines.
EntropyReport evaluate_clustering(const Dataset& data, const ClusterModel& model, const GridSpec& spec,
                                  const Dataset* extent_source = nullptr);

}  // namespace ccc
