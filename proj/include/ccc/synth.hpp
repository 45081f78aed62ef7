#pragma once

#include "ccc/core.hpp"

namespace ccc {

struct SynthConfig {
  std::size_t n = 500;
  double std = 1.0;
  std::uint64_t seed = 0;
  Point center{0.0, 0.0};

  void validate() const;
};

/// n isotropic Gaussian samples about `center`, drawn from Rng(seed) with
/// Box–Muller normals in point order, x before y.
Dataset generate_gaussian(const SynthConfig& config);

}  // namespace ccc
