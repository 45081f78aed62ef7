#include "ccc/synth.hpp"

#include <cmath>

namespace ccc {

void SynthConfig::validate() const {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (!(std > 0.0) || !std::isfinite(std)) throw std::invalid_argument("std must be > 0");
  if (center.empty()) throw std::invalid_argument("center must have at least one coordinate");
}

Dataset generate_gaussian(const SynthConfig& config) {
  config.validate();
  Rng rng(config.seed);
  Dataset out(config.center.size());
  for (std::size_t i = 0; i < config.n; ++i) {
    Point p(config.center.size());
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = config.center[j] + config.std * rng.normal();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace ccc
