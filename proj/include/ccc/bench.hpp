#pragma once

#include <stdexcept>
#include <string>

#include "ccc/baselines.hpp"
#include "ccc/polar_entropy.hpp"

namespace ccc {

struct ExperimentConfig {
  std::vector<std::size_t> sizes{500, 5000};
  std::vector<double> stds{1.0, 1.2, 1.5};
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  std::size_t k = 4;
  double ccc_radius = 1.25;
  bool ccc_project_members = true;
  bool ccc_warm_start = true;
  DbscanConfig dbscan{};
  std::size_t rings = 5;
  std::size_t sectors = 8;
  EntropyMode entropy_mode = EntropyMode::kGlobal;
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend
  /// on it.
  std::size_t threads = 0;

  /// One message per invalid field; empty when the config is usable.
  std::vector<std::string> problems() const;
  void validate() const;
};

struct BenchRow {
  Algorithm method = Algorithm::kKmeans;
  std::size_t n = 0;
  double std = 0.0;
  EntropyReport mean;
  /// Sample standard deviation across seeds (0 for a single seed).
  EntropyReport spread;
};

struct BenchReport {
  /// Sorted by (method name, n, std).
  std::vector<BenchRow> rows;

  const BenchRow& row(Algorithm method, std::size_t n, double std) const;
};

/// A fit or evaluation failure inside run_benchmark, tagged with its cell.
class BenchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entropies of all five methods on one generated dataset. Baselines are
/// evaluated on the raw data; CCC on its enforce_spread copy, counted on the
/// grid the raw data defines.
std::vector<std::pair<Algorithm, EntropyReport>> run_cell(const ExperimentConfig& config, std::size_t n,
                                                          double std, std::uint64_t seed);

BenchReport run_benchmark(const ExperimentConfig& config);

struct Reduction {
  std::size_t n = 0;
  double std = 0.0;
  double ring = 0.0;
  double joint = 0.0;
};

/// (baseline - target) / baseline for ring and joint entropy at every (n, std)
/// present for both methods. Throws if either method is missing.
std::vector<Reduction> compare_reduction(const BenchReport& report, Algorithm baseline, Algorithm target);

}  // namespace ccc
