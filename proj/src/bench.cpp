#include "ccc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "ccc/constrained_clustering.hpp"
#include "ccc/synth.hpp"

namespace ccc {

std::vector<std::string> ExperimentConfig::problems() const {
  std::vector<std::string> out;
  if (sizes.empty()) out.emplace_back("sizes: must be a nonempty list");
  for (auto n : sizes) {
    if (n == 0) out.emplace_back("sizes: every entry must be >= 1");
  }
  if (stds.empty()) out.emplace_back("stds: must be a nonempty list");
  for (double s : stds) {
    if (!(s > 0.0) || !std::isfinite(s)) out.emplace_back("stds: every entry must be > 0");
  }
  if (seeds.empty()) out.emplace_back("seeds: must be a nonempty list");
  if (k == 0) out.emplace_back("k: must be >= 1");
  for (auto n : sizes) {
    if (n != 0 && n < k) out.emplace_back("sizes: every entry must be >= k");
  }
  if (!(ccc_radius > 0.0) || !std::isfinite(ccc_radius)) out.emplace_back("ccc_radius: must be > 0");
  if (!(dbscan.eps > 0.0) || !std::isfinite(dbscan.eps)) out.emplace_back("dbscan.eps: must be > 0");
  if (dbscan.min_pts == 0) out.emplace_back("dbscan.min_pts: must be >= 1");
  if (rings == 0) out.emplace_back("rings: must be >= 1");
  if (sectors == 0) out.emplace_back("sectors: must be >= 1");
  return out;
}

void ExperimentConfig::validate() const {
  const auto p = problems();
  if (p.empty()) return;
  std::string msg = "invalid experiment config:";
  for (const auto& s : p) msg += " " + s + ";";
  throw std::invalid_argument(msg);
}

const BenchRow& BenchReport::row(Algorithm method, std::size_t n, double std) const {
  for (const auto& r : rows) {
    if (r.method == method && r.n == n && r.std == std) return r;
  }
  throw std::out_of_range("no bench row for " + std::string(to_string(method)) + " n=" + std::to_string(n));
}

namespace {

// Row order is by method name.
constexpr Algorithm kMethods[] = {Algorithm::kAgglomerative, Algorithm::kCcc, Algorithm::kDbscan,
                                  Algorithm::kGmm, Algorithm::kKmeans};

std::string cell_label(Algorithm a, std::size_t n, double std, std::uint64_t seed) {
  std::ostringstream os;
  os << "(method=" << to_string(a) << ", n=" << n << ", std=" << std << ", seed=" << seed << ")";
  return os.str();
}

}  // namespace

std::vector<std::pair<Algorithm, EntropyReport>> run_cell(const ExperimentConfig& config, std::size_t n,
                                                          double std, std::uint64_t seed) {
  SynthConfig sc;
  sc.n = n;
  sc.std = std;
  sc.seed = seed;
  const Dataset data = generate_gaussian(sc);

  GridSpec grid;
  grid.rings = config.rings;
  grid.sectors = config.sectors;
  grid.mode = config.entropy_mode;

  std::vector<std::pair<Algorithm, EntropyReport>> out;
  for (Algorithm a : kMethods) {
    try {
      switch (a) {
        case Algorithm::kCcc: {
          CccConfig cc;
          cc.k = config.k;
          cc.radius = config.ccc_radius;
          cc.seed = seed;
          cc.project_members = config.ccc_project_members;
          cc.warm_start = config.ccc_warm_start;
          const auto model = ccc_fit(data, cc);
          const auto projected = enforce_spread(data, model);
          out.emplace_back(a, evaluate_clustering(projected, model, grid, &data));
          break;
        }
        case Algorithm::kKmeans: {
          KmeansConfig kc;
          kc.k = config.k;
          kc.seed = seed;
          out.emplace_back(a, evaluate_clustering(data, kmeans_fit(data, kc), grid));
          break;
        }
        case Algorithm::kGmm: {
          GmmConfig gc;
          gc.k = config.k;
          gc.seed = seed;
          out.emplace_back(a, evaluate_clustering(data, gmm_fit(data, gc), grid));
          break;
        }
        case Algorithm::kDbscan:
          out.emplace_back(a, evaluate_clustering(data, dbscan_fit(data, config.dbscan), grid));
          break;
        case Algorithm::kAgglomerative:
          out.emplace_back(a, evaluate_clustering(data, agglomerative_fit(data, config.k), grid));
          break;
      }
    } catch (const std::exception& e) {
      throw BenchError(cell_label(a, n, std, seed) + ": " + e.what());
    }
  }
  return out;
}

BenchReport run_benchmark(const ExperimentConfig& config) {
  config.validate();

  struct Cell {
    std::size_t n;
    double std;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (auto n : config.sizes) {
    for (double s : config.stds) {
      for (auto seed : config.seeds) cells.push_back({n, s, seed});
    }
  }

  std::vector<std::vector<std::pair<Algorithm, EntropyReport>>> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        results[i] = run_cell(config, cells[i].n, cells[i].std, cells[i].seed);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::size_t threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, cells.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  BenchReport report;
  std::vector<std::size_t> sizes = config.sizes;
  std::vector<double> stds = config.stds;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::sort(stds.begin(), stds.end());
  stds.erase(std::unique(stds.begin(), stds.end()), stds.end());

  for (std::size_t m = 0; m < std::size(kMethods); ++m) {
    for (auto n : sizes) {
      for (double s : stds) {
        std::vector<EntropyReport> samples;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (cells[i].n == n && cells[i].std == s) samples.push_back(results[i][m].second);
        }
        BenchRow row;
        row.method = kMethods[m];
        row.n = n;
        row.std = s;
        const double count = static_cast<double>(samples.size());
        for (const auto& e : samples) {
          row.mean.ring_entropy += e.ring_entropy / count;
          row.mean.sector_entropy += e.sector_entropy / count;
          row.mean.joint_entropy += e.joint_entropy / count;
        }
        if (samples.size() > 1) {
          for (const auto& e : samples) {
            row.spread.ring_entropy += std::pow(e.ring_entropy - row.mean.ring_entropy, 2);
            row.spread.sector_entropy += std::pow(e.sector_entropy - row.mean.sector_entropy, 2);
            row.spread.joint_entropy += std::pow(e.joint_entropy - row.mean.joint_entropy, 2);
          }
          row.spread.ring_entropy = std::sqrt(row.spread.ring_entropy / (count - 1));
          row.spread.sector_entropy = std::sqrt(row.spread.sector_entropy / (count - 1));
          row.spread.joint_entropy = std::sqrt(row.spread.joint_entropy / (count - 1));
        }
        report.rows.push_back(row);
      }
    }
  }
  return report;
}

std::vector<Reduction> compare_reduction(const BenchReport& report, Algorithm baseline, Algorithm target) {
  auto has = [&](Algorithm a) {
    return std::any_of(report.rows.begin(), report.rows.end(), [&](const BenchRow& r) { return r.method == a; });
  };
  if (!has(baseline)) throw std::invalid_argument("method " + std::string(to_string(baseline)) + " not in report");
  if (!has(target)) throw std::invalid_argument("method " + std::string(to_string(target)) + " not in report");

  std::vector<Reduction> out;
  for (const auto& b : report.rows) {
    if (b.method != baseline) continue;
    for (const auto& t : report.rows) {
      if (t.method != target || t.n != b.n || t.std != b.std) continue;
      Reduction r;
      r.n = b.n;
      r.std = b.std;
      r.ring = (b.mean.ring_entropy - t.mean.ring_entropy) / b.mean.ring_entropy;
      r.joint = (b.mean.joint_entropy - t.mean.joint_entropy) / b.mean.joint_entropy;
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace ccc
