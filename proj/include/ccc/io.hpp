#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ccc/bench.hpp"

namespace ccc::io {

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed file content. Messages name the source and line where relevant.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `%.12g`: the fixed float format used by every writer here.
std::string format_real(double v);

/// One point per row, comma separated. A first line whose first cell is not
/// a number is treated as a header and skipped. Blank lines are ignored.
Dataset parse_dataset_csv(std::istream& in, const std::string& source = "<input>");
Dataset read_dataset_csv(const std::filesystem::path& path);
void write_dataset_csv(std::ostream& out, const Dataset& data);
void write_dataset_csv(const std::filesystem::path& path, const Dataset& data);

/// Keys in order: algorithm, k, radius, centroids, assignments, lambdas,
/// iterations_run, converged, seed. Reals are rounded to 12 significant
/// digits, so write -> read -> write is byte-identical.
std::string model_to_json(const ClusterModel& model);
ClusterModel model_from_json(const std::string& text, const std::string& source = "<input>");
ClusterModel read_model(const std::filesystem::path& path);
void write_model(const std::filesystem::path& path, const ClusterModel& model);

struct EvalRecord {
  EntropyReport entropy;
  GridSpec grid;
  bool projected = false;
};
std::string eval_to_json(const EvalRecord& record);

/// Field names mirror ExperimentConfig in snake_case; missing fields keep
/// their defaults. Throws ParseError listing every bad field.
ExperimentConfig experiment_config_from_json(const std::string& text);

/// Header: method,n,std,ring_entropy,sector_entropy,joint_entropy,ring_std,sector_std,joint_std
std::string bench_to_csv(const BenchReport& report);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

struct PlotOptions {
  bool show_radius = false;
  double size_px = 640.0;
};

/// SVG 1.1 scatter: one <circle class="point"> per point coloured by cluster
/// (noise grey), one cross <path class="centroid"> per centroid, equal axes.
/// With show_radius and a CCC model, a dashed <circle class="radius"> of
/// radius sqrt(S) around every centroid.
std::string render_svg(const Dataset& data, const ClusterModel& model, const PlotOptions& options);

}  // namespace ccc::io
