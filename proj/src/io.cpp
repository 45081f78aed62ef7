#include "ccc/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace ccc::io {

using nlohmann::ordered_json;

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

double round12(double v) { return std::strtod(format_real(v).c_str(), nullptr); }

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_real(const std::string& cell, double& out) {
  const std::string t = trim(cell);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size() && std::isfinite(out);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

Dataset parse_dataset_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  std::optional<Dataset> data;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    double v = 0.0;
    if (first && !parse_real(cells.front(), v)) {
      first = false;
      continue;  // header
    }
    first = false;
    Point p;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!parse_real(cells[c], v)) {
        throw ParseError(source + ":" + std::to_string(lineno) + ": column " + std::to_string(c + 1) +
                         " is not a finite number: '" + trim(cells[c]) + "'");
      }
      p.push_back(v);
    }
    if (!data) data.emplace(p.size());
    if (p.size() != data->dim()) {
      throw ParseError(source + ":" + std::to_string(lineno) + ": expected " + std::to_string(data->dim()) +
                       " columns, got " + std::to_string(p.size()));
    }
    data->push_back(std::move(p));
  }
  if (!data) throw ParseError(source + ": no data rows");
  return std::move(*data);
}

Dataset read_dataset_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return parse_dataset_csv(in, path.string());
}

void write_dataset_csv(std::ostream& out, const Dataset& data) {
  for (const auto& p : data.points()) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) out << ',';
      out << format_real(p[j]);
    }
    out << '\n';
  }
}

void write_dataset_csv(const std::filesystem::path& path, const Dataset& data) {
  std::ostringstream os;
  write_dataset_csv(os, data);
  write_text(path, os.str());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::string model_to_json(const ClusterModel& model) {
  ordered_json j;
  j["algorithm"] = std::string(to_string(model.algorithm));
  j["k"] = model.k;
  j["radius"] = model.radius ? ordered_json(round12(*model.radius)) : ordered_json(nullptr);
  ordered_json cents = ordered_json::array();
  for (const auto& c : model.centroids) {
    ordered_json row = ordered_json::array();
    for (double v : c) row.push_back(round12(v));
    cents.push_back(std::move(row));
  }
  j["centroids"] = std::move(cents);
  j["assignments"] = model.assignments;
  ordered_json lambdas = ordered_json::array();
  for (double v : model.lambdas) lambdas.push_back(round12(v));
  j["lambdas"] = std::move(lambdas);
  j["iterations_run"] = model.iterations_run;
  j["converged"] = model.converged;
  j["seed"] = model.seed;
  return j.dump(2) + "\n";
}

ClusterModel model_from_json(const std::string& text, const std::string& source) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  try {
    ClusterModel m;
    m.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    m.k = j.at("k").get<std::size_t>();
    if (!j.at("radius").is_null()) m.radius = j.at("radius").get<double>();
    for (const auto& row : j.at("centroids")) m.centroids.push_back(row.get<std::vector<double>>());
    m.assignments = j.at("assignments").get<std::vector<int>>();
    m.lambdas = j.at("lambdas").get<std::vector<double>>();
    m.iterations_run = j.at("iterations_run").get<std::size_t>();
    m.converged = j.at("converged").get<bool>();
    m.seed = j.at("seed").get<std::uint64_t>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(source + ": " + e.what());
  }
}

ClusterModel read_model(const std::filesystem::path& path) { return model_from_json(read_text(path), path.string()); }

void write_model(const std::filesystem::path& path, const ClusterModel& model) {
  write_text(path, model_to_json(model));
}

std::string eval_to_json(const EvalRecord& record) {
  ordered_json j;
  j["ring_entropy"] = round12(record.entropy.ring_entropy);
  j["sector_entropy"] = round12(record.entropy.sector_entropy);
  j["joint_entropy"] = round12(record.entropy.joint_entropy);
  j["rings"] = record.grid.rings;
  j["sectors"] = record.grid.sectors;
  j["mode"] = std::string(to_string(record.grid.mode));
  j["convention"] = record.grid.convention == AngleConvention::kFirstAxis ? "first-axis" : "standard";
  j["projected"] = record.projected;
  return j.dump(2) + "\n";
}

namespace {

template <typename T>
void read_field(const ordered_json& j, const char* key, T& out, std::vector<std::string>& problems,
                const std::string& prefix = {}) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    problems.push_back(prefix + key + ": wrong type");
  }
}

}  // namespace

ExperimentConfig experiment_config_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bench config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("bench config: top level must be an object");

  static const char* kKnown[] = {"sizes",  "stds",           "seeds", "k",       "ccc_radius",   "ccc_project_members",
                                 "ccc_warm_start", "dbscan", "rings", "sectors", "entropy_mode", "threads"};
  std::vector<std::string> problems;
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(std::begin(kKnown), std::end(kKnown), [&](const char* k) { return key == k; }) ==
        std::end(kKnown)) {
      problems.push_back(key + ": unknown field");
    }
  }

  ExperimentConfig c;
  // Negative JSON integers would wrap when read as unsigned.
  auto nonneg_ints = [&](const char* key) {
    if (!j.contains(key)) return true;
    const auto& v = j.at(key);
    auto ok = [](const ordered_json& x) { return x.is_number_unsigned(); };
    if (v.is_array() ? std::all_of(v.begin(), v.end(), ok) : ok(v)) return true;
    problems.push_back(std::string(key) + ": must be a nonnegative integer" + (v.is_array() ? " list" : ""));
    return false;
  };
  if (nonneg_ints("sizes")) read_field(j, "sizes", c.sizes, problems);
  read_field(j, "stds", c.stds, problems);
  if (nonneg_ints("seeds")) read_field(j, "seeds", c.seeds, problems);
  if (nonneg_ints("k")) read_field(j, "k", c.k, problems);
  read_field(j, "ccc_radius", c.ccc_radius, problems);
  read_field(j, "ccc_project_members", c.ccc_project_members, problems);
  read_field(j, "ccc_warm_start", c.ccc_warm_start, problems);
  if (nonneg_ints("rings")) read_field(j, "rings", c.rings, problems);
  if (nonneg_ints("sectors")) read_field(j, "sectors", c.sectors, problems);
  if (nonneg_ints("threads")) read_field(j, "threads", c.threads, problems);
  if (j.contains("dbscan")) {
    const auto& d = j.at("dbscan");
    if (!d.is_object()) {
      problems.emplace_back("dbscan: must be an object");
    } else {
      read_field(d, "eps", c.dbscan.eps, problems, "dbscan.");
      if (d.contains("min_pts") && !d.at("min_pts").is_number_unsigned()) {
        problems.emplace_back("dbscan.min_pts: must be a nonnegative integer");
      } else {
        read_field(d, "min_pts", c.dbscan.min_pts, problems, "dbscan.");
      }
    }
  }
  if (j.contains("entropy_mode")) {
    try {
      c.entropy_mode = parse_entropy_mode(j.at("entropy_mode").get<std::string>());
    } catch (const std::exception&) {
      problems.emplace_back("entropy_mode: must be \"global\" or \"per-cluster\"");
    }
  }
  for (auto& p : c.problems()) problems.push_back(std::move(p));

  if (!problems.empty()) {
    std::string msg = "bench config has " + std::to_string(problems.size()) + " bad field(s):";
    for (const auto& p : problems) msg += " [" + p + "]";
    throw ParseError(msg);
  }
  return c;
}

std::string bench_to_csv(const BenchReport& report) {
  std::ostringstream os;
  os << "method,n,std,ring_entropy,sector_entropy,joint_entropy,ring_std,sector_std,joint_std\n";
  for (const auto& r : report.rows) {
    os << to_string(r.method) << ',' << r.n << ',' << format_real(r.std) << ',' << format_real(r.mean.ring_entropy)
       << ',' << format_real(r.mean.sector_entropy) << ',' << format_real(r.mean.joint_entropy) << ','
       << format_real(r.spread.ring_entropy) << ',' << format_real(r.spread.sector_entropy) << ','
       << format_real(r.spread.joint_entropy) << '\n';
  }
  return os.str();
}

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr const char* kNoiseColor = "#b0b0b0";

}  // namespace

std::string render_svg(const Dataset& data, const ClusterModel& model, const PlotOptions& options) {
  if (data.dim() != 2) throw std::invalid_argument("plotting needs 2-D data");
  model.validate(data.size(), data.dim());
  const bool circles = options.show_radius && model.radius.has_value();
  const double pad_r = circles ? *model.radius : 0.0;

  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = -lo_x;
  auto extend = [&](const Point& p, double pad) {
    lo_x = std::min(lo_x, p[0] - pad);
    hi_x = std::max(hi_x, p[0] + pad);
    lo_y = std::min(lo_y, p[1] - pad);
    hi_y = std::max(hi_y, p[1] + pad);
  };
  for (const auto& p : data.points()) extend(p, 0.0);
  for (const auto& c : model.centroids) extend(c, pad_r);

  // Equal aspect: one scale for both axes over the larger span.
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9}) * 1.06;
  const double cx = 0.5 * (lo_x + hi_x);
  const double cy = 0.5 * (lo_y + hi_y);
  const double size = options.size_px;
  const double scale = size / span;
  auto sx = [&](double x) { return format_real(size / 2 + (x - cx) * scale); };
  auto sy = [&](double y) { return format_real(size / 2 - (y - cy) * scale); };

  std::ostringstream os;
  const std::string dim = format_real(size);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << dim << "\" height=\"" << dim
     << "\" viewBox=\"0 0 " << dim << ' ' << dim << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << dim << "\" height=\"" << dim << "\" fill=\"white\"/>\n"
     << "<g id=\"points\">\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    const int a = model.assignments[i];
    const char* color = a == kNoise ? kNoiseColor : kPalette[static_cast<std::size_t>(a) % std::size(kPalette)];
    os << "<circle class=\"point" << (a == kNoise ? " noise" : "") << "\" cx=\"" << sx(data[i][0]) << "\" cy=\""
       << sy(data[i][1]) << "\" r=\"2.5\" fill=\"" << color << "\" fill-opacity=\"0.8\"/>\n";
  }
  os << "</g>\n";
  if (circles) {
    const std::string r = format_real(*model.radius * scale);
    os << "<g id=\"radius\">\n";
    for (const auto& c : model.centroids) {
      os << "<circle class=\"radius\" cx=\"" << sx(c[0]) << "\" cy=\"" << sy(c[1]) << "\" r=\"" << r
         << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n";
    }
    os << "</g>\n";
  }
  os << "<g id=\"centroids\">\n";
  const double arm = 6.0;
  for (const auto& c : model.centroids) {
    const double x = size / 2 + (c[0] - cx) * scale;
    const double y = size / 2 - (c[1] - cy) * scale;
    os << "<path class=\"centroid\" d=\"M" << format_real(x - arm) << ' ' << format_real(y - arm) << " L"
       << format_real(x + arm) << ' ' << format_real(y + arm) << " M" << format_real(x - arm) << ' '
       << format_real(y + arm) << " L" << format_real(x + arm) << ' ' << format_real(y - arm)
       << "\" stroke=\"black\" stroke-width=\"2\" fill=\"none\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace ccc::io
