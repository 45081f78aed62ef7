#include "cli.hpp"

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "ccc/bench.hpp"
#include "ccc/constrained_clustering.hpp"
#include "ccc/io.hpp"
#include "ccc/synth.hpp"

namespace ccc::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GenerateArgs {
  long long n = 0;
  double std = 1.0;
  std::uint64_t seed = 0;
  std::string out;
};

struct FitArgs {
  std::string algo;
  std::string data;
  std::size_t k = 4;
  std::optional<double> radius;
  std::optional<double> eps;
  std::optional<std::size_t> min_pts;
  std::uint64_t seed = 0;
  std::size_t max_iter = 300;
  double tol = 1e-6;
  bool project_members = false;
  bool warm_start = false;
  std::string out;
};

struct EvalArgs {
  std::string data;
  std::string model;
  std::size_t rings = 5;
  std::size_t sectors = 8;
  std::string mode = "global";
  std::string convention = "first-axis";
  bool project = false;
  std::string out;
};

struct BenchArgs {
  std::string config;
  std::string out;
  std::optional<std::size_t> threads;
};

struct PlotArgs {
  std::string data;
  std::string model;
  std::string out;
  bool show_radius = false;
};

void cmd_generate(const GenerateArgs& a) {
  if (a.n < 1) throw UsageError("--n must be >= 1");
  if (!(a.std > 0.0)) throw UsageError("--std must be > 0");
  SynthConfig sc;
  sc.n = static_cast<std::size_t>(a.n);
  sc.std = a.std;
  sc.seed = a.seed;
  io::write_dataset_csv(a.out, generate_gaussian(sc));
}

void cmd_fit(const FitArgs& a) {
  Algorithm algo;
  try {
    algo = parse_algorithm(a.algo);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (algo == Algorithm::kCcc && !a.radius) throw UsageError("--radius is required for --algo ccc");
  if (algo == Algorithm::kDbscan && !a.eps) throw UsageError("--eps is required for --algo dbscan");
  if (algo == Algorithm::kDbscan && !a.min_pts) throw UsageError("--min-pts is required for --algo dbscan");

  const Dataset data = io::read_dataset_csv(a.data);
  ClusterModel model;
  switch (algo) {
    case Algorithm::kCcc: {
      CccConfig c;
      c.k = a.k;
      c.radius = *a.radius;
      c.seed = a.seed;
      c.max_iter = a.max_iter;
      c.tol = a.tol;
      c.project_members = a.project_members;
      c.warm_start = a.warm_start;
      c.validate();
      model = ccc_fit(data, c);
      break;
    }
    case Algorithm::kKmeans:
      model = kmeans_fit(data, {a.k, a.max_iter, a.tol, a.seed});
      break;
    case Algorithm::kGmm: {
      GmmConfig g;
      g.k = a.k;
      g.max_iter = a.max_iter;
      g.seed = a.seed;
      model = gmm_fit(data, g);
      break;
    }
    case Algorithm::kDbscan: {
      DbscanConfig d{*a.eps, *a.min_pts};
      d.validate();
      model = dbscan_fit(data, d);
      break;
    }
    case Algorithm::kAgglomerative:
      model = agglomerative_fit(data, a.k);
      break;
  }
  io::write_model(a.out, model);
}

void cmd_eval(const EvalArgs& a, std::ostream& out) {
  GridSpec grid;
  grid.rings = a.rings;
  grid.sectors = a.sectors;
  if (a.rings == 0 || a.sectors == 0) throw UsageError("--rings and --sectors must be >= 1");
  try {
    grid.mode = parse_entropy_mode(a.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.convention == "first-axis") {
    grid.convention = AngleConvention::kFirstAxis;
  } else if (a.convention == "standard") {
    grid.convention = AngleConvention::kStandard;
  } else {
    throw UsageError("--convention must be first-axis or standard");
  }

  const Dataset data = io::read_dataset_csv(a.data);
  const ClusterModel model = io::read_model(a.model);
  model.validate(data.size(), data.dim());

  io::EvalRecord rec;
  rec.grid = grid;
  rec.projected = a.project;
  if (a.project) {
    if (!model.radius) throw UsageError("--project needs a model with a radius (ccc)");
    const Dataset projected = enforce_spread(data, model);
    rec.entropy = evaluate_clustering(projected, model, grid, &data);
  } else {
    rec.entropy = evaluate_clustering(data, model, grid);
  }
  const std::string text = io::eval_to_json(rec);
  if (a.out.empty() || a.out == "-") {
    out << text;
  } else {
    io::write_text(a.out, text);
  }
}

void cmd_bench(const BenchArgs& a) {
  ExperimentConfig config;
  if (!a.config.empty()) config = io::experiment_config_from_json(io::read_text(a.config));
  if (a.threads) config.threads = *a.threads;
  io::write_text(a.out, io::bench_to_csv(run_benchmark(config)));
}

void cmd_plot(const PlotArgs& a) {
  const Dataset data = io::read_dataset_csv(a.data);
  const ClusterModel model = io::read_model(a.model);
  io::PlotOptions opts;
  opts.show_radius = a.show_radius;
  io::write_text(a.out, io::render_svg(data, model, opts));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constrained centroid clustering toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write an isotropic Gaussian dataset as CSV");
  g->add_option("--n", gen.n, "Number of points")->required();
  g->add_option("--std", gen.std, "Standard deviation per coordinate");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--out", gen.out, "Output CSV")->required();

  FitArgs fit;
  auto* f = app.add_subcommand("fit", "Fit a clustering and write the model JSON");
  f->add_option("--algo", fit.algo, "ccc | kmeans | gmm | dbscan | agglo")->required();
  f->add_option("--data", fit.data, "Input CSV")->required();
  f->add_option("--k", fit.k, "Number of clusters");
  f->add_option("--radius", fit.radius, "Spread radius sqrt(S) (ccc)");
  f->add_option("--eps", fit.eps, "Neighbourhood radius (dbscan)");
  f->add_option("--min-pts", fit.min_pts, "Core point threshold (dbscan)");
  f->add_option("--seed", fit.seed, "Random seed");
  f->add_option("--max-iter", fit.max_iter, "Iteration cap");
  f->add_option("--tol", fit.tol, "Centroid shift tolerance");
  f->add_flag("--project-members", fit.project_members, "ccc: pull members onto the ball before each update");
  f->add_flag("--warm-start", fit.warm_start, "ccc: start from a converged k-means solution");
  f->add_option("--out", fit.out, "Output model JSON")->required();

  EvalArgs ev;
  auto* e = app.add_subcommand("eval", "Ring, sector and joint entropy of a fitted model");
  e->add_option("--data", ev.data, "Input CSV")->required();
  e->add_option("--model", ev.model, "Model JSON")->required();
  e->add_option("--rings", ev.rings, "Number of rings");
  e->add_option("--sectors", ev.sectors, "Number of sectors");
  e->add_option("--mode", ev.mode, "global | per-cluster");
  e->add_option("--convention", ev.convention, "first-axis | standard");
  e->add_flag("--project", ev.project, "Evaluate the enforce_spread copy (ccc models)");
  e->add_option("--out", ev.out, "Output JSON (stdout if omitted)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run the entropy benchmark and write CSV");
  b->add_option("--config", bench.config, "Experiment config JSON (defaults if omitted)");
  b->add_option("--threads", bench.threads, "Worker threads (0 = all cores)");
  b->add_option("--out", bench.out, "Output CSV")->required();

  PlotArgs plot;
  auto* p = app.add_subcommand("plot", "Render an SVG scatter of a clustering");
  p->add_option("--data", plot.data, "Input CSV")->required();
  p->add_option("--model", plot.model, "Model JSON")->required();
  p->add_flag("--show-radius", plot.show_radius, "Draw the ccc spread radius around each centroid");
  p->add_option("--out", plot.out, "Output SVG")->required();

  auto one_line = [](std::string s) {
    for (char& c : s) {
      if (c == '\n' || c == '\r') c = ' ';
    }
    return s;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error[usage]: " << one_line(ex.what()) << '\n';
    return kUsage;
  }

  try {
    if (g->parsed()) cmd_generate(gen);
    if (f->parsed()) cmd_fit(fit);
    if (e->parsed()) cmd_eval(ev, out);
    if (b->parsed()) cmd_bench(bench);
    if (p->parsed()) cmd_plot(plot);
  } catch (const io::IoError& ex) {
    err << "error[io]: " << one_line(ex.what()) << '\n';
    return kIo;
  } catch (const std::invalid_argument& ex) {
    err << "error[usage]: " << one_line(ex.what()) << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    err << "error[algorithm]: " << one_line(ex.what()) << '\n';
    return kAlgorithm;
  }
  return kOk;
}

}  // namespace ccc::cli
