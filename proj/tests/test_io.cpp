#include <filesystem>
#include <sstream>

#include "ccc/constrained_clustering.hpp"
#include "ccc/io.hpp"
#include "ccc/synth.hpp"
#include "doctest.h"

using namespace ccc;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

Dataset parse(const std::string& text) {
  std::istringstream in(text);
  return io::parse_dataset_csv(in, "mem.csv");
}

std::string parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const io::ParseError& e) {
    return e.what();
  }
  return "";
}

std::filesystem::path temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ccc_io_test_" + name);
}

}  // namespace

TEST_CASE("csv parsing") {
  CHECK(parse("x,y\n1,2\n3,4\n") == Dataset(2, {{1, 2}, {3, 4}}));
  CHECK(parse("1,2\n\n3,4\n") == Dataset(2, {{1, 2}, {3, 4}}));
  CHECK(parse(" 1.5 , -2e-3 \r\n").points()[0] == Point{1.5, -2e-3});
  CHECK(parse("a,b,c\n1,2,3\n").dim() == 3);

  CHECK(parse_error("1,2\n3,x\n").find("mem.csv:2") != std::string::npos);
  CHECK(parse_error("1,2\n3,x\n").find("column 2") != std::string::npos);
  CHECK(parse_error("1,2\n3,4,5\n").find("mem.csv:2") != std::string::npos);
  CHECK(parse_error("x,y\n1,2\n3,\n").find("mem.csv:3") != std::string::npos);
  CHECK(parse_error("1,nan\n").find("mem.csv:1") != std::string::npos);
  CHECK_FALSE(parse_error("x,y\n").empty());
  CHECK_FALSE(parse_error("").empty());
  // Only the first line may be a header.
  CHECK(parse_error("1,2\nx,y\n").find("mem.csv:2") != std::string::npos);
}

TEST_CASE("csv write -> read -> write is byte-identical") {
  const auto d = generate_gaussian(SynthConfig{200, 1.3, 8});
  std::ostringstream a;
  io::write_dataset_csv(a, d);
  const auto back = parse(a.str());
  std::ostringstream b;
  io::write_dataset_csv(b, back);
  CHECK(a.str() == b.str());
  CHECK(count(a.str(), "\n") == 200);

  const auto path = temp("rt.csv");
  io::write_dataset_csv(path, d);
  CHECK(io::read_text(path) == a.str());
  CHECK(io::read_dataset_csv(path).size() == 200);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(io::read_dataset_csv("/nonexistent/dir/x.csv"), io::IoError);
  CHECK_THROWS_AS(io::write_text("/nonexistent/dir/x.csv", "1"), io::IoError);
}

TEST_CASE("model json round trip and key order") {
  const auto d = generate_gaussian(SynthConfig{300, 1.0, 2});
  const auto m = ccc_fit(d, CccConfig{});
  const auto text = io::model_to_json(m);
  const auto back = io::model_from_json(text);
  CHECK(io::model_to_json(back) == text);
  CHECK(back.algorithm == Algorithm::kCcc);
  CHECK(back.assignments == m.assignments);
  REQUIRE(back.radius.has_value());
  CHECK(*back.radius == 1.25);
  CHECK(back.centroids[0][0] == doctest::Approx(m.centroids[0][0]).epsilon(1e-11));

  const char* keys[] = {"\"algorithm\"", "\"k\"", "\"radius\"", "\"centroids\"", "\"assignments\"",
                        "\"lambdas\"", "\"iterations_run\"", "\"converged\"", "\"seed\""};
  std::size_t last = 0;
  for (const char* k : keys) {
    const auto pos = text.find(k);
    REQUIRE(pos != std::string::npos);
    CHECK(pos >= last);
    last = pos;
  }

  ClusterModel km;
  km.k = 1;
  km.centroids = {{0.1, 0.2}};
  km.assignments = {0};
  const auto kt = io::model_to_json(km);
  CHECK(kt.find("\"radius\": null") != std::string::npos);
  CHECK_FALSE(io::model_from_json(kt).radius.has_value());

  CHECK_THROWS_AS(io::model_from_json("{"), io::ParseError);
  CHECK_THROWS_AS(io::model_from_json("{\"algorithm\": \"ccc\"}"), io::ParseError);
  CHECK_THROWS_AS(io::model_from_json(std::string(kt).replace(kt.find("kmeans"), 6, "magic")), io::ParseError);
}

TEST_CASE("format_real uses 12 significant digits") {
  CHECK(io::format_real(1.0) == "1");
  CHECK(io::format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(io::format_real(-2.5e-7) == "-2.5e-07");
}

TEST_CASE("experiment config json") {
  const auto c = io::experiment_config_from_json(
      R"({"sizes": [100], "stds": [1.0, 2.0], "seeds": [1], "k": 3, "dbscan": {"eps": 0.5},
          "entropy_mode": "per-cluster", "threads": 2})");
  CHECK(c.sizes == std::vector<std::size_t>{100});
  CHECK(c.stds == std::vector<double>{1.0, 2.0});
  CHECK(c.k == 3);
  CHECK(c.dbscan.eps == 0.5);
  CHECK(c.dbscan.min_pts == 5);
  CHECK(c.entropy_mode == EntropyMode::kPerCluster);
  CHECK(c.rings == 5);
  CHECK(io::experiment_config_from_json("{}").sizes == ExperimentConfig{}.sizes);

  try {
    io::experiment_config_from_json(
        R"({"sizes": [-5], "stds": "wide", "k": 0, "bogus": 1, "dbscan": {"min_pts": 2.5},
            "entropy_mode": "radial", "ccc_radius": -1})");
    FAIL("expected ParseError");
  } catch (const io::ParseError& e) {
    const std::string msg = e.what();
    for (const char* field : {"sizes", "stds", "k:", "bogus", "dbscan.min_pts", "entropy_mode", "ccc_radius"}) {
      CHECK_MESSAGE(msg.find(field) != std::string::npos, field);
    }
  }
  CHECK_THROWS_AS(io::experiment_config_from_json("[1]"), io::ParseError);
  CHECK_THROWS_AS(io::experiment_config_from_json("{"), io::ParseError);
}

TEST_CASE("bench csv layout") {
  BenchReport r;
  BenchRow row;
  row.method = Algorithm::kCcc;
  row.n = 500;
  row.std = 1.2;
  row.mean = {1.0, 3.0, 4.0};
  r.rows = {row};
  CHECK(io::bench_to_csv(r) ==
        "method,n,std,ring_entropy,sector_entropy,joint_entropy,ring_std,sector_std,joint_std\n"
        "ccc,500,1.2,1,3,4,0,0,0\n");
}

TEST_CASE("svg element counts") {
  const auto d = generate_gaussian(SynthConfig{150, 1.0, 4});
  const auto m = ccc_fit(d, CccConfig{});
  const auto plain = io::render_svg(d, m, {});
  CHECK(count(plain, "<circle class=\"point") == 150);
  CHECK(count(plain, "<path class=\"centroid\"") == 4);
  CHECK(count(plain, "class=\"radius\"") == 0);
  CHECK(plain.rfind("</svg>") != std::string::npos);

  const auto ringed = io::render_svg(d, m, {true});
  CHECK(count(ringed, "stroke-dasharray") == 4);

  ClusterModel noisy;
  noisy.algorithm = Algorithm::kDbscan;
  noisy.k = 1;
  noisy.centroids = {{0, 0}};
  noisy.assignments.assign(d.size(), 0);
  noisy.assignments[3] = kNoise;
  const auto ns = io::render_svg(d, noisy, {true});
  CHECK(count(ns, "point noise") == 1);
  CHECK(count(ns, "stroke-dasharray") == 0);

  CHECK_THROWS_AS(io::render_svg(Dataset(3, {{1, 2, 3}}), noisy, {}), std::invalid_argument);
}
