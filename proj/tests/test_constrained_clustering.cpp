#include <cmath>

#include "ccc/baselines.hpp"
#include "ccc/constrained_clustering.hpp"
#include "ccc/synth.hpp"
#include "doctest.h"

using namespace ccc;

namespace {

Dataset four_groups() {
  Dataset d(2);
  for (double sx : {-10.0, 10.0}) {
    for (double sy : {-10.0, 10.0}) {
      d.push_back({sx, sy});
      d.push_back({sx + 1, sy});
      d.push_back({sx, sy + 1});
    }
  }
  return d;
}

Dataset gaussian(std::size_t n, double std, std::uint64_t seed) {
  SynthConfig c;
  c.n = n;
  c.std = std;
  c.seed = seed;
  return generate_gaussian(c);
}

}  // namespace

TEST_CASE("ccc_fit on four separated groups reduces to the group means") {
  const auto data = four_groups();
  CccConfig cfg;
  cfg.k = 4;
  cfg.radius = 100;
  const auto m = ccc_fit(data, cfg);
  CHECK(m.converged);
  for (double l : m.lambdas) CHECK(l == 0.0);
  // The partition is the k-means fixed point: one cluster per group.
  for (std::size_t g = 0; g < 4; ++g) {
    CHECK(m.assignments[3 * g] == m.assignments[3 * g + 1]);
    CHECK(m.assignments[3 * g] == m.assignments[3 * g + 2]);
  }
  // The extremal of {(x,y),(x+1,y),(x,y+1)} is (x+1,y) (tie broken low), so
  // the centroid is the mean of the other two: (x, y+0.5).
  for (std::size_t g = 0; g < 4; ++g) {
    const auto& cen = m.centroids[static_cast<std::size_t>(m.assignments[3 * g])];
    CHECK(cen[0] == doctest::Approx(data[3 * g][0]).epsilon(1e-12));
    CHECK(cen[1] == doctest::Approx(data[3 * g][1] + 0.5).epsilon(1e-12));
  }
}

TEST_CASE("ccc_fit single cluster uses the constrained centroid") {
  const Dataset data(2, {{0, 0}, {2, 0}, {10, 0}});
  CccConfig cfg;
  cfg.k = 1;
  cfg.radius = 7;
  const auto m = ccc_fit(data, cfg);
  CHECK(m.centroids[0][0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(m.centroids[0][1] == 0.0);
  CHECK(m.lambdas[0] == doctest::Approx(4.0 / 7.0).epsilon(1e-12));
  CHECK(m.converged);
  CHECK(m.algorithm == Algorithm::kCcc);
  CHECK(*m.radius == 7.0);
}

TEST_CASE("ccc_fit singleton keeps its point") {
  const Dataset data(2, {{5, 5}});
  for (double radius : {0.1, 1.0, 50.0}) {
    CccConfig cfg;
    cfg.k = 1;
    cfg.radius = radius;
    const auto m = ccc_fit(data, cfg);
    CHECK(m.centroids[0] == Point{5, 5});
    CHECK(m.lambdas[0] == 0.0);
  }
}

TEST_CASE("ccc_fit errors") {
  CccConfig cfg;
  cfg.k = 3;
  CHECK_THROWS_AS(ccc_fit(Dataset(2, {{0, 0}, {1, 1}}), cfg), std::invalid_argument);
  CHECK_THROWS_AS(ccc_fit(Dataset(2), cfg), std::invalid_argument);
  cfg.radius = 0;
  CHECK_THROWS_AS(ccc_fit(Dataset(2, {{0, 0}, {1, 1}, {2, 2}}), cfg), std::invalid_argument);
}

TEST_CASE("ccc_fit is deterministic and bounded by max_iter") {
  const auto data = gaussian(300, 1.2, 8);
  for (int variant = 0; variant < 4; ++variant) {
    CccConfig cfg;
    cfg.radius = 1.25;
    cfg.seed = 4;
    cfg.max_iter = 25;
    cfg.project_members = variant & 1;
    cfg.warm_start = variant & 2;
    const auto a = ccc_fit(data, cfg);
    const auto b = ccc_fit(data, cfg);
    CHECK(a.centroids == b.centroids);
    CHECK(a.assignments == b.assignments);
    CHECK(a.lambdas == b.lambdas);
    CHECK(a.iterations_run <= cfg.max_iter);
    for (double l : a.lambdas) CHECK(l >= 0.0);
    CHECK_NOTHROW(a.validate(data.size(), 2));
  }
}

TEST_CASE("with a huge radius ccc matches identically seeded kmeans up to the extremal") {
  // Same seeding and assignment rules; only the centroid update differs.
  // Each ccc centroid must be the mean of its members minus their extremal.
  const auto data = gaussian(200, 1.0, 12);
  CccConfig cfg;
  cfg.radius = 1e3;
  cfg.seed = 2;
  const auto m = ccc_fit(data, cfg);
  CHECK(m.converged);
  const auto groups = m.members();
  for (std::size_t c = 0; c < m.k; ++c) {
    const auto members = data.subset(groups[c]);
    std::vector<std::size_t> rest;
    const auto e = find_extremal(members);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i != e) rest.push_back(i);
    }
    const auto expect = mean_vector(members.subset(rest));
    CHECK(m.centroids[c][0] == doctest::Approx(expect[0]).epsilon(1e-9));
    CHECK(m.centroids[c][1] == doctest::Approx(expect[1]).epsilon(1e-9));
    CHECK(m.lambdas[c] == 0.0);
  }
}

TEST_CASE("enforce_spread examples") {
  ClusterModel m;
  m.algorithm = Algorithm::kCcc;
  m.k = 1;
  m.centroids = {{0, 0}};
  m.lambdas = {0};
  m.radius = 5;

  SUBCASE("inside is identity") {
    const Dataset d(2, {{1, 1}, {3, 4}, {-2, 0.5}});
    m.assignments = {0, 0, 0};
    CHECK(enforce_spread(d, m) == d);
  }
  SUBCASE("radial scaling") {
    const Dataset d(2, {{6, 8}});
    m.assignments = {0};
    const auto out = enforce_spread(d, m);
    CHECK(out[0][0] == doctest::Approx(3.0));
    CHECK(out[0][1] == doctest::Approx(4.0));
  }
  SUBCASE("mixed: only the outside point changes, matching project_to_ball") {
    const Dataset d(2, {{1, 1}, {0, -9}, {2, 2}});
    m.assignments = {0, 0, 0};
    const auto out = enforce_spread(d, m);
    CHECK(out[0] == d[0]);
    CHECK(out[2] == d[2]);
    CHECK(out[1] == project_to_ball(d[1], m.centroids[0], SpreadThreshold::from_radius(5)));
    CHECK(d[1] == Point{0, -9});
  }
  SUBCASE("length mismatch") {
    m.assignments = {0, 0};
    CHECK_THROWS_AS(enforce_spread(Dataset(2, {{1, 1}}), m), std::invalid_argument);
  }
}

TEST_CASE("enforce_spread bounds every point and preserves direction") {
  const auto data = gaussian(500, 1.5, 3);
  CccConfig cfg;
  cfg.radius = 1.25;
  cfg.project_members = true;
  const auto m = ccc_fit(data, cfg);
  const auto out = enforce_spread(data, m);
  const double s = 1.25 * 1.25;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& c = m.centroids[static_cast<std::size_t>(m.assignments[i])];
    CHECK(squared_distance(out[i], c) <= s + 1e-9);
    if (out[i] != data[i]) {
      const double a = std::sqrt(squared_distance(data[i], c));
      const double b = std::sqrt(squared_distance(out[i], c));
      for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs((data[i][j] - c[j]) / a - (out[i][j] - c[j]) / b) <= 1e-12);
    }
  }
}

TEST_CASE("warm start begins from the converged k-means centroids") {
  // One constrained update with an inactive constraint: each centroid is the
  // k-means cluster mean with that cluster's extremal left out.
  const auto data = gaussian(200, 1.0, 6);
  CccConfig cfg;
  cfg.radius = 1e6;
  cfg.seed = 2;
  cfg.max_iter = 1;
  cfg.warm_start = true;
  const auto m = ccc_fit(data, cfg);
  KmeansConfig kc;
  kc.seed = 2;
  const auto km = kmeans_fit(data, kc);
  const auto groups = km.members();
  for (std::size_t c = 0; c < 4; ++c) {
    const auto members = data.subset(groups[c]);
    const auto e = find_extremal(members);
    std::vector<Point> rest;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i != e) rest.push_back(members[i]);
    }
    const auto want = mean_vector(rest);
    CHECK(m.centroids[c][0] == doctest::Approx(want[0]).epsilon(1e-12));
    CHECK(m.centroids[c][1] == doctest::Approx(want[1]).epsilon(1e-12));
  }
}
