#include <cmath>

#include "ccc/core.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ccc;

TEST_CASE("squared_distance") {
  CHECK(squared_distance(Point{0, 0}, Point{0, 0}) == 0.0);
  CHECK(squared_distance(Point{0, 0}, Point{3, 4}) == 25.0);
  CHECK(squared_distance(Point{1, 2, 3}, Point{4, 6, 3}) == 25.0);
}

TEST_CASE("squared_distance rejects mismatched dimensions with both lengths") {
  try {
    squared_distance(Point{1, 2}, Point{1, 2, 3});
    FAIL("expected throw");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find('2') != std::string::npos);
    CHECK(msg.find('3') != std::string::npos);
  }
}

TEST_CASE("squared_distance is symmetric") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + rng.below(6);
    Point a(d), b(d);
    for (std::size_t j = 0; j < d; ++j) {
      a[j] = rng.normal() * 10;
      b[j] = rng.normal() * 10;
    }
    CHECK(squared_distance(a, b) == squared_distance(b, a));
  }
}

TEST_CASE("mean_vector") {
  CHECK(mean_vector(std::vector<Point>{{0, 0}, {2, 0}}) == Point{1, 0});
  CHECK(mean_vector(std::vector<Point>{{1, 1}}) == Point{1, 1});
  CHECK(mean_vector(std::vector<Point>{{0, 0}, {0, 3}, {3, 0}, {3, 3}}) == Point{1.5, 1.5});
  CHECK_THROWS_AS(mean_vector(std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("mean_vector minimises total squared distance against a grid search") {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng.below(6);
    const std::size_t d = 1 + rng.below(3);
    std::vector<Point> pts(n, Point(d));
    for (auto& p : pts) {
      for (auto& v : p) v = rng.uniform() * 4 - 2;
    }
    const Point m = mean_vector(pts);
    auto cost = [&](const Point& c) {
      double s = 0;
      for (const auto& p : pts) s += oracle::sq(p, c);
      return s;
    };
    const double best = cost(m);
    // 21^d grid around the mean, step 0.01.
    Point c(d);
    const int steps = 21;
    std::size_t total = 1;
    for (std::size_t j = 0; j < d; ++j) total *= steps;
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t r = idx;
      for (std::size_t j = 0; j < d; ++j) {
        c[j] = m[j] + 0.01 * (static_cast<int>(r % steps) - steps / 2);
        r /= steps;
      }
      CHECK(cost(c) >= best - 1e-9);
    }
  }
}

TEST_CASE("Dataset enforces dimension and finiteness") {
  Dataset d(2);
  d.push_back({1, 2});
  CHECK_THROWS_AS(d.push_back({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(d.push_back({1, NAN}), std::invalid_argument);
  CHECK_THROWS_AS(d.push_back({INFINITY, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Dataset(0), std::invalid_argument);
  CHECK(d.size() == 1);
}

TEST_CASE("Rng replays identical streams for equal seeds") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs |= x != c.next();
  }
  CHECK(differs);
  Rng n1(7), n2(7);
  for (int i = 0; i < 1000; ++i) CHECK(n1.normal() == n2.normal());
}

TEST_CASE("Rng stream is pinned") {
  // xoshiro256** seeded by splitmix64 from 0; frozen so that a change of
  // generator shows up as a test failure rather than silently new data.
  Rng r(0);
  const std::uint64_t first = r.next();
  Rng again(0);
  CHECK(first == again.next());
  CHECK(first == 0x99ec5f36cb75f2b4ULL);
}

TEST_CASE("Rng uniform and normal moments") {
  Rng r(3);
  double su = 0, sn = 0, sn2 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    CHECK_UNARY(u >= 0.0);
    CHECK_UNARY(u < 1.0);
    su += u;
    const double z = r.normal();
    sn += z;
    sn2 += z * z;
  }
  CHECK(su / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(std::abs(sn / n) < 0.01);
  CHECK(sn2 / n == doctest::Approx(1.0).epsilon(0.02));
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7u);
}
