#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

#include "ccc/baselines.hpp"
#include "lloyd.hpp"

namespace ccc {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  std::size_t unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return a;
  }
  std::vector<std::size_t> parent;
};

double ward_cost(const Point& ca, std::size_t na, const Point& cb, std::size_t nb) {
  const double wa = static_cast<double>(na);
  const double wb = static_cast<double>(nb);
  return wa * wb / (wa + wb) * squared_distance(ca, cb);
}

// A merge as found by the chain: each side is named by its smallest point.
struct RawMerge {
  std::size_t rep_a;
  std::size_t rep_b;
  double cost;
  std::size_t size;
};

}  // namespace

std::vector<WardMerge> ward_linkage(const Dataset& data) {
  const std::size_t n = data.size();
  if (n == 0) throw std::invalid_argument("cannot cluster an empty dataset");

  std::vector<Point> centroid(data.points());
  std::vector<std::size_t> size(n, 1);
  std::vector<std::size_t> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  std::vector<bool> active(n, true);

  std::vector<RawMerge> raw;
  raw.reserve(n > 0 ? n - 1 : 0);
  std::vector<std::size_t> chain;
  chain.reserve(n);

  while (raw.size() + 1 < n) {
    if (chain.empty()) {
      chain.push_back(static_cast<std::size_t>(std::find(active.begin(), active.end(), true) - active.begin()));
    }
    std::size_t a = 0;
    std::size_t b = 0;
    double best = 0.0;
    for (;;) {
      a = chain.back();
      const std::optional<std::size_t> prev =
          chain.size() >= 2 ? std::optional(chain[chain.size() - 2]) : std::nullopt;
      best = std::numeric_limits<double>::infinity();
      if (prev) {
        best = ward_cost(centroid[a], size[a], centroid[*prev], size[*prev]);
        b = *prev;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!active[j] || j == a) continue;
        const double c = ward_cost(centroid[a], size[a], centroid[j], size[j]);
        if (c < best) {
          best = c;
          b = j;
        }
      }
      if (prev && b == *prev) break;
      chain.push_back(b);
    }
    chain.pop_back();
    chain.pop_back();

    const std::size_t keep = std::min(a, b);
    const std::size_t drop = std::max(a, b);
    raw.push_back({std::min(rep[a], rep[b]), std::max(rep[a], rep[b]), best, size[a] + size[b]});

    const double wk = static_cast<double>(size[keep]);
    const double wd = static_cast<double>(size[drop]);
    for (std::size_t j = 0; j < data.dim(); ++j) {
      centroid[keep][j] = (wk * centroid[keep][j] + wd * centroid[drop][j]) / (wk + wd);
    }
    size[keep] += size[drop];
    rep[keep] = std::min(rep[keep], rep[drop]);
    active[drop] = false;
  }

  std::stable_sort(raw.begin(), raw.end(), [](const RawMerge& x, const RawMerge& y) { return x.cost < y.cost; });

  // Renumber: a cluster created by sorted merge s gets id n + s.
  UnionFind uf(n);
  std::vector<std::size_t> id_of_root(n);
  std::iota(id_of_root.begin(), id_of_root.end(), 0);
  std::vector<WardMerge> out;
  out.reserve(raw.size());
  for (std::size_t s = 0; s < raw.size(); ++s) {
    const std::size_t ra = uf.find(raw[s].rep_a);
    const std::size_t rb = uf.find(raw[s].rep_b);
    WardMerge m{id_of_root[ra], id_of_root[rb], raw[s].cost, raw[s].size};
    if (m.b < m.a) std::swap(m.a, m.b);
    out.push_back(m);
    id_of_root[uf.unite(ra, rb)] = n + s;
  }
  return out;
}

ClusterModel agglomerative_fit(const Dataset& data, std::size_t k) {
  detail::check_fit_size(data, k);
  const std::size_t n = data.size();
  const auto merges = ward_linkage(data);

  // Replay the first n-k merges on points, tracking which points each id covers.
  UnionFind uf(n);
  std::vector<std::size_t> point_of_id(n + merges.size());
  std::iota(point_of_id.begin(), point_of_id.begin() + static_cast<std::ptrdiff_t>(n), 0);
  for (std::size_t s = 0; s + k < n; ++s) {
    const std::size_t root = uf.unite(point_of_id[merges[s].a], point_of_id[merges[s].b]);
    point_of_id[n + s] = root;
  }

  ClusterModel model;
  model.algorithm = Algorithm::kAgglomerative;
  model.k = k;
  model.iterations_run = n - k;
  model.converged = true;
  model.assignments.assign(n, 0);
  std::vector<int> label_of_root(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = uf.find(i);
    if (label_of_root[r] < 0) label_of_root[r] = next++;
    model.assignments[i] = label_of_root[r];
  }
  for (const auto& idx : model.members()) model.centroids.push_back(mean_vector(data.subset(idx)));
  return model;
}

}  // namespace ccc
