#include "padded/nets.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace padded {

namespace {

void require_scale(double delta) {
  if (!(delta > 0) || !std::isfinite(delta))
    throw std::invalid_argument("centers: delta must be positive and finite");
}

}  // namespace

CenterStats measure_centers(const Graph& g, std::span<const Vertex> centers,
                            double delta, const VertexSet* within) {
  require_scale(delta);
  if (centers.empty()) throw std::invalid_argument("centers: empty center list");
  for (Vertex x : centers)
    if (x < 0 || x >= g.num_vertices())
      throw std::invalid_argument("centers: center out of range");

  std::vector<Source> sources;
  sources.reserve(centers.size());
  for (Vertex x : centers) sources.push_back({x, 0.0});

  DistanceField f = shortest_paths(g, sources, within);
  double cov = 0.0;
  auto fold = [&](Vertex v) {
    if (f.owner[std::size_t(v)] < 0)
      cov = kInf;
    else
      cov = std::max(cov, f.dist[std::size_t(v)]);
  };
  if (within)
    within->for_each(fold);
  else
    for (Vertex v = 0; v < g.num_vertices(); ++v) fold(v);

  std::vector<int> count(std::size_t(g.num_vertices()), 0);
  double reach = 3.0 * delta;
  for (Vertex x : centers) {
    Source src{x, 0.0};
    DistanceField fx = shortest_paths(g, {&src, 1}, within, reach);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (fx.owner[std::size_t(v)] >= 0 && fx.dist[std::size_t(v)] <= reach)
        ++count[std::size_t(v)];
  }
  int tau = 0;
  for (int c : count) tau = std::max(tau, c);
  return {cov, tau};
}

CenterSet make_center_set(const Graph& g, std::vector<Vertex> centers,
                          double delta, const VertexSet* within) {
  CenterStats stats = measure_centers(g, centers, delta, within);
  return {std::move(centers), delta, stats.covering_radius, stats.tau};
}

bool check_centers(const Graph& g, const CenterSet& n, const VertexSet* within) {
  CenterStats stats = measure_centers(g, n.centers, n.delta, within);
  return stats.covering_radius == n.covering_radius && stats.tau == n.tau;
}

CenterSet greedy_net(const Graph& g, double delta, const VertexSet* within) {
  require_scale(delta);
  if (g.num_vertices() == 0) throw std::invalid_argument("greedy_net: empty graph");
  std::vector<double> to_net(std::size_t(g.num_vertices()), kInf);
  std::vector<Vertex> net;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (within && !within->contains(v)) continue;
    if (to_net[std::size_t(v)] <= delta) continue;
    net.push_back(v);
    Source src{v, 0.0};
    DistanceField f = shortest_paths(g, {&src, 1}, within, delta);
    for (Vertex u = 0; u < g.num_vertices(); ++u)
      if (f.owner[std::size_t(u)] >= 0)
        to_net[std::size_t(u)] = std::min(to_net[std::size_t(u)], f.dist[std::size_t(u)]);
  }
  return make_center_set(g, std::move(net), delta, within);
}

std::vector<Vertex> net_on_path(const Graph& g, std::span<const Vertex> path,
                                double delta) {
  require_scale(delta);
  if (path.empty()) throw std::invalid_argument("net_on_path: empty path");
  std::unordered_set<Vertex> seen;
  for (Vertex v : path) {
    if (v < 0 || v >= g.num_vertices())
      throw std::invalid_argument("net_on_path: vertex out of range");
    if (!seen.insert(v).second)
      throw std::invalid_argument("net_on_path: path repeats a vertex");
  }
  // Cumulative path metric, folded front to back.
  std::vector<double> cum(path.size(), 0.0);
  for (std::size_t i = 1; i < path.size(); ++i) {
    auto row = g.neighbors(path[i - 1]);
    auto it = std::lower_bound(row.begin(), row.end(), path[i],
                               [](const Neighbor& nb, Vertex v) { return nb.to < v; });
    if (it == row.end() || it->to != path[i])
      throw std::invalid_argument("net_on_path: consecutive vertices not adjacent");
    cum[i] = cum[i - 1] + it->w;
  }
  std::vector<Vertex> net{path[0]};
  double last = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (cum[i] - last > delta) {
      net.push_back(path[i]);
      last = cum[i];
    }
  }
  return net;
}

double delta_for_net_size(const Graph& g, Vertex lo, Vertex hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("delta_for_net_size: bad range");
  double span = max_finite_distance(g);
  if (span <= 0) throw std::invalid_argument("delta_for_net_size: degenerate graph");
  double a = span * 1e-6, b = span;
  for (int iter = 0; iter < 60; ++iter) {
    double mid = 0.5 * (a + b);
    Vertex size = Vertex(greedy_net(g, mid).centers.size());
    if (size >= lo && size <= hi) return mid;
    if (size > hi)
      a = mid;  // too many centers: grow delta
    else
      b = mid;
  }
  throw std::runtime_error("delta_for_net_size: no scale hit the requested range");
}

}  // namespace padded
