#include "padded/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace padded {

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: vertex count must be >= 0");
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (e.u == e.v)
      throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.u));
    if (!std::isfinite(e.w) || e.w < 0)
      throw std::invalid_argument("graph: edge weights must be finite and >= 0");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
      throw std::invalid_argument("graph: parallel edge " + std::to_string(edges[i].u) +
                                  "-" + std::to_string(edges[i].v));
  edges_ = std::move(edges);

  std::vector<std::size_t> deg(std::size_t(n) + 1, 0);
  for (const Edge& e : edges_) {
    ++deg[std::size_t(e.u) + 1];
    ++deg[std::size_t(e.v) + 1];
  }
  offs_.assign(std::size_t(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) offs_[std::size_t(v) + 1] = offs_[v] + deg[std::size_t(v) + 1];
  adj_.resize(offs_[n]);
  std::vector<std::size_t> cur(offs_.begin(), offs_.end() - 1);
  for (const Edge& e : edges_) {
    adj_[cur[e.u]++] = {e.v, e.w};
    adj_[cur[e.v]++] = {e.u, e.w};
  }
  for (Vertex v = 0; v < n; ++v)
    std::sort(adj_.begin() + offs_[v], adj_.begin() + offs_[v + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
}

std::vector<Vertex> DistanceField::path_from_source(Vertex v) const {
  if (owner[std::size_t(v)] < 0)
    throw std::invalid_argument("path_from_source: vertex unreached");
  std::vector<Vertex> path;
  for (Vertex x = v; x >= 0; x = pred[std::size_t(x)]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

using PqEntry = std::tuple<double, std::int32_t, Vertex>;  // key, owner, vertex
using Pq = std::priority_queue<PqEntry, std::vector<PqEntry>, std::greater<>>;

void validate_sources(const Graph& g, std::span<const Source> sources,
                      const VertexSet* within) {
  if (sources.empty()) throw std::invalid_argument("shortest_paths: no sources");
  for (const Source& s : sources) {
    if (s.vertex < 0 || s.vertex >= g.num_vertices())
      throw std::invalid_argument("shortest_paths: source out of range");
    if (!std::isfinite(s.offset))
      throw std::invalid_argument("shortest_paths: source offset must be finite");
    if (within && !within->contains(s.vertex))
      throw std::invalid_argument("shortest_paths: source excluded by restriction");
  }
}

}  // namespace

DistanceField shortest_paths(const Graph& g, std::span<const Source> sources,
                             const VertexSet* within, double cutoff) {
  validate_sources(g, sources, within);
  std::size_t n = std::size_t(g.num_vertices());
  DistanceField f;
  f.dist.assign(n, kInf);
  f.pred.assign(n, -1);
  f.owner.assign(n, -1);

  Pq pq;
  auto improves = [&](Vertex v, double d, std::int32_t o) {
    return d < f.dist[std::size_t(v)] ||
           (d == f.dist[std::size_t(v)] && o < f.owner[std::size_t(v)]);
  };
  for (std::size_t k = 0; k < sources.size(); ++k) {
    Vertex v = sources[k].vertex;
    if (improves(v, sources[k].offset, std::int32_t(k))) {
      f.dist[std::size_t(v)] = sources[k].offset;
      f.owner[std::size_t(v)] = std::int32_t(k);
      f.pred[std::size_t(v)] = -1;
      pq.emplace(sources[k].offset, std::int32_t(k), v);
    }
  }
  while (!pq.empty()) {
    auto [d, o, v] = pq.top();
    pq.pop();
    if (d > cutoff) break;
    if (d != f.dist[std::size_t(v)] || o != f.owner[std::size_t(v)]) continue;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (within && !within->contains(nb.to)) continue;
      double cand = d + nb.w;
      if (improves(nb.to, cand, o)) {
        f.dist[std::size_t(nb.to)] = cand;
        f.owner[std::size_t(nb.to)] = o;
        f.pred[std::size_t(nb.to)] = v;
        pq.emplace(cand, o, nb.to);
      }
    }
  }
  return f;
}

Top2Field shortest_paths_top2(const Graph& g, std::span<const Source> sources,
                              const VertexSet* within, double cutoff) {
  validate_sources(g, sources, within);
  std::size_t n = std::size_t(g.num_vertices());
  Top2Field f;
  f.dist1.assign(n, kInf);
  f.dist2.assign(n, kInf);
  f.owner1.assign(n, -1);
  f.owner2.assign(n, -1);

  Pq pq;
  auto relax = [&](Vertex v, double d, std::int32_t o) {
    std::size_t i = std::size_t(v);
    if (o == f.owner1[i]) {
      if (d < f.dist1[i]) {
        f.dist1[i] = d;
        pq.emplace(d, o, v);
      }
      return;
    }
    if (d < f.dist1[i] || (d == f.dist1[i] && o < f.owner1[i])) {
      f.dist2[i] = f.dist1[i];
      f.owner2[i] = f.owner1[i];
      f.dist1[i] = d;
      f.owner1[i] = o;
      pq.emplace(d, o, v);
      return;
    }
    if (o == f.owner2[i]) {
      if (d < f.dist2[i]) {
        f.dist2[i] = d;
        pq.emplace(d, o, v);
      }
      return;
    }
    if (d < f.dist2[i] || (d == f.dist2[i] && o < f.owner2[i])) {
      f.dist2[i] = d;
      f.owner2[i] = o;
      pq.emplace(d, o, v);
    }
  };
  for (std::size_t k = 0; k < sources.size(); ++k)
    relax(sources[k].vertex, sources[k].offset, std::int32_t(k));
  while (!pq.empty()) {
    auto [d, o, v] = pq.top();
    pq.pop();
    if (d > cutoff) break;
    std::size_t i = std::size_t(v);
    bool current = (d == f.dist1[i] && o == f.owner1[i]) ||
                   (d == f.dist2[i] && o == f.owner2[i]);
    if (!current) continue;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (within && !within->contains(nb.to)) continue;
      relax(nb.to, d + nb.w, o);
    }
  }
  return f;
}

VertexSet ball(const Graph& g, Vertex center, double radius,
               const VertexSet* within) {
  if (!(radius >= 0))
    throw std::invalid_argument("ball: radius must be >= 0");
  Source src{center, 0.0};
  DistanceField f = shortest_paths(g, {&src, 1}, within, radius);
  VertexSet out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (f.owner[std::size_t(v)] >= 0 && f.dist[std::size_t(v)] <= radius) out.insert(v);
  return out;
}

namespace {

double diameter_of(const Graph& g, const VertexSet& c, const VertexSet* within) {
  if (c.empty()) throw std::invalid_argument("diameter: empty vertex set");
  double best = 0.0;
  bool disconnected = false;
  c.for_each([&](Vertex u) {
    if (disconnected) return;
    Source src{u, 0.0};
    DistanceField f = shortest_paths(g, {&src, 1}, within);
    c.for_each([&](Vertex v) {
      if (f.owner[std::size_t(v)] < 0)
        disconnected = true;
      else
        best = std::max(best, f.dist[std::size_t(v)]);
    });
  });
  return disconnected ? kInf : best;
}

}  // namespace

double weak_diameter(const Graph& g, const VertexSet& c) {
  return diameter_of(g, c, nullptr);
}

double strong_diameter(const Graph& g, const VertexSet& c) {
  return diameter_of(g, c, &c);
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet* within) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(std::size_t(g.num_vertices()), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[std::size_t(s)] || (within && !within->contains(s))) continue;
    VertexSet comp(g.num_vertices());
    stack.push_back(s);
    seen[std::size_t(s)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (const Neighbor& nb : g.neighbors(v)) {
        if (seen[std::size_t(nb.to)] || (within && !within->contains(nb.to))) continue;
        seen[std::size_t(nb.to)] = 1;
        stack.push_back(nb.to);
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

double max_finite_distance(const Graph& g) {
  double best = 0.0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Source src{v, 0.0};
    DistanceField f = shortest_paths(g, {&src, 1});
    for (Vertex u = 0; u < g.num_vertices(); ++u)
      if (f.owner[std::size_t(u)] >= 0) best = std::max(best, f.dist[std::size_t(u)]);
  }
  return best;
}

}  // namespace padded
