#include "padded/core_partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace padded {

namespace {

// Residual component containing `start`.
VertexSet component_of(const Graph& g, const VertexSet& residual, Vertex start) {
  VertexSet comp(g.num_vertices());
  std::vector<Vertex> stack{start};
  comp.insert(start);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : g.neighbors(v)) {
      if (!residual.contains(nb.to) || comp.contains(nb.to)) continue;
      comp.insert(nb.to);
      stack.push_back(nb.to);
    }
  }
  return comp;
}

}  // namespace

std::pair<CorePartition, Trace> core_partition(const Graph& g, double delta,
                                               int r, Rng& rng) {
  if (!(delta > 0) || !std::isfinite(delta))
    throw std::invalid_argument("core_partition: delta must be positive and finite");
  if (r < 2) throw std::invalid_argument("core_partition: r must be >= 2");

  CorePartition cp;
  cp.delta = delta;
  cp.r = r;
  cp.assignment.assign(std::size_t(g.num_vertices()), -1);
  Trace trace{rng.stream(), "core", delta, 2.0 * r, {}};
  TexpParams texp{2.0 * r, 0.0, 1.0};

  VertexSet residual = VertexSet::full(g.num_vertices());
  Vertex scan = 0;  // vertices below this are clustered for good
  while (!residual.empty()) {
    while (!residual.contains(scan)) ++scan;
    Vertex root = scan;
    VertexSet comp = component_of(g, residual, root);

    // Earlier clusters adjacent to this component, each with its smallest
    // attachment vertex, found by one scan over boundary edges.
    std::map<std::int32_t, Vertex> attachments;
    comp.for_each([&](Vertex v) {
      for (const Neighbor& nb : g.neighbors(v)) {
        if (residual.contains(nb.to)) continue;
        std::int32_t j = cp.assignment[std::size_t(nb.to)];
        attachments.emplace(j, v);  // first hit wins: v ascending
      }
    });

    CoreCluster cl;
    cl.root = root;
    cl.skeleton = VertexSet(g.num_vertices());
    if (attachments.empty()) {
      cl.skeleton.insert(root);
    } else {
      Source src{root, 0.0};
      DistanceField tree = shortest_paths(g, {&src, 1}, &comp);
      for (const auto& [j, u] : attachments) {
        std::vector<Vertex> path = tree.path_from_source(u);
        for (Vertex v : path) cl.skeleton.insert(v);
        cl.paths.push_back(std::move(path));
      }
    }

    double u = texp_sample(texp, rng);
    trace.draws.push_back({std::int32_t(cp.clusters.size()), u});
    cl.radius_draw = u;

    std::vector<Source> sources;
    cl.skeleton.for_each([&](Vertex v) { sources.push_back({v, 0.0}); });
    double reach = u * delta;
    DistanceField f = shortest_paths(g, sources, &residual, reach);
    cl.members = VertexSet(g.num_vertices());
    std::int32_t id = std::int32_t(cp.clusters.size());
    comp.for_each([&](Vertex v) {
      if (f.owner[std::size_t(v)] >= 0 && f.dist[std::size_t(v)] <= reach) {
        cl.members.insert(v);
        cp.assignment[std::size_t(v)] = id;
      }
    });
    residual.erase_all(cl.members);
    cp.clusters.push_back(std::move(cl));
  }
  return {std::move(cp), std::move(trace)};
}

std::vector<std::vector<Vertex>> skeleton_paths(const CorePartition& cp,
                                                std::size_t i) {
  if (i >= cp.clusters.size())
    throw std::invalid_argument("skeleton_paths: cluster index out of range");
  const CoreCluster& cl = cp.clusters[i];
  if (cl.paths.empty()) return {{cl.root}};
  return cl.paths;
}

}  // namespace padded
