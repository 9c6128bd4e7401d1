#include "padded/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace padded {

NetSchemeResult decompose_doubling(const Graph& g, double delta,
                                   std::optional<double> lambda, Rng& rng) {
  CenterSet net = greedy_net(g, delta);
  double lam = lambda ? *lambda : default_lambda(net.tau);
  auto [p, t] = padded_decompose(g, net, lam, rng);
  return {std::move(p), std::move(t), std::move(net), lam};
}

NetSchemeResult decompose_cones(const Graph& g, double delta,
                                std::optional<double> lambda, Rng& rng) {
  CenterSet net = greedy_net(g, delta);
  double lam = lambda ? *lambda : default_lambda(net.tau);
  auto [p, t] = cone_partition(g, net, lam, rng);
  return {std::move(p), std::move(t), std::move(net), lam};
}

Partition core_to_padded(const Graph& g, const VertexSet& cluster,
                         const std::vector<std::vector<Vertex>>& core_paths,
                         double delta, Rng& rng, Trace* trace_out,
                         SubStageInfo* info_out) {
  if (!(delta > 0) || !std::isfinite(delta))
    throw std::invalid_argument("core_to_padded: delta must be positive and finite");
  if (cluster.empty()) throw std::invalid_argument("core_to_padded: empty cluster");
  if (core_paths.empty()) throw std::invalid_argument("core_to_padded: no core paths");
  for (const auto& path : core_paths)
    for (Vertex v : path)
      if (!cluster.contains(v))
        throw std::invalid_argument("core_to_padded: path leaves the cluster");

  // Union of per-path nets, deduplicated in vertex order.
  std::vector<Vertex> centers;
  for (const auto& path : core_paths)
    for (Vertex v : net_on_path(g, path, delta / 8.0)) centers.push_back(v);
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());

  double sub_scale = delta / 4.0;
  CenterSet n = make_center_set(g, std::move(centers), sub_scale, &cluster);
  if (!(n.covering_radius <= sub_scale))
    throw PreconditionError(
        "core_to_padded: a cluster vertex is farther than delta/4 from every "
        "path net point (core radius property violated)");

  double lam = default_lambda(n.tau);
  auto [p, t] = padded_decompose(g, n, lam, rng, &cluster);
  if (info_out)
    *info_out = {0, Vertex(n.centers.size()), n.covering_radius, n.tau, lam};
  if (trace_out) *trace_out = std::move(t);
  return std::move(p);
}

MinorFreeResult decompose_minor_free(const Graph& g, double delta, int r,
                                     Rng& rng) {
  if (!(delta > 0) || !std::isfinite(delta))
    throw std::invalid_argument("decompose_minor_free: delta must be positive and finite");
  if (r < 2) throw std::invalid_argument("decompose_minor_free: r must be >= 2");

  Rng core_rng = rng.fork("core");
  auto [core, core_trace] = core_partition(g, delta / 8.0, r, core_rng);

  MinorFreeResult out;
  out.core_trace = std::move(core_trace);
  out.partition.delta = delta;
  out.partition.engine = "minor-free";
  out.partition.assignment.assign(std::size_t(g.num_vertices()), -1);

  for (std::size_t i = 0; i < core.clusters.size(); ++i) {
    Rng sub_rng = rng.fork("sub", i);
    Trace sub_trace;
    SubStageInfo info;
    Partition sub = core_to_padded(g, core.clusters[i].members, skeleton_paths(core, i),
                                   delta, sub_rng, &sub_trace, &info);
    info.core_round = i;
    out.stages.push_back(info);
    out.sub_traces.push_back(std::move(sub_trace));
    for (Cluster& c : sub.clusters) {
      std::int32_t id = std::int32_t(out.partition.clusters.size());
      c.members.for_each(
          [&](Vertex v) { out.partition.assignment[std::size_t(v)] = id; });
      out.partition.clusters.push_back(std::move(c));
    }
  }
  return out;
}

double as_separating_bound(double beta, double delta) {
  if (!(beta > 0) || !std::isfinite(beta))
    throw std::invalid_argument("as_separating_bound: beta must be positive and finite");
  if (!(delta >= 1.0 / beta))
    throw std::invalid_argument(
        "as_separating_bound: padding parameter must satisfy delta >= 1/beta");
  return beta;
}

}  // namespace padded
