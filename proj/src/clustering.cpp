#include "padded/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <functional>

namespace padded {

namespace {

void require_lambda(double lambda) {
  if (!(lambda > 0) || !std::isfinite(lambda))
    throw std::invalid_argument("clustering: lambda must be positive and finite");
}

void require_covering(const CenterSet& n, const char* who) {
  if (!(n.covering_radius <= n.delta))
    throw PreconditionError(std::string(who) +
                            ": centers do not cover the graph at scale delta "
                            "(a vertex would join a center at distance > 2*delta)");
}

void require_times(const CenterSet& n, const StartingTimes& times) {
  if (times.delta_x.size() != n.centers.size())
    throw std::invalid_argument("clustering: one starting time per center required");
  for (double d : times.delta_x)
    if (!(d >= 0.0) || !(d <= n.delta))
      throw std::invalid_argument("clustering: starting times must lie in [0, delta]");
}

std::vector<Source> offset_sources(const CenterSet& n, const StartingTimes& times) {
  std::vector<Source> sources;
  sources.reserve(n.centers.size());
  for (std::size_t k = 0; k < n.centers.size(); ++k)
    sources.push_back({n.centers[k], n.delta - times.delta_x[k]});
  return sources;
}

Partition collect_by_owner(const Graph& g, const CenterSet& n,
                           const StartingTimes& times, const DistanceField& f,
                           const VertexSet* within, std::string engine) {
  Partition p;
  p.delta = n.delta;
  p.engine = std::move(engine);
  p.assignment.assign(std::size_t(g.num_vertices()), -1);

  std::vector<std::int32_t> cluster_of_center(n.centers.size(), -1);
  auto place = [&](Vertex v) {
    std::int32_t k = f.owner[std::size_t(v)];
    if (k < 0)
      throw PreconditionError("cluster_starting_times: vertex " + std::to_string(v) +
                              " unreachable from every center");
    if (cluster_of_center[std::size_t(k)] < 0) {
      cluster_of_center[std::size_t(k)] = std::int32_t(p.clusters.size());
      p.clusters.push_back(
          {n.centers[std::size_t(k)], times.delta_x[std::size_t(k)], VertexSet(g.num_vertices())});
    }
    std::int32_t c = cluster_of_center[std::size_t(k)];
    p.clusters[std::size_t(c)].members.insert(v);
    p.assignment[std::size_t(v)] = c;
  };
  if (within)
    within->for_each(place);
  else
    for (Vertex v = 0; v < g.num_vertices(); ++v) place(v);
  return p;
}

}  // namespace

double default_lambda(int tau) {
  return 2.0 + 2.0 * std::log(std::max(double(tau), std::exp(1.0)));
}

Partition cluster_starting_times(const Graph& g, const CenterSet& n,
                                 const StartingTimes& times, const VertexSet* within) {
  require_covering(n, "cluster_starting_times");
  require_times(n, times);
  std::vector<Source> sources = offset_sources(n, times);
  DistanceField f = shortest_paths(g, sources, within);
  return collect_by_owner(g, n, times, f, within, "starting-times");
}

std::pair<Partition, Trace> padded_decompose(const Graph& g, const CenterSet& n,
                                             std::optional<double> lambda, Rng& rng,
                                             const VertexSet* within) {
  require_covering(n, "padded_decompose");
  if (n.tau < 1) throw PreconditionError("padded_decompose: measured tau missing");
  double lam = lambda ? *lambda : default_lambda(n.tau);
  require_lambda(lam);

  TexpParams texp{lam, 0.0, 1.0};
  Trace trace{rng.stream(), "starting-times", n.delta, lam, {}};
  StartingTimes times;
  times.delta_x.reserve(n.centers.size());
  for (Vertex x : n.centers) {
    double u = texp_sample(texp, rng);
    trace.draws.push_back({x, u});
    times.delta_x.push_back(u * n.delta);
  }
  return {cluster_starting_times(g, n, times, within), std::move(trace)};
}

PaddingWitness padding_witness(const Graph& g, const CenterSet& n,
                               const StartingTimes& times, Vertex v,
                               const VertexSet* within) {
  require_times(n, times);
  if (v < 0 || v >= g.num_vertices())
    throw std::invalid_argument("padding_witness: vertex out of range");
  if (within && !within->contains(v))
    throw std::invalid_argument("padding_witness: vertex excluded by restriction");
  std::vector<Source> sources = offset_sources(n, times);
  Top2Field f = shortest_paths_top2(g, sources, within);
  PaddingWitness w;
  w.v = v;
  std::size_t i = std::size_t(v);
  if (f.owner1[i] >= 0) w.x1 = n.centers[std::size_t(f.owner1[i])];
  if (f.owner2[i] >= 0) {
    w.x2 = n.centers[std::size_t(f.owner2[i])];
    w.gap = f.dist2[i] - f.dist1[i];
  }
  return w;
}

namespace {

Partition cone_carve(const Graph& g, const CenterSet& n, const VertexSet* within,
                     const std::function<double(std::size_t)>& unit_radius,
                     std::vector<TraceDraw>* draws) {
  Partition p;
  p.delta = n.delta;
  p.engine = "cones";
  p.assignment.assign(std::size_t(g.num_vertices()), -1);

  VertexSet active = within ? *within : VertexSet::full(g.num_vertices());
  for (std::size_t i = 0; i < n.centers.size(); ++i) {
    Vertex x = n.centers[i];
    if (!active.contains(x)) continue;
    double u = unit_radius(i);
    if (draws) draws->push_back({x, u});
    double radius = u * n.delta;

    Source from_x{x, 0.0};
    DistanceField fx = shortest_paths(g, {&from_x, 1}, &active);
    std::vector<Source> from_net;
    for (Vertex c : n.centers)
      if (active.contains(c)) from_net.push_back({c, 0.0});
    DistanceField fn = shortest_paths(g, from_net, &active);

    Cluster cl{x, radius, VertexSet(g.num_vertices())};
    std::int32_t id = std::int32_t(p.clusters.size());
    active.for_each([&](Vertex v) {
      std::size_t j = std::size_t(v);
      if (fx.owner[j] < 0) return;
      if (fx.dist[j] - fn.dist[j] <= radius) {
        cl.members.insert(v);
        p.assignment[j] = id;
      }
    });
    cl.members.for_each([&](Vertex v) { active.erase(v); });
    p.clusters.push_back(std::move(cl));
  }
  if (!active.empty())
    throw std::logic_error("cone_partition: vertices left unclustered");
  return p;
}

}  // namespace

std::pair<Partition, Trace> cone_partition(const Graph& g, const CenterSet& n,
                                           std::optional<double> lambda, Rng& rng,
                                           const VertexSet* within) {
  require_covering(n, "cone_partition");
  if (n.tau < 1) throw PreconditionError("cone_partition: measured tau missing");
  double lam = lambda ? *lambda : default_lambda(n.tau);
  require_lambda(lam);
  TexpParams texp{lam, 0.0, 1.0};
  Trace trace{rng.stream(), "cones", n.delta, lam, {}};
  Partition p = cone_carve(
      g, n, within, [&](std::size_t) { return texp_sample(texp, rng); }, &trace.draws);
  return {std::move(p), std::move(trace)};
}

Partition cone_partition_given(const Graph& g, const CenterSet& n,
                               std::span<const double> unit_radii,
                               const VertexSet* within) {
  if (unit_radii.size() != n.centers.size())
    throw std::invalid_argument("cone_partition_given: one radius per center required");
  for (double u : unit_radii)
    if (!(u >= 0.0) || !(u <= 1.0))
      throw std::invalid_argument("cone_partition_given: radii must lie in [0,1]");
  return cone_carve(
      g, n, within, [&](std::size_t i) { return unit_radii[i]; }, nullptr);
}

StartingTimes starting_times_from_trace(const CenterSet& n, const Trace& t) {
  if (t.engine != "starting-times")
    throw std::invalid_argument("trace replay: engine mismatch");
  std::map<Vertex, double> by_center;
  for (const TraceDraw& d : t.draws) by_center[d.id] = d.value;
  StartingTimes times;
  times.delta_x.reserve(n.centers.size());
  for (Vertex x : n.centers) {
    auto it = by_center.find(x);
    if (it == by_center.end())
      throw std::invalid_argument("trace replay: missing draw for center " +
                                  std::to_string(x));
    times.delta_x.push_back(it->second * n.delta);
  }
  return times;
}

Partition cone_partition_from_trace(const Graph& g, const CenterSet& n,
                                    const Trace& t) {
  if (t.engine != "cones")
    throw std::invalid_argument("trace replay: engine mismatch");
  std::map<Vertex, double> by_center;
  for (const TraceDraw& d : t.draws) by_center[d.id] = d.value;
  VertexSet active = VertexSet::full(g.num_vertices());
  // Reuse the carve loop through the provider; a draw must exist for every
  // center that is still active when its turn comes.
  std::vector<double> radii(n.centers.size(), 0.0);
  for (std::size_t i = 0; i < n.centers.size(); ++i) {
    auto it = by_center.find(n.centers[i]);
    if (it != by_center.end()) radii[i] = it->second;
  }
  Partition p = cone_partition_given(g, n, radii);
  for (const Cluster& c : p.clusters)
    if (!by_center.count(c.center))
      throw std::invalid_argument("trace replay: missing draw for center " +
                                  std::to_string(c.center));
  return p;
}

}  // namespace padded
