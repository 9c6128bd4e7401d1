// nets.hpp - center sets: greedy nets, path nets, covering/packing audit.
#pragma once

#include <span>
#include <vector>

#include "padded/graph.hpp"

namespace padded {

/// Ordered center list at scale delta with its measured covering radius
/// (max over vertices of the distance to the nearest center) and packing
/// number tau (max over vertices of the number of centers within 3*delta).
struct CenterSet {
  std::vector<Vertex> centers;
  double delta = 0.0;
  double covering_radius = kInf;
  int tau = 0;
};

struct CenterStats {
  double covering_radius;
  int tau;
};

/// Exact covering radius and packing tau of `centers` at scale `delta`,
/// optionally inside an induced subgraph.
CenterStats measure_centers(const Graph& g, std::span<const Vertex> centers,
                            double delta, const VertexSet* within = nullptr);

/// CenterSet with measured fields filled in.
CenterSet make_center_set(const Graph& g, std::vector<Vertex> centers,
                          double delta, const VertexSet* within = nullptr);

/// Recomputes both measurements and compares them with the stored fields.
bool check_centers(const Graph& g, const CenterSet& n,
                   const VertexSet* within = nullptr);

/// Greedy delta-net scanned in vertex order: v joins the net iff no earlier
/// net point lies within delta. Pairwise distances are > delta, every vertex
/// is within delta of the net, and every component gets at least one point.
CenterSet greedy_net(const Graph& g, double delta,
                     const VertexSet* within = nullptr);

/// Greedy delta-net of a path's vertices under the path metric (cumulative
/// edge weights along the path). `path` must list distinct, consecutively
/// adjacent vertices. Returned net vertices are ordered along the path and
/// always include the first vertex.
std::vector<Vertex> net_on_path(const Graph& g, std::span<const Vertex> path,
                                double delta);

/// Smallest delta (by bisection) whose greedy net has between lo and hi
/// centers; throws if the range is never hit.
double delta_for_net_size(const Graph& g, Vertex lo, Vertex hi);

}  // namespace padded
