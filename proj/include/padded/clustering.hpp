// clustering.hpp - starting-time clustering and cone carving.
//
// Both engines assign every vertex to one center of a covering CenterSet and
// guarantee strong cluster diameter <= 4*delta. Starting-time clustering is
// one multi-source search where center x gets key offset (delta - delta_x);
// a vertex joins the center maximizing delta_x - d(x, v), ties to the
// smallest center index. Cone carving peels clusters off iteratively with
// radii R_i = delta_i * delta.
#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "padded/graph.hpp"
#include "padded/nets.hpp"
#include "padded/rng.hpp"
#include "padded/trace.hpp"

namespace padded {

/// A contract the caller was responsible for (covering, scale bounds, ...)
/// does not hold for the given input.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Per-center starting times, aligned with CenterSet::centers, each in
/// [0, delta] (absolute, already scaled).
struct StartingTimes {
  std::vector<double> delta_x;
};

struct Cluster {
  Vertex center;
  double radius;  // starting time delta_x, or cone radius R_i
  VertexSet members;
};

struct Partition {
  double delta = 0.0;
  std::string engine;
  std::vector<Cluster> clusters;
  std::vector<std::int32_t> assignment;  // vertex -> cluster index; -1 outside domain
};

struct PaddingWitness {
  Vertex v = -1;
  Vertex x1 = -1;     // winning center
  Vertex x2 = -1;     // runner-up center, -1 if none is reachable
  double gap = kInf;  // runner-up key minus winning key
};

/// Default sampling rate for a measured packing value: 2 + 2*ln(max(tau, e)).
double default_lambda(int tau);

/// Deterministic clustering given explicit starting times. Throws
/// PreconditionError when the center set does not cover the (sub)graph at
/// scale n.delta. Clusters appear in center order; empty ones are dropped.
Partition cluster_starting_times(const Graph& g, const CenterSet& n,
                                 const StartingTimes& times,
                                 const VertexSet* within = nullptr);

/// Samples per-center times delta_x = delta * Texp_[0,1](lambda) and clusters.
/// lambda = nullopt applies the default rule from the measured tau.
std::pair<Partition, Trace> padded_decompose(const Graph& g, const CenterSet& n,
                                             std::optional<double> lambda, Rng& rng,
                                             const VertexSet* within = nullptr);

/// Winning center, runner-up and their key gap at v, computed from the same
/// offset search the clustering uses (one pass keeping two distinct owners).
PaddingWitness padding_witness(const Graph& g, const CenterSet& n,
                               const StartingTimes& times, Vertex v,
                               const VertexSet* within = nullptr);

/// Cone carving: processes centers in index order; a still-active center
/// x_i claims, inside the unclustered subgraph S, every vertex v with
/// d_S(v, x_i) - d_S(v, active centers) <= R_i. One Texp draw per active
/// center. Clusters appear in carving order.
std::pair<Partition, Trace> cone_partition(const Graph& g, const CenterSet& n,
                                           std::optional<double> lambda, Rng& rng,
                                           const VertexSet* within = nullptr);

/// Cone carving with injected unit radii (delta_i values aligned with the
/// center list; entry i is consumed only if center i is active when reached).
/// Evaluates the raw carving rule: unlike the sampled engine it does not
/// insist on a covering center set, only that every vertex is reachable from
/// some center.
Partition cone_partition_given(const Graph& g, const CenterSet& n,
                               std::span<const double> unit_radii,
                               const VertexSet* within = nullptr);

/// Rebuild inputs from a recorded trace.
StartingTimes starting_times_from_trace(const CenterSet& n, const Trace& t);
Partition cone_partition_from_trace(const Graph& g, const CenterSet& n,
                                    const Trace& t);

}  // namespace padded
