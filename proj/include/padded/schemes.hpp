// schemes.hpp - ready-made decomposition schemes over the clustering engines.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "padded/clustering.hpp"
#include "padded/core_partition.hpp"
#include "padded/graph.hpp"
#include "padded/nets.hpp"
#include "padded/rng.hpp"
#include "padded/trace.hpp"

namespace padded {

enum class SchemeKind { Doubling, MinorFree, ExplicitCenters, Cones };

struct SchemeConfig {
  SchemeKind kind = SchemeKind::Doubling;
  double delta = 0.0;
  int r = 0;                          // minor-free only
  std::optional<double> lambda;       // default: 2 + 2 ln(max(tau, e))
  std::optional<CenterSet> centers;   // explicit-centers only
};

struct NetSchemeResult {
  Partition partition;
  Trace trace;
  CenterSet centers;
  double lambda;
};

/// Greedy delta-net + starting-time clustering. Clusters are strongly
/// 4*delta-bounded; the padding floor e^(-4*gamma*lambda) holds for
/// gamma <= 1/16.
NetSchemeResult decompose_doubling(const Graph& g, double delta,
                                   std::optional<double> lambda, Rng& rng);

/// Greedy delta-net + cone carving. Clusters are strongly 4*delta-bounded;
/// the cone padding floor holds for gamma <= 1/32.
NetSchemeResult decompose_cones(const Graph& g, double delta,
                                std::optional<double> lambda, Rng& rng);

struct SubStageInfo {
  std::size_t core_round;
  Vertex center_count;
  double covering_radius;
  int tau;
  double lambda;
};

/// Re-decomposes one core cluster: (delta/8)-nets on each skeleton path,
/// their union as centers at sub-scale delta' = delta/4, then starting-time
/// clustering of G[cluster]. Output clusters are strongly delta-bounded.
/// Requires every cluster vertex within delta/8 of the skeleton (measured:
/// net covering radius <= delta/4, else PreconditionError).
Partition core_to_padded(const Graph& g, const VertexSet& cluster,
                         const std::vector<std::vector<Vertex>>& core_paths,
                         double delta, Rng& rng, Trace* trace_out = nullptr,
                         SubStageInfo* info_out = nullptr);

struct MinorFreeResult {
  Partition partition;  // engine "minor-free", strongly delta-bounded clusters
  Trace core_trace;
  std::vector<Trace> sub_traces;
  std::vector<SubStageInfo> stages;
};

/// Core partition at radius delta/8 followed by core_to_padded on every
/// cluster. The core radius must be delta/8 for the sub-stage covering
/// precondition (net spacing delta/8, sub-scale delta/4) to hold.
MinorFreeResult decompose_minor_free(const Graph& g, double delta, int r,
                                     Rng& rng);

/// A (beta, delta, Delta)-padded scheme with delta >= 1/beta is strongly
/// (beta, Delta)-separating. Validates the hypothesis and returns beta.
double as_separating_bound(double beta, double delta);

}  // namespace padded
