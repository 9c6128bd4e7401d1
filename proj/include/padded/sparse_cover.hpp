// sparse_cover.hpp - low-overlap cover from m independent padded partitions,
// repaired by local resampling until every net point is padded in some copy.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "padded/clustering.hpp"
#include "padded/graph.hpp"
#include "padded/nets.hpp"
#include "padded/rng.hpp"

namespace padded {

inline constexpr double kCoverAlpha = 64.0;  // beta = alpha * t

struct CoverCluster {
  std::int32_t partition;  // which of the m partitions this cluster is from
  Vertex center;
  double radius;  // starting time of the cluster's center
  VertexSet members;
};

struct Cover {
  double delta = 0.0;           // net scale; strong diameter bound is 4*delta
  double beta = 0.0;            // alpha * t
  int t = 0;
  int m = 0;
  double padding_radius = 0.0;  // delta / beta
  std::uint64_t seed = 0;
  std::vector<CoverCluster> clusters;
};

struct CoverReport {
  bool success = false;
  int m = 0;
  int attempts = 0;
  std::int64_t resamples = 0;  // event resamplings in the last attempt
  std::int64_t budget = 0;
  double alpha = kCoverAlpha;
  double beta = 0.0;
  double lambda = 0.0;
  int tau = 0;
  Vertex center_count = 0;
  Vertex event_count = 0;        // |Y|, the (delta/beta)-net size
  int dependency_degree = 0;     // max #{z in Y, z != y : d(y,z) <= 6*delta}
  std::uint64_t seed = 0;
  std::vector<Vertex> surviving_bad_events;  // net points still bad on failure
};

/// Builds a cover with per-vertex overlap exactly m, strong cluster diameter
/// <= 4*delta, and every ball B(v, delta/beta) inside some cluster. With m
/// unset, starts at m0 = ceil(log2 |Y|) + 4 and doubles m on budget
/// exhaustion; with m fixed, a single attempt runs and failure is reported
/// with the surviving bad events. budget defaults to 10*|Y| resamplings.
std::pair<std::optional<Cover>, CoverReport> sparse_cover(
    const Graph& g, double delta, int t, std::optional<int> m,
    std::optional<std::int64_t> budget, Rng& rng);

/// True iff the padding witness gap at v clears `threshold` (closed
/// comparison; a lone reachable center means an infinite gap, hence true).
bool gap_padded(const Graph& g, const CenterSet& n, const StartingTimes& times,
                Vertex v, double threshold);

}  // namespace padded
