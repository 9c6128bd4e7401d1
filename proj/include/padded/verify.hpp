// verify.hpp - exact structural checks and Monte-Carlo estimators for
// decompositions and covers. Nothing here trusts the construction: diameters,
// disjointness, padding and overlap are all recomputed from the graph.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "padded/clustering.hpp"
#include "padded/graph.hpp"
#include "padded/schemes.hpp"
#include "padded/sparse_cover.hpp"

namespace padded {

struct WilsonInterval {
  double lo;
  double hi;
};

/// 95% Wilson score interval for `successes` out of `n`.
WilsonInterval wilson95(std::int64_t successes, std::int64_t n);

struct StructuralReport {
  bool ok = false;
  bool disjoint_complete = false;
  bool connected = false;
  bool diameter_ok = false;
  double bound = 0.0;
  double max_strong_diameter = 0.0;
  std::vector<double> cluster_diameters;
  std::string detail;  // first failure, empty when ok
};

/// Disjointness + completeness, per-cluster connectivity, and exact strong
/// diameter <= bound for every cluster.
StructuralReport check_partition(const Graph& g, const Partition& p, double bound);

struct PaddingRow {
  double gamma;
  std::int64_t successes = 0;
  std::int64_t checks = 0;
  double frequency = 0.0;
  double floor = 0.0;  // e^(-beta*gamma), or the 1-16*r*gamma envelope
  WilsonInterval wilson{0.0, 0.0};
  bool pass = false;
};

struct PaddingReport {
  SchemeKind scheme = SchemeKind::Doubling;
  double delta = 0.0;
  double lambda = 0.0;
  double beta = 0.0;  // 4*lambda for the net schemes, 0 for minor-free
  int tau = 0;
  int r = 0;
  std::int64_t trials = 0;
  Vertex sampled_vertices = 0;
  int threads = 1;
  std::uint64_t seed = 0;
  std::string floor_kind;  // "exp(-beta*gamma)" or "1-c*r*gamma"
  double fitted_c = 0.0;   // minor-free: max over gammas of (1-freq)/(r*gamma)
  std::vector<PaddingRow> rows;
  bool ok = false;  // every row passed
};

/// Per-gamma frequency of B(v, gamma*delta) landing inside v's cluster,
/// over `trials` independent decompositions. Vertices: full sweep for
/// n <= 2000, else a fixed 500-vertex sample. Trials run on `threads`
/// threads with per-trial substreams, so results do not depend on the
/// thread count. Gate: frequency >= floor - 3*sqrt(floor*(1-floor)/trials).
PaddingReport estimate_padding(const Graph& g, const SchemeConfig& cfg,
                               std::span<const double> gammas,
                               std::int64_t trials, int threads, Rng& rng);

struct EdgeCutRow {
  Vertex u, v;
  double w;
  std::int64_t cuts = 0;
  double frequency = 0.0;
  double bound = 0.0;  // min(1, beta*w/delta)
  bool pass = false;
};

struct CutReport {
  double delta = 0.0;
  double beta = 0.0;  // 4*lambda
  std::int64_t trials = 0;
  int threads = 1;
  std::uint64_t seed = 0;
  std::vector<EdgeCutRow> rows;  // one per edge, graph edge order
  double max_excess = 0.0;       // max over edges of frequency - gate
  bool ok = false;
};

/// Per-edge cut frequency versus the separating bound beta*w(e)/delta
/// (+ 3 standard errors at the bound). Requires a 4*delta-bounded scheme
/// (doubling, cones or explicit centers).
CutReport estimate_separating(const Graph& g, const SchemeConfig& cfg,
                              std::int64_t trials, int threads, Rng& rng);

struct CoverCheckReport {
  bool ok = false;
  bool diameter_ok = false;
  bool covering_ok = false;   // every vertex in >= 1 cluster
  bool overlap_ok = false;    // max overlap <= s
  bool padding_ok = false;    // B(v, delta/beta) inside some cluster, all v
  double max_strong_diameter = 0.0;
  double diameter_bound = 0.0;  // 4*cover.delta
  int min_overlap = 0;
  int max_overlap = 0;
  Vertex first_unpadded = -1;
  std::string detail;
};

/// Exact check of the cover guarantees: strong diameter <= 4*delta, overlap
/// <= s, and the ball B(v, delta/beta) contained in some cluster for every
/// vertex. Failures name the offending cluster or vertex.
CoverCheckReport check_cover(const Graph& g, const Cover& c, double beta, int s);

}  // namespace padded
