// core_partition.hpp - skeleton-and-ball partition for graphs excluding a
// K_r minor.
//
// Round i picks the residual component with the smallest vertex, roots a
// shortest-path tree at that vertex, connects it to every earlier adjacent
// cluster through one attachment vertex each (at most r-2 paths when the
// graph is K_r-free), and takes the ball of radius R_i*delta around that
// skeleton inside the residual graph, R_i ~ Texp_[0,1](2r).
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "padded/graph.hpp"
#include "padded/rng.hpp"
#include "padded/trace.hpp"

namespace padded {

struct CoreCluster {
  Vertex root;
  double radius_draw;  // R_i in [0,1]; ball radius is radius_draw * delta
  std::vector<std::vector<Vertex>> paths;  // root -> attachment, earlier-cluster order
  VertexSet skeleton;                      // union of path vertices ({root} if no paths)
  VertexSet members;
};

struct CorePartition {
  double delta = 0.0;
  int r = 0;
  std::vector<CoreCluster> clusters;       // creation order
  std::vector<std::int32_t> assignment;    // vertex -> cluster index
};

std::pair<CorePartition, Trace> core_partition(const Graph& g, double delta,
                                               int r, Rng& rng);

/// Skeleton paths of cluster i; a single trivial path [root] when the
/// skeleton had no attachments.
std::vector<std::vector<Vertex>> skeleton_paths(const CorePartition& cp,
                                                std::size_t i);

}  // namespace padded
