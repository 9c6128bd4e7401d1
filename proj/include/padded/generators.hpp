// generators.hpp - deterministic graph families for tests and benchmarks.
#pragma once

#include <cstdint>
#include <string>

#include "padded/graph.hpp"
#include "padded/rng.hpp"

namespace padded {

enum class Family { Path, Cycle, Tree, Grid, RandomGeometric };

enum class WeightRule { Unit, UniformRange, Distance };

struct FamilySpec {
  Family family = Family::Path;
  Vertex n = 0;          // path, cycle, tree, random-geometric
  Vertex rows = 0;       // grid
  Vertex cols = 0;       // grid
  int dim = 2;           // random-geometric
  double radius = 0.0;   // random-geometric connection radius
  WeightRule weights = WeightRule::Unit;  // geometric always uses Distance
  double wmin = 0.5;
  double wmax = 1.5;
  std::uint64_t seed = 0;  // recorded in artifacts; draws come from the rng
};

/// path(n): 0-1-...-(n-1). cycle(n): the n-cycle, n >= 3. tree(n): vertex v
/// attaches to a uniform earlier vertex. grid(rows, cols): 4-neighbor
/// lattice. random-geometric(n, dim, radius): uniform points in [0,1]^dim,
/// edges between points within `radius`, weight = Euclidean distance, and
/// only the largest connected component is kept (reindexed in vertex order).
Graph generate(const FamilySpec& spec, Rng& rng);

std::string family_name(Family f);
Family family_from_name(const std::string& name);

}  // namespace padded
