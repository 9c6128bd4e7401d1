// trace.hpp - replayable record of the random draws behind a decomposition.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace padded {

struct TraceDraw {
  std::int32_t id;  // center vertex (clustering engines) or round index (core)
  double value;     // sampled value in [0,1]
};

struct Trace {
  std::uint64_t seed = 0;  // stream id of the rng the draws came from
  std::string engine;      // "starting-times" | "cones" | "core"
  double delta = 0.0;
  double lambda = 0.0;
  std::vector<TraceDraw> draws;
};

}  // namespace padded
