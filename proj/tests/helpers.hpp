// helpers.hpp - small graph builders shared by the unit tests.
#pragma once

#include <vector>

#include "padded/generators.hpp"
#include "padded/graph.hpp"
#include "padded/rng.hpp"

namespace testutil {

using padded::Edge;
using padded::Graph;
using padded::Vertex;

inline Graph path(Vertex n, double w = 1.0) {
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v) es.push_back({v, Vertex(v + 1), w});
  return Graph(n, std::move(es));
}

inline Graph cycle(Vertex n, double w = 1.0) {
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.push_back({v, Vertex((v + 1) % n), w});
  return Graph(n, std::move(es));
}

inline Graph grid(Vertex rows, Vertex cols) {
  padded::FamilySpec spec;
  spec.family = padded::Family::Grid;
  spec.rows = rows;
  spec.cols = cols;
  padded::Rng rng(0);
  return padded::generate(spec, rng);
}

/// Connected random graph: a random tree plus `extra` random chords, weights
/// uniform in [0.5, 1.5]. Deterministic in the rng.
inline Graph random_connected(Vertex n, int extra, padded::Rng& rng) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) {
    Vertex u = Vertex(rng.next_below(std::uint64_t(v)));
    es.push_back({u, v, 0.5 + rng.next_double()});
  }
  int added = 0;
  int guard = 0;
  while (added < extra && guard < 20 * extra + 100) {
    ++guard;
    Vertex u = Vertex(rng.next_below(std::uint64_t(n)));
    Vertex v = Vertex(rng.next_below(std::uint64_t(n)));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    bool dup = false;
    for (const Edge& e : es)
      if (e.u == u && e.v == v) dup = true;
    if (dup) continue;
    es.push_back({u, v, 0.5 + rng.next_double()});
    ++added;
  }
  return Graph(n, std::move(es));
}

}  // namespace testutil
