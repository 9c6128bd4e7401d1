#include "padded/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace padded {

namespace {

void apply_weight_rule(const FamilySpec& spec, std::vector<Edge>& edges, Rng& rng) {
  switch (spec.weights) {
    case WeightRule::Unit:
      for (Edge& e : edges) e.w = 1.0;
      return;
    case WeightRule::UniformRange:
      if (!(spec.wmin >= 0) || !(spec.wmax >= spec.wmin) || !std::isfinite(spec.wmax))
        throw std::invalid_argument("generate: need 0 <= wmin <= wmax, finite");
      for (Edge& e : edges) e.w = spec.wmin + rng.next_double() * (spec.wmax - spec.wmin);
      return;
    case WeightRule::Distance:
      throw std::invalid_argument(
          "generate: distance weights are defined for random-geometric only");
  }
}

Graph make_geometric(const FamilySpec& spec, Rng& rng) {
  if (spec.n < 1) throw std::invalid_argument("generate: n must be >= 1");
  if (spec.dim < 1 || spec.dim > 8) throw std::invalid_argument("generate: dim in [1,8]");
  if (!(spec.radius > 0) || !std::isfinite(spec.radius))
    throw std::invalid_argument("generate: radius must be positive and finite");
  if (spec.weights == WeightRule::UniformRange)
    throw std::invalid_argument("generate: random-geometric always uses distance weights");

  std::size_t n = std::size_t(spec.n), d = std::size_t(spec.dim);
  std::vector<double> pts(n * d);
  for (double& x : pts) x = rng.next_double();

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        double diff = pts[i * d + k] - pts[j * d + k];
        s += diff * diff;
      }
      double dist = std::sqrt(s);
      if (dist <= spec.radius) edges.push_back({Vertex(i), Vertex(j), dist});
    }
  Graph full(spec.n, std::move(edges));

  // Keep the largest component (ties: the one with the smallest vertex).
  std::vector<VertexSet> comps = connected_components(full);
  std::size_t best = 0;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() > comps[best].size()) best = i;
  std::vector<Vertex> keep = comps[best].to_vector();
  std::vector<Vertex> index(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[std::size_t(keep[i])] = Vertex(i);
  std::vector<Edge> kept;
  for (const Edge& e : full.edges())
    if (index[std::size_t(e.u)] >= 0 && index[std::size_t(e.v)] >= 0)
      kept.push_back({index[std::size_t(e.u)], index[std::size_t(e.v)], e.w});
  return Graph(Vertex(keep.size()), std::move(kept));
}

}  // namespace

Graph generate(const FamilySpec& spec, Rng& rng) {
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::Path: {
      if (spec.n < 1) throw std::invalid_argument("generate: n must be >= 1");
      for (Vertex v = 0; v + 1 < spec.n; ++v) edges.push_back({v, v + 1, 1.0});
      apply_weight_rule(spec, edges, rng);
      return Graph(spec.n, std::move(edges));
    }
    case Family::Cycle: {
      if (spec.n < 3) throw std::invalid_argument("generate: cycle needs n >= 3");
      for (Vertex v = 0; v + 1 < spec.n; ++v) edges.push_back({v, v + 1, 1.0});
      edges.push_back({spec.n - 1, 0, 1.0});
      apply_weight_rule(spec, edges, rng);
      return Graph(spec.n, std::move(edges));
    }
    case Family::Tree: {
      if (spec.n < 1) throw std::invalid_argument("generate: n must be >= 1");
      for (Vertex v = 1; v < spec.n; ++v)
        edges.push_back({Vertex(rng.next_below(std::uint64_t(v))), v, 1.0});
      apply_weight_rule(spec, edges, rng);
      return Graph(spec.n, std::move(edges));
    }
    case Family::Grid: {
      if (spec.rows < 1 || spec.cols < 1)
        throw std::invalid_argument("generate: grid needs rows, cols >= 1");
      auto id = [&](Vertex r, Vertex c) { return r * spec.cols + c; };
      for (Vertex r = 0; r < spec.rows; ++r)
        for (Vertex c = 0; c < spec.cols; ++c) {
          if (c + 1 < spec.cols) edges.push_back({id(r, c), id(r, c + 1), 1.0});
          if (r + 1 < spec.rows) edges.push_back({id(r, c), id(r + 1, c), 1.0});
        }
      apply_weight_rule(spec, edges, rng);
      return Graph(spec.rows * spec.cols, std::move(edges));
    }
    case Family::RandomGeometric:
      return make_geometric(spec, rng);
  }
  throw std::invalid_argument("generate: unknown family");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Tree: return "tree";
    case Family::Grid: return "grid";
    case Family::RandomGeometric: return "random-geometric";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "tree") return Family::Tree;
  if (name == "grid") return Family::Grid;
  if (name == "random-geometric" || name == "geometric") return Family::RandomGeometric;
  throw std::invalid_argument("unknown family: " + name);
}

}  // namespace padded
