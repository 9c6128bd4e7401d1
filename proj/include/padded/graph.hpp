// graph.hpp - weighted undirected graphs, vertex sets, deterministic
// shortest-path primitives.
//
// All distances are doubles accumulated source→vertex along predecessor
// edges (left fold), compared exactly. Ties between equally distant sources
// resolve to the smallest source index. This makes every search replayable
// bit for bit, which the statistical harness and the trace replays rely on.
#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace padded {

using Vertex = std::int32_t;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Edge {
  Vertex u;
  Vertex v;
  double w;
};

struct Neighbor {
  Vertex to;
  double w;
};

/// Fixed-universe vertex set backed by a bitmap. Iteration is always in
/// ascending vertex order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Vertex universe)
      : n_(universe), bits_((std::size_t(universe) + 63) / 64, 0) {}

  static VertexSet full(Vertex universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  static VertexSet of(Vertex universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  Vertex universe() const { return n_; }
  Vertex size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const {
    return (bits_[std::size_t(v) >> 6] >> (v & 63)) & 1u;
  }

  void insert(Vertex v) {
    std::uint64_t& word = bits_[std::size_t(v) >> 6];
    std::uint64_t mask = 1ull << (v & 63);
    if (!(word & mask)) {
      word |= mask;
      ++count_;
    }
  }

  void erase(Vertex v) {
    std::uint64_t& word = bits_[std::size_t(v) >> 6];
    std::uint64_t mask = 1ull << (v & 63);
    if (word & mask) {
      word &= ~mask;
      --count_;
    }
  }

  void insert_all(const VertexSet& other) {
    for_each_in(other, [&](Vertex v) { insert(v); });
  }

  void erase_all(const VertexSet& other) {
    for_each_in(other, [&](Vertex v) { erase(v); });
  }

  template <class F>
  void for_each(F&& f) const {
    for_each_in(*this, f);
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool operator==(const VertexSet& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  template <class F>
  static void for_each_in(const VertexSet& s, F&& f) {
    for (std::size_t i = 0; i < s.bits_.size(); ++i) {
      std::uint64_t word = s.bits_[i];
      while (word) {
        int b = std::countr_zero(word);
        f(Vertex(i * 64 + b));
        word &= word - 1;
      }
    }
  }

  Vertex n_ = 0;
  Vertex count_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Immutable undirected graph. Construction validates the edge list
/// (indices in range, no self-loops, no parallel edges, finite weights
/// >= 0) and canonicalizes it to u < v sorted order; adjacency rows are
/// sorted by neighbor index so relaxation order is deterministic.
class Graph {
 public:
  Graph() = default;
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adj_.data() + offs_[v], adj_.data() + offs_[v + 1]};
  }

  const std::vector<Edge>& edges() const { return edges_; }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offs_;
  std::vector<Neighbor> adj_;
};

/// Search source: the key at `vertex` starts from `offset` instead of 0.
struct Source {
  Vertex vertex;
  double offset = 0.0;
};

struct DistanceField {
  std::vector<double> dist;          // offset-included key; +inf if unreached
  std::vector<Vertex> pred;          // -1 at sources and unreached vertices
  std::vector<std::int32_t> owner;   // index into the sources list, -1 if unreached

  bool reachable(Vertex v) const { return owner[std::size_t(v)] >= 0; }

  /// Vertices of the path source→v realized by the pred chain.
  std::vector<Vertex> path_from_source(Vertex v) const;
};

/// Two best keys per vertex over sources with distinct owners.
struct Top2Field {
  std::vector<double> dist1, dist2;
  std::vector<std::int32_t> owner1, owner2;
};

/// Multi-source Dijkstra with per-source key offsets. `within` (optional)
/// restricts the search to an induced subgraph; sources must belong to it.
/// Keys above `cutoff` are not expanded: dist values are exact for every
/// vertex whose true key is <= cutoff and meaningless beyond.
DistanceField shortest_paths(const Graph& g, std::span<const Source> sources,
                             const VertexSet* within = nullptr,
                             double cutoff = kInf);

/// Same search but retaining, per vertex, the best key for each of the two
/// closest distinct owning sources.
Top2Field shortest_paths_top2(const Graph& g, std::span<const Source> sources,
                              const VertexSet* within = nullptr,
                              double cutoff = kInf);

/// Closed ball {u : d(center,u) <= radius}, optionally in an induced subgraph.
VertexSet ball(const Graph& g, Vertex center, double radius,
               const VertexSet* within = nullptr);

/// max over u,v in c of d_G(u,v); +inf if c spans several components of g.
double weak_diameter(const Graph& g, const VertexSet& c);

/// max over u,v in c of d_{G[c]}(u,v); +inf if G[c] is disconnected.
double strong_diameter(const Graph& g, const VertexSet& c);

/// Components of g (or of the induced subgraph), ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g,
                                            const VertexSet* within = nullptr);

/// Largest finite pairwise distance in g (diameter of the largest-spread
/// component); 0 for edgeless graphs.
double max_finite_distance(const Graph& g);

}  // namespace padded
