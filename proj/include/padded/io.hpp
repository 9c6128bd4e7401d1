// io.hpp - serialization: edge-list text, JSON artifacts, DOT export.
//
// Doubles survive a JSON round trip bit for bit (shortest-round-trip
// printing); the edge-list writer prints 17 significant digits, or hexfloat
// on request. Readers validate structure and reject overlapping partitions.
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "padded/clustering.hpp"
#include "padded/graph.hpp"
#include "padded/nets.hpp"
#include "padded/sparse_cover.hpp"
#include "padded/trace.hpp"

namespace padded {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { Json, EdgeList, Dot };

/// Reads a graph from disk; JSON and edge-list text ("n m" header then one
/// "u v w" line per edge) are auto-detected.
Graph read_graph(const std::string& path);
Graph read_graph_text(std::istream& in);
Graph read_graph_json(const std::string& text);

/// `meta` (optional JSON text) is embedded verbatim under "meta" so
/// artifacts can carry their generating config and seed.
void write_graph(const Graph& g, const std::string& path, GraphFormat format,
                 bool hexfloat = false, const std::string& meta = "");
std::string graph_to_json(const Graph& g, const std::string& meta = "");

Partition read_partition(const std::string& path);
void write_partition(const Partition& p, const std::string& path,
                     std::uint64_t seed = 0);
std::string partition_to_json(const Partition& p, std::uint64_t seed = 0);

Cover read_cover(const std::string& path);
void write_cover(const Cover& c, const std::string& path);
std::string cover_to_json(const Cover& c);

Trace read_trace(const std::string& path);
void write_trace(const Trace& t, const std::string& path);
std::string trace_to_json(const Trace& t);

CenterSet read_centers(const std::string& path);
void write_centers(const CenterSet& n, const std::string& path);

/// Undirected DOT with one color class per cluster when a partition is given.
void write_dot(const Graph& g, const Partition* p, std::ostream& out);

}  // namespace padded
