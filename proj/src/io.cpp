#include "padded/io.hpp"

#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace padded {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!out) throw ParseError("write failed for " + path);
}

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(std::string(what) + ": malformed JSON");
  return j;
}

void expect_kind(const json& j, const char* kind) {
  if (!j.is_object() || !j.contains("kind") || j["kind"] != kind)
    throw ParseError(std::string("expected a \"") + kind + "\" artifact");
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": number expected");
  return j.get<double>();
}

json members_json(const VertexSet& s) {
  json out = json::array();
  s.for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::string print_weight(double w, bool hexfloat) {
  char buf[64];
  if (hexfloat)
    std::snprintf(buf, sizeof buf, "%a", w);
  else
    std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

}  // namespace

Graph read_graph_text(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("edge list line " + std::to_string(lineno) + ": " + msg);
  };

  if (!next_line()) throw ParseError("edge list: empty input");
  long long n = 0, mcount = 0;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n >> mcount) || (ss >> extra))
      throw fail("expected header \"n m\"");
  }
  if (n < 0 || mcount < 0) throw fail("negative header field");

  std::vector<Edge> edges;
  edges.reserve(std::size_t(mcount));
  for (long long e = 0; e < mcount; ++e) {
    if (!next_line()) throw ParseError("edge list: expected " + std::to_string(mcount) +
                                       " edges, got " + std::to_string(e));
    long long u = 0, v = 0;
    std::string wtok, extra;
    std::istringstream ss(line);
    if (!(ss >> u >> v >> wtok) || (ss >> extra)) throw fail("expected \"u v w\"");
    char* end = nullptr;
    double w = std::strtod(wtok.c_str(), &end);
    if (end == wtok.c_str() || *end != '\0') throw fail("bad weight \"" + wtok + "\"");
    if (u < 0 || u >= n || v < 0 || v >= n) throw fail("endpoint out of range");
    edges.push_back({Vertex(u), Vertex(v), w});
  }
  try {
    return Graph(Vertex(n), std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("edge list: ") + ex.what());
  }
}

Graph read_graph_json(const std::string& text) {
  json j = parse(text, "graph");
  expect_kind(j, "graph");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("graph: integer \"n\" required");
  Vertex n = j["n"].get<Vertex>();
  std::vector<Edge> edges;
  for (const json& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 3) throw ParseError("graph: edge must be [u, v, w]");
    edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>(), number(e[2], "graph edge weight")});
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("graph: ") + ex.what());
  }
}

Graph read_graph(const std::string& path) {
  std::string text = slurp(path);
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') return read_graph_json(text);
  std::istringstream ss(text);
  return read_graph_text(ss);
}

std::string graph_to_json(const Graph& g, const std::string& meta) {
  json j;
  j["kind"] = "graph";
  j["n"] = g.num_vertices();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.w});
  j["edges"] = std::move(edges);
  if (!meta.empty()) j["meta"] = parse(meta, "meta");
  return j.dump(2) + "\n";
}

void write_graph(const Graph& g, const std::string& path, GraphFormat format,
                 bool hexfloat, const std::string& meta) {
  if (format == GraphFormat::Json) {
    spill(path, graph_to_json(g, meta));
    return;
  }
  if (format == GraphFormat::Dot) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    write_dot(g, nullptr, out);
    return;
  }
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges())
    out << e.u << ' ' << e.v << ' ' << print_weight(e.w, hexfloat) << '\n';
  spill(path, out.str());
}

std::string partition_to_json(const Partition& p, std::uint64_t seed) {
  json j;
  j["kind"] = "partition";
  j["n"] = p.assignment.size();
  j["delta"] = p.delta;
  j["engine"] = p.engine;
  j["seed"] = seed;
  json clusters = json::array();
  for (const Cluster& c : p.clusters) {
    json jc;
    jc["center"] = c.center;
    jc["radius"] = c.radius;
    jc["members"] = members_json(c.members);
    clusters.push_back(std::move(jc));
  }
  j["clusters"] = std::move(clusters);
  return j.dump(2) + "\n";
}

void write_partition(const Partition& p, const std::string& path, std::uint64_t seed) {
  spill(path, partition_to_json(p, seed));
}

Partition read_partition(const std::string& path) {
  json j = parse(slurp(path), "partition");
  expect_kind(j, "partition");
  Partition p;
  Vertex n = j.at("n").get<Vertex>();
  p.delta = number(j.at("delta"), "partition delta");
  p.engine = j.at("engine").get<std::string>();
  p.assignment.assign(std::size_t(n), -1);
  for (const json& jc : j.at("clusters")) {
    Cluster c{jc.at("center").get<Vertex>(), number(jc.at("radius"), "cluster radius"),
              VertexSet(n)};
    std::int32_t id = std::int32_t(p.clusters.size());
    for (const json& jv : jc.at("members")) {
      Vertex v = jv.get<Vertex>();
      if (v < 0 || v >= n) throw ParseError("partition: member out of range");
      if (p.assignment[std::size_t(v)] >= 0)
        throw ParseError("partition: vertex " + std::to_string(v) +
                         " appears in clusters " +
                         std::to_string(p.assignment[std::size_t(v)]) + " and " +
                         std::to_string(id));
      p.assignment[std::size_t(v)] = id;
      c.members.insert(v);
    }
    if (c.members.empty()) throw ParseError("partition: empty cluster");
    p.clusters.push_back(std::move(c));
  }
  for (Vertex v = 0; v < n; ++v)
    if (p.assignment[std::size_t(v)] < 0)
      throw ParseError("partition: vertex " + std::to_string(v) + " is unassigned");
  return p;
}

std::string cover_to_json(const Cover& c) {
  json j;
  j["kind"] = "cover";
  std::size_t n = 0;
  for (const CoverCluster& cc : c.clusters) n = std::max<std::size_t>(n, std::size_t(cc.members.universe()));
  j["n"] = n;
  j["delta"] = c.delta;
  j["beta"] = c.beta;
  j["t"] = c.t;
  j["m"] = c.m;
  j["padding_radius"] = c.padding_radius;
  j["seed"] = c.seed;
  json clusters = json::array();
  for (const CoverCluster& cc : c.clusters) {
    json jc;
    jc["partition"] = cc.partition;
    jc["center"] = cc.center;
    jc["radius"] = cc.radius;
    jc["members"] = members_json(cc.members);
    clusters.push_back(std::move(jc));
  }
  j["clusters"] = std::move(clusters);
  return j.dump(2) + "\n";
}

void write_cover(const Cover& c, const std::string& path) { spill(path, cover_to_json(c)); }

Cover read_cover(const std::string& path) {
  json j = parse(slurp(path), "cover");
  expect_kind(j, "cover");
  Cover c;
  Vertex n = j.at("n").get<Vertex>();
  c.delta = number(j.at("delta"), "cover delta");
  c.beta = number(j.at("beta"), "cover beta");
  c.t = j.at("t").get<int>();
  c.m = j.at("m").get<int>();
  c.padding_radius = number(j.at("padding_radius"), "cover padding radius");
  c.seed = j.value("seed", std::uint64_t(0));
  for (const json& jc : j.at("clusters")) {
    CoverCluster cc{jc.at("partition").get<std::int32_t>(), jc.at("center").get<Vertex>(),
                    number(jc.at("radius"), "cover cluster radius"), VertexSet(n)};
    for (const json& jv : jc.at("members")) {
      Vertex v = jv.get<Vertex>();
      if (v < 0 || v >= n) throw ParseError("cover: member out of range");
      cc.members.insert(v);
    }
    c.clusters.push_back(std::move(cc));
  }
  return c;
}

std::string trace_to_json(const Trace& t) {
  json j;
  j["kind"] = "trace";
  j["seed"] = t.seed;
  j["engine"] = t.engine;
  j["delta"] = t.delta;
  j["lambda"] = t.lambda;
  json draws = json::array();
  for (const TraceDraw& d : t.draws) draws.push_back({d.id, d.value});
  j["draws"] = std::move(draws);
  return j.dump(2) + "\n";
}

void write_trace(const Trace& t, const std::string& path) { spill(path, trace_to_json(t)); }

Trace read_trace(const std::string& path) {
  json j = parse(slurp(path), "trace");
  expect_kind(j, "trace");
  Trace t;
  t.seed = j.at("seed").get<std::uint64_t>();
  t.engine = j.at("engine").get<std::string>();
  t.delta = number(j.at("delta"), "trace delta");
  t.lambda = number(j.at("lambda"), "trace lambda");
  for (const json& jd : j.at("draws")) {
    if (!jd.is_array() || jd.size() != 2) throw ParseError("trace: draw must be [id, value]");
    t.draws.push_back({jd[0].get<std::int32_t>(), number(jd[1], "trace draw value")});
  }
  return t;
}

void write_centers(const CenterSet& n, const std::string& path) {
  json j;
  j["kind"] = "centers";
  j["delta"] = n.delta;
  j["covering_radius"] = n.covering_radius;
  j["tau"] = n.tau;
  j["centers"] = n.centers;
  spill(path, j.dump(2) + "\n");
}

CenterSet read_centers(const std::string& path) {
  json j = parse(slurp(path), "centers");
  expect_kind(j, "centers");
  CenterSet n;
  n.delta = number(j.at("delta"), "centers delta");
  n.covering_radius = number(j.at("covering_radius"), "covering radius");
  n.tau = j.at("tau").get<int>();
  for (const json& jv : j.at("centers")) n.centers.push_back(jv.get<Vertex>());
  return n;
}

void write_dot(const Graph& g, const Partition* p, std::ostream& out) {
  static const char* palette[] = {"#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
                                  "#a6d854", "#ffd92f", "#e5c494", "#b3b3b3",
                                  "#1b9e77", "#d95f02", "#7570b3", "#e7298a"};
  out << "graph padded {\n  node [style=filled];\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v;
    if (p && p->assignment[std::size_t(v)] >= 0)
      out << " [fillcolor=\"" << palette[std::size_t(p->assignment[std::size_t(v)]) % 12]
          << "\"]";
    out << ";\n";
  }
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof buf, "%g", e.w);
    out << "  " << e.u << " -- " << e.v << " [label=\"" << buf << "\"];\n";
  }
  out << "}\n";
}

}  // namespace padded
