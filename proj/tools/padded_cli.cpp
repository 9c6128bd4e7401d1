// padded - command-line driver for the decomposition library.
//
// Subcommands: generate, decompose, cover, verify (padding | separating |
// partition | cover), bench. Every artifact embeds the seed and config that
// produced it; the same seed and flags reproduce the same bytes.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "padded/generators.hpp"
#include "padded/io.hpp"
#include "padded/nets.hpp"
#include "padded/schemes.hpp"
#include "padded/sparse_cover.hpp"
#include "padded/verify.hpp"

namespace {

using namespace padded;
using nlohmann::json;

// Instance options shared by every subcommand that needs a graph: either
// --in FILE or a --family spec generated on the spot.
struct InstanceOpts {
  std::string in;
  std::string family;
  std::int64_t n = 0;
  std::int64_t rows = 0, cols = 0;
  int dim = 2;
  double radius = 0.0;
  std::string weights = "unit";
  double wmin = 0.5, wmax = 1.5;
};

void add_instance_flags(CLI::App* cmd, InstanceOpts* o) {
  cmd->add_option("--in", o->in, "input graph (JSON or edge-list text)");
  cmd->add_option("--family", o->family,
                  "generate instead: path|cycle|tree|grid|geometric");
  cmd->add_option("--n", o->n, "vertex count (path, cycle, tree, geometric)");
  cmd->add_option("--rows", o->rows, "grid rows");
  cmd->add_option("--cols", o->cols, "grid cols");
  cmd->add_option("--dim", o->dim, "geometric dimension")->capture_default_str();
  cmd->add_option("--radius", o->radius, "geometric connection radius");
  cmd->add_option("--weights", o->weights, "unit|uniform|distance")
      ->capture_default_str();
  cmd->add_option("--wmin", o->wmin, "uniform weight lower bound")
      ->capture_default_str();
  cmd->add_option("--wmax", o->wmax, "uniform weight upper bound")
      ->capture_default_str();
}

WeightRule weight_rule_from_name(const std::string& s) {
  if (s == "unit") return WeightRule::Unit;
  if (s == "uniform") return WeightRule::UniformRange;
  if (s == "distance") return WeightRule::Distance;
  throw CLI::ValidationError("--weights", "unknown weight rule '" + s + "'");
}

FamilySpec spec_from_opts(const InstanceOpts& o, std::uint64_t seed) {
  FamilySpec spec;
  spec.family = family_from_name(o.family);
  spec.n = Vertex(o.n);
  spec.rows = Vertex(o.rows);
  spec.cols = Vertex(o.cols);
  spec.dim = o.dim;
  spec.radius = o.radius;
  spec.weights = weight_rule_from_name(o.weights);
  spec.wmin = o.wmin;
  spec.wmax = o.wmax;
  spec.seed = seed;
  return spec;
}

// Loads --in, generates --family, or falls back to the default verification
// instance: random-geometric n=2000, dim 2, radius 0.06.
Graph load_instance(const InstanceOpts& o, std::uint64_t seed,
                    bool allow_default, json* meta) {
  if (!o.in.empty() && !o.family.empty())
    throw CLI::ValidationError("--in", "--in and --family are exclusive");
  if (!o.in.empty()) {
    if (meta) (*meta)["graph"] = o.in;
    return read_graph(o.in);
  }
  InstanceOpts eff = o;
  if (eff.family.empty()) {
    if (!allow_default)
      throw CLI::ValidationError("--in", "an input graph is required");
    eff.family = "geometric";
    eff.n = 2000;
    eff.radius = 0.06;
  }
  FamilySpec spec = spec_from_opts(eff, seed);
  Rng rng(seed);
  Rng gen = rng.fork("generate");
  Graph g = generate(spec, gen);
  if (meta) {
    (*meta)["family"] = family_name(spec.family);
    (*meta)["n"] = g.num_vertices();
    (*meta)["seed"] = seed;
  }
  return g;
}

SchemeKind scheme_from_name(const std::string& s) {
  if (s == "doubling") return SchemeKind::Doubling;
  if (s == "minor-free") return SchemeKind::MinorFree;
  if (s == "centers") return SchemeKind::ExplicitCenters;
  if (s == "cones") return SchemeKind::Cones;
  throw CLI::ValidationError("--scheme", "unknown scheme '" + s + "'");
}

const char* scheme_name(SchemeKind k) {
  switch (k) {
    case SchemeKind::Doubling: return "doubling";
    case SchemeKind::MinorFree: return "minor-free";
    case SchemeKind::ExplicitCenters: return "centers";
    case SchemeKind::Cones: return "cones";
  }
  return "?";
}

double resolve_delta(const Graph& g, double delta, std::int64_t net_lo,
                     std::int64_t net_hi) {
  if (delta > 0) return delta;
  return delta_for_net_size(g, Vertex(net_lo), Vertex(net_hi));
}

int run_generate(const InstanceOpts& inst, std::uint64_t seed,
                 const std::string& out, const std::string& format,
                 bool hexfloat) {
  if (inst.family.empty())
    throw CLI::ValidationError("--family", "generate needs --family");
  FamilySpec spec = spec_from_opts(inst, seed);
  Rng rng(seed);
  Rng gen = rng.fork("generate");
  Graph g = generate(spec, gen);
  json meta;
  meta["family"] = family_name(spec.family);
  meta["seed"] = seed;
  meta["weights"] = inst.weights;
  if (spec.family == Family::Grid) {
    meta["rows"] = spec.rows;
    meta["cols"] = spec.cols;
  } else {
    meta["n"] = spec.n;
  }
  if (spec.family == Family::RandomGeometric) {
    meta["dim"] = spec.dim;
    meta["radius"] = spec.radius;
  }
  GraphFormat fmt = GraphFormat::Json;
  if (format == "edgelist") fmt = GraphFormat::EdgeList;
  else if (format == "dot") fmt = GraphFormat::Dot;
  else if (format != "json")
    throw CLI::ValidationError("--format", "unknown format '" + format + "'");
  write_graph(g, out, fmt, hexfloat, meta.dump());
  std::printf("generated %s: n=%d m=%zu -> %s\n",
              family_name(spec.family).c_str(), g.num_vertices(),
              std::size_t(g.num_edges()), out.c_str());
  return 0;
}

struct DecomposeOpts {
  InstanceOpts inst;
  std::string scheme = "doubling";
  double delta = 0.0;
  std::int64_t net_lo = 30, net_hi = 100;
  int r = 0;
  double lambda = 0.0;
  std::string centers_file;
  std::uint64_t seed = 0;
  std::string out;
  std::string trace_out;
  std::string dot_out;
};

int run_decompose(const DecomposeOpts& o) {
  SchemeKind kind = scheme_from_name(o.scheme);
  if (kind == SchemeKind::MinorFree && o.r < 2) {
    std::fprintf(stderr, "decompose: --scheme minor-free requires --r >= 2\n");
    return 2;
  }
  if (kind == SchemeKind::ExplicitCenters && o.centers_file.empty()) {
    std::fprintf(stderr, "decompose: --scheme centers requires --centers\n");
    return 2;
  }
  json meta;
  Graph g = load_instance(o.inst, o.seed, false, &meta);
  double delta = resolve_delta(g, o.delta, o.net_lo, o.net_hi);
  std::optional<double> lambda;
  if (o.lambda > 0) lambda = o.lambda;

  Rng rng(o.seed);
  Rng run = rng.fork("decompose");
  Partition part;
  std::optional<Trace> trace;
  double used_lambda = 0.0;
  if (kind == SchemeKind::MinorFree) {
    MinorFreeResult res = decompose_minor_free(g, delta, o.r, run);
    part = std::move(res.partition);
    trace = std::move(res.core_trace);
  } else if (kind == SchemeKind::ExplicitCenters) {
    CenterSet net = read_centers(o.centers_file);
    auto [p, t] = padded_decompose(g, net, lambda, run);
    part = std::move(p);
    trace = std::move(t);
    used_lambda = trace->lambda;
  } else {
    NetSchemeResult res = kind == SchemeKind::Cones
                              ? decompose_cones(g, delta, lambda, run)
                              : decompose_doubling(g, delta, lambda, run);
    part = std::move(res.partition);
    trace = std::move(res.trace);
    used_lambda = res.lambda;
  }

  double bound = kind == SchemeKind::MinorFree ? delta : 4 * delta;
  StructuralReport rep = check_partition(g, part, bound);
  std::printf("%s: n=%d delta=%g clusters=%zu max_diam=%g bound=%g %s\n",
              scheme_name(kind), g.num_vertices(), delta, part.clusters.size(),
              rep.max_strong_diameter, bound, rep.ok ? "ok" : "FAIL");
  if (used_lambda > 0) std::printf("lambda=%g\n", used_lambda);
  if (!rep.ok) {
    std::fprintf(stderr, "structural check failed: %s\n", rep.detail.c_str());
    return 1;
  }
  if (!o.out.empty()) write_partition(part, o.out, o.seed);
  if (!o.trace_out.empty() && trace) write_trace(*trace, o.trace_out);
  if (!o.dot_out.empty()) {
    std::ofstream f(o.dot_out);
    write_dot(g, &part, f);
  }
  return 0;
}

struct CoverOpts {
  InstanceOpts inst;
  double delta = 0.0;
  std::int64_t net_lo = 30, net_hi = 100;
  int t = 2;
  int m = 0;
  std::int64_t budget = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_cover(const CoverOpts& o) {
  json meta;
  Graph g = load_instance(o.inst, o.seed, false, &meta);
  double delta = resolve_delta(g, o.delta, o.net_lo, o.net_hi);
  std::optional<int> m;
  if (o.m > 0) m = o.m;
  std::optional<std::int64_t> budget;
  if (o.budget > 0) budget = o.budget;
  Rng rng(o.seed);
  Rng run = rng.fork("cover");
  auto [cover, rep] = sparse_cover(g, delta, o.t, m, budget, run);
  std::printf(
      "cover: n=%d delta=%g t=%d m=%d attempts=%d resamples=%lld/%lld "
      "events=%d dep_degree=%d %s\n",
      g.num_vertices(), delta, o.t, rep.m, rep.attempts,
      static_cast<long long>(rep.resamples), static_cast<long long>(rep.budget),
      rep.event_count, rep.dependency_degree,
      rep.success ? "ok" : "FAIL");
  if (!rep.success) {
    std::fprintf(stderr, "cover: %zu net points still unpadded\n",
                 rep.surviving_bad_events.size());
    return 1;
  }
  CoverCheckReport chk = check_cover(g, *cover, cover->beta, cover->m);
  std::printf("check: diam<=%g %s overlap=[%d,%d] padding %s\n",
              chk.diameter_bound, chk.diameter_ok ? "ok" : "FAIL",
              chk.min_overlap, chk.max_overlap, chk.padding_ok ? "ok" : "FAIL");
  if (!chk.ok) {
    std::fprintf(stderr, "cover check failed: %s\n", chk.detail.c_str());
    return 1;
  }
  if (!o.out.empty()) {
    Cover c = std::move(*cover);
    c.seed = o.seed;
    write_cover(c, o.out);
  }
  return 0;
}

struct VerifyOpts {
  InstanceOpts inst;
  std::string scheme = "doubling";
  double delta = 0.0;
  std::int64_t net_lo = 30, net_hi = 100;
  int r = 0;
  double lambda = 0.0;
  std::vector<double> gammas;
  std::int64_t trials = 1000;
  int threads = 1;
  std::uint64_t seed = 0;
  // partition / cover sub-modes
  std::string graph_file;
  std::string partition_file;
  std::string cover_file;
  double bound = 0.0;
  int overlap = 0;
};

SchemeConfig scheme_config(const Graph& g, const VerifyOpts& o, double delta) {
  SchemeConfig cfg;
  cfg.kind = scheme_from_name(o.scheme);
  cfg.delta = delta;
  cfg.r = o.r;
  if (o.lambda > 0) cfg.lambda = o.lambda;
  if (cfg.kind == SchemeKind::ExplicitCenters)
    cfg.centers = greedy_net(g, delta);
  return cfg;
}

int run_verify_padding(const VerifyOpts& o) {
  if (scheme_from_name(o.scheme) == SchemeKind::MinorFree && o.r < 2) {
    std::fprintf(stderr, "verify padding: --scheme minor-free requires --r >= 2\n");
    return 2;
  }
  json meta;
  Graph g = load_instance(o.inst, o.seed, true, &meta);
  double delta = resolve_delta(g, o.delta, o.net_lo, o.net_hi);
  std::vector<double> gammas = o.gammas;
  if (gammas.empty()) gammas = {1.0 / 64, 1.0 / 32, 1.0 / 16};
  Rng rng(o.seed);
  SchemeConfig cfg = scheme_config(g, o, delta);
  PaddingReport rep = estimate_padding(g, cfg, gammas, o.trials, o.threads, rng);
  std::printf("padding: scheme=%s n=%d delta=%g lambda=%g tau=%d trials=%lld "
              "vertices=%d floor=%s\n",
              scheme_name(rep.scheme), g.num_vertices(), rep.delta, rep.lambda,
              rep.tau, static_cast<long long>(rep.trials), rep.sampled_vertices,
              rep.floor_kind.c_str());
  for (const PaddingRow& row : rep.rows) {
    std::printf("  gamma=%-8g freq=%.4f floor=%.4f wilson=[%.4f,%.4f] %s\n",
                row.gamma, row.frequency, row.floor, row.wilson.lo,
                row.wilson.hi, row.pass ? "pass" : "FAIL");
  }
  if (rep.scheme == SchemeKind::MinorFree)
    std::printf("  fitted c = %.3f (floor 1 - c*r*gamma)\n", rep.fitted_c);
  return rep.ok ? 0 : 1;
}

int run_verify_separating(const VerifyOpts& o) {
  json meta;
  Graph g = load_instance(o.inst, o.seed, true, &meta);
  double delta = resolve_delta(g, o.delta, o.net_lo, o.net_hi);
  Rng rng(o.seed);
  SchemeConfig cfg = scheme_config(g, o, delta);
  CutReport rep = estimate_separating(g, cfg, o.trials, o.threads, rng);
  std::size_t failed = 0;
  double worst = 0.0;
  const EdgeCutRow* worst_row = nullptr;
  for (const EdgeCutRow& row : rep.rows) {
    if (!row.pass) ++failed;
    double excess = row.frequency - row.bound;
    if (worst_row == nullptr || excess > worst) {
      worst = excess;
      worst_row = &row;
    }
  }
  std::printf("separating: n=%d edges=%zu delta=%g beta=%g trials=%lld %s\n",
              g.num_vertices(), rep.rows.size(), rep.delta, rep.beta,
              static_cast<long long>(rep.trials), rep.ok ? "ok" : "FAIL");
  if (worst_row != nullptr) {
    std::printf("  tightest edge (%d,%d) w=%g: freq=%.4f bound=%.4f\n",
                worst_row->u, worst_row->v, worst_row->w, worst_row->frequency,
                worst_row->bound);
  }
  if (failed > 0)
    std::fprintf(stderr, "separating: %zu edges above bound + 3se\n", failed);
  return rep.ok ? 0 : 1;
}

int run_verify_partition(const VerifyOpts& o) {
  if (o.graph_file.empty() || o.partition_file.empty()) {
    std::fprintf(stderr, "verify partition: --graph and --partition required\n");
    return 2;
  }
  Graph g = read_graph(o.graph_file);
  Partition p = read_partition(o.partition_file);
  double bound = o.bound;
  if (bound <= 0) bound = p.engine == "minor-free" ? p.delta : 4 * p.delta;
  StructuralReport rep = check_partition(g, p, bound);
  std::printf("partition: n=%d clusters=%zu max_diam=%g bound=%g %s\n",
              g.num_vertices(), p.clusters.size(), rep.max_strong_diameter,
              bound, rep.ok ? "ok" : "FAIL");
  if (!rep.ok) std::fprintf(stderr, "failure: %s\n", rep.detail.c_str());
  return rep.ok ? 0 : 1;
}

int run_verify_cover(const VerifyOpts& o) {
  if (o.graph_file.empty() || o.cover_file.empty()) {
    std::fprintf(stderr, "verify cover: --graph and --cover required\n");
    return 2;
  }
  Graph g = read_graph(o.graph_file);
  Cover c = read_cover(o.cover_file);
  int s = o.overlap > 0 ? o.overlap : c.m;
  CoverCheckReport rep = check_cover(g, c, c.beta, s);
  std::printf("cover: n=%d clusters=%zu max_diam=%g bound=%g overlap=[%d,%d] "
              "padding=%g %s\n",
              g.num_vertices(), c.clusters.size(), rep.max_strong_diameter,
              rep.diameter_bound, rep.min_overlap, rep.max_overlap,
              c.padding_radius, rep.ok ? "ok" : "FAIL");
  if (!rep.ok) std::fprintf(stderr, "failure: %s\n", rep.detail.c_str());
  return rep.ok ? 0 : 1;
}

struct BenchOpts {
  std::string scheme = "doubling";
  std::int64_t trials = 200;
  int threads = 1;
  std::uint64_t seed = 0;
  int r = 5;
};

// Fixed corpus, CSV on stdout: one row per (instance, gamma).
int run_bench(const BenchOpts& o) {
  struct Instance {
    const char* label;
    FamilySpec spec;
  };
  std::vector<Instance> corpus;
  {
    FamilySpec s;
    s.family = Family::Path; s.n = 1000;
    corpus.push_back({"path", s});
    s = FamilySpec{};
    s.family = Family::Cycle; s.n = 500;
    corpus.push_back({"cycle", s});
    s = FamilySpec{};
    s.family = Family::Tree; s.n = 1000;
    corpus.push_back({"tree", s});
    s = FamilySpec{};
    s.family = Family::Grid; s.rows = 32; s.cols = 32;
    corpus.push_back({"grid", s});
    s = FamilySpec{};
    s.family = Family::RandomGeometric; s.n = 1000; s.radius = 0.08;
    corpus.push_back({"geometric", s});
  }
  SchemeKind kind = scheme_from_name(o.scheme);
  std::vector<double> gammas{1.0 / 64, 1.0 / 32, 1.0 / 16};
  double limit = kind == SchemeKind::Cones ? 1.0 / 32
               : kind == SchemeKind::MinorFree ? 1.0 / (8.0 * o.r)
                                               : 1.0 / 16;
  std::printf("family,n,delta,scheme,gamma,frequency,floor,runtime_ms\n");
  for (const Instance& inst : corpus) {
    FamilySpec spec = inst.spec;
    spec.seed = o.seed;
    Rng rng(o.seed);
    Rng gen = rng.fork("generate");
    Graph g = generate(spec, gen);
    double delta = delta_for_net_size(g, 30, 100);
    SchemeConfig cfg;
    cfg.kind = kind;
    cfg.delta = delta;
    cfg.r = o.r;
    if (kind == SchemeKind::ExplicitCenters) cfg.centers = greedy_net(g, delta);
    std::vector<double> use;
    for (double gamma : gammas)
      if (gamma <= limit) use.push_back(gamma);
    auto t0 = std::chrono::steady_clock::now();
    Rng vr(o.seed);
    PaddingReport rep = estimate_padding(g, cfg, use, o.trials, o.threads, vr);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count() /
                double(use.size() ? use.size() : 1);
    for (const PaddingRow& row : rep.rows) {
      std::printf("%s,%d,%.6g,%s,%.6g,%.6f,%.6f,%.1f\n", inst.label,
                  g.num_vertices(), delta, scheme_name(kind), row.gamma,
                  row.frequency, row.floor, ms);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"padded decompositions and sparse covers of weighted graphs"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a graph from a family");
  InstanceOpts gen_inst;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "graph.json", gen_format = "json";
  bool gen_hex = false;
  add_instance_flags(gen, &gen_inst);
  gen->add_option("--seed", gen_seed, "rng seed")->capture_default_str();
  gen->add_option("--out", gen_out, "output path")->capture_default_str();
  gen->add_option("--format", gen_format, "json|edgelist|dot")
      ->capture_default_str();
  gen->add_flag("--hexfloat", gen_hex, "hexfloat weights in edge-list output");

  // decompose
  auto* dec = app.add_subcommand("decompose", "partition a graph");
  DecomposeOpts dopt;
  add_instance_flags(dec, &dopt.inst);
  dec->add_option("--scheme", dopt.scheme, "doubling|cones|minor-free|centers")
      ->capture_default_str();
  dec->add_option("--delta", dopt.delta, "scale (0: pick via net size)");
  dec->add_option("--net-lo", dopt.net_lo, "target net size lower bound")
      ->capture_default_str();
  dec->add_option("--net-hi", dopt.net_hi, "target net size upper bound")
      ->capture_default_str();
  dec->add_option("--r", dopt.r, "excluded minor order (minor-free)");
  dec->add_option("--lambda", dopt.lambda, "exponential rate (0: default)");
  dec->add_option("--centers", dopt.centers_file, "centers JSON (centers scheme)");
  dec->add_option("--seed", dopt.seed, "rng seed")->capture_default_str();
  dec->add_option("--out", dopt.out, "partition JSON output");
  dec->add_option("--trace-out", dopt.trace_out, "radius draw trace output");
  dec->add_option("--dot-out", dopt.dot_out, "DOT rendering of the partition");

  // cover
  auto* cov = app.add_subcommand("cover", "build a sparse cover");
  CoverOpts copt;
  add_instance_flags(cov, &copt.inst);
  cov->add_option("--delta", copt.delta, "scale (0: pick via net size)");
  cov->add_option("--net-lo", copt.net_lo, "target net size lower bound")
      ->capture_default_str();
  cov->add_option("--net-hi", copt.net_hi, "target net size upper bound")
      ->capture_default_str();
  cov->add_option("--t", copt.t, "padding parameter, beta = 64*t")
      ->capture_default_str();
  cov->add_option("--m", copt.m, "partition count (0: auto-double)");
  cov->add_option("--budget", copt.budget, "resampling budget (0: 10*|Y|)");
  cov->add_option("--seed", copt.seed, "rng seed")->capture_default_str();
  cov->add_option("--out", copt.out, "cover JSON output");

  // verify
  auto* ver = app.add_subcommand("verify", "check guarantees");
  ver->require_subcommand(1);
  VerifyOpts vopt;
  auto add_mc_flags = [&](CLI::App* sub) {
    add_instance_flags(sub, &vopt.inst);
    sub->add_option("--scheme", vopt.scheme, "doubling|cones|minor-free|centers")
        ->capture_default_str();
    sub->add_option("--delta", vopt.delta, "scale (0: pick via net size)");
    sub->add_option("--net-lo", vopt.net_lo, "target net size lower bound")
        ->capture_default_str();
    sub->add_option("--net-hi", vopt.net_hi, "target net size upper bound")
        ->capture_default_str();
    sub->add_option("--r", vopt.r, "excluded minor order (minor-free)");
    sub->add_option("--lambda", vopt.lambda, "exponential rate (0: default)");
    sub->add_option("--trials", vopt.trials, "Monte-Carlo trials")
        ->capture_default_str();
    sub->add_option("--threads", vopt.threads, "worker threads")
        ->capture_default_str();
    sub->add_option("--seed", vopt.seed, "rng seed")->capture_default_str();
  };
  auto* vpad = ver->add_subcommand("padding", "padding frequency vs floor");
  add_mc_flags(vpad);
  vpad->add_option("--gamma", vopt.gammas, "padding radius fractions");
  auto* vsep = ver->add_subcommand("separating", "edge cut frequency vs bound");
  add_mc_flags(vsep);
  auto* vpart = ver->add_subcommand("partition", "structural partition check");
  vpart->add_option("--graph", vopt.graph_file, "graph file")->required();
  vpart->add_option("--partition", vopt.partition_file, "partition JSON")
      ->required();
  vpart->add_option("--bound", vopt.bound, "diameter bound (0: from engine)");
  auto* vcov = ver->add_subcommand("cover", "cover guarantees check");
  vcov->add_option("--graph", vopt.graph_file, "graph file")->required();
  vcov->add_option("--cover", vopt.cover_file, "cover JSON")->required();
  vcov->add_option("--s", vopt.overlap, "overlap bound (0: the cover's m)");

  // bench
  auto* ben = app.add_subcommand("bench", "padding sweep over a fixed corpus");
  BenchOpts bopt;
  ben->add_option("--scheme", bopt.scheme, "doubling|cones|minor-free|centers")
      ->capture_default_str();
  ben->add_option("--trials", bopt.trials, "Monte-Carlo trials")
      ->capture_default_str();
  ben->add_option("--threads", bopt.threads, "worker threads")
      ->capture_default_str();
  ben->add_option("--r", bopt.r, "minor order for minor-free rows")
      ->capture_default_str();
  ben->add_option("--seed", bopt.seed, "rng seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_generate(gen_inst, gen_seed, gen_out,
                                           gen_format, gen_hex);
    if (dec->parsed()) return run_decompose(dopt);
    if (cov->parsed()) return run_cover(copt);
    if (ver->parsed()) {
      if (vpad->parsed()) return run_verify_padding(vopt);
      if (vsep->parsed()) return run_verify_separating(vopt);
      if (vpart->parsed()) return run_verify_partition(vopt);
      if (vcov->parsed()) return run_verify_cover(vopt);
    }
    if (ben->parsed()) return run_bench(bopt);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
