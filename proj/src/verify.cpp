#include "padded/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <functional>

namespace padded {

namespace {

// Runs fn(0..count-1) on `threads` workers. Each index must write only its
// own slot of any shared output so results are thread-count independent.
void parallel_for(std::int64_t count, int threads, const std::function<void(std::int64_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::int64_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int k = std::min<std::int64_t>(threads, count);
  pool.reserve(std::size_t(k));
  for (int i = 0; i < k; ++i) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
}

double gate_se(double floor, std::int64_t trials) {
  return 3.0 * std::sqrt(std::max(floor * (1.0 - floor), 0.0) / double(trials));
}

}  // namespace

WilsonInterval wilson95(std::int64_t successes, std::int64_t n) {
  if (n <= 0 || successes < 0 || successes > n)
    throw std::invalid_argument("wilson95: need 0 <= successes <= n, n > 0");
  const double z = 1.959963984540054;
  double nn = double(n), p = double(successes) / nn, z2 = z * z;
  double denom = 1.0 + z2 / nn;
  double center = (p + z2 / (2.0 * nn)) / denom;
  double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  // At p = 0 or 1 the outer endpoint is analytically exact; don't let
  // floating-point rounding pull it inward.
  double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  double hi = successes == n ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

StructuralReport check_partition(const Graph& g, const Partition& p, double bound) {
  StructuralReport rep;
  rep.bound = bound;

  std::size_t n = std::size_t(g.num_vertices());
  rep.disjoint_complete = true;
  if (p.assignment.size() != n) {
    rep.disjoint_complete = false;
    rep.detail = "assignment length mismatch";
  } else {
    std::vector<std::int32_t> seen(n, -1);
    for (std::size_t c = 0; c < p.clusters.size() && rep.disjoint_complete; ++c) {
      p.clusters[c].members.for_each([&](Vertex v) {
        if (!rep.disjoint_complete) return;
        if (seen[std::size_t(v)] >= 0) {
          rep.disjoint_complete = false;
          rep.detail = "vertex " + std::to_string(v) + " in clusters " +
                       std::to_string(seen[std::size_t(v)]) + " and " + std::to_string(c);
          return;
        }
        seen[std::size_t(v)] = std::int32_t(c);
      });
      if (p.clusters[c].members.empty()) {
        rep.disjoint_complete = false;
        rep.detail = "cluster " + std::to_string(c) + " is empty";
      }
    }
    for (Vertex v = 0; v < g.num_vertices() && rep.disjoint_complete; ++v) {
      if (seen[std::size_t(v)] < 0) {
        rep.disjoint_complete = false;
        rep.detail = "vertex " + std::to_string(v) + " is unassigned";
      } else if (p.assignment[std::size_t(v)] != seen[std::size_t(v)]) {
        rep.disjoint_complete = false;
        rep.detail = "assignment disagrees with members at vertex " + std::to_string(v);
      }
    }
  }

  rep.connected = true;
  rep.diameter_ok = true;
  for (std::size_t c = 0; c < p.clusters.size(); ++c) {
    const VertexSet& members = p.clusters[c].members;
    if (members.empty()) continue;
    if (connected_components(g, &members).size() != 1) {
      if (rep.connected) rep.detail = "cluster " + std::to_string(c) + " is disconnected";
      rep.connected = false;
      rep.cluster_diameters.push_back(kInf);
      rep.max_strong_diameter = kInf;
      rep.diameter_ok = false;
      continue;
    }
    double d = strong_diameter(g, members);
    rep.cluster_diameters.push_back(d);
    rep.max_strong_diameter = std::max(rep.max_strong_diameter, d);
    if (!(d <= bound)) {
      if (rep.diameter_ok)
        rep.detail = "cluster " + std::to_string(c) + " has strong diameter " +
                     std::to_string(d) + " > bound";
      rep.diameter_ok = false;
    }
  }

  rep.ok = rep.disjoint_complete && rep.connected && rep.diameter_ok;
  if (rep.ok) rep.detail.clear();
  return rep;
}

namespace {

struct SchemeRunner {
  const Graph& g;
  SchemeConfig cfg;
  CenterSet net;       // doubling / cones / explicit-centers
  double lambda = 0.0;
  double beta = 0.0;
  int tau = 0;
  double gamma_limit = 0.0;

  SchemeRunner(const Graph& gg, const SchemeConfig& c) : g(gg), cfg(c) {
    if (!(cfg.delta > 0) || !std::isfinite(cfg.delta))
      throw std::invalid_argument("scheme: delta must be positive and finite");
    switch (cfg.kind) {
      case SchemeKind::Doubling:
      case SchemeKind::Cones:
        net = greedy_net(g, cfg.delta);
        break;
      case SchemeKind::ExplicitCenters:
        if (!cfg.centers) throw std::invalid_argument("scheme: explicit centers missing");
        net = *cfg.centers;
        break;
      case SchemeKind::MinorFree:
        if (cfg.r < 2) throw std::invalid_argument("scheme: minor-free needs r >= 2");
        break;
    }
    if (cfg.kind == SchemeKind::MinorFree) {
      // The certified range is Omega(1/r) with an unpublished constant; the
      // envelope floor handles its own positivity, so accept up to 1/(4r).
      gamma_limit = 1.0 / (4.0 * cfg.r);
    } else {
      lambda = cfg.lambda ? *cfg.lambda : default_lambda(net.tau);
      tau = net.tau;
      beta = 4.0 * lambda;
      gamma_limit = cfg.kind == SchemeKind::Cones ? 1.0 / 32.0 : 1.0 / 16.0;
    }
  }

  Partition run(Rng trial_rng) const {
    switch (cfg.kind) {
      case SchemeKind::Doubling:
      case SchemeKind::ExplicitCenters:
        return padded_decompose(g, net, lambda, trial_rng).first;
      case SchemeKind::Cones:
        return cone_partition(g, net, lambda, trial_rng).first;
      case SchemeKind::MinorFree:
        return decompose_minor_free(g, cfg.delta, cfg.r, trial_rng).partition;
    }
    throw std::logic_error("scheme: unknown kind");
  }
};

std::vector<Vertex> sampled_vertices(const Graph& g, Rng& rng) {
  Vertex n = g.num_vertices();
  if (n <= 2000) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) all[std::size_t(v)] = v;
    return all;
  }
  // Fixed 500-vertex sample: partial Fisher-Yates on a dedicated substream.
  Rng sub = rng.fork("vertex-sample");
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) all[std::size_t(v)] = v;
  for (std::size_t i = 0; i < 500; ++i) {
    std::size_t j = i + std::size_t(sub.next_below(std::uint64_t(n) - i));
    std::swap(all[i], all[j]);
  }
  all.resize(500);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

PaddingReport estimate_padding(const Graph& g, const SchemeConfig& cfg,
                               std::span<const double> gammas,
                               std::int64_t trials, int threads, Rng& rng) {
  if (trials < 1) throw std::invalid_argument("estimate_padding: trials must be >= 1");
  if (threads < 1) throw std::invalid_argument("estimate_padding: threads must be >= 1");
  SchemeRunner runner(g, cfg);
  for (double gamma : gammas) {
    if (!(gamma >= 0) || !std::isfinite(gamma))
      throw std::invalid_argument("estimate_padding: gamma must be finite and >= 0");
    if (gamma > runner.gamma_limit)
      throw std::invalid_argument(
          "estimate_padding: gamma exceeds the scheme's certified range");
  }

  PaddingReport rep;
  rep.scheme = cfg.kind;
  rep.delta = cfg.delta;
  rep.lambda = runner.lambda;
  rep.beta = runner.beta;
  rep.tau = runner.tau;
  rep.r = cfg.r;
  rep.trials = trials;
  rep.threads = threads;
  rep.seed = rng.stream();
  rep.floor_kind =
      cfg.kind == SchemeKind::MinorFree ? "1-c*r*gamma" : "exp(-beta*gamma)";

  std::vector<Vertex> sample = sampled_vertices(g, rng);
  rep.sampled_vertices = Vertex(sample.size());

  // Balls are trial-independent; collect them once per gamma.
  std::vector<std::vector<std::vector<Vertex>>> balls(gammas.size());
  for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
    balls[gi].resize(sample.size());
    for (std::size_t si = 0; si < sample.size(); ++si)
      balls[gi][si] = ball(g, sample[si], gammas[gi] * cfg.delta).to_vector();
  }

  std::vector<std::vector<std::int64_t>> per_trial(
      std::size_t(trials), std::vector<std::int64_t>(gammas.size(), 0));
  parallel_for(trials, threads, [&](std::int64_t ti) {
    Partition p = runner.run(rng.fork("trial", std::uint64_t(ti)));
    for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
      std::int64_t hits = 0;
      for (std::size_t si = 0; si < sample.size(); ++si) {
        std::int32_t home = p.assignment[std::size_t(sample[si])];
        bool inside = true;
        for (Vertex u : balls[gi][si])
          if (p.assignment[std::size_t(u)] != home) {
            inside = false;
            break;
          }
        hits += inside;
      }
      per_trial[std::size_t(ti)][gi] = hits;
    }
  });

  for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
    PaddingRow row;
    row.gamma = gammas[gi];
    for (std::int64_t ti = 0; ti < trials; ++ti) row.successes += per_trial[std::size_t(ti)][gi];
    row.checks = trials * std::int64_t(sample.size());
    row.frequency = double(row.successes) / double(row.checks);
    row.wilson = wilson95(row.successes, row.checks);
    if (cfg.kind == SchemeKind::MinorFree) {
      row.floor = std::max(0.0, 1.0 - 16.0 * cfg.r * row.gamma);
      if (row.gamma > 0)
        rep.fitted_c = std::max(rep.fitted_c,
                                (1.0 - row.frequency) / (cfg.r * row.gamma));
    } else {
      row.floor = std::exp(-rep.beta * row.gamma);
    }
    row.pass = row.frequency >= row.floor - gate_se(row.floor, trials);
    rep.rows.push_back(row);
  }
  rep.ok = std::all_of(rep.rows.begin(), rep.rows.end(),
                       [](const PaddingRow& r) { return r.pass; });
  return rep;
}

CutReport estimate_separating(const Graph& g, const SchemeConfig& cfg,
                              std::int64_t trials, int threads, Rng& rng) {
  if (trials < 1) throw std::invalid_argument("estimate_separating: trials must be >= 1");
  if (threads < 1) throw std::invalid_argument("estimate_separating: threads must be >= 1");
  if (cfg.kind == SchemeKind::MinorFree)
    throw std::invalid_argument(
        "estimate_separating: separating bound is certified for the "
        "4*delta-bounded schemes only");
  SchemeRunner runner(g, cfg);
  // delta (padding range) of the scheme is 1/16 >= 1/beta since beta >= 4.
  double beta = as_separating_bound(runner.beta, runner.gamma_limit);

  const auto& edges = g.edges();
  std::vector<std::vector<std::int32_t>> per_trial(
      std::size_t(trials), std::vector<std::int32_t>(edges.size(), 0));
  parallel_for(trials, threads, [&](std::int64_t ti) {
    Partition p = runner.run(rng.fork("trial", std::uint64_t(ti)));
    for (std::size_t e = 0; e < edges.size(); ++e)
      per_trial[std::size_t(ti)][e] =
          p.assignment[std::size_t(edges[e].u)] != p.assignment[std::size_t(edges[e].v)];
  });

  CutReport rep;
  rep.delta = cfg.delta;
  rep.beta = beta;
  rep.trials = trials;
  rep.threads = threads;
  rep.seed = rng.stream();
  rep.ok = true;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    EdgeCutRow row;
    row.u = edges[e].u;
    row.v = edges[e].v;
    row.w = edges[e].w;
    for (std::int64_t ti = 0; ti < trials; ++ti) row.cuts += per_trial[std::size_t(ti)][e];
    row.frequency = double(row.cuts) / double(trials);
    row.bound = std::min(1.0, beta * row.w / cfg.delta);
    double gate = row.bound + gate_se(row.bound, trials);
    row.pass = row.frequency <= gate;
    rep.max_excess = std::max(rep.max_excess, row.frequency - gate);
    rep.ok = rep.ok && row.pass;
    rep.rows.push_back(row);
  }
  return rep;
}

CoverCheckReport check_cover(const Graph& g, const Cover& c, double beta, int s) {
  if (!(beta > 0) || !std::isfinite(beta))
    throw std::invalid_argument("check_cover: beta must be positive and finite");
  if (s < 1) throw std::invalid_argument("check_cover: s must be >= 1");

  CoverCheckReport rep;
  rep.diameter_bound = 4.0 * c.delta;
  rep.diameter_ok = true;
  for (std::size_t i = 0; i < c.clusters.size(); ++i) {
    double d = strong_diameter(g, c.clusters[i].members);
    rep.max_strong_diameter = std::max(rep.max_strong_diameter, d);
    if (!(d <= rep.diameter_bound)) {
      if (rep.diameter_ok)
        rep.detail = "cluster " + std::to_string(i) + " has strong diameter " +
                     std::to_string(d) + " > 4*delta";
      rep.diameter_ok = false;
    }
  }

  std::vector<int> overlap(std::size_t(g.num_vertices()), 0);
  std::vector<std::vector<std::int32_t>> clusters_of(std::size_t(g.num_vertices()));
  for (std::size_t i = 0; i < c.clusters.size(); ++i)
    c.clusters[i].members.for_each([&](Vertex v) {
      ++overlap[std::size_t(v)];
      clusters_of[std::size_t(v)].push_back(std::int32_t(i));
    });
  rep.min_overlap = g.num_vertices() ? *std::min_element(overlap.begin(), overlap.end()) : 0;
  rep.max_overlap = g.num_vertices() ? *std::max_element(overlap.begin(), overlap.end()) : 0;
  rep.covering_ok = rep.min_overlap >= 1;
  rep.overlap_ok = rep.max_overlap <= s;
  if (!rep.covering_ok && rep.detail.empty()) {
    auto it = std::find(overlap.begin(), overlap.end(), 0);
    rep.detail = "vertex " + std::to_string(it - overlap.begin()) +
                 " is in no cluster";
  }
  if (!rep.overlap_ok && rep.detail.empty())
    rep.detail = "max overlap " + std::to_string(rep.max_overlap) + " > s";

  rep.padding_ok = true;
  double radius = c.delta / beta;
  for (Vertex v = 0; v < g.num_vertices() && rep.padding_ok; ++v) {
    std::vector<Vertex> bv = ball(g, v, radius).to_vector();
    bool padded = false;
    for (std::int32_t ci : clusters_of[std::size_t(v)]) {
      const VertexSet& members = c.clusters[std::size_t(ci)].members;
      bool inside = true;
      for (Vertex u : bv)
        if (!members.contains(u)) {
          inside = false;
          break;
        }
      if (inside) {
        padded = true;
        break;
      }
    }
    if (!padded) {
      rep.padding_ok = false;
      rep.first_unpadded = v;
      if (rep.detail.empty())
        rep.detail = "ball of radius delta/beta around vertex " + std::to_string(v) +
                     " is in no single cluster";
    }
  }

  rep.ok = rep.diameter_ok && rep.covering_ok && rep.overlap_ok && rep.padding_ok;
  if (rep.ok) rep.detail.clear();
  return rep;
}

}  // namespace padded
