#include "padded/sparse_cover.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace padded {

namespace {

struct CandidateCenter {
  std::int32_t center;  // index into the center list
  double dist;          // d(center, y), folded center -> y
};

// Gap between the two best keys (delta - delta_x) + d(x, y) over the centers
// within 3*delta of y. A runner-up farther than that has key > 2*delta while
// the winner's key is <= 2*delta, so the gap clears any threshold <= delta
// and restricting to these candidates keeps the predicate exact.
double event_gap(const std::vector<CandidateCenter>& cands,
                 const double* times_row, double delta) {
  double d1 = kInf, d2 = kInf;
  std::int32_t o1 = -1;
  for (const CandidateCenter& c : cands) {
    double key = (delta - times_row[c.center]) + c.dist;
    if (key < d1 || (key == d1 && c.center < o1) || o1 < 0) {
      d2 = d1;
      d1 = key;
      o1 = c.center;
    } else if (key < d2) {
      d2 = key;
    }
  }
  return d2 - d1;  // inf - finite = inf; two candidates never both inf
}

}  // namespace

bool gap_padded(const Graph& g, const CenterSet& n, const StartingTimes& times,
                Vertex v, double threshold) {
  if (!(threshold >= 0) || !std::isfinite(threshold))
    throw std::invalid_argument("gap_padded: threshold must be finite and >= 0");
  PaddingWitness w = padding_witness(g, n, times, v);
  return w.gap >= threshold;
}

std::pair<std::optional<Cover>, CoverReport> sparse_cover(
    const Graph& g, double delta, int t, std::optional<int> m,
    std::optional<std::int64_t> budget, Rng& rng) {
  if (!(delta > 0) || !std::isfinite(delta))
    throw std::invalid_argument("sparse_cover: delta must be positive and finite");
  if (t < 1) throw std::invalid_argument("sparse_cover: t must be >= 1");
  if (m && *m < 1) throw std::invalid_argument("sparse_cover: m must be >= 1");
  if (budget && *budget < 0) throw std::invalid_argument("sparse_cover: negative budget");

  double beta = kCoverAlpha * t;
  double threshold = 4.0 * delta / beta;

  CenterSet centers = greedy_net(g, delta);
  if (!(centers.covering_radius <= delta))
    throw PreconditionError("sparse_cover: net does not cover the graph");
  double lambda = default_lambda(centers.tau);
  TexpParams texp{lambda, 0.0, 1.0};
  std::size_t nc = centers.centers.size();

  std::vector<Vertex> events = greedy_net(g, delta / beta).centers;
  std::size_t ne = events.size();

  CoverReport report;
  report.beta = beta;
  report.lambda = lambda;
  report.tau = centers.tau;
  report.center_count = Vertex(nc);
  report.event_count = Vertex(ne);
  report.seed = rng.stream();

  // Candidate centers per event: exactly those within 3*delta.
  std::vector<std::int32_t> event_index(std::size_t(g.num_vertices()), -1);
  for (std::size_t y = 0; y < ne; ++y) event_index[std::size_t(events[y])] = std::int32_t(y);
  std::vector<std::vector<CandidateCenter>> cands(ne);
  std::vector<std::vector<std::int32_t>> events_of_center(nc);
  for (std::size_t k = 0; k < nc; ++k) {
    Source src{centers.centers[k], 0.0};
    DistanceField f = shortest_paths(g, {&src, 1}, nullptr, 3.0 * delta);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::int32_t y = event_index[std::size_t(v)];
      if (y < 0 || f.owner[std::size_t(v)] < 0 || f.dist[std::size_t(v)] > 3.0 * delta)
        continue;
      cands[std::size_t(y)].push_back({std::int32_t(k), f.dist[std::size_t(v)]});
      events_of_center[k].push_back(y);
    }
  }

  // Dependency degree: events within 6*delta of each other.
  for (std::size_t y = 0; y < ne; ++y) {
    Source src{events[y], 0.0};
    DistanceField f = shortest_paths(g, {&src, 1}, nullptr, 6.0 * delta);
    int deg = 0;
    for (std::size_t z = 0; z < ne; ++z)
      if (z != y && f.owner[std::size_t(events[z])] >= 0 &&
          f.dist[std::size_t(events[z])] <= 6.0 * delta)
        ++deg;
    report.dependency_degree = std::max(report.dependency_degree, deg);
  }

  int m0 = m ? *m : int(std::ceil(std::log2(std::max<double>(2.0, double(ne))))) + 4;
  int max_attempts = m ? 1 : 8;

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    int mm = m ? *m : m0 << attempt;
    report.attempts = attempt + 1;
    report.m = mm;
    std::int64_t cap = budget ? *budget : std::int64_t(10) * std::int64_t(ne);
    report.budget = cap;

    // Variable (i, k) redrawn count `c` maps to substream ("cover", attempt,
    // i*nc + k, c); redrawing one event never disturbs other variables.
    std::vector<std::int64_t> redraws(std::size_t(mm) * nc, 0);
    std::vector<double> times(std::size_t(mm) * nc);
    auto draw = [&](std::size_t i, std::size_t k) {
      std::size_t idx = i * nc + k;
      Rng sub = rng.fork("cover", std::uint64_t(attempt), std::uint64_t(idx),
                         std::uint64_t(redraws[idx]));
      times[idx] = texp_sample_from_u(texp, sub.next_double()) * delta;
    };
    for (std::size_t i = 0; i < std::size_t(mm); ++i)
      for (std::size_t k = 0; k < nc; ++k) draw(i, k);

    auto event_good = [&](std::size_t y) {
      for (std::size_t i = 0; i < std::size_t(mm); ++i)
        if (event_gap(cands[y], &times[i * nc], delta) >= threshold) return true;
      return false;
    };

    std::set<std::int32_t> bad;
    for (std::size_t y = 0; y < ne; ++y)
      if (!event_good(y)) bad.insert(std::int32_t(y));

    std::int64_t resamples = 0;
    while (!bad.empty() && resamples < cap) {
      std::int32_t y = *bad.begin();
      ++resamples;
      for (const CandidateCenter& c : cands[std::size_t(y)]) {
        std::size_t k = std::size_t(c.center);
        for (std::size_t i = 0; i < std::size_t(mm); ++i) {
          ++redraws[i * nc + k];
          draw(i, k);
        }
      }
      // Only events sharing a redrawn variable can change truth value.
      std::set<std::int32_t> affected;
      for (const CandidateCenter& c : cands[std::size_t(y)])
        for (std::int32_t z : events_of_center[std::size_t(c.center)])
          affected.insert(z);
      for (std::int32_t z : affected) {
        if (event_good(std::size_t(z)))
          bad.erase(z);
        else
          bad.insert(z);
      }
    }
    report.resamples = resamples;

    if (!bad.empty()) {
      report.surviving_bad_events.clear();
      for (std::int32_t y : bad)
        report.surviving_bad_events.push_back(events[std::size_t(y)]);
      continue;
    }

    report.success = true;
    report.surviving_bad_events.clear();
    Cover cover;
    cover.delta = delta;
    cover.beta = beta;
    cover.t = t;
    cover.m = mm;
    cover.padding_radius = delta / beta;
    cover.seed = rng.stream();
    for (std::size_t i = 0; i < std::size_t(mm); ++i) {
      StartingTimes st;
      st.delta_x.assign(times.begin() + long(i * nc), times.begin() + long((i + 1) * nc));
      Partition p = cluster_starting_times(g, centers, st);
      for (Cluster& cl : p.clusters)
        cover.clusters.push_back(
            {std::int32_t(i), cl.center, cl.radius, std::move(cl.members)});
    }
    return {std::move(cover), std::move(report)};
  }
  return {std::nullopt, std::move(report)};
}

}  // namespace padded
