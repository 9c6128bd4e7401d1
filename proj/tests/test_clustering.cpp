#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "padded/clustering.hpp"
#include "padded/nets.hpp"

using namespace padded;
using testutil::path;

namespace {

CenterSet centers_at(const Graph& g, std::vector<Vertex> centers, double delta) {
  return make_center_set(g, std::move(centers), delta);
}

}  // namespace

TEST_CASE("starting times: worked 3-path example") {
  // Unit path a-b-c, delta=1, delta_a=0.6, delta_c=0.5: b joins a because
  // delta_a - d(a,b) = -0.4 beats delta_c - d(c,b) = -0.5.
  Graph g = path(3);
  CenterSet n = centers_at(g, {0, 2}, 1.0);
  StartingTimes t{{0.6, 0.5}};
  Partition p = cluster_starting_times(g, n, t);
  REQUIRE(p.clusters.size() == 2);
  CHECK(p.assignment == std::vector<std::int32_t>{0, 0, 1});
  CHECK(p.clusters[0].center == 0);
  CHECK(p.clusters[0].members.to_vector() == std::vector<Vertex>{0, 1});
  CHECK(p.clusters[1].members.to_vector() == std::vector<Vertex>{2});
}

TEST_CASE("starting times: single center takes everything") {
  Graph g = path(6);
  CenterSet n = centers_at(g, {3}, 5.0);
  Partition p = cluster_starting_times(g, n, StartingTimes{{2.0}});
  REQUIRE(p.clusters.size() == 1);
  CHECK(p.clusters[0].members.size() == 6);
}

TEST_CASE("starting times: equal keys go to the lower center index") {
  Graph g = path(3);
  CenterSet n = centers_at(g, {0, 2}, 1.0);
  Partition p = cluster_starting_times(g, n, StartingTimes{{0.5, 0.5}});
  CHECK(p.assignment[1] == 0);
}

TEST_CASE("starting times: covering precondition is enforced") {
  Graph g = path(9);
  CenterSet n = centers_at(g, {0}, 2.0);  // covering radius 8 > delta
  CHECK_THROWS_AS(cluster_starting_times(g, n, StartingTimes{{1.0}}),
                  PreconditionError);
}

TEST_CASE("starting times: engine matches brute-force argmax on 200 instances") {
  Rng rng(2024);
  for (int it = 0; it < 200; ++it) {
    Vertex nv = Vertex(20 + rng.next_below(60));
    Graph g = testutil::random_connected(nv, int(rng.next_below(40)), rng);
    double delta = 1.0 + 4.0 * rng.next_double();
    CenterSet n = greedy_net(g, delta);
    std::vector<double> times;
    for (std::size_t i = 0; i < n.centers.size(); ++i)
      times.push_back(delta * rng.next_double());
    Partition p = cluster_starting_times(g, n, StartingTimes{times});
    auto brute = oracle::brute_assign(g, n.centers, times, delta);
    for (Vertex v = 0; v < nv; ++v) {
      REQUIRE(p.assignment[std::size_t(v)] >= 0);
      Vertex got = p.clusters[std::size_t(p.assignment[std::size_t(v)])].center;
      REQUIRE(brute[std::size_t(v)] >= 0);
      Vertex want = n.centers[std::size_t(brute[std::size_t(v)])];
      CHECK(got == want);
    }
  }
}

TEST_CASE("starting times: strong diameter <= 4*delta, exact, many seeds") {
  Rng rng(515);
  for (int it = 0; it < 30; ++it) {
    Graph g = testutil::random_connected(80, 50, rng);
    double delta = 0.8 + 3.0 * rng.next_double();
    CenterSet n = greedy_net(g, delta);
    Rng run = rng.fork("run", std::uint64_t(it));
    auto [p, trace] = padded_decompose(g, n, std::nullopt, run);
    for (const Cluster& c : p.clusters)
      CHECK(strong_diameter(g, c.members) <= 4.0 * delta);
  }
}

TEST_CASE("padded_decompose: trace replays to the identical partition") {
  Rng rng(616);
  Graph g = testutil::random_connected(70, 30, rng);
  CenterSet n = greedy_net(g, 2.0);
  Rng run = rng.fork("run");
  auto [p, trace] = padded_decompose(g, n, std::nullopt, run);
  CHECK(trace.engine == "starting-times");
  CHECK(trace.draws.size() == n.centers.size());
  StartingTimes replay = starting_times_from_trace(n, trace);
  Partition q = cluster_starting_times(g, n, replay);
  REQUIRE(p.clusters.size() == q.clusters.size());
  for (std::size_t i = 0; i < p.clusters.size(); ++i) {
    CHECK(p.clusters[i].center == q.clusters[i].center);
    CHECK(p.clusters[i].radius == q.clusters[i].radius);
    CHECK(p.clusters[i].members == q.clusters[i].members);
  }
  CHECK(p.assignment == q.assignment);
  Trace missing = trace;
  missing.draws.pop_back();
  CHECK_THROWS_AS(starting_times_from_trace(n, missing), std::invalid_argument);
}

TEST_CASE("default_lambda: 2 + 2 ln tau with the small-tau floor") {
  CHECK(default_lambda(1) == 4.0);  // ln(max(1, e)) = 1
  CHECK(default_lambda(2) == 4.0);
  CHECK(default_lambda(3) == doctest::Approx(2.0 + 2.0 * std::log(3.0)));
  CHECK(default_lambda(20) == doctest::Approx(2.0 + 2.0 * std::log(20.0)));
}

TEST_CASE("witness: worked example has gap 0.1 and a protected ball") {
  Graph g = path(3);
  CenterSet n = centers_at(g, {0, 2}, 1.0);
  StartingTimes t{{0.6, 0.5}};
  PaddingWitness w = padding_witness(g, n, t, 1);
  CHECK(w.x1 == 0);
  CHECK(w.x2 == 2);
  CHECK(w.gap == doctest::Approx(0.1).epsilon(1e-12));
  // Exact float form: the keys are left folds (1-0.5)+1 and (1-0.6)+1.
  CHECK(w.gap == ((1.0 - 0.5) + 1.0) - ((1.0 - 0.6) + 1.0));
  Partition p = cluster_starting_times(g, n, t);
  VertexSet b = ball(g, 1, w.gap / 2.0 * 0.99);
  const VertexSet& cluster = p.clusters[std::size_t(p.assignment[1])].members;
  b.for_each([&](Vertex u) { CHECK(cluster.contains(u)); });
}

TEST_CASE("witness: single center means infinite gap") {
  Graph g = path(4);
  CenterSet n = centers_at(g, {0}, 4.0);
  PaddingWitness w = padding_witness(g, n, StartingTimes{{1.0}}, 3);
  CHECK(w.x1 == 0);
  CHECK(w.x2 == -1);
  CHECK(w.gap == oracle::kInf);
}

TEST_CASE("witness: equal keys give gap 0") {
  Graph g = path(3);
  CenterSet n = centers_at(g, {0, 2}, 1.0);
  PaddingWitness w = padding_witness(g, n, StartingTimes{{0.5, 0.5}}, 1);
  CHECK(w.gap == 0.0);
}

TEST_CASE("witness: ball strictly inside gap/2 shares the cluster, random") {
  // Claim 3.3 shape: every u with d(v,u) < gap/2 lands in v's cluster.
  Rng rng(7331);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    Graph g = testutil::random_connected(50, 25, rng);
    double delta = 1.0 + 2.0 * rng.next_double();
    CenterSet n = greedy_net(g, delta);
    std::vector<double> times;
    for (std::size_t i = 0; i < n.centers.size(); ++i)
      times.push_back(delta * rng.next_double());
    StartingTimes st{times};
    Partition p = cluster_starting_times(g, n, st);
    auto ap = oracle::all_pairs(g);
    for (int probe = 0; probe < 5; ++probe) {
      Vertex v = Vertex(rng.next_below(50));
      PaddingWitness w = padding_witness(g, n, st, v);
      if (!(w.gap < oracle::kInf) || w.gap <= 0) continue;
      std::int32_t cl = p.assignment[std::size_t(v)];
      for (Vertex u = 0; u < 50; ++u)
        if (ap[std::size_t(v)][std::size_t(u)] < w.gap / 2.0) {
          ++checked;
          CHECK(p.assignment[std::size_t(u)] == cl);
        }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("cones: worked 5-path example") {
  // N = {0,4}, delta=1, R_1 = 0.5: vertex 2 has d(2,0)-d(2,{0,4}) = 2-2 = 0
  // <= 0.5 so it joins the first cone; vertex 3 has 3-1 = 2 > 0.5.
  Graph g = path(5);
  CenterSet n = centers_at(g, {0, 4}, 1.0);
  std::vector<double> radii{0.5, 0.75};
  Partition p = cone_partition_given(g, n, radii);
  REQUIRE(p.clusters.size() == 2);
  CHECK(p.clusters[0].center == 0);
  CHECK(p.clusters[0].members.to_vector() == std::vector<Vertex>{0, 1, 2});
  CHECK(p.clusters[1].members.to_vector() == std::vector<Vertex>{3, 4});
}

TEST_CASE("cones: first cone contains the center's ball") {
  Rng rng(414);
  Graph g = testutil::random_connected(60, 30, rng);
  CenterSet n = greedy_net(g, 2.0);
  std::vector<double> radii(n.centers.size(), 0.5);
  Partition p = cone_partition_given(g, n, radii);
  VertexSet b = ball(g, n.centers[0], 0.5 * 2.0);
  const VertexSet& first = p.clusters[0].members;
  b.for_each([&](Vertex v) { CHECK(first.contains(v)); });
}

TEST_CASE("cones: singleton net takes the whole graph") {
  Graph g = path(7);
  CenterSet n = centers_at(g, {3}, 10.0);
  std::vector<double> radii{0.01};
  Partition p = cone_partition_given(g, n, radii);
  REQUIRE(p.clusters.size() == 1);
  CHECK(p.clusters[0].members.size() == 7);
}

TEST_CASE("cones: strong diameter <= 4*delta and trace replay") {
  Rng rng(5150);
  for (int it = 0; it < 20; ++it) {
    Graph g = testutil::random_connected(70, 40, rng);
    double delta = 1.0 + 2.0 * rng.next_double();
    CenterSet n = greedy_net(g, delta);
    Rng run = rng.fork("run", std::uint64_t(it));
    auto [p, trace] = cone_partition(g, n, std::nullopt, run);
    CHECK(trace.engine == "cones");
    for (const Cluster& c : p.clusters)
      CHECK(strong_diameter(g, c.members) <= 4.0 * delta);
    Partition q = cone_partition_from_trace(g, n, trace);
    REQUIRE(p.clusters.size() == q.clusters.size());
    for (std::size_t i = 0; i < p.clusters.size(); ++i) {
      CHECK(p.clusters[i].center == q.clusters[i].center);
      CHECK(p.clusters[i].members == q.clusters[i].members);
    }
    // Draws are recorded only for centers that actually carved.
    CHECK(trace.draws.size() == p.clusters.size());
  }
}

TEST_CASE("cones: a vertex is carved no later than its nearest-center path") {
  // Round-ordering property: if u lies on a fixed shortest path from v to
  // v's nearest center, the round that claims u cannot precede v's round.
  Rng rng(2718);
  for (int it = 0; it < 15; ++it) {
    Graph g = testutil::random_connected(50, 25, rng);
    double delta = 1.0 + 2.0 * rng.next_double();
    CenterSet n = greedy_net(g, delta);
    Rng run = rng.fork("run", std::uint64_t(it));
    auto [p, trace] = cone_partition(g, n, std::nullopt, run);
    std::vector<Source> net_src;
    for (Vertex c : n.centers) net_src.push_back({c, 0.0});
    DistanceField f = shortest_paths(g, net_src);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::vector<Vertex> pth = f.path_from_source(v);
      std::int32_t kv = p.assignment[std::size_t(v)];
      for (Vertex u : pth)
        CHECK(kv <= p.assignment[std::size_t(u)]);
    }
  }
}

TEST_CASE("cones: carving follows the cone rule exactly") {
  Rng rng(8181);
  for (int it = 0; it < 15; ++it) {
    Graph g = testutil::random_connected(40, 20, rng);
    double delta = 1.0 + rng.next_double();
    CenterSet n = greedy_net(g, delta);
    std::vector<double> radii;
    for (std::size_t i = 0; i < n.centers.size(); ++i)
      radii.push_back(rng.next_double());
    Partition p = cone_partition_given(g, n, radii);
    // Replay the peeling by brute force on shrinking active sets.
    VertexSet active = VertexSet::full(g.num_vertices());
    std::size_t k = 0;
    for (std::size_t i = 0; i < n.centers.size(); ++i) {
      Vertex x = n.centers[i];
      if (!active.contains(x)) continue;
      std::vector<std::pair<Vertex, double>> from_x{{x, 0.0}};
      auto fx = oracle::multisource(g, from_x, &active);
      std::vector<std::pair<Vertex, double>> from_net;
      for (Vertex c : n.centers)
        if (active.contains(c)) from_net.push_back({c, 0.0});
      auto fn = oracle::multisource(g, from_net, &active);
      VertexSet cone(g.num_vertices());
      active.for_each([&](Vertex v) {
        if (fx.owner[std::size_t(v)] < 0) return;
        double lhs = fx.dist[std::size_t(v)] - fn.dist[std::size_t(v)];
        if (lhs <= radii[i] * delta) cone.insert(v);
      });
      REQUIRE(k < p.clusters.size());
      CHECK(p.clusters[k].center == x);
      CHECK(p.clusters[k].members == cone);
      active.erase_all(cone);
      ++k;
    }
    CHECK(k == p.clusters.size());
  }
}
