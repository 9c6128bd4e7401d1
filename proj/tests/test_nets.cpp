#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "padded/generators.hpp"
#include "padded/nets.hpp"

using namespace padded;
using testutil::path;

TEST_CASE("greedy net: unit 5-path at delta=1") {
  Graph g = path(5);
  CenterSet n = greedy_net(g, 1.0);
  CHECK(n.centers == std::vector<Vertex>{0, 2, 4});
  CHECK(n.covering_radius == 1.0);
  CHECK(n.tau == 3);
}

TEST_CASE("greedy net: degenerate scales") {
  Graph g = path(5);
  CenterSet wide = greedy_net(g, 10.0);
  CHECK(wide.centers == std::vector<Vertex>{0});
  CenterSet tight = greedy_net(g, 0.25);
  CHECK(tight.centers == std::vector<Vertex>{0, 1, 2, 3, 4});
}

TEST_CASE("greedy net: axioms on random graphs") {
  Rng rng(513);
  for (int it = 0; it < 20; ++it) {
    Graph g = testutil::random_connected(70, 35, rng);
    double delta = 0.5 + 3.0 * rng.next_double();
    CenterSet n = greedy_net(g, delta);
    auto ap = oracle::all_pairs(g);
    // Separation > delta, pairwise.
    for (std::size_t i = 0; i < n.centers.size(); ++i)
      for (std::size_t j = i + 1; j < n.centers.size(); ++j)
        CHECK(ap[std::size_t(n.centers[i])][std::size_t(n.centers[j])] > delta);
    // Covering within delta, and the measured radius is the exact max.
    double worst = 0.0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      double best = oracle::kInf;
      for (Vertex c : n.centers)
        best = std::min(best, ap[std::size_t(c)][std::size_t(v)]);
      CHECK(best <= delta);
      worst = std::max(worst, best);
    }
    CHECK(n.covering_radius == worst);
    CHECK(check_centers(g, n));
  }
}

TEST_CASE("greedy net: every component is hit") {
  Graph g(6, {{0, 1, 1.0}, {2, 3, 1.0}, {4, 5, 1.0}});
  CenterSet n = greedy_net(g, 5.0);
  CHECK(n.centers == std::vector<Vertex>{0, 2, 4});
}

TEST_CASE("measure_centers: tau counts centers within 3*delta") {
  Graph g = path(5);
  std::vector<Vertex> centers{0, 2, 4};
  CenterStats s = measure_centers(g, centers, 1.0);
  CHECK(s.tau == 3);
  // At delta=0.25, 3*delta=0.75 sees only the center itself.
  CenterStats tiny = measure_centers(g, centers, 0.25);
  CHECK(tiny.tau == 1);
  CHECK(tiny.covering_radius == 1.0);
}

TEST_CASE("net_on_path: unit 5-path at delta=2 gives {0,3}") {
  Graph g = path(5);
  std::vector<Vertex> p{0, 1, 2, 3, 4};
  CHECK(net_on_path(g, p, 2.0) == std::vector<Vertex>{0, 3});
  CHECK(net_on_path(g, p, 0.5) == p);  // below the min edge weight: all vertices
  CHECK_THROWS_AS(net_on_path(g, p, 0.0), std::invalid_argument);
  std::vector<Vertex> single{2};
  CHECK(net_on_path(g, single, 1.0) == single);
}

TEST_CASE("net_on_path: rejects non-paths") {
  Graph g = path(5);
  std::vector<Vertex> skip{0, 2};
  CHECK_THROWS_AS(net_on_path(g, skip, 1.0), std::invalid_argument);
  std::vector<Vertex> repeat{0, 1, 0};
  CHECK_THROWS_AS(net_on_path(g, repeat, 1.0), std::invalid_argument);
}

TEST_CASE("net_on_path: spacing and covering under the path metric") {
  Rng rng(88);
  Graph g = testutil::random_connected(60, 20, rng);
  // Take a shortest path between two far vertices via the oracle.
  auto o = oracle::multisource(g, {{0, 0.0}});
  Vertex far = 0;
  for (Vertex v = 0; v < 60; ++v)
    if (o.dist[std::size_t(v)] < oracle::kInf &&
        o.dist[std::size_t(v)] > o.dist[std::size_t(far)])
      far = v;
  std::vector<Source> src{{0, 0.0}};
  DistanceField f = shortest_paths(g, src);
  std::vector<Vertex> p = f.path_from_source(far);
  REQUIRE(p.size() >= 2);
  double delta = o.dist[std::size_t(far)] / 5.0;
  std::vector<Vertex> net = net_on_path(g, p, delta);
  // Cumulative positions along the path.
  std::vector<double> pos(p.size(), 0.0);
  for (std::size_t i = 1; i < p.size(); ++i) {
    double w = oracle::kInf;
    for (const auto& nb : g.neighbors(p[i - 1]))
      if (nb.to == p[i]) w = std::min(w, nb.w);
    pos[i] = pos[i - 1] + w;
  }
  auto pos_of = [&](Vertex v) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] == v) return pos[i];
    REQUIRE(false);
    return 0.0;
  };
  for (std::size_t i = 1; i < net.size(); ++i)
    CHECK(pos_of(net[i]) - pos_of(net[i - 1]) > delta);
  for (std::size_t i = 0; i < p.size(); ++i) {
    double best = oracle::kInf;
    for (Vertex c : net) best = std::min(best, std::abs(pos[i] - pos_of(c)));
    CHECK(best <= delta);
  }
}

TEST_CASE("delta_for_net_size: hits the requested range") {
  Rng rng(4242);
  FamilySpec spec;
  spec.family = Family::RandomGeometric;
  spec.n = 500;
  spec.radius = 0.08;
  Graph g = generate(spec, rng);
  double delta = delta_for_net_size(g, 30, 100);
  CenterSet n = greedy_net(g, delta);
  CHECK(n.centers.size() >= 30);
  CHECK(n.centers.size() <= 100);
  CHECK_THROWS_AS(delta_for_net_size(g, Vertex(g.num_vertices() + 5),
                                     Vertex(g.num_vertices() + 6)),
                  std::runtime_error);
}

TEST_CASE("packing: geometric tau stays flat across n at a fixed scale") {
  // Net packing at a fixed metric scale is a property of the plane, not of
  // the point count; allow a wide band but no growth proportional to n.
  std::vector<int> taus;
  for (Vertex n : {500, 1000, 2000}) {
    FamilySpec spec;
    spec.family = Family::RandomGeometric;
    spec.n = n;
    spec.radius = 0.08;
    spec.seed = 9;
    Rng rng(9);
    Graph g = generate(spec, rng);
    CenterSet net = greedy_net(g, 0.4);
    taus.push_back(net.tau);
  }
  for (int t : taus) {
    CHECK(t >= 1);
    CHECK(t <= 60);
  }
  CHECK(taus[2] <= 3 * taus[0] + 5);
}
