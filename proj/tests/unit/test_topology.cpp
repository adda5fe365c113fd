// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "qperf/error.hpp"
#include "qperf/random.hpp"
#include "qperf/topology.hpp"
#include "support/oracles.hpp"

using namespace qperf;

TEST_CASE("topology validation") {
  CHECK_THROWS_AS(DeviceTopology(2, {{0, 2}}), DataError);
  CHECK_THROWS_AS(DeviceTopology(2, {{1, 1}}), DataError);
  CHECK_THROWS_AS(DeviceTopology(3, {{0, 1}, {1, 0}}), DataError);
  CHECK_THROWS_AS(DeviceTopology(2, {{0, 1}}, std::vector<Point2>{{0, 0}}), DataError);
  const DeviceTopology t(3, {{2, 0}, {0, 1}});
  CHECK(t.neighbors(0) == std::vector<int>{1, 2});
  CHECK(t.has_edge(0, 2));
  CHECK(t.has_edge(2, 0));
  CHECK_FALSE(t.has_edge(1, 2));
  CHECK(t.connected());
  CHECK_FALSE(DeviceTopology(3, {{0, 1}}).connected());
  CHECK(DeviceTopology(3, {{0, 1}}).shortest_path(0, 2).empty());
}

TEST_CASE("line topology paths") {
  const auto line = DeviceTopology::line(5);
  CHECK(line.edges().size() == 4);
  CHECK(line.shortest_path(4, 1) == std::vector<int>{4, 3, 2, 1});
  CHECK(line.shortest_path(2, 2) == std::vector<int>{2});
}

TEST_CASE("topology JSON round-trips") {
  const DeviceTopology t(3, {{0, 1}, {1, 2}}, std::vector<Point2>{{0, 0}, {1, 0.5}, {2, 0}});
  const auto back = load_topology(topology_to_json(t));
  CHECK(back.num_qubits() == 3);
  CHECK(back.edges() == t.edges());
  REQUIRE(back.coords().has_value());
  CHECK((*back.coords())[1].y == 0.5);
  CHECK_THROWS_AS(load_topology("{\"edges\":[]}"), DataError);
  CHECK_THROWS_AS(load_topology("{"), DataError);
}

TEST_CASE("heavy-hex 127 structure") {
  const auto t = heavy_hex_127();
  CHECK(t.num_qubits() == 127);
  CHECK(t.edges().size() == 144);
  CHECK(t.connected());
  REQUIRE(t.coords().has_value());
  std::set<std::pair<double, double>> seen;
  for (const auto& p : *t.coords()) seen.insert({p.x, p.y});
  CHECK(seen.size() == 127);
  int degree3 = 0;
  for (int q = 0; q < 127; ++q) {
    const auto deg = t.neighbors(q).size();
    CHECK(deg >= 1);
    CHECK(deg <= 3);
    degree3 += deg == 3;
  }
  CHECK(degree3 > 0);
  // Anchors of the Eagle coupling map.
  CHECK(t.has_edge(0, 14));
  CHECK(t.has_edge(14, 18));
  CHECK(t.has_edge(4, 15));
  CHECK(t.has_edge(12, 17));
  CHECK(t.has_edge(109, 114));
  CHECK(t.has_edge(96, 109));
  CHECK(t.has_edge(125, 126));
}

TEST_CASE("shortest paths are valid and minimal on heavy-hex") {
  const auto t = heavy_hex_127();
  const auto hops = test::hop_distances(t.num_qubits(), t.edges());
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int a = static_cast<int>(rng.below(127)), b = static_cast<int>(rng.below(127));
    const auto path = t.shortest_path(a, b);
    REQUIRE_FALSE(path.empty());
    CHECK(path.front() == a);
    CHECK(path.back() == b);
    CHECK(static_cast<int>(path.size()) - 1 == hops[a][b]);
    for (std::size_t i = 1; i < path.size(); ++i) CHECK(t.has_edge(path[i - 1], path[i]));
  }
}
