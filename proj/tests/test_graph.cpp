#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hokt/error.hpp"
#include "hokt/graph.hpp"
#include "hokt/rng.hpp"
#include "oracles.hpp"

using namespace hokt;

TEST_CASE("build_snapshot deduplicates and normalizes orientation") {
  const auto g = build_snapshot(5, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges == EdgeList{{0, 1}, {1, 2}});
  CHECK(g.node_count() == 5);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(4) == 0);  // isolated nodes are allowed
}

TEST_CASE("build_snapshot matches the worked 4-node example") {
  const auto g = build_snapshot(4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}});
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge(3, 2));
  CHECK(!g.has_edge(1, 2));
}

TEST_CASE("build_snapshot rejects bad input") {
  CHECK_THROWS_AS(build_snapshot(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(build_snapshot(3, {{0, 3}}), Error);
}

TEST_CASE("build_snapshot is edge-order independent") {
  EdgeList edges{{0, 1}, {2, 3}, {1, 2}, {4, 0}};
  EdgeList rev(edges.rbegin(), edges.rend());
  CHECK(build_snapshot(5, edges) == build_snapshot(5, rev));
}

TEST_CASE("connected_components decodes the 8-node locus example") {
  // 1-indexed locus edges {(1,2),(2,8),(3,4),(4,7),(5,6),(6,3)}
  const auto g = build_snapshot(8, {{0, 1}, {1, 7}, {2, 3}, {3, 6}, {4, 5}, {5, 2}, {0, 7}});
  const EdgeList locus{{0, 1}, {1, 7}, {2, 3}, {3, 6}, {4, 5}, {5, 2}};
  const Partition p = connected_components(g, locus);
  CHECK(p.labels == std::vector<int>{0, 0, 2, 2, 2, 2, 2, 0});
}

TEST_CASE("connected_components without extra edges uses the graph itself") {
  const auto g = build_snapshot(3, {});
  const Partition p = connected_components(g);
  CHECK(p.labels == std::vector<int>{0, 1, 2});
}

TEST_CASE("connected_components rejects unknown endpoints") {
  const auto g = build_snapshot_subset(4, {0, 1, 2}, {{0, 1}});
  CHECK_THROWS_AS(connected_components(g, EdgeList{{0, 3}}), Error);
}

TEST_CASE("connected_components agrees with a BFS oracle on random graphs") {
  Rng rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::uint32_t>(2 + rng.below(49));
    const auto edges = oracles::random_edge_list(n, rng.below(2 * n + 1), rng);
    const auto g = build_snapshot(n, edges);
    const Partition got = connected_components(g);
    CHECK(got.labels == oracles::bfs_component_labels(n, g.nodes, g.edges));
  }
}

TEST_CASE("component structure is invariant under relabeling") {
  Rng rng(7);
  const auto edges = oracles::random_edge_list(12, 14, rng);
  const auto g = build_snapshot(12, edges);
  const Partition p = connected_components(g);

  std::vector<NodeId> perm(12);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  rng.shuffle(perm);
  EdgeList mapped;
  for (auto [u, v] : edges) mapped.emplace_back(perm[u], perm[v]);
  const Partition q = connected_components(build_snapshot(12, mapped));

  for (NodeId u = 0; u < 12; ++u)
    for (NodeId v = 0; v < 12; ++v)
      CHECK((p.label(u) == p.label(v)) == (q.label(perm[u]) == q.label(perm[v])));
}

TEST_CASE("degree sum equals twice the edge count") {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + rng.below(40));
    const auto g = build_snapshot(n, oracles::random_edge_list(n, rng.below(3 * n + 1), rng));
    std::size_t total = 0;
    for (NodeId u : g.nodes) total += g.degree(u);
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("shared_nodes") {
  const auto a = build_snapshot(8, {{0, 1}});
  SUBCASE("identical node sets") {
    CHECK(shared_nodes(a, a) == std::vector<NodeId>{0, 1, 2, 3, 4, 5, 6, 7});
  }
  SUBCASE("node churn keeps the intersection") {
    // step t has nodes 1..7, the next one drops node 3 and adds node 8
    const auto t0 = build_snapshot_subset(8, {0, 1, 2, 3, 4, 5, 6}, {{0, 1}});
    const auto t1 = build_snapshot_subset(8, {0, 1, 3, 4, 5, 6, 7}, {{0, 1}});
    CHECK(shared_nodes(t0, t1) == std::vector<NodeId>{0, 1, 3, 4, 5, 6});
  }
  SUBCASE("disjoint sets") {
    const auto x = build_snapshot_subset(4, {0, 1}, {{0, 1}});
    const auto y = build_snapshot_subset(4, {2, 3}, {{2, 3}});
    CHECK(shared_nodes(x, y).empty());
  }
}

TEST_CASE("validate_network rejects truth that misses snapshot nodes") {
  DynamicNetwork net;
  net.snapshots.push_back(build_snapshot(3, {{0, 1}}));
  Partition p;
  p.labels = {0, 0, Partition::kAbsent};  // node 2 uncovered
  net.truth.push_back(p);
  CHECK_THROWS_AS(validate_network(net), Error);
  net.truth[0].labels[2] = 1;
  CHECK_NOTHROW(validate_network(net));
}
