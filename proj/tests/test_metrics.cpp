#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hokt/error.hpp"
#include "hokt/metrics.hpp"
#include "hokt/rng.hpp"
#include "oracles.hpp"

using namespace hokt;

namespace {

Partition make_partition(std::vector<int> labels) {
  Partition p;
  p.labels = std::move(labels);
  return p;
}

Partition random_partition(std::uint32_t n, int max_labels, Rng& rng) {
  Partition p;
  p.labels.resize(n);
  for (auto& l : p.labels) l = static_cast<int>(rng.below(max_labels));
  return p;
}

std::vector<NodeId> all_nodes(std::uint32_t n) {
  std::vector<NodeId> v(n);
  for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("modularity of a single community is zero") {
  Rng rng(3);
  const auto g = build_snapshot(10, oracles::random_edge_list(10, 18, rng));
  const auto p = make_partition(std::vector<int>(10, 7));
  CHECK(modularity(g, p) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("modularity of two separate triangles, one community each") {
  const auto g = build_snapshot(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto p = make_partition({0, 0, 0, 1, 1, 1});
  // 2 * (3/6 - (6/12)^2) = 0.5
  CHECK(modularity(g, p) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(oracles::modularity_pair_oracle(g, p) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("modularity of a triangle split into singletons") {
  const auto g = build_snapshot(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto p = make_partition({0, 1, 2});
  // 3 * (0 - (2/6)^2) = -1/3
  CHECK(modularity(g, p) == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("modularity error paths") {
  const auto g = build_snapshot(3, {});
  CHECK_THROWS_AS(modularity(g, make_partition({0, 0, 0})), Error);
  const auto g2 = build_snapshot(3, {{0, 1}});
  CHECK_THROWS_AS(modularity(g2, make_partition({0, 0, Partition::kAbsent})), Error);
}

TEST_CASE("modularity stays within [-0.5, 1] and matches the pair oracle") {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::uint32_t>(2 + rng.below(7));
    auto edges = oracles::random_edge_list(n, 1 + rng.below(2 * n), rng);
    if (edges.empty()) edges.push_back({0, 1});
    const auto g = build_snapshot(n, edges);
    const auto p = random_partition(n, 1 + static_cast<int>(rng.below(4)), rng);
    const double q = modularity(g, p);
    CHECK(q >= -0.5 - 1e-12);
    CHECK(q <= 1.0 + 1e-12);
    CHECK(q == doctest::Approx(oracles::modularity_pair_oracle(g, p)).epsilon(1e-12));
  }
}

TEST_CASE("confusion matrix basics") {
  SUBCASE("diagonal for equal partitions") {
    const auto a = make_partition({0, 0, 1, 1});
    const auto cm = confusion(a, a, all_nodes(4));
    CHECK(cm.rows == 2);
    CHECK(cm.cols == 2);
    CHECK(cm.at(0, 0) == 2);
    CHECK(cm.at(1, 1) == 2);
    CHECK(cm.at(0, 1) == 0);
    CHECK(cm.total == 4);
  }
  SUBCASE("crossing split gives all ones") {
    const auto a = make_partition({0, 0, 1, 1});
    const auto b = make_partition({0, 1, 0, 1});
    const auto cm = confusion(a, b, all_nodes(4));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(cm.at(i, j) == 1);
  }
  SUBCASE("empty node set is rejected") {
    const auto a = make_partition({0});
    CHECK_THROWS_AS(confusion(a, a, std::vector<NodeId>{}), Error);
  }
}

TEST_CASE("confusion matches the nested-loop oracle on random labelings") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + rng.below(20));
    const auto a = random_partition(n, 4, rng);
    const auto b = random_partition(n, 3, rng);
    const auto nodes = all_nodes(n);
    const auto cm = confusion(a, b, nodes);
    const auto want = oracles::confusion_oracle(a, b, nodes);
    std::int64_t checked = 0;
    for (std::size_t i = 0; i < cm.rows; ++i)
      for (std::size_t j = 0; j < cm.cols; ++j) {
        if (cm.at(i, j) == 0) continue;
        const auto it = want.find({cm.row_labels[i], cm.col_labels[j]});
        REQUIRE(it != want.end());
        CHECK(it->second == cm.at(i, j));
        checked += cm.at(i, j);
      }
    CHECK(checked == cm.total);
  }
}

TEST_CASE("nmi is 1 for identical partitions up to relabeling") {
  const auto a = make_partition({0, 0, 1, 1, 2});
  const auto b = make_partition({9, 9, 4, 4, 7});
  CHECK(nmi(a, b, all_nodes(5)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("nmi of the crossing split is 0") {
  const auto a = make_partition({0, 0, 1, 1});
  const auto b = make_partition({0, 1, 0, 1});
  CHECK(nmi(a, b, all_nodes(4)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("nmi degenerate single-community cases") {
  const auto one = make_partition({5, 5, 5, 5});
  const auto split = make_partition({0, 0, 1, 1});
  CHECK(nmi(one, one, all_nodes(4)) == 1.0);
  CHECK(nmi(one, split, all_nodes(4)) == 0.0);
  CHECK(nmi(split, one, all_nodes(4)) == 0.0);
}

TEST_CASE("nmi is symmetric, relabel-invariant, and matches the entropy oracle") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::uint32_t>(2 + rng.below(19));
    const auto a = random_partition(n, 4, rng);
    const auto b = random_partition(n, 5, rng);
    const auto nodes = all_nodes(n);
    const double ab = nmi(a, b, nodes);
    CHECK(ab == doctest::Approx(nmi(b, a, nodes)).epsilon(1e-12));
    CHECK(ab == doctest::Approx(oracles::nmi_entropy_oracle(a, b, nodes)).epsilon(1e-9));
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);

    Partition rel = a;
    for (auto& l : rel.labels) l = 1000 - 3 * l;  // injective relabel
    CHECK(nmi(rel, b, nodes) == doctest::Approx(ab).epsilon(1e-12));
  }
}

TEST_CASE("honmi with a single unit weight equals plain nmi bit-exactly") {
  Rng rng(5);
  const auto cur = random_partition(12, 3, rng);
  const auto prev = random_partition(12, 3, rng);
  const std::vector<Partition> hist{prev};
  const std::vector<double> w{1.0};
  const std::vector<std::vector<NodeId>> sets{all_nodes(12)};
  CHECK(honmi(cur, hist, w, sets) == nmi(cur, prev, sets[0]));
}

TEST_CASE("honmi is the forced linear combination of component nmis") {
  Rng rng(6);
  const auto cur = random_partition(10, 3, rng);
  const auto h0 = random_partition(10, 4, rng);
  const auto h1 = random_partition(10, 2, rng);
  const auto nodes = all_nodes(10);
  const std::vector<Partition> hist{h0, h1};
  const std::vector<std::vector<NodeId>> sets{nodes, nodes};

  const double n0 = nmi(cur, h0, nodes);
  const double n1 = nmi(cur, h1, nodes);
  CHECK(honmi(cur, hist, {{0.8, 0.2}}, sets) ==
        doctest::Approx(0.8 * n0 + 0.2 * n1).epsilon(1e-15));

  // both components at 1 -> convex combination stays 1
  const std::vector<Partition> same{cur, cur};
  CHECK(honmi(cur, same, {{0.5, 0.5}}, sets) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("honmi validates weights and history") {
  const auto cur = make_partition({0, 1});
  const std::vector<Partition> hist{cur};
  const std::vector<std::vector<NodeId>> sets{{0, 1}};
  CHECK_THROWS_AS(honmi(cur, std::vector<Partition>{}, {}, {}), Error);
  CHECK_THROWS_AS(honmi(cur, hist, {{0.5}}, sets), Error);   // weights must sum to 1
  CHECK_THROWS_AS(honmi(cur, hist, {{-1.0}}, sets), Error);  // and be non-negative
}

TEST_CASE("f1 basics") {
  const auto truth = make_partition({0, 0, 0, 0});
  SUBCASE("equal up to relabel") {
    const auto pred = make_partition({3, 3, 3, 3});
    CHECK(f1_score(pred, truth, all_nodes(4)) == 1.0);
  }
  SUBCASE("all singletons against one community") {
    const auto pred = make_partition({0, 1, 2, 3});
    CHECK(f1_score(pred, truth, all_nodes(4)) == 0.0);
  }
  SUBCASE("both sides pair-free") {
    const auto a = make_partition({0, 1, 2});
    CHECK(f1_score(a, a, all_nodes(3)) == 1.0);
  }
}

TEST_CASE("f1 matches the pair-enumeration oracle and is relabel-invariant") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::uint32_t>(2 + rng.below(14));
    const auto pred = random_partition(n, 4, rng);
    const auto truth = random_partition(n, 3, rng);
    const auto nodes = all_nodes(n);
    const double f1 = f1_score(pred, truth, nodes);
    CHECK(f1 == doctest::Approx(oracles::f1_pair_oracle(pred, truth, nodes)).epsilon(1e-12));

    Partition rel = pred;
    for (auto& l : rel.labels) l = 77 + 2 * l;
    CHECK(f1_score(rel, truth, nodes) == doctest::Approx(f1).epsilon(1e-12));
  }
}

TEST_CASE("rank-sum test on shifted and identical samples") {
  std::vector<double> a(30), b(30);
  for (int i = 0; i < 30; ++i) {
    a[i] = i + 1;
    b[i] = i + 31;
  }
  const auto [stat_far, p_far] = rank_sum_test(a, b);
  CHECK(p_far < 0.001);

  const auto [stat_same, p_same] = rank_sum_test(a, a);
  CHECK(p_same > 0.95);

  CHECK_THROWS_AS(rank_sum_test(std::vector<double>{1, 2, 3}, a), Error);
}

TEST_CASE("rank-sum approximation tracks the exact permutation oracle at n=5") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> a(5), b(5);
    for (auto& x : a) x = static_cast<double>(rng.below(12));  // ties included
    for (auto& x : b) x = static_cast<double>(rng.below(12));
    const double exact = oracles::ranksum_exact_oracle(a, b);
    const auto [stat, p] = rank_sum_test(a, b);
    CHECK(std::abs(p - exact) <= 0.02);
  }
}
