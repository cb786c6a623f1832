// Independent reference implementations used only by tests. Each oracle takes
// a deliberately different route from the library code it checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "hokt/graph.hpp"
#include "hokt/metrics.hpp"
#include "hokt/rng.hpp"

namespace oracles {

using hokt::EdgeList;
using hokt::NodeId;
using hokt::Partition;
using hokt::SnapshotGraph;

// Breadth-first component labels over an explicit edge list; the label of a
// component is its smallest node id, absent nodes get Partition::kAbsent.
inline std::vector<int> bfs_component_labels(std::uint32_t universe,
                                             const std::vector<NodeId>& present,
                                             const EdgeList& edges) {
  std::vector<std::vector<NodeId>> adj(universe);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> is_present(universe, 0);
  for (NodeId u : present) is_present[u] = 1;

  std::vector<int> labels(universe, Partition::kAbsent);
  for (NodeId s : present) {
    if (labels[s] != Partition::kAbsent) continue;
    // collect the component, then label it with its minimum
    std::vector<NodeId> comp;
    std::queue<NodeId> q;
    q.push(s);
    labels[s] = -2;
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      comp.push_back(u);
      for (NodeId v : adj[u])
        if (is_present[v] && labels[v] == Partition::kAbsent) {
          labels[v] = -2;
          q.push(v);
        }
    }
    const NodeId lo = *std::min_element(comp.begin(), comp.end());
    for (NodeId u : comp) labels[u] = static_cast<int>(lo);
  }
  return labels;
}

// Eq.(2) re-evaluated through per-node-pair accumulation instead of
// per-community sums.
inline double modularity_pair_oracle(const SnapshotGraph& g, const Partition& p) {
  const double m = static_cast<double>(g.edge_count());
  double intra = 0.0;
  for (auto [u, v] : g.edges)
    if (p.label(u) == p.label(v)) intra += 1.0;
  double deg_term = 0.0;
  for (NodeId u : g.nodes)
    for (NodeId v : g.nodes)
      if (p.label(u) == p.label(v))
        deg_term += static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v));
  return intra / m - deg_term / (4.0 * m * m);
}

// O(n^2) confusion counting keyed by raw label pairs.
inline std::map<std::pair<int, int>, long long> confusion_oracle(
    const Partition& a, const Partition& b, const std::vector<NodeId>& nodes) {
  std::map<std::pair<int, int>, long long> counts;
  for (NodeId u : nodes) ++counts[{a.label(u), b.label(u)}];
  return counts;
}

// NMI through the mutual-information / entropy route (natural logs).
inline double nmi_entropy_oracle(const Partition& a, const Partition& b,
                                 const std::vector<NodeId>& nodes) {
  const auto joint = confusion_oracle(a, b, nodes);
  const double n = static_cast<double>(nodes.size());
  std::map<int, double> pa, pb;
  for (const auto& [key, c] : joint) {
    pa[key.first] += static_cast<double>(c) / n;
    pb[key.second] += static_cast<double>(c) / n;
  }
  double mi = 0.0;
  for (const auto& [key, c] : joint) {
    const double pij = static_cast<double>(c) / n;
    mi += pij * std::log(pij / (pa[key.first] * pb[key.second]));
  }
  double ha = 0.0, hb = 0.0;
  for (const auto& [l, p] : pa) ha -= p * std::log(p);
  for (const auto& [l, p] : pb) hb -= p * std::log(p);
  if (ha + hb == 0.0) return 1.0;
  return 2.0 * mi / (ha + hb);
}

// F1 by enumerating every node pair.
inline double f1_pair_oracle(const Partition& pred, const Partition& truth,
                             const std::vector<NodeId>& nodes) {
  long long tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const bool same_pred = pred.label(nodes[i]) == pred.label(nodes[j]);
      const bool same_truth = truth.label(nodes[i]) == truth.label(nodes[j]);
      if (same_pred && same_truth) ++tp;
      else if (same_pred) ++fp;
      else if (same_truth) ++fn;
    }
  if (tp + fp == 0 && tp + fn == 0) return 1.0;
  if (2 * tp + fp + fn == 0) return 0.0;
  return 2.0 * static_cast<double>(tp) / static_cast<double>(2 * tp + fp + fn);
}

// Exact two-sided rank-sum p by enumerating every way to assign n1 of the
// pooled observations to the first sample.
inline double ranksum_exact_oracle(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n1 = a.size(), n = a.size() + b.size();
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());

  // average ranks over ties
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return pooled[x] < pooled[y]; });
  std::vector<double> rank(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && pooled[order[j]] == pooled[order[i]]) ++j;
    const double avg = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) rank[order[k]] = avg;
    i = j;
  }

  double w_obs = 0.0;
  for (std::size_t k = 0; k < n1; ++k) w_obs += rank[k];
  const double mu = static_cast<double>(n1) * static_cast<double>(n + 1) / 2.0;

  long long total = 0, extreme = 0;
  std::vector<std::size_t> comb(n1);
  for (std::size_t k = 0; k < n1; ++k) comb[k] = k;
  bool done = false;
  while (!done) {
    double w = 0.0;
    for (std::size_t idx : comb) w += rank[idx];
    ++total;
    if (std::abs(w - mu) >= std::abs(w_obs - mu) - 1e-12) ++extreme;
    done = true;
    for (std::size_t k = n1; k-- > 0;) {
      if (comb[k] != k + n - n1) {
        ++comb[k];
        for (std::size_t j2 = k + 1; j2 < n1; ++j2) comb[j2] = comb[j2 - 1] + 1;
        done = false;
        break;
      }
    }
  }
  return static_cast<double>(extreme) / static_cast<double>(total);
}

// Pareto fronts by repeatedly peeling the non-dominated set.
inline std::vector<std::vector<std::size_t>> fronts_oracle(
    const std::vector<hokt::ObjectiveVector>& objs) {
  auto dom = [](const hokt::ObjectiveVector& x, const hokt::ObjectiveVector& y) {
    return x.q >= y.q && x.smooth >= y.smooth && (x.q > y.q || x.smooth > y.smooth);
  };
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<char> assigned(objs.size(), 0);
  std::size_t left = objs.size();
  while (left > 0) {
    std::vector<std::size_t> front;
    for (std::size_t i2 = 0; i2 < objs.size(); ++i2) {
      if (assigned[i2]) continue;
      bool dominated = false;
      for (std::size_t j2 = 0; j2 < objs.size(); ++j2)
        if (!assigned[j2] && j2 != i2 && dom(objs[j2], objs[i2])) {
          dominated = true;
          break;
        }
      if (!dominated) front.push_back(i2);
    }
    for (std::size_t idx : front) assigned[idx] = 1;
    left -= front.size();
    fronts.push_back(std::move(front));
  }
  return fronts;
}

// Every set partition of {0..n-1} via restricted growth strings.
template <class Fn>
void for_each_set_partition(std::size_t n, Fn&& fn) {
  std::vector<int> rgs(n, 0);
  std::vector<int> maxv(n, 0);
  for (;;) {
    fn(rgs);
    std::size_t i = n;
    for (;;) {
      if (i == 1) return;
      --i;
      if (rgs[i] <= maxv[i - 1]) break;
    }
    ++rgs[i];
    maxv[i] = std::max(maxv[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxv[j] = maxv[j - 1];
    }
  }
}

// Random simple graph on n nodes with roughly target_edges edges.
inline EdgeList random_edge_list(std::uint32_t n, std::size_t target_edges, hokt::Rng& rng) {
  std::set<std::pair<NodeId, NodeId>> es;
  for (std::size_t k = 0; k < 4 * target_edges && es.size() < target_edges; ++k) {
    NodeId u = static_cast<NodeId>(rng.below(n));
    NodeId v = static_cast<NodeId>(rng.below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    es.insert({u, v});
  }
  return {es.begin(), es.end()};
}

}  // namespace oracles
