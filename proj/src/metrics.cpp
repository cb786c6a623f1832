#include "hokt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "hokt/error.hpp"

namespace hokt {

double modularity(const SnapshotGraph& graph, const Partition& part) {
  const double m = static_cast<double>(graph.edge_count());
  if (graph.edge_count() == 0) throw metric_error("modularity undefined for edgeless graph");
  for (NodeId u : graph.nodes)
    if (!part.covers(u)) throw input_error("partition does not cover node " + std::to_string(u));

  // Decoded partitions label communities by node id, so the common case fits a
  // flat array; arbitrary labels fall back to a map.
  bool dense = true;
  for (NodeId u : graph.nodes) {
    const int l = part.label(u);
    if (l < 0 || static_cast<std::uint32_t>(l) >= graph.universe_size) {
      dense = false;
      break;
    }
  }

  double q = 0.0;
  if (dense) {
    std::vector<double> intra(graph.universe_size, 0.0), deg(graph.universe_size, 0.0);
    for (auto [u, v] : graph.edges) {
      if (part.label(u) == part.label(v)) intra[part.label(u)] += 1.0;
    }
    for (NodeId u : graph.nodes) deg[part.label(u)] += static_cast<double>(graph.degree(u));
    for (NodeId u : graph.nodes) {
      const int l = part.label(u);
      if (deg[l] < 0) continue;  // already folded in
      const double d = deg[l];
      q += intra[l] / m - (d / (2.0 * m)) * (d / (2.0 * m));
      deg[l] = -1.0;
    }
  } else {
    std::unordered_map<int, std::pair<double, double>> acc;  // label -> (intra, deg)
    for (auto [u, v] : graph.edges)
      if (part.label(u) == part.label(v)) acc[part.label(u)].first += 1.0;
    for (NodeId u : graph.nodes) acc[part.label(u)].second += static_cast<double>(graph.degree(u));
    for (const auto& [l, a] : acc)
      q += a.first / m - (a.second / (2.0 * m)) * (a.second / (2.0 * m));
  }
  return q;
}

ConfusionMatrix confusion(const Partition& a, const Partition& b, std::span<const NodeId> nodes) {
  if (nodes.empty()) throw input_error("confusion over an empty node set");
  for (NodeId u : nodes)
    if (!a.covers(u) || !b.covers(u))
      throw input_error("confusion node " + std::to_string(u) + " not covered by both partitions");

  std::vector<int> a_labels, b_labels;
  a_labels.reserve(nodes.size());
  b_labels.reserve(nodes.size());
  for (NodeId u : nodes) {
    a_labels.push_back(a.label(u));
    b_labels.push_back(b.label(u));
  }
  auto index_of = [](std::vector<int>& labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  };
  std::vector<int> ra = a_labels, rb = b_labels;
  index_of(ra);
  index_of(rb);

  ConfusionMatrix cm;
  cm.rows = ra.size();
  cm.cols = rb.size();
  cm.row_labels = ra;
  cm.col_labels = rb;
  cm.counts.assign(cm.rows * cm.cols, 0);
  cm.row_sums.assign(cm.rows, 0);
  cm.col_sums.assign(cm.cols, 0);
  cm.total = static_cast<std::int64_t>(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto i = static_cast<std::size_t>(
        std::lower_bound(ra.begin(), ra.end(), a_labels[k]) - ra.begin());
    const auto j = static_cast<std::size_t>(
        std::lower_bound(rb.begin(), rb.end(), b_labels[k]) - rb.begin());
    ++cm.counts[i * cm.cols + j];
  }
  for (std::size_t i = 0; i < cm.rows; ++i)
    for (std::size_t j = 0; j < cm.cols; ++j) {
      cm.row_sums[i] += cm.at(i, j);
      cm.col_sums[j] += cm.at(i, j);
    }
  return cm;
}

double nmi(const Partition& a, const Partition& b, std::span<const NodeId> nodes) {
  const ConfusionMatrix cm = confusion(a, b, nodes);
  const double n = static_cast<double>(cm.total);

  double num = 0.0;
  for (std::size_t i = 0; i < cm.rows; ++i)
    for (std::size_t j = 0; j < cm.cols; ++j) {
      const auto c = cm.at(i, j);
      if (c == 0) continue;  // 0*log(0) = 0
      num += -2.0 * static_cast<double>(c) *
             std::log(static_cast<double>(c) * n /
                      (static_cast<double>(cm.row_sums[i]) * static_cast<double>(cm.col_sums[j])));
    }
  double den = 0.0;
  for (auto ci : cm.row_sums) den += static_cast<double>(ci) * std::log(static_cast<double>(ci) / n);
  for (auto cj : cm.col_sums) den += static_cast<double>(cj) * std::log(static_cast<double>(cj) / n);

  if (den == 0.0) return 1.0;  // both sides a single community
  const double v = num / den;
  return std::clamp(v, 0.0, 1.0);
}

double honmi(const Partition& current, std::span<const Partition> history,
             std::span<const double> weights, std::span<const std::vector<NodeId>> node_sets) {
  if (history.empty()) throw config_error("honmi needs at least one history partition");
  if (weights.size() != history.size() || node_sets.size() != history.size())
    throw config_error("honmi weights/history/node_sets length mismatch");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw config_error("honmi weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw config_error("honmi weights must sum to 1");

  double out = 0.0;
  for (std::size_t j = 0; j < history.size(); ++j)
    out += weights[j] * nmi(current, history[j], node_sets[j]);
  return out;
}

double f1_score(const Partition& pred, const Partition& truth, std::span<const NodeId> nodes) {
  const ConfusionMatrix cm = confusion(pred, truth, nodes);
  auto pairs = [](std::int64_t k) { return k * (k - 1) / 2; };
  std::int64_t both = 0, in_pred = 0, in_truth = 0;
  for (std::size_t i = 0; i < cm.rows; ++i)
    for (std::size_t j = 0; j < cm.cols; ++j) both += pairs(cm.at(i, j));
  for (auto s : cm.row_sums) in_pred += pairs(s);
  for (auto s : cm.col_sums) in_truth += pairs(s);

  const std::int64_t tp = both;
  const std::int64_t fp = in_pred - tp;
  const std::int64_t fn = in_truth - tp;
  if (in_pred == 0 && in_truth == 0) return 1.0;
  if (2 * tp + fp + fn == 0) return 0.0;
  return 2.0 * static_cast<double>(tp) / static_cast<double>(2 * tp + fp + fn);
}

std::pair<double, double> rank_sum_test(std::span<const double> sample_a,
                                        std::span<const double> sample_b) {
  const std::size_t n1 = sample_a.size(), n2 = sample_b.size();
  if (n1 < 5 || n2 < 5) throw input_error("rank-sum test needs at least 5 observations per sample");
  const std::size_t n = n1 + n2;

  std::vector<std::pair<double, int>> all;  // (value, 0=a 1=b)
  all.reserve(n);
  for (double x : sample_a) all.emplace_back(x, 0);
  for (double x : sample_b) all.emplace_back(x, 1);
  std::sort(all.begin(), all.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  // average ranks over ties; accumulate the tie correction term sum(t^3 - t)
  double w = 0.0;
  double tie_term = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && all[j].first == all[i].first) ++j;
    const double t = static_cast<double>(j - i);
    const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k)
      if (all[k].second == 0) w += avg_rank;
    tie_term += t * t * t - t;
    i = j;
  }

  const double dn = static_cast<double>(n), d1 = static_cast<double>(n1),
               d2 = static_cast<double>(n2);
  const double mean = d1 * (dn + 1.0) / 2.0;
  const double var = d1 * d2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
  if (var <= 0.0) return {w, 1.0};  // every observation tied

  double z = (std::abs(w - mean) - 0.5) / std::sqrt(var);  // continuity correction
  if (z < 0.0) z = 0.0;
  const double p = std::erfc(z / std::sqrt(2.0));
  return {w, std::clamp(p, 0.0, 1.0)};
}

}  // namespace hokt
