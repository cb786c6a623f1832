#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hokt/graph.hpp"

namespace hokt {

// Cross-tabulation of two partitions restricted to a node set. Empty rows and
// columns are dropped; row/col labels record which community each index maps to.
struct ConfusionMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> counts;  // row-major, rows*cols
  std::vector<std::int64_t> row_sums;
  std::vector<std::int64_t> col_sums;
  std::int64_t total = 0;
  std::vector<int> row_labels;  // ascending
  std::vector<int> col_labels;  // ascending

  std::int64_t at(std::size_t i, std::size_t j) const { return counts[i * cols + j]; }
};

// The two maximized objectives: modularity and history-weighted smoothness.
struct ObjectiveVector {
  double q = 0.0;
  double smooth = 0.0;
};

// Newman-Girvan modularity of `part` on `graph`: sum over communities of
// l_s/m - (d_s/2m)^2. Requires m >= 1 and every present node covered.
double modularity(const SnapshotGraph& graph, const Partition& part);

ConfusionMatrix confusion(const Partition& a, const Partition& b, std::span<const NodeId> nodes);

// Normalized mutual information, 0..1, with the 0*log(0) = 0 convention. When
// both partitions are a single community the degenerate 0/0 is defined as 1.
double nmi(const Partition& a, const Partition& b, std::span<const NodeId> nodes);

// Weighted sum of nmi(current, history[j]) over the j-th shared node set.
// History is ordered most-recent-first; weights must be non-negative and sum
// to 1 within 1e-9.
double honmi(const Partition& current, std::span<const Partition> history,
             std::span<const double> weights, std::span<const std::vector<NodeId>> node_sets);

// Pair-counting F1: harmonic mean of precision and recall over co-clustered
// node pairs. If neither side co-clusters any pair the score is 1.
double f1_score(const Partition& pred, const Partition& truth, std::span<const NodeId> nodes);

// Two-sided Wilcoxon rank-sum (Mann-Whitney) via the normal approximation
// with tie correction and continuity correction. Returns the rank sum of
// sample_a and the p-value. Both samples need >= 5 observations.
std::pair<double, double> rank_sum_test(std::span<const double> sample_a,
                                        std::span<const double> sample_b);

}  // namespace hokt
