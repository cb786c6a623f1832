#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hokt/evo.hpp"
#include "hokt/graph.hpp"

namespace hokt {

// How much history a timestep's smoothness objective uses. order 0 = static
// (no history); order k >= 1 weights the k most recent stored partitions,
// most-recent-first, weights summing to 1.
struct TransferPlan {
  std::uint32_t order = 0;
  std::vector<double> weights;

  bool operator==(const TransferPlan&) const = default;
};

// T x T overlap ratios; entry (i, j) treats snapshot j as current and
// snapshot i as the earlier one, so the matrix need not be symmetric.
struct SimilarityMatrix {
  std::size_t size = 0;
  std::vector<double> values;  // row-major

  double at(std::size_t i, std::size_t j) const { return values[i * size + j]; }
};

enum class WeightPolicy {
  similarity_proportional,  // weights track the overlap ratios of the used snapshots
  fixed_schedule,           // caller supplies weights per timestep
};

struct HoktConfig {
  EvoConfig evo;
  double sigma = 0.8;
  WeightPolicy weight_policy = WeightPolicy::similarity_proportional;
  std::uint32_t max_order = 3;
  std::map<std::uint32_t, std::vector<double>> fixed_schedule;  // timestep -> weights
};

struct TimestepResult {
  std::uint32_t t = 0;  // 1-based
  Partition partition;
  double q = 0.0;
  double honmi = 0.0;
  std::optional<double> nmi_vs_truth;
  std::optional<double> f1_vs_truth;
  TransferPlan plan;
  double overlap_prev = 1.0;  // r(t-1, t); 1.0 at the first step
};

enum class RunMode { hokt, first_order, static_only };

// Fraction of the current snapshot's edges also present in the previous one.
// The current snapshot must have at least one edge.
double overlap_ratio(const SnapshotGraph& current, const SnapshotGraph& previous);

SimilarityMatrix similarity_matrix(const DynamicNetwork& net);

// Transfer-order selection: first step is static; r(t-1,t) >= sigma keeps
// first-order transfer; otherwise the configured policy chooses the order and
// weights over at most max_order (and at most t-1) past snapshots.
TransferPlan plan_transfer(std::uint32_t t, const SimilarityMatrix& sim, const HoktConfig& cfg);

// The full driver: per timestep, runs the two-objective engine with the
// planned smoothness objective and stores the max-modularity partition as
// history for later steps. step_ms, when given, receives per-step wall time.
std::vector<TimestepResult> run_hokt(const DynamicNetwork& net, const HoktConfig& cfg,
                                     std::vector<double>* step_ms = nullptr);

// static: every step order 0. first-order: every step t >= 2 uses order 1
// regardless of sigma (the DYNMOGA-equivalent baseline).
std::vector<TimestepResult> baseline_mode(const DynamicNetwork& net, const HoktConfig& cfg,
                                          RunMode mode, std::vector<double>* step_ms = nullptr);

}  // namespace hokt
