#include "hokt/transfer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "hokt/error.hpp"
#include "hokt/metrics.hpp"

namespace hokt {

double overlap_ratio(const SnapshotGraph& current, const SnapshotGraph& previous) {
  if (current.edge_count() == 0)
    throw metric_error("overlap ratio undefined: current snapshot has no edges");
  std::size_t shared = 0;
  for (auto [u, v] : current.edges)
    if (previous.has_edge(u, v)) ++shared;
  return static_cast<double>(shared) / static_cast<double>(current.edge_count());
}

SimilarityMatrix similarity_matrix(const DynamicNetwork& net) {
  const std::size_t T = net.timestep_count();
  SimilarityMatrix sim;
  sim.size = T;
  sim.values.assign(T * T, 1.0);
  for (std::size_t i = 0; i < T; ++i)
    for (std::size_t j = 0; j < T; ++j)
      if (i != j)
        sim.values[i * T + j] = overlap_ratio(net.snapshots[j], net.snapshots[i]);
  return sim;
}

namespace {

std::vector<double> validated_schedule_weights(std::uint32_t t, const HoktConfig& cfg) {
  const auto it = cfg.fixed_schedule.find(t);
  if (it == cfg.fixed_schedule.end())
    throw config_error("fixed schedule has no weights for timestep " + std::to_string(t));
  const auto& w = it->second;
  if (w.empty() || w.size() > t - 1)
    throw config_error("fixed schedule at timestep " + std::to_string(t) +
                       " must list between 1 and t-1 weights");
  double sum = 0.0;
  for (double x : w) {
    if (x < 0.0) throw config_error("fixed schedule weights must be non-negative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw config_error("fixed schedule weights at timestep " + std::to_string(t) +
                       " must sum to 1");
  return w;
}

}  // namespace

TransferPlan plan_transfer(std::uint32_t t, const SimilarityMatrix& sim, const HoktConfig& cfg) {
  if (t < 1) throw input_error("timesteps are 1-based");
  TransferPlan plan;
  if (t == 1) return plan;  // no history exists

  const double r_prev = sim.at(t - 2, t - 1);  // r(t-1, t), 0-based storage
  if (r_prev >= cfg.sigma) {
    plan.order = 1;
    plan.weights = {1.0};
    return plan;
  }

  if (cfg.weight_policy == WeightPolicy::fixed_schedule) {
    plan.weights = validated_schedule_weights(t, cfg);
    plan.order = static_cast<std::uint32_t>(plan.weights.size());
    return plan;
  }

  plan.order = std::min<std::uint32_t>(cfg.max_order, t - 1);
  plan.weights.resize(plan.order);
  double sum = 0.0;
  for (std::uint32_t j = 0; j < plan.order; ++j) {
    // weight j multiplies the partition of snapshot t-1-j
    plan.weights[j] = sim.at(t - 2 - j, t - 1);
    sum += plan.weights[j];
  }
  if (sum > 0.0) {
    for (double& w : plan.weights) w /= sum;
  } else {
    // all used overlaps are zero; fall back to uniform weights
    for (double& w : plan.weights) w = 1.0 / static_cast<double>(plan.order);
  }
  return plan;
}

namespace {

std::vector<TimestepResult> run_dynamic(const DynamicNetwork& net, const HoktConfig& cfg,
                                        RunMode mode, std::vector<double>* step_ms) {
  validate_network(net);
  validate_evo_config(cfg.evo);
  if (cfg.sigma < 0.0 || cfg.sigma > 1.0) throw config_error("sigma must be in [0,1]");
  for (const auto& g : net.snapshots)
    if (g.edge_count() == 0) throw input_error("every snapshot needs at least one edge");

  const std::size_t T = net.timestep_count();
  const SimilarityMatrix sim = similarity_matrix(net);

  std::vector<TimestepResult> results;
  results.reserve(T);
  std::vector<Partition> history;  // chosen partition per step, oldest first
  if (step_ms) step_ms->assign(T, 0.0);

  for (std::uint32_t t = 1; t <= T; ++t) {
    const auto started = std::chrono::steady_clock::now();
    const SnapshotGraph& graph = net.snapshots[t - 1];

    TransferPlan plan;
    switch (mode) {
      case RunMode::hokt:
        plan = plan_transfer(t, sim, cfg);
        break;
      case RunMode::first_order:
        if (t >= 2) plan = TransferPlan{1, {1.0}};
        break;
      case RunMode::static_only:
        break;
    }

    // history slice and shared node sets for the smoothness objective,
    // most-recent-first: weights[j] pairs with the partition of step t-1-j
    std::vector<Partition> used;
    std::vector<std::vector<NodeId>> shared;
    for (std::uint32_t j = 0; j < plan.order; ++j) {
      used.push_back(history[t - 2 - j]);
      shared.push_back(shared_nodes(graph, net.snapshots[t - 2 - j]));
    }

    const ObjectiveFn eval = [&](const Genotype&, const Partition& phenotype) {
      ObjectiveVector obj;
      obj.q = modularity(graph, phenotype);
      obj.smooth = plan.order == 0 ? 0.0 : honmi(phenotype, used, plan.weights, shared);
      return obj;
    };

    Rng rng(Rng::derive(cfg.evo.seed, t));
    const auto front = run_nsga2(graph, eval, cfg.evo, rng);
    const Individual& best = pick_solution(front);

    TimestepResult res;
    res.t = t;
    res.partition = best.phenotype;
    res.q = best.objectives.q;
    res.honmi = best.objectives.smooth;
    res.plan = plan;
    res.overlap_prev = t == 1 ? 1.0 : sim.at(t - 2, t - 1);
    if (net.has_truth()) {
      res.nmi_vs_truth = nmi(best.phenotype, net.truth[t - 1], graph.nodes);
      res.f1_vs_truth = f1_score(best.phenotype, net.truth[t - 1], graph.nodes);
    }
    history.push_back(best.phenotype);
    if (step_ms) {
      const auto elapsed = std::chrono::steady_clock::now() - started;
      (*step_ms)[t - 1] =
          std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace

std::vector<TimestepResult> run_hokt(const DynamicNetwork& net, const HoktConfig& cfg,
                                     std::vector<double>* step_ms) {
  return run_dynamic(net, cfg, RunMode::hokt, step_ms);
}

std::vector<TimestepResult> baseline_mode(const DynamicNetwork& net, const HoktConfig& cfg,
                                          RunMode mode, std::vector<double>* step_ms) {
  return run_dynamic(net, cfg, mode, step_ms);
}

}  // namespace hokt
