#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hokt/graph.hpp"
#include "hokt/metrics.hpp"
#include "hokt/rng.hpp"

namespace hokt {

// Locus-based chromosome: genes[i] names a neighbor of node i (or i itself for
// isolated / absent nodes). Connected components of the (i, genes[i]) edges
// define the communities, so the community count is never a parameter.
struct Genotype {
  std::vector<NodeId> genes;

  bool operator==(const Genotype&) const = default;
};

struct Individual {
  Genotype genotype;
  Partition phenotype;
  ObjectiveVector objectives;
  std::uint32_t rank = 0;
  double crowding = 0.0;
};

struct EvoConfig {
  std::size_t pop_size = 200;
  std::size_t generations = 100;
  double p_crossover = 0.8;
  double p_mutation = 0.2;
  std::uint64_t seed = 0;
};

// Throws on pop_size < 4 / odd pop_size / probabilities outside [0,1].
void validate_evo_config(const EvoConfig& cfg);

using ObjectiveFn = std::function<ObjectiveVector(const Genotype&, const Partition&)>;

// Decodes a genotype into its community partition.
Partition decode(const SnapshotGraph& graph, const Genotype& g);

std::vector<Genotype> init_population(const SnapshotGraph& graph, const EvoConfig& cfg, Rng& rng);

// Positional mix of two parents: mask 1 takes parent2's gene, 0 parent1's.
Genotype uniform_crossover(const Genotype& p1, const Genotype& p2,
                           std::span<const std::uint8_t> mask);
Genotype uniform_crossover(const Genotype& p1, const Genotype& p2, Rng& rng);

// Per-gene mutation: with probability p_mutation the gene is redrawn uniformly
// from the node's other neighbors, so a mutation event on a degree>=2 node
// always changes the allele. Degree-1 and isolated nodes are left alone.
Genotype mutate(const Genotype& g, const SnapshotGraph& graph, double p_mutation, Rng& rng);

// NSGA-II non-dominated sorting with both objectives maximized. Returns
// fronts as index lists; indices ascend within each front.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    std::span<const ObjectiveVector> objs);

// Fronts of size <= 2 are all-boundary (+inf). An objective that is constant
// over the front contributes 0 to everyone.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> front_objs);

// Two uniform picks; lower rank wins, then larger crowding, then the first pick.
const Individual& binary_tournament(std::span<const Individual> pop, Rng& rng);

// (mu+lambda) NSGA-II loop; returns the final first front in population order.
std::vector<Individual> run_nsga2(const SnapshotGraph& graph, const ObjectiveFn& objective_eval,
                                  const EvoConfig& cfg, Rng& rng);

// Max modularity, then max smoothness, then lowest phenotype label sequence.
const Individual& pick_solution(std::span<const Individual> front);

}  // namespace hokt
