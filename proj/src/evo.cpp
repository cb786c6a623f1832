#include "hokt/evo.hpp"

#include <algorithm>
#include <limits>

#include "hokt/error.hpp"

namespace hokt {

void validate_evo_config(const EvoConfig& cfg) {
  if (cfg.pop_size < 4 || cfg.pop_size % 2 != 0)
    throw config_error("pop_size must be even and >= 4");
  if (cfg.p_crossover < 0.0 || cfg.p_crossover > 1.0)
    throw config_error("p_crossover must be in [0,1]");
  if (cfg.p_mutation < 0.0 || cfg.p_mutation > 1.0)
    throw config_error("p_mutation must be in [0,1]");
}

Partition decode(const SnapshotGraph& graph, const Genotype& g) {
  EdgeList locus;
  locus.reserve(graph.node_count());
  for (NodeId u : graph.nodes) locus.emplace_back(u, g.genes[u]);
  return connected_components(graph, locus);
}

std::vector<Genotype> init_population(const SnapshotGraph& graph, const EvoConfig& cfg, Rng& rng) {
  if (graph.node_count() == 0) throw input_error("cannot initialize a population on an empty graph");
  std::vector<Genotype> pop(cfg.pop_size);
  for (auto& g : pop) {
    g.genes.resize(graph.universe_size);
    for (NodeId u = 0; u < graph.universe_size; ++u) g.genes[u] = u;
    for (NodeId u : graph.nodes) {
      const auto& nbrs = graph.neighbors(u);
      if (!nbrs.empty()) g.genes[u] = nbrs[rng.index(nbrs.size())];
    }
  }
  return pop;
}

Genotype uniform_crossover(const Genotype& p1, const Genotype& p2,
                           std::span<const std::uint8_t> mask) {
  if (p1.genes.size() != p2.genes.size() || mask.size() != p1.genes.size())
    throw internal_error("crossover length mismatch");
  Genotype child;
  child.genes.resize(p1.genes.size());
  for (std::size_t i = 0; i < mask.size(); ++i)
    child.genes[i] = mask[i] ? p2.genes[i] : p1.genes[i];
  return child;
}

Genotype uniform_crossover(const Genotype& p1, const Genotype& p2, Rng& rng) {
  std::vector<std::uint8_t> mask(p1.genes.size());
  for (auto& b : mask) b = static_cast<std::uint8_t>(rng.below(2));
  return uniform_crossover(p1, p2, mask);
}

Genotype mutate(const Genotype& g, const SnapshotGraph& graph, double p_mutation, Rng& rng) {
  Genotype out = g;
  for (NodeId u : graph.nodes) {
    const auto& nbrs = graph.neighbors(u);
    if (nbrs.size() < 2) continue;  // degree-1 redraw is a no-op, isolated never mutates
    if (!rng.bernoulli(p_mutation)) continue;
    // uniform over the neighbors other than the current allele
    const auto cur = static_cast<std::size_t>(
        std::lower_bound(nbrs.begin(), nbrs.end(), out.genes[u]) - nbrs.begin());
    std::size_t k = rng.index(nbrs.size() - 1);
    if (k >= cur) ++k;
    out.genes[u] = nbrs[k];
  }
  return out;
}

namespace {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  return a.q >= b.q && a.smooth >= b.smooth && (a.q > b.q || a.smooth > b.smooth);
}

}  // namespace

std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    std::span<const ObjectiveVector> objs) {
  const std::size_t n = objs.size();
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<std::size_t> dom_count(n, 0);
  std::vector<std::vector<std::size_t>> fronts;

  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (dominates(objs[i], objs[j])) dominated[i].push_back(j);
      else if (dominates(objs[j], objs[i])) ++dom_count[i];
    }
    if (dom_count[i] == 0) current.push_back(i);
  }
  while (!current.empty()) {
    fronts.push_back(current);
    std::vector<std::size_t> next;
    for (std::size_t i : fronts.back())
      for (std::size_t j : dominated[i])
        if (--dom_count[j] == 0) next.push_back(j);
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front_objs) {
  const std::size_t n = front_objs.size();
  const double inf = std::numeric_limits<double>::infinity();
  if (n <= 2) return std::vector<double>(n, inf);

  std::vector<double> dist(n, 0.0);
  auto accumulate = [&](auto key) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    const double lo = key(order.front()), hi = key(order.back());
    if (hi == lo) return;  // constant objective contributes nothing
    dist[order.front()] = inf;
    dist[order.back()] = inf;
    for (std::size_t k = 1; k + 1 < n; ++k) {
      if (dist[order[k]] == inf) continue;
      dist[order[k]] += (key(order[k + 1]) - key(order[k - 1])) / (hi - lo);
    }
  };
  accumulate([&](std::size_t i) { return front_objs[i].q; });
  accumulate([&](std::size_t i) { return front_objs[i].smooth; });
  return dist;
}

const Individual& binary_tournament(std::span<const Individual> pop, Rng& rng) {
  if (pop.empty()) throw internal_error("tournament over empty population");
  const Individual& a = pop[rng.index(pop.size())];
  const Individual& b = pop[rng.index(pop.size())];
  if (b.rank < a.rank) return b;
  if (a.rank < b.rank) return a;
  if (b.crowding > a.crowding) return b;
  return a;  // ties go to the first pick
}

namespace {

void assign_rank_and_crowding(std::vector<Individual>& pop) {
  std::vector<ObjectiveVector> objs(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) objs[i] = pop[i].objectives;
  const auto fronts = fast_nondominated_sort(objs);
  for (std::size_t f = 0; f < fronts.size(); ++f) {
    std::vector<ObjectiveVector> fo;
    fo.reserve(fronts[f].size());
    for (std::size_t i : fronts[f]) fo.push_back(objs[i]);
    const auto cd = crowding_distance(fo);
    for (std::size_t k = 0; k < fronts[f].size(); ++k) {
      pop[fronts[f][k]].rank = static_cast<std::uint32_t>(f);
      pop[fronts[f][k]].crowding = cd[k];
    }
  }
}

Individual make_individual(const SnapshotGraph& graph, Genotype g, const ObjectiveFn& eval) {
  Individual ind;
  ind.phenotype = decode(graph, g);
  ind.objectives = eval(g, ind.phenotype);
  ind.genotype = std::move(g);
  return ind;
}

}  // namespace

std::vector<Individual> run_nsga2(const SnapshotGraph& graph, const ObjectiveFn& objective_eval,
                                  const EvoConfig& cfg, Rng& rng) {
  validate_evo_config(cfg);

  std::vector<Individual> pop;
  pop.reserve(cfg.pop_size);
  for (auto& g : init_population(graph, cfg, rng))
    pop.push_back(make_individual(graph, std::move(g), objective_eval));
  assign_rank_and_crowding(pop);

  for (std::size_t gen = 0; gen < cfg.generations; ++gen) {
    std::vector<Individual> merged;
    merged.reserve(2 * cfg.pop_size);
    for (std::size_t pair = 0; pair < cfg.pop_size / 2; ++pair) {
      const Individual& pa = binary_tournament(pop, rng);
      const Individual& pb = binary_tournament(pop, rng);
      Genotype c1, c2;
      if (rng.bernoulli(cfg.p_crossover)) {
        c1 = uniform_crossover(pa.genotype, pb.genotype, rng);
        c2 = uniform_crossover(pa.genotype, pb.genotype, rng);
      } else {
        c1 = pa.genotype;
        c2 = pb.genotype;
      }
      merged.push_back(make_individual(graph, mutate(c1, graph, cfg.p_mutation, rng),
                                       objective_eval));
      merged.push_back(make_individual(graph, mutate(c2, graph, cfg.p_mutation, rng),
                                       objective_eval));
    }
    for (auto& ind : pop) merged.push_back(std::move(ind));

    // survivor selection: whole fronts first, the split front by crowding
    std::vector<ObjectiveVector> objs(merged.size());
    for (std::size_t i = 0; i < merged.size(); ++i) objs[i] = merged[i].objectives;
    const auto fronts = fast_nondominated_sort(objs);

    std::vector<Individual> next;
    next.reserve(cfg.pop_size);
    for (std::size_t f = 0; f < fronts.size() && next.size() < cfg.pop_size; ++f) {
      std::vector<ObjectiveVector> fo;
      fo.reserve(fronts[f].size());
      for (std::size_t i : fronts[f]) fo.push_back(objs[i]);
      const auto cd = crowding_distance(fo);

      std::vector<std::size_t> order(fronts[f].size());
      for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
      if (fronts[f].size() > cfg.pop_size - next.size()) {
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return cd[x] > cd[y]; });
      }
      for (std::size_t k : order) {
        if (next.size() == cfg.pop_size) break;
        Individual ind = std::move(merged[fronts[f][k]]);
        ind.rank = static_cast<std::uint32_t>(f);
        ind.crowding = cd[k];
        next.push_back(std::move(ind));
      }
    }
    pop = std::move(next);
  }

  std::vector<Individual> front;
  for (const auto& ind : pop)
    if (ind.rank == 0) front.push_back(ind);
  return front;
}

const Individual& pick_solution(std::span<const Individual> front) {
  if (front.empty()) throw internal_error("pick_solution on an empty front");
  const Individual* best = &front[0];
  for (const auto& ind : front.subspan(1)) {
    if (ind.objectives.q > best->objectives.q) {
      best = &ind;
    } else if (ind.objectives.q == best->objectives.q) {
      if (ind.objectives.smooth > best->objectives.smooth) {
        best = &ind;
      } else if (ind.objectives.smooth == best->objectives.smooth &&
                 ind.phenotype.labels < best->phenotype.labels) {
        best = &ind;
      }
    }
  }
  return *best;
}

}  // namespace hokt
