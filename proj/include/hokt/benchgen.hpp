#pragma once

#include <cstdint>
#include <string>

#include "hokt/graph.hpp"
#include "hokt/rng.hpp"

namespace hokt {

// Rotating-membership benchmark: four communities of 32 nodes, every node with
// ~node_degree edges of which z_out leave its community; each step moves
// moves_per_community nodes out of every community into a random other one and
// rewires just those nodes.
struct SynfixSpec {
  std::uint32_t communities = 4;
  std::uint32_t community_size = 32;
  std::uint32_t node_degree = 16;
  std::uint32_t z_out = 5;
  std::uint32_t timesteps = 10;
  std::uint32_t moves_per_community = 3;
  std::uint64_t seed = 0;
};

enum class EventKind { birth_death, expand_contract, intermittent, merge_split };

const char* to_string(EventKind k);

// Event-driven benchmark: a planted-partition network where each step applies
// one event family to ~affected_fraction of the communities.
struct EventSpec {
  EventKind kind = EventKind::birth_death;
  std::uint32_t nodes = 1000;
  std::uint32_t mean_degree = 15;
  std::uint32_t timesteps = 5;
  double affected_fraction = 0.10;
  double resize_fraction = 0.25;
  std::uint64_t seed = 0;
  // generator internals, overridable
  std::uint32_t communities = 40;
  double intra_fraction = 0.8;
};

DynamicNetwork gen_synfix(const SynfixSpec& spec);

DynamicNetwork gen_events(const EventSpec& spec);

// Keeps timesteps 1, 1+stride, 1+2*stride, ... and reindexes them contiguously.
DynamicNetwork great_change_subsample(const DynamicNetwork& net, std::uint32_t stride = 2);

}  // namespace hokt
