#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hokt {

// Node ids are dense 0-based integers per network. Loaders remap external ids
// and keep the mapping alongside the network.
using NodeId = std::uint32_t;

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

// Node -> community label. Indexed by node id over the network universe;
// kAbsent marks nodes not present in the underlying snapshot. Labels are
// arbitrary non-negative ints and need not be contiguous.
struct Partition {
  static constexpr int kAbsent = -1;

  std::vector<int> labels;

  bool covers(NodeId u) const { return u < labels.size() && labels[u] != kAbsent; }
  int label(NodeId u) const { return labels[u]; }
  std::size_t covered_count() const;

  bool operator==(const Partition&) const = default;
};

// One timestep of a dynamic network: an undirected simple graph over a subset
// of the network's node universe. Immutable after construction.
struct SnapshotGraph {
  std::uint32_t universe_size = 0;
  std::vector<NodeId> nodes;    // present nodes, ascending
  EdgeList edges;               // u < v, sorted, deduplicated
  std::vector<std::vector<NodeId>> adjacency;  // indexed by node id; sorted

  std::size_t node_count() const { return nodes.size(); }
  std::size_t edge_count() const { return edges.size(); }
  bool is_present(NodeId u) const { return u < present_.size() && present_[u] != 0; }
  std::size_t degree(NodeId u) const { return adjacency[u].size(); }
  const std::vector<NodeId>& neighbors(NodeId u) const { return adjacency[u]; }
  bool has_edge(NodeId u, NodeId v) const;

  bool operator==(const SnapshotGraph& o) const {
    return universe_size == o.universe_size && nodes == o.nodes && edges == o.edges;
  }

  // filled by the builders
  std::vector<char> present_;
};

// Ordered sequence of snapshots plus optional ground-truth partitions.
struct DynamicNetwork {
  std::vector<SnapshotGraph> snapshots;
  std::vector<Partition> truth;           // empty, or one per snapshot
  std::vector<std::int64_t> external_ids; // dense id -> external id; empty means identity

  std::size_t timestep_count() const { return snapshots.size(); }
  bool has_truth() const { return !truth.empty(); }
  std::uint32_t universe_size() const {
    return snapshots.empty() ? 0 : snapshots.front().universe_size;
  }

  bool operator==(const DynamicNetwork& o) const {
    return snapshots == o.snapshots && truth == o.truth;
  }
};

// Builds an undirected simple graph with all of 0..node_count-1 present.
// The edge list may contain duplicates and both orientations; self-loops and
// out-of-range endpoints are rejected.
SnapshotGraph build_snapshot(std::uint32_t node_count, const EdgeList& edge_list);

// Same, but only `present` nodes (ascending or not; deduplicated here) exist
// in the snapshot. Edge endpoints must be present.
SnapshotGraph build_snapshot_subset(std::uint32_t universe_size, std::vector<NodeId> present,
                                    const EdgeList& edge_list);

// Labels each present node with its connected component; the label is the
// smallest node id in the component. With extra_edges empty the graph's own
// edges are used; otherwise components are computed over extra_edges alone
// (the base edges are ignored). (u,u) entries in extra_edges are no-ops.
Partition connected_components(const SnapshotGraph& graph, const EdgeList& extra_edges = {});

// Ascending intersection of the two node sets.
std::vector<NodeId> shared_nodes(const SnapshotGraph& a, const SnapshotGraph& b);

// Checks the DynamicNetwork invariants (truth shape/coverage); throws on violation.
void validate_network(const DynamicNetwork& net);

}  // namespace hokt
