#include "hokt/graph.hpp"

#include <algorithm>
#include <numeric>

#include "hokt/error.hpp"

namespace hokt {

std::size_t Partition::covered_count() const {
  std::size_t n = 0;
  for (int l : labels)
    if (l != kAbsent) ++n;
  return n;
}

bool SnapshotGraph::has_edge(NodeId u, NodeId v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

namespace {

SnapshotGraph finish_build(std::uint32_t universe_size, std::vector<NodeId> present,
                           const EdgeList& edge_list) {
  SnapshotGraph g;
  g.universe_size = universe_size;
  g.present_.assign(universe_size, 0);
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  for (NodeId u : present) {
    if (u >= universe_size) throw input_error("node id " + std::to_string(u) + " out of range");
    g.present_[u] = 1;
  }
  g.nodes = std::move(present);

  EdgeList norm;
  norm.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u == v) throw input_error("self-loop at node " + std::to_string(u));
    if (!g.is_present(u) || !g.is_present(v))
      throw input_error("edge endpoint not in snapshot: (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
    if (u > v) std::swap(u, v);
    norm.emplace_back(u, v);
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  g.edges = std::move(norm);

  g.adjacency.assign(universe_size, {});
  for (auto [u, v] : g.edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

}  // namespace

SnapshotGraph build_snapshot(std::uint32_t node_count, const EdgeList& edge_list) {
  std::vector<NodeId> all(node_count);
  std::iota(all.begin(), all.end(), NodeId{0});
  return finish_build(node_count, std::move(all), edge_list);
}

SnapshotGraph build_snapshot_subset(std::uint32_t universe_size, std::vector<NodeId> present,
                                    const EdgeList& edge_list) {
  return finish_build(universe_size, std::move(present), edge_list);
}

namespace {

// Union-find with path halving.
struct DisjointSets {
  std::vector<NodeId> parent;

  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), NodeId{0});
  }
  NodeId find(NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;  // keep the smaller id as root
    else parent[a] = b;
  }
};

}  // namespace

Partition connected_components(const SnapshotGraph& graph, const EdgeList& extra_edges) {
  DisjointSets ds(graph.universe_size);
  if (extra_edges.empty()) {
    for (auto [u, v] : graph.edges) ds.unite(u, v);
  } else {
    for (auto [u, v] : extra_edges) {
      if (!graph.is_present(u) || !graph.is_present(v))
        throw input_error("component edge endpoint not in snapshot: (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
      if (u != v) ds.unite(u, v);
    }
  }
  Partition p;
  p.labels.assign(graph.universe_size, Partition::kAbsent);
  for (NodeId u : graph.nodes) p.labels[u] = static_cast<int>(ds.find(u));
  return p;
}

std::vector<NodeId> shared_nodes(const SnapshotGraph& a, const SnapshotGraph& b) {
  std::vector<NodeId> out;
  std::set_intersection(a.nodes.begin(), a.nodes.end(), b.nodes.begin(), b.nodes.end(),
                        std::back_inserter(out));
  return out;
}

void validate_network(const DynamicNetwork& net) {
  if (net.snapshots.empty()) throw input_error("network has no snapshots");
  const std::uint32_t n = net.snapshots.front().universe_size;
  for (const auto& g : net.snapshots)
    if (g.universe_size != n) throw internal_error("snapshots disagree on universe size");
  if (net.has_truth()) {
    if (net.truth.size() != net.snapshots.size())
      throw input_error("truth must have one partition per snapshot");
    for (std::size_t t = 0; t < net.truth.size(); ++t) {
      const auto& g = net.snapshots[t];
      const auto& p = net.truth[t];
      if (p.labels.size() != n) throw input_error("truth partition has wrong universe size");
      for (NodeId u = 0; u < n; ++u) {
        if (g.is_present(u) != p.covers(u))
          throw input_error("truth at step " + std::to_string(t + 1) +
                            " does not cover exactly the snapshot's nodes");
      }
    }
  }
}

}  // namespace hokt
