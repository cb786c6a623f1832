#include "hokt/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "hokt/error.hpp"

namespace hokt {

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::birth_death: return "birth_death";
    case EventKind::expand_contract: return "expand_contract";
    case EventKind::intermittent: return "intermittent";
    case EventKind::merge_split: return "merge_split";
  }
  return "unknown";
}

namespace {

// Mutable edge set used while generating; exported as a sorted edge list.
struct EdgeBuilder {
  std::vector<std::set<NodeId>> adj;

  explicit EdgeBuilder(std::uint32_t n) : adj(n) {}

  bool has(NodeId u, NodeId v) const { return adj[u].count(v) != 0; }
  void add(NodeId u, NodeId v) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  void remove_incident(NodeId u) {
    for (NodeId v : adj[u]) adj[v].erase(u);
    adj[u].clear();
  }
  std::size_t degree(NodeId u) const { return adj[u].size(); }

  EdgeList edges() const {
    EdgeList out;
    for (NodeId u = 0; u < adj.size(); ++u)
      for (NodeId v : adj[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }
};

// Configuration-model style pairing: keeps reshuffling the stubs that failed
// (self-pair, duplicate edge, forbidden pair); whatever survives `rounds`
// passes is dropped, so realized degrees can fall short by a little.
template <class Forbid>
void pair_stubs(std::vector<NodeId> stubs, EdgeBuilder& eb, Forbid forbid, Rng& rng,
                int rounds = 40) {
  for (int round = 0; round < rounds && stubs.size() >= 2; ++round) {
    rng.shuffle(stubs);
    std::vector<NodeId> leftover;
    std::size_t i = 0;
    for (; i + 1 < stubs.size(); i += 2) {
      const NodeId u = stubs[i], v = stubs[i + 1];
      if (u == v || eb.has(u, v) || forbid(u, v)) {
        leftover.push_back(u);
        leftover.push_back(v);
      } else {
        eb.add(u, v);
      }
    }
    if (i < stubs.size()) leftover.push_back(stubs[i]);
    stubs = std::move(leftover);
  }
}

// k distinct picks from `pool`, consumed via partial Fisher-Yates.
std::vector<NodeId> sample_without_replacement(std::vector<NodeId> pool, std::size_t k, Rng& rng) {
  k = std::min(k, pool.size());
  std::vector<NodeId> out;
  out.reserve(k);
  std::size_t remaining = pool.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = rng.index(remaining);
    out.push_back(pool[j]);
    pool[j] = pool[--remaining];
  }
  return out;
}

Partition truth_from(const std::vector<int>& comm_of, const std::vector<char>& hidden) {
  Partition p;
  p.labels.assign(comm_of.size(), Partition::kAbsent);
  for (std::size_t u = 0; u < comm_of.size(); ++u)
    if (!hidden[u]) p.labels[u] = comm_of[u];
  return p;
}

}  // namespace

DynamicNetwork gen_synfix(const SynfixSpec& spec) {
  if (spec.communities * spec.community_size != 128)
    throw generation_error("synfix requires communities * community_size == 128");
  if (spec.communities < 2) throw generation_error("synfix needs at least two communities");
  if (spec.z_out >= spec.node_degree)
    throw generation_error("synfix requires z_out < node_degree");
  if (spec.node_degree - spec.z_out > spec.community_size - 1)
    throw generation_error("synfix intra degree exceeds community capacity");
  if (spec.timesteps < 1) throw generation_error("synfix needs at least one timestep");
  if (spec.moves_per_community > spec.community_size)
    throw generation_error("synfix moves_per_community exceeds community size");

  const std::uint32_t n = spec.communities * spec.community_size;
  const std::uint32_t intra_deg = spec.node_degree - spec.z_out;
  Rng rng(spec.seed);

  std::vector<int> comm_of(n);
  for (NodeId u = 0; u < n; ++u) comm_of[u] = static_cast<int>(u / spec.community_size);
  const std::vector<char> all_visible(n, 0);

  auto members_of = [&](int c) {
    std::vector<NodeId> m;
    for (NodeId u = 0; u < n; ++u)
      if (comm_of[u] == c) m.push_back(u);
    return m;
  };

  EdgeBuilder eb(n);
  // first snapshot: stub matching, intra per community then global inter
  for (std::uint32_t c = 0; c < spec.communities; ++c) {
    std::vector<NodeId> stubs;
    for (NodeId u : members_of(static_cast<int>(c)))
      for (std::uint32_t k = 0; k < intra_deg; ++k) stubs.push_back(u);
    pair_stubs(std::move(stubs), eb, [](NodeId, NodeId) { return false; }, rng);
  }
  {
    std::vector<NodeId> stubs;
    for (NodeId u = 0; u < n; ++u)
      for (std::uint32_t k = 0; k < spec.z_out; ++k) stubs.push_back(u);
    pair_stubs(std::move(stubs), eb,
               [&](NodeId u, NodeId v) { return comm_of[u] == comm_of[v]; }, rng);
  }

  DynamicNetwork net;
  net.snapshots.push_back(build_snapshot(n, eb.edges()));
  net.truth.push_back(truth_from(comm_of, all_visible));

  for (std::uint32_t t = 2; t <= spec.timesteps; ++t) {
    // pick movers from the membership as it stood at t-1
    std::vector<std::pair<NodeId, int>> movers;  // (node, old community)
    for (std::uint32_t c = 0; c < spec.communities; ++c) {
      const auto picked =
          sample_without_replacement(members_of(static_cast<int>(c)),
                                     spec.moves_per_community, rng);
      for (NodeId u : picked) movers.emplace_back(u, static_cast<int>(c));
    }
    for (auto [u, old_c] : movers) {
      std::uint32_t k = static_cast<std::uint32_t>(rng.below(spec.communities - 1));
      if (static_cast<int>(k) >= old_c) ++k;
      comm_of[u] = static_cast<int>(k);
    }
    // rewire each mover to the degree recipe under its new membership
    for (auto [u, old_c] : movers) {
      (void)old_c;
      eb.remove_incident(u);
      std::vector<NodeId> in_pool, out_pool;
      for (NodeId v = 0; v < n; ++v) {
        if (v == u) continue;
        (comm_of[v] == comm_of[u] ? in_pool : out_pool).push_back(v);
      }
      for (NodeId v : sample_without_replacement(std::move(in_pool), intra_deg, rng))
        eb.add(u, v);
      for (NodeId v : sample_without_replacement(std::move(out_pool), spec.z_out, rng))
        eb.add(u, v);
    }
    net.snapshots.push_back(build_snapshot(n, eb.edges()));
    net.truth.push_back(truth_from(comm_of, all_visible));
  }
  return net;
}

namespace {

// State shared by the four event families.
struct EventWorld {
  const EventSpec& spec;
  std::uint32_t n;
  std::uint32_t intra_deg;
  std::vector<int> comm_of;
  std::vector<char> hidden;
  int next_community_id;
  EdgeBuilder eb;
  Rng rng;

  explicit EventWorld(const EventSpec& s)
      : spec(s),
        n(s.nodes),
        intra_deg(static_cast<std::uint32_t>(std::lround(s.mean_degree * s.intra_fraction))),
        comm_of(s.nodes, 0),
        hidden(s.nodes, 0),
        next_community_id(static_cast<int>(s.communities)),
        eb(s.nodes),
        rng(s.seed) {}

  std::vector<int> live_communities() const {
    std::set<int> ids;
    for (NodeId u = 0; u < n; ++u)
      if (!hidden[u]) ids.insert(comm_of[u]);
    return {ids.begin(), ids.end()};
  }

  std::vector<NodeId> visible_members(int c) const {
    std::vector<NodeId> m;
    for (NodeId u = 0; u < n; ++u)
      if (!hidden[u] && comm_of[u] == c) m.push_back(u);
    return m;
  }

  std::vector<NodeId> visible_nodes() const {
    std::vector<NodeId> m;
    for (NodeId u = 0; u < n; ++u)
      if (!hidden[u]) m.push_back(u);
    return m;
  }

  std::size_t community_size(int c) const { return visible_members(c).size(); }

  // uniform pick of k distinct live communities
  std::vector<int> pick_communities(std::size_t k, const std::vector<int>& from) {
    std::vector<int> pool = from;
    std::vector<int> out;
    k = std::min(k, pool.size());
    std::size_t remaining = pool.size();
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = rng.index(remaining);
      out.push_back(pool[j]);
      pool[j] = pool[--remaining];
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // node-centric refill toward the per-node degree recipe
  void rewire(const std::vector<NodeId>& nodes_to_wire) {
    std::vector<NodeId> order = nodes_to_wire;
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    for (NodeId u : order) {
      if (hidden[u]) continue;
      const auto same = visible_members(comm_of[u]);
      const std::size_t intra_target = std::min<std::size_t>(intra_deg, same.size() - 1);
      const std::size_t inter_target = spec.mean_degree - intra_target;

      std::size_t cur_intra = 0, cur_inter = 0;
      for (NodeId v : eb.adj[u]) (comm_of[v] == comm_of[u] ? cur_intra : cur_inter)++;

      std::vector<NodeId> in_pool, out_pool;
      for (NodeId v = 0; v < n; ++v) {
        if (v == u || hidden[v] || eb.has(u, v)) continue;
        (comm_of[v] == comm_of[u] ? in_pool : out_pool).push_back(v);
      }
      if (cur_intra < intra_target)
        for (NodeId v :
             sample_without_replacement(std::move(in_pool), intra_target - cur_intra, rng))
          eb.add(u, v);
      if (cur_inter < inter_target)
        for (NodeId v :
             sample_without_replacement(std::move(out_pool), inter_target - cur_inter, rng))
          eb.add(u, v);
    }
  }

  void snapshot_into(DynamicNetwork& net) {
    net.snapshots.push_back(build_snapshot_subset(n, visible_nodes(), eb.edges()));
    net.truth.push_back(truth_from(comm_of, hidden));
  }
};

}  // namespace

DynamicNetwork gen_events(const EventSpec& spec) {
  if (spec.affected_fraction <= 0.0 || spec.affected_fraction >= 1.0)
    throw generation_error("affected_fraction must be in (0,1)");
  if (spec.resize_fraction <= 0.0 || spec.resize_fraction >= 1.0)
    throw generation_error("resize_fraction must be in (0,1)");
  if (spec.mean_degree >= spec.nodes) throw generation_error("mean_degree must be < nodes");
  if (spec.communities < 4) throw generation_error("need at least four communities");
  if (spec.timesteps < 1) throw generation_error("need at least one timestep");
  if (spec.intra_fraction <= 0.0 || spec.intra_fraction > 1.0)
    throw generation_error("intra_fraction must be in (0,1]");

  EventWorld w(spec);
  const std::uint32_t base_size = spec.nodes / spec.communities;
  if (base_size < 2 || w.intra_deg > base_size - 1)
    throw generation_error("intra degree infeasible for the community size");

  // initial membership: near-equal blocks, remainder spread over the first ones
  {
    std::uint32_t u = 0;
    for (std::uint32_t c = 0; c < spec.communities; ++c) {
      std::uint32_t size = base_size + (c < spec.nodes % spec.communities ? 1 : 0);
      for (std::uint32_t k = 0; k < size; ++k) w.comm_of[u++] = static_cast<int>(c);
    }
  }

  // first snapshot by stub matching
  for (std::uint32_t c = 0; c < spec.communities; ++c) {
    std::vector<NodeId> stubs;
    for (NodeId u : w.visible_members(static_cast<int>(c)))
      for (std::uint32_t k = 0; k < w.intra_deg; ++k) stubs.push_back(u);
    pair_stubs(std::move(stubs), w.eb, [](NodeId, NodeId) { return false; }, w.rng);
  }
  {
    std::vector<NodeId> stubs;
    const std::uint32_t inter_deg = spec.mean_degree - w.intra_deg;
    for (NodeId u = 0; u < w.n; ++u)
      for (std::uint32_t k = 0; k < inter_deg; ++k) stubs.push_back(u);
    pair_stubs(std::move(stubs), w.eb,
               [&](NodeId u, NodeId v) { return w.comm_of[u] == w.comm_of[v]; }, w.rng);
  }

  DynamicNetwork net;
  w.snapshot_into(net);

  for (std::uint32_t t = 2; t <= spec.timesteps; ++t) {
    std::vector<NodeId> to_rewire;

    if (spec.kind == EventKind::intermittent) {
      // last step's hidden communities come back with their old labels
      for (NodeId u = 0; u < w.n; ++u)
        if (w.hidden[u]) {
          w.hidden[u] = 0;
          to_rewire.push_back(u);
        }
    }

    const auto live = w.live_communities();
    const auto affected_count = static_cast<std::size_t>(
        std::ceil(spec.affected_fraction * static_cast<double>(live.size())));

    switch (spec.kind) {
      case EventKind::birth_death: {
        const auto dying = w.pick_communities(affected_count, live);
        std::vector<int> survivors;
        for (int c : live)
          if (!std::binary_search(dying.begin(), dying.end(), c)) survivors.push_back(c);
        if (survivors.empty()) throw generation_error("birth_death left no surviving community");
        for (int d : dying)
          for (NodeId u : w.visible_members(d)) {
            w.comm_of[u] = survivors[w.rng.index(survivors.size())];
            to_rewire.push_back(u);
          }
        const int first_fresh = w.next_community_id;
        for (std::size_t k = 0; k < dying.size(); ++k) {
          const int fresh = w.next_community_id++;
          std::vector<NodeId> pool;  // anyone not already drawn into a fresh community
          for (NodeId u : w.visible_nodes())
            if (w.comm_of[u] < first_fresh) pool.push_back(u);
          for (NodeId u : sample_without_replacement(std::move(pool), base_size, w.rng)) {
            w.comm_of[u] = fresh;
            to_rewire.push_back(u);
          }
        }
        break;
      }
      case EventKind::expand_contract: {
        const auto selected = w.pick_communities(affected_count, live);
        for (std::size_t i = 0; i < selected.size(); ++i) {
          const int c = selected[i];
          const auto members = w.visible_members(c);
          const auto delta = static_cast<std::size_t>(
              std::ceil(spec.resize_fraction * static_cast<double>(members.size())));
          if (i % 2 == 0) {
            // expand: pull nodes from unselected communities
            std::vector<NodeId> pool;
            for (NodeId u : w.visible_nodes())
              if (w.comm_of[u] != c &&
                  !std::binary_search(selected.begin(), selected.end(), w.comm_of[u]))
                pool.push_back(u);
            for (NodeId u : sample_without_replacement(std::move(pool), delta, w.rng)) {
              w.comm_of[u] = c;
              to_rewire.push_back(u);
            }
          } else {
            // contract: push members out to unselected communities
            std::vector<int> targets;
            for (int x : live)
              if (!std::binary_search(selected.begin(), selected.end(), x)) targets.push_back(x);
            if (targets.empty()) throw generation_error("contraction has no target community");
            for (NodeId u : sample_without_replacement(members, delta, w.rng)) {
              w.comm_of[u] = targets[w.rng.index(targets.size())];
              to_rewire.push_back(u);
            }
          }
        }
        break;
      }
      case EventKind::intermittent: {
        const auto hiding = w.pick_communities(affected_count, w.live_communities());
        for (int c : hiding)
          for (NodeId u : w.visible_members(c)) {
            w.hidden[u] = 1;
            w.eb.remove_incident(u);
            std::erase(to_rewire, u);
          }
        break;
      }
      case EventKind::merge_split: {
        const auto selected = w.pick_communities(affected_count, live);
        for (std::size_t i = 0; i + 1 < selected.size(); i += 2) {
          const int merged = w.next_community_id++;
          for (int c : {selected[i], selected[i + 1]})
            for (NodeId u : w.visible_members(c)) {
              w.comm_of[u] = merged;
              to_rewire.push_back(u);
            }
        }
        std::vector<int> rest;
        for (int c : live)
          if (!std::binary_search(selected.begin(), selected.end(), c)) rest.push_back(c);
        const auto splitting = w.pick_communities(selected.size() / 2, rest);
        for (int c : splitting) {
          auto members = w.visible_members(c);
          w.rng.shuffle(members);
          const int half_a = w.next_community_id++;
          const int half_b = w.next_community_id++;
          for (std::size_t k = 0; k < members.size(); ++k) {
            w.comm_of[members[k]] = k < members.size() / 2 ? half_a : half_b;
            to_rewire.push_back(members[k]);
          }
        }
        break;
      }
    }

    // drop stale edges of every node whose community changed, then refill
    for (NodeId u : to_rewire)
      if (!w.hidden[u]) w.eb.remove_incident(u);
    w.rewire(to_rewire);
    w.snapshot_into(net);
  }
  return net;
}

DynamicNetwork great_change_subsample(const DynamicNetwork& net, std::uint32_t stride) {
  if (stride < 1) throw input_error("stride must be >= 1");
  DynamicNetwork out;
  out.external_ids = net.external_ids;
  for (std::size_t i = 0; i < net.timestep_count(); i += stride) {
    out.snapshots.push_back(net.snapshots[i]);
    if (net.has_truth()) out.truth.push_back(net.truth[i]);
  }
  return out;
}

}  // namespace hokt
