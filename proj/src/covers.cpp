#include "oideal/covers.hpp"

#include <algorithm>

namespace oideal {

bool is_vertex_cover(const WeightedOrientedGraph& g, Mask cover) {
  if (cover & ~g.all()) fail(errc::unknown_vertex, "cover contains an unknown vertex");
  Mask outside = g.all() & ~cover;
  for (int v : mask_to_indices(outside))
    if (g.nbrs(v) & outside) return false;  // an edge with both ends uncovered
  return true;
}

CoverAnalysis l_partition(const WeightedOrientedGraph& g, Mask cover) {
  if (!is_vertex_cover(g, cover)) fail(errc::not_a_cover, "the given set is not a vertex cover");
  CoverAnalysis a;
  a.cover = cover;
  const Mask outside = g.all() & ~cover;
  for (int v : mask_to_indices(cover)) {
    if (g.out_nbrs(v) & outside)
      a.l1 |= Mask(1) << v;
    else if (g.in_nbrs(v) & outside)
      a.l2 |= Mask(1) << v;
    else
      a.l3 |= Mask(1) << v;
  }
  // Closed form L3 = {x in C : N(x) subset C}.
  Mask l3_direct = 0;
  for (int v : mask_to_indices(cover))
    if (!(g.nbrs(v) & outside)) l3_direct |= Mask(1) << v;
  if (l3_direct != a.l3) fail(errc::verification_failure, "L3 cross-check failed");

  a.is_minimal = (a.l3 == 0);
  a.is_strong = true;
  for (int v : mask_to_indices(a.l3)) {
    Mask candidates = g.in_nbrs(v) & g.weighted() & (a.l2 | a.l3);
    if (!candidates) {
      a.is_strong = false;
      a.strong_witness.clear();
      break;
    }
    a.strong_witness[v] = lowest_bit(candidates);
  }
  return a;
}

bool is_minimal_cover(const WeightedOrientedGraph& g, Mask cover) {
  return l_partition(g, cover).is_minimal;
}

bool is_strong_cover(const WeightedOrientedGraph& g, Mask cover) {
  return l_partition(g, cover).is_strong;
}

namespace {

void collect_covers(const WeightedOrientedGraph& g, Mask chosen, std::size_t edge_idx,
                    std::vector<Mask>& out) {
  const auto& edges = g.edges();
  while (edge_idx < edges.size()) {
    auto [t, h] = edges[edge_idx];
    if (!((chosen >> t & 1u) || (chosen >> h & 1u))) break;
    ++edge_idx;
  }
  if (edge_idx == edges.size()) {
    out.push_back(chosen);
    return;
  }
  auto [t, h] = edges[edge_idx];
  collect_covers(g, chosen | Mask(1) << t, edge_idx + 1, out);
  collect_covers(g, chosen | Mask(1) << h, edge_idx + 1, out);
}

}  // namespace

std::vector<Mask> enumerate_minimal_covers(const WeightedOrientedGraph& g, int cap) {
  if (g.size() > cap)
    fail(errc::size_cap, "minimal-cover enumeration capped at " + std::to_string(cap) +
                             " vertices, got " + std::to_string(g.size()));
  std::vector<Mask> covers;
  collect_covers(g, 0, 0, covers);
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  std::vector<Mask> minimal;
  for (Mask c : covers) {
    bool keep = true;
    for (Mask d : covers)
      if (d != c && (d & ~c) == 0) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), mask_less);
  return minimal;
}

std::vector<CoverAnalysis> enumerate_strong_covers(const WeightedOrientedGraph& g, int cap) {
  if (g.size() > cap)
    fail(errc::size_cap, "strong-cover enumeration capped at " + std::to_string(cap) +
                             " vertices, got " + std::to_string(g.size()));
  const int n = g.size();
  std::vector<CoverAnalysis> out;
  // Scan complements: C is a cover iff V \ C is independent.
  const Mask full = g.all();
  for (Mask comp = 0;; ++comp) {
    bool independent = true;
    for (Mask r = comp; r; r &= r - 1)
      if (g.nbrs(lowest_bit(r)) & comp) {
        independent = false;
        break;
      }
    if (independent) {
      CoverAnalysis a = l_partition(g, full & ~comp);
      if (a.is_strong) out.push_back(std::move(a));
    }
    if (comp == full) break;
  }
  std::sort(out.begin(), out.end(),
            [](const CoverAnalysis& a, const CoverAnalysis& b) { return mask_less(a.cover, b.cover); });
  (void)n;
  return out;
}

bool full_vertex_set_strong(const WeightedOrientedGraph& g) {
  for (int v = 0; v < g.size(); ++v)
    if (!(g.in_nbrs(v) & g.weighted())) return false;
  return true;
}

std::optional<UnicyclePartition> unicycle_partition(const WeightedOrientedGraph& g) {
  if (!full_vertex_set_strong(g)) return std::nullopt;
  UnicyclePartition blocks;
  Mask remaining = g.all();
  while (remaining) {
    // Walk in-neighbors inside V+ until the walk closes a cycle.
    const int start = lowest_bit(remaining);
    std::vector<int> walk{start};
    std::vector<int> pos(g.size(), -1);
    pos[start] = 0;
    int cycle_from = -1;
    for (;;) {
      Mask candidates = g.in_nbrs(walk.back()) & g.weighted() & remaining;
      if (!candidates) return std::nullopt;  // V restricted to `remaining` is not strong
      int next = lowest_bit(candidates);
      if (pos[next] != -1) {
        cycle_from = pos[next];
        break;
      }
      pos[next] = static_cast<int>(walk.size());
      walk.push_back(next);
    }
    UnicycleBlock block;
    for (std::size_t i = cycle_from; i < walk.size(); ++i) {
      block.cycle.push_back(walk[i]);
      block.vertices |= Mask(1) << walk[i];
    }
    for (std::size_t i = cycle_from + 1; i < walk.size(); ++i)
      block.edges.emplace_back(walk[i], walk[i - 1]);
    block.edges.emplace_back(walk[cycle_from], walk.back());
    // Grow to a maximal block: attach any vertex fed by a weighted member.
    for (bool grew = true; grew;) {
      grew = false;
      for (int y : mask_to_indices(block.vertices & g.weighted())) {
        Mask fresh = g.out_nbrs(y) & remaining & ~block.vertices;
        for (int x : mask_to_indices(fresh)) {
          block.vertices |= Mask(1) << x;
          block.edges.emplace_back(y, x);
          grew = true;
        }
      }
    }
    remaining &= ~block.vertices;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_unicycle_oriented(const WeightedOrientedGraph& g) {
  const int n = g.size();
  if (n < 3) return false;
  SimpleGraph s = underlying_graph(g);
  if (static_cast<int>(s.edges.size()) != n) return false;
  // Connectivity.
  Mask comp = 1;
  for (;;) {
    Mask grown = comp;
    for (int v : mask_to_indices(comp)) grown |= s.adj[v];
    if (grown == comp) break;
    comp = grown;
  }
  if (comp != g.all()) return false;
  // Strip leaves; what remains is the unique cycle.
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = s.degree(v);
  Mask cycle = g.all();
  for (bool changed = true; changed;) {
    changed = false;
    for (int v : mask_to_indices(cycle))
      if (deg[v] <= 1) {
        cycle &= ~(Mask(1) << v);
        for (int u : mask_to_indices(s.adj[v] & cycle)) --deg[u];
        changed = true;
      }
  }
  // The cycle must be oriented: inside it every vertex has one in- and one
  // out-edge.
  for (int v : mask_to_indices(cycle)) {
    if (popcount(g.out_nbrs(v) & cycle) != 1) return false;
    if (popcount(g.in_nbrs(v) & cycle) != 1) return false;
  }
  // Every other vertex must be reachable from the cycle by an oriented path.
  Mask reached = cycle;
  for (;;) {
    Mask grown = reached;
    for (int v : mask_to_indices(reached)) grown |= g.out_nbrs(v);
    if (grown == reached) break;
    reached = grown;
  }
  if (reached != g.all()) return false;
  // Weight condition on vertices of degree >= 2 (the proofs need degree >= 2,
  // not the stated >= 1).
  for (int v = 0; v < n; ++v)
    if (s.degree(v) >= 2 && g.weight(v) == 1) return false;
  return true;
}

}  // namespace oideal
