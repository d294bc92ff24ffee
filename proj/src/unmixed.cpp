#include "oideal/unmixed.hpp"

#include <algorithm>
#include <array>

namespace oideal {

bool simple_graph_unmixed(const WeightedOrientedGraph& g, int cap) {
  auto covers = enumerate_minimal_covers(g, cap);
  for (const Mask c : covers)
    if (popcount(c) != popcount(covers.front())) return false;
  return true;
}

namespace {

// Minimality by definition: C is minimal iff no one-element deletion covers.
bool definitionally_minimal(const WeightedOrientedGraph& g, Mask cover) {
  for (int v : mask_to_indices(cover))
    if (is_vertex_cover(g, cover & ~(Mask(1) << v))) return false;
  return true;
}

}  // namespace

UnmixedReport is_unmixed(const WeightedOrientedGraph& g, int cap) {
  const auto strong = enumerate_strong_covers(g, cap);
  UnmixedReport r;

  r.criterion_strong_cardinality = true;
  for (const auto& a : strong)
    if (popcount(a.cover) != popcount(strong.front().cover)) {
      r.criterion_strong_cardinality = false;
      r.size_mismatch = {strong.front().cover, a.cover};
      break;
    }

  const bool g_unmixed = simple_graph_unmixed(g, std::max(cap, kMinimalCoverCap));
  r.criterion_graph_unmixed_and_l3 = g_unmixed;
  for (const auto& a : strong)
    if (a.l3 != 0) {
      r.criterion_graph_unmixed_and_l3 = false;
      if (!r.nonminimal_strong_cover) r.nonminimal_strong_cover = a.cover;
    }

  r.criterion_minimal_strong_and_g = g_unmixed;
  for (const auto& a : strong)
    if (!definitionally_minimal(g, a.cover)) {
      r.criterion_minimal_strong_and_g = false;
      if (!r.nonminimal_strong_cover) r.nonminimal_strong_cover = a.cover;
    }

  r.unmixed = r.criterion_strong_cardinality;
  r.agreement = r.criterion_strong_cardinality == r.criterion_graph_unmixed_and_l3 &&
                r.criterion_graph_unmixed_and_l3 == r.criterion_minimal_strong_and_g;
  if (!r.agreement)
    fail(errc::criteria_disagreement, "the three unmixedness criteria disagree");
  return r;
}

bool has_minimal_strong_property(const WeightedOrientedGraph& g, int cap) {
  for (const auto& a : enumerate_strong_covers(g, cap))
    if (a.l3 != 0) return false;
  return true;
}

std::optional<MixednessCertificate> mixedness_fast_certificates(const WeightedOrientedGraph& g) {
  if (g.size() == 0) return std::nullopt;
  MixednessCertificate cert;
  cert.all_vertices_weighted = g.weighted() == g.all();
  cert.full_cover_strong = full_vertex_set_strong(g);
  if (!cert.all_vertices_weighted && !cert.full_cover_strong) return std::nullopt;
  return cert;
}

UnmixedReport check_c_minor_closure(const WeightedOrientedGraph& g, Mask stable_set, int cap) {
  UnmixedReport base = is_unmixed(g, cap);
  if (!base.unmixed)
    fail(errc::verification_failure, "c-minor closure requires an unmixed graph");
  UnmixedReport minor = is_unmixed(c_minor(g, stable_set), cap);
  if (!minor.unmixed)
    fail(errc::verification_failure, "c-minor of an unmixed graph came out mixed");
  return minor;
}

bool unmixed_by_components(const WeightedOrientedGraph& g, int cap) {
  for (const auto& comp : connected_components(g))
    if (!is_unmixed(comp, cap).unmixed) return false;
  return true;
}

CharacterizationResult characterize_whisker(const WeightedOrientedGraph& g) {
  ShapeInfo shape = classify_shape(g);
  if (!shape.whisker) fail(errc::not_a_whisker, "the underlying graph is not a whisker");
  CharacterizationResult r;
  r.applicable = true;
  r.verdict = true;
  r.clause = "every base-to-pendant oriented edge has base weight 1";
  for (auto [base, pendant] : shape.whisker->base_pendant)
    if (g.has_edge(base, pendant) && g.weight(base) != 1) {
      r.verdict = false;
      r.witness = {g.name(base), g.name(pendant)};
      break;
    }
  return r;
}

namespace {

struct MatchingSearch {
  const WeightedOrientedGraph& g;
  const SimpleGraph& s;
  std::vector<int> left, right;
  std::vector<int> partner;  // vertex -> matched vertex

  bool clause1(const std::vector<std::pair<int, int>>& pairs) const {
    // If {l_j, r_i} and {l_i, r_k} are edges, so is {l_j, r_k}.
    for (const auto& [lj, rj] : pairs)
      for (const auto& [li, ri] : pairs) {
        if (!s.has_edge(lj, ri)) continue;
        for (const auto& [lk, rk] : pairs)
          if (s.has_edge(li, rk) && !s.has_edge(lj, rk)) return false;
      }
    return true;
  }

  bool clause2() const {
    for (int z : mask_to_indices(g.weighted()))
      for (int t : mask_to_indices(g.out_nbrs(z))) {
        int p = partner[t];  // in the same part as z
        if (g.nbrs(p) & ~g.out_nbrs(z)) return false;
        if (g.in_nbrs(p) & g.weighted()) return false;
      }
    return true;
  }

  bool search(std::size_t i, Mask used, std::vector<std::pair<int, int>>& pairs) {
    if (i == left.size()) return clause1(pairs) && clause2();
    int l = left[i];
    for (int rv : mask_to_indices(s.adj[l] & ~used)) {
      partner[l] = rv;
      partner[rv] = l;
      pairs.emplace_back(l, rv);
      if (search(i + 1, used | Mask(1) << rv, pairs)) return true;
      pairs.pop_back();
    }
    return false;
  }
};

}  // namespace

CharacterizationResult characterize_bipartite(const WeightedOrientedGraph& g) {
  ShapeInfo shape = classify_shape(g);
  if (!shape.bipartite) fail(errc::not_bipartite, "the underlying graph is not bipartite");
  CharacterizationResult r;
  r.applicable = true;
  SimpleGraph s = underlying_graph(g);
  auto left = mask_to_indices(shape.bipartite->left);
  auto right = mask_to_indices(shape.bipartite->right);
  if (left.size() != right.size()) {
    r.verdict = false;
    r.clause = "no perfect matching between the parts";
    return r;
  }
  MatchingSearch ms{g, s, left, right, std::vector<int>(g.size(), -1)};
  std::vector<std::pair<int, int>> pairs;
  if (ms.search(0, 0, pairs)) {
    r.verdict = true;
    r.clause = "perfect matching with the adjacency and weighted-vertex conditions";
    for (auto [l, rv] : pairs) r.witness.push_back(g.name(l) + "-" + g.name(rv));
  } else {
    r.verdict = false;
    r.clause = "no perfect matching satisfies both conditions";
  }
  return r;
}

namespace {

struct CycleTemplate {
  // Positions 0..4 in cyclic order; heavy marks w != 1.
  std::array<bool, 5> heavy;
  std::vector<std::pair<int, int>> oriented;  // required directed edges
};

// The four exceptional 5-cycles; edges left undrawn-oriented in the source
// figures are unconstrained.
const CycleTemplate kD1{{false, false, true, false, true}, {{1, 0}, {4, 0}, {3, 4}, {3, 2}, {2, 1}}};
const CycleTemplate kD2{{true, true, false, false, false}, {{0, 4}, {1, 0}, {2, 1}}};
const CycleTemplate kD3{{false, false, true, true, true}, {{0, 4}, {4, 3}, {3, 2}}};
const CycleTemplate kD4{{false, true, true, false, true}, {{0, 1}, {1, 2}, {3, 2}, {3, 4}}};

bool matches_template(const WeightedOrientedGraph& g, const std::vector<int>& cycle,
                      const CycleTemplate& tpl) {
  const int n = 5;
  for (int rot = 0; rot < n; ++rot)
    for (int dir : {1, -1}) {
      auto vertex_at = [&](int pos) { return cycle[((rot + dir * pos) % n + n) % n]; };
      bool ok = true;
      for (int pos = 0; pos < n && ok; ++pos)
        if ((g.weight(vertex_at(pos)) != 1) != tpl.heavy[pos]) ok = false;
      for (auto [a, b] : tpl.oriented) {
        if (!ok) break;
        if (!g.has_edge(vertex_at(a), vertex_at(b))) ok = false;
      }
      if (ok) return true;
    }
  return false;
}

}  // namespace

CharacterizationResult characterize_cycle(const WeightedOrientedGraph& g) {
  ShapeInfo shape = classify_shape(g);
  if (!shape.cycle) fail(errc::not_a_cycle, "the underlying graph is not a cycle");
  CharacterizationResult r;
  r.applicable = true;
  const int n = g.size();
  const auto& cycle = *shape.cycle;

  if (n == 3) {
    for (int v = 0; v < n; ++v)
      if (g.weight(v) == 1) {
        r.verdict = true;
        r.clause = "triangle with a weight-1 vertex";
        r.witness = {g.name(v)};
        return r;
      }
  }
  if (n == 4 || n == 5 || n == 7) {
    bool sinks = true;
    for (int v : mask_to_indices(g.weighted()))
      if (g.out_nbrs(v)) sinks = false;
    if (sinks) {
      r.verdict = true;
      r.clause = "n in {4,5,7} and the weighted vertices are sinks";
      return r;
    }
  }
  if (n == 5) {
    if (matches_template(g, cycle, kD4)) {
      r.verdict = true;
      r.clause = "isomorphic to the exceptional unmixed 5-cycle D4";
      return r;
    }
    bool light_edge = false;
    std::pair<int, int> witness_edge;
    for (auto [t, h] : g.edges())
      if (g.weight(t) == 1 && g.weight(h) == 1) {
        light_edge = true;
        witness_edge = {t, h};
        break;
      }
    if (light_edge && !matches_template(g, cycle, kD1) && !matches_template(g, cycle, kD2) &&
        !matches_template(g, cycle, kD3)) {
      r.verdict = true;
      r.clause = "5-cycle with a weight-1 edge, not isomorphic to D1, D2 or D3";
      r.witness = {g.name(witness_edge.first), g.name(witness_edge.second)};
      return r;
    }
  }
  r.verdict = false;
  r.clause = "no clause of the cycle theorem applies";
  return r;
}

CharacterizationResult cm_path(const WeightedOrientedGraph& g) {
  ShapeInfo shape = classify_shape(g);
  if (!shape.path) fail(errc::not_a_path, "the underlying graph is not a path");
  CharacterizationResult r;
  r.applicable = true;
  const auto& p = *shape.path;
  const int k = g.size();
  if (k == 2) {
    r.verdict = true;
    r.clause = "single edge";
    return r;
  }
  if (k == 4) {
    bool head_ok = !g.has_edge(p[1], p[0]) || g.weight(p[1]) == 1;
    bool tail_ok = !g.has_edge(p[2], p[3]) || g.weight(p[2]) == 1;
    r.verdict = head_ok && tail_ok;
    r.clause = r.verdict ? "4-path with the boundary weight conditions"
                         : "4-path violating a boundary weight condition";
    if (!head_ok) r.witness = {g.name(p[1])};
    if (!tail_ok) r.witness.push_back(g.name(p[2]));
    return r;
  }
  r.verdict = false;
  r.clause = "paths are Cohen-Macaulay only for 2 or 4 vertices";
  return r;
}

CharacterizationResult cm_complete(const WeightedOrientedGraph& g) {
  ShapeInfo shape = classify_shape(g);
  if (!shape.complete) fail(errc::not_complete, "the underlying graph is not complete");
  CharacterizationResult r;
  r.applicable = true;
  const bool full_strong = full_vertex_set_strong(g);
  if (unicycle_partition(g).has_value() != full_strong)
    fail(errc::verification_failure, "unicycle partition disagrees with the V-strong test");
  r.verdict = !full_strong;
  r.clause = r.verdict ? "no unicycle partition of the vertex set exists"
                       : "the vertex set partitions into unicycle subgraphs";
  return r;
}

}  // namespace oideal
