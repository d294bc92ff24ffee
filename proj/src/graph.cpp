#include "oideal/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace oideal {

std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> out;
  for (Mask r = m; r; r &= r - 1) out.push_back(lowest_bit(r));
  return out;
}

Mask indices_to_mask(const std::vector<int>& idx) {
  Mask m = 0;
  for (int v : idx) m |= Mask(1) << v;
  return m;
}

bool mask_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  // Same cardinality: compare sorted index lists lexicographically, i.e. walk
  // bits from the low end.
  while (a && b) {
    int la = lowest_bit(a), lb = lowest_bit(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

void WeightedOrientedGraph::finish(const std::vector<long long>& raw_weights) {
  const int n = size();
  out_.assign(n, 0);
  in_.assign(n, 0);
  for (auto [t, h] : edges_) {
    out_[t] |= Mask(1) << h;
    in_[h] |= Mask(1) << t;
  }
  weights_ = raw_weights;
  for (int v = 0; v < n; ++v) {
    if (in_[v] == 0 && weights_[v] != 1) {
      weights_[v] = 1;  // sources always carry weight 1
      normalized_ |= Mask(1) << v;
    }
  }
  weighted_ = 0;
  for (int v = 0; v < n; ++v)
    if (weights_[v] != 1) weighted_ |= Mask(1) << v;
}

WeightedOrientedGraph WeightedOrientedGraph::build(
    const std::vector<VertexSpec>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  if (vertices.size() > 32) fail(errc::size_cap, "at most 32 vertices are supported");
  WeightedOrientedGraph g;
  std::map<std::string, int> index;
  std::vector<long long> raw;
  for (const auto& v : vertices) {
    if (index.count(v.name)) fail(errc::duplicate_vertex, "duplicate vertex: " + v.name);
    if (v.weight < 1)
      fail(errc::nonpositive_weight,
           "vertex " + v.name + " has nonpositive weight " + std::to_string(v.weight));
    index[v.name] = static_cast<int>(g.names_.size());
    g.names_.push_back(v.name);
    raw.push_back(v.weight);
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [tname, hname] : edges) {
    auto it = index.find(tname);
    auto jt = index.find(hname);
    if (it == index.end()) fail(errc::unknown_vertex, "unknown vertex: " + tname);
    if (jt == index.end()) fail(errc::unknown_vertex, "unknown vertex: " + hname);
    int t = it->second, h = jt->second;
    if (t == h) fail(errc::loop_edge, "loop edge at " + tname);
    if (seen.count({h, t}))
      fail(errc::antiparallel_pair, "antiparallel edges between " + tname + " and " + hname);
    seen.insert({t, h});
  }
  g.edges_.assign(seen.begin(), seen.end());
  g.finish(raw);
  return g;
}

WeightedOrientedGraph WeightedOrientedGraph::build_indexed(
    const std::vector<long long>& weights, const std::vector<std::pair<int, int>>& edges) {
  std::vector<VertexSpec> vs;
  vs.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    vs.push_back({"x" + std::to_string(i + 1), weights[i]});
  std::vector<std::pair<std::string, std::string>> es;
  es.reserve(edges.size());
  for (auto [t, h] : edges) es.emplace_back(vs.at(t).name, vs.at(h).name);
  return build(vs, es);
}

int WeightedOrientedGraph::index_of(std::string_view name) const {
  for (int v = 0; v < size(); ++v)
    if (names_[v] == name) return v;
  fail(errc::unknown_vertex, "unknown vertex: " + std::string(name));
}

Neighborhoods neighborhoods(const WeightedOrientedGraph& g, int v) {
  if (v < 0 || v >= g.size()) fail(errc::unknown_vertex, "vertex index out of range");
  return {g.out_nbrs(v), g.in_nbrs(v), g.nbrs(v)};
}

SimpleGraph underlying_graph(const WeightedOrientedGraph& g) {
  SimpleGraph s;
  s.names = g.names();
  s.adj.assign(g.size(), 0);
  for (auto [t, h] : g.edges()) {
    s.edges.emplace_back(std::min(t, h), std::max(t, h));
    s.adj[t] |= Mask(1) << h;
    s.adj[h] |= Mask(1) << t;
  }
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& g, Mask keep) {
  std::vector<VertexSpec> vs;
  for (int v : mask_to_indices(keep)) vs.push_back({g.name(v), g.weight(v)});
  std::vector<std::pair<std::string, std::string>> es;
  for (auto [t, h] : g.edges())
    if ((keep >> t & 1u) && (keep >> h & 1u)) es.emplace_back(g.name(t), g.name(h));
  return WeightedOrientedGraph::build(vs, es);
}

WeightedOrientedGraph c_minor(const WeightedOrientedGraph& g, Mask stable_set) {
  Mask closed = stable_set;
  for (int v : mask_to_indices(stable_set)) {
    if (g.nbrs(v) & stable_set)
      fail(errc::not_stable_set, "edge inside the deletion set at " + g.name(v));
    closed |= g.nbrs(v);
  }
  return induced_subgraph(g, g.all() & ~closed);
}

std::vector<WeightedOrientedGraph> connected_components(const WeightedOrientedGraph& g) {
  std::vector<WeightedOrientedGraph> out;
  Mask left = g.all();
  while (left) {
    int start = lowest_bit(left);
    Mask comp = Mask(1) << start;
    for (;;) {
      Mask grown = comp;
      for (int v : mask_to_indices(comp)) grown |= g.nbrs(v);
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(induced_subgraph(g, comp));
    left &= ~comp;
  }
  return out;
}

namespace {

std::optional<std::vector<int>> find_path_order(const SimpleGraph& s) {
  const int n = s.size();
  if (n < 2 || static_cast<int>(s.edges.size()) != n - 1) return std::nullopt;
  std::vector<int> ends;
  for (int v = 0; v < n; ++v) {
    int d = s.degree(v);
    if (d == 0 || d > 2) return std::nullopt;
    if (d == 1) ends.push_back(v);
  }
  if (ends.size() != 2) return std::nullopt;
  std::vector<int> order{std::min(ends[0], ends[1])};
  Mask visited = Mask(1) << order[0];
  while (static_cast<int>(order.size()) < n) {
    Mask next = s.adj[order.back()] & ~visited;
    if (!next) return std::nullopt;  // disconnected
    int v = lowest_bit(next);
    order.push_back(v);
    visited |= Mask(1) << v;
  }
  return order;
}

std::optional<std::vector<int>> find_cycle_order(const SimpleGraph& s) {
  const int n = s.size();
  if (n < 3 || static_cast<int>(s.edges.size()) != n) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (s.degree(v) != 2) return std::nullopt;
  std::vector<int> order{0};
  Mask visited = 1;
  while (static_cast<int>(order.size()) < n) {
    Mask next = s.adj[order.back()] & ~visited;
    if (!next) return std::nullopt;  // disjoint cycles
    int v = lowest_bit(next);
    order.push_back(v);
    visited |= Mask(1) << v;
  }
  return order;
}

std::optional<Bipartition> find_bipartition(const SimpleGraph& s) {
  const int n = s.size();
  std::vector<int> color(n, -1);
  Bipartition parts;
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : mask_to_indices(s.adj[v])) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) (color[v] == 0 ? parts.left : parts.right) |= Mask(1) << v;
  return parts;
}

std::optional<WhiskerWitness> find_whisker(const SimpleGraph& s) {
  const int n = s.size();
  if (n == 0 || n % 2 != 0) return std::nullopt;
  WhiskerWitness w;
  Mask assigned = 0;
  // Vertices of degree >= 2 must be bases, each with exactly one pendant.
  for (int v = 0; v < n; ++v) {
    if (s.degree(v) < 2) continue;
    Mask leaves = 0;
    for (int u : mask_to_indices(s.adj[v]))
      if (s.degree(u) == 1) leaves |= Mask(1) << u;
    if (popcount(leaves) != 1) return std::nullopt;
    int pendant = lowest_bit(leaves);
    w.base_pendant.emplace_back(v, pendant);
    assigned |= (Mask(1) << v) | (Mask(1) << pendant);
  }
  // Whatever remains must be K2 components; pick the lower vertex as base.
  Mask rest = (n == 32 ? ~Mask(0) : (Mask(1) << n) - 1) & ~assigned;
  for (int v : mask_to_indices(rest)) {
    if (assigned >> v & 1u) continue;
    if (s.degree(v) != 1) return std::nullopt;  // isolated vertex
    int u = lowest_bit(s.adj[v]);
    if ((assigned >> u & 1u) || s.degree(u) != 1) return std::nullopt;
    w.base_pendant.emplace_back(std::min(v, u), std::max(v, u));
    assigned |= (Mask(1) << v) | (Mask(1) << u);
  }
  std::sort(w.base_pendant.begin(), w.base_pendant.end());
  for (auto [b, p] : w.base_pendant) {
    w.base |= Mask(1) << b;
    w.pendants |= Mask(1) << p;
  }
  return w;
}

}  // namespace

ShapeInfo classify_shape(const WeightedOrientedGraph& g) {
  SimpleGraph s = underlying_graph(g);
  ShapeInfo info;
  info.path = find_path_order(s);
  info.cycle = find_cycle_order(s);
  if (g.size() >= 2) {
    info.complete = true;
    for (int v = 0; v < g.size() && info.complete; ++v)
      if (s.degree(v) != g.size() - 1) info.complete = false;
  }
  info.bipartite = find_bipartition(s);
  info.whisker = find_whisker(s);
  return info;
}

}  // namespace oideal
