#ifndef OIDEAL_GRAPH_HPP
#define OIDEAL_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oideal/errors.hpp"

namespace oideal {

/// Vertex subsets as bitmasks over the canonical vertex order.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline int lowest_bit(Mask m) { return __builtin_ctz(m); }

/// Indices of the set bits, ascending.
std::vector<int> mask_to_indices(Mask m);
Mask indices_to_mask(const std::vector<int>& idx);

/// Orders masks by cardinality, then lexicographically on the sorted index
/// lists. Used everywhere a deterministic listing of vertex sets is needed.
bool mask_less(Mask a, Mask b);

struct VertexSpec {
  std::string name;
  long long weight = 1;
};

/// A weighted oriented graph D = (V, E, w). Immutable after construction;
/// source weights are normalized to 1 when built.
class WeightedOrientedGraph {
public:
  static WeightedOrientedGraph build(const std::vector<VertexSpec>& vertices,
                                     const std::vector<std::pair<std::string, std::string>>& edges);

  /// Index-based construction with names x1..xn. Same validation and
  /// normalization as build(); used by enumeration sweeps.
  static WeightedOrientedGraph build_indexed(const std::vector<long long>& weights,
                                             const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  int index_of(std::string_view name) const;  // throws unknown_vertex
  long long weight(int v) const { return weights_[v]; }
  const std::vector<long long>& weights() const { return weights_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  Mask out_nbrs(int v) const { return out_[v]; }
  Mask in_nbrs(int v) const { return in_[v]; }
  Mask nbrs(int v) const { return out_[v] | in_[v]; }
  bool has_edge(int tail, int head) const { return (out_[tail] >> head) & 1u; }

  Mask all() const { return size() == 32 ? ~Mask(0) : (Mask(1) << size()) - 1; }
  /// V+ = vertices of weight != 1.
  Mask weighted() const { return weighted_; }
  /// Vertices whose input weight was reset to 1 by source normalization.
  Mask normalized_sources() const { return normalized_; }

private:
  std::vector<std::string> names_;
  std::vector<long long> weights_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Mask> out_, in_;
  Mask weighted_ = 0;
  Mask normalized_ = 0;

  void finish(const std::vector<long long>& raw_weights);
};

struct Neighborhoods {
  Mask out, in, all;
};

Neighborhoods neighborhoods(const WeightedOrientedGraph& g, int v);

/// Underlying simple graph G of D.
struct SimpleGraph {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
  std::vector<Mask> adj;

  int size() const { return static_cast<int>(names.size()); }
  int degree(int v) const { return popcount(adj[v]); }
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
};

SimpleGraph underlying_graph(const WeightedOrientedGraph& g);

/// D \ N_G[S] for a stable set S: delete the closed neighborhood, restrict
/// weights, re-normalize new sources.
WeightedOrientedGraph c_minor(const WeightedOrientedGraph& g, Mask stable_set);

/// Induced subgraph on an arbitrary vertex subset (weights re-normalized).
WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& g, Mask keep);

/// Connected components by underlying connectivity, ordered by smallest vertex.
std::vector<WeightedOrientedGraph> connected_components(const WeightedOrientedGraph& g);

struct Bipartition {
  Mask left = 0, right = 0;
};

struct WhiskerWitness {
  std::vector<std::pair<int, int>> base_pendant;  // (base vertex, its pendant)
  Mask base = 0, pendants = 0;
};

/// Non-exclusive shape tags with witnesses; drives the closed-form theorems.
struct ShapeInfo {
  std::optional<std::vector<int>> path;    // vertex order along the path
  std::optional<std::vector<int>> cycle;   // cyclic vertex order
  bool complete = false;
  std::optional<Bipartition> bipartite;
  std::optional<WhiskerWitness> whisker;

  bool general() const { return !path && !cycle && !complete && !bipartite && !whisker; }
};

ShapeInfo classify_shape(const WeightedOrientedGraph& g);

}  // namespace oideal

#endif
