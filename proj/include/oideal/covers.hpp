#ifndef OIDEAL_COVERS_HPP
#define OIDEAL_COVERS_HPP

#include <map>
#include <optional>
#include <vector>

#include "oideal/graph.hpp"

namespace oideal {

/// Default cap on |V| for the exhaustive 2^|V| strong-cover scan.
inline constexpr int kStrongCoverCap = 20;
/// Default cap on |V| for minimal-cover backtracking.
inline constexpr int kMinimalCoverCap = 24;

/// A vertex cover together with its L1/L2/L3 partition and flags.
struct CoverAnalysis {
  Mask cover = 0;
  Mask l1 = 0, l2 = 0, l3 = 0;
  bool is_minimal = false;
  bool is_strong = false;
  /// For each x in L3 of a strong cover, the smallest y in N^-(x) & V+ with
  /// y in L2 | L3.
  std::map<int, int> strong_witness;
};

bool is_vertex_cover(const WeightedOrientedGraph& g, Mask cover);

/// Splits a cover into L1/L2/L3 and evaluates the minimal and strong flags.
CoverAnalysis l_partition(const WeightedOrientedGraph& g, Mask cover);

bool is_minimal_cover(const WeightedOrientedGraph& g, Mask cover);
bool is_strong_cover(const WeightedOrientedGraph& g, Mask cover);

/// All inclusion-minimal vertex covers, canonically ordered.
std::vector<Mask> enumerate_minimal_covers(const WeightedOrientedGraph& g,
                                           int cap = kMinimalCoverCap);

/// Every strong vertex cover (minimal or not), canonically ordered.
std::vector<CoverAnalysis> enumerate_strong_covers(const WeightedOrientedGraph& g,
                                                   int cap = kStrongCoverCap);

/// True iff every vertex has an in-neighbor of weight != 1; equivalent to V
/// being a strong cover.
bool full_vertex_set_strong(const WeightedOrientedGraph& g);

struct UnicycleBlock {
  Mask vertices = 0;
  std::vector<int> cycle;                    // cyclic order, edges cycle[i+1] -> cycle[i]
  std::vector<std::pair<int, int>> edges;    // cycle edges plus out-tree edges
};

using UnicyclePartition = std::vector<UnicycleBlock>;

/// Partition of V into unicycle oriented subgraphs, when one exists. Present
/// exactly when full_vertex_set_strong(g).
std::optional<UnicyclePartition> unicycle_partition(const WeightedOrientedGraph& g);

/// Whole-graph unicycle test: connected, exactly one cycle, cycle oriented and
/// reaching every vertex, weight != 1 on every vertex of degree >= 2.
bool is_unicycle_oriented(const WeightedOrientedGraph& g);

}  // namespace oideal

#endif
