#ifndef OIDEAL_UNMIXED_HPP
#define OIDEAL_UNMIXED_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oideal/covers.hpp"
#include "oideal/graph.hpp"

namespace oideal {

/// The three equivalent unmixedness criteria, evaluated independently.
struct UnmixedReport {
  bool criterion_strong_cardinality = false;   // all strong covers same size
  bool criterion_graph_unmixed_and_l3 = false; // G unmixed and L3(C)=0 for strong C
  bool criterion_minimal_strong_and_g = false; // G unmixed and every strong cover minimal
  bool unmixed = false;
  bool agreement = false;

  /// On failure: two strong covers of different sizes, or a strong cover with
  /// nonempty L3.
  std::optional<std::pair<Mask, Mask>> size_mismatch;
  std::optional<Mask> nonminimal_strong_cover;
};

/// All minimal vertex covers of the underlying graph have the same size.
bool simple_graph_unmixed(const WeightedOrientedGraph& g, int cap = kMinimalCoverCap);

UnmixedReport is_unmixed(const WeightedOrientedGraph& g, int cap = kStrongCoverCap);

bool has_minimal_strong_property(const WeightedOrientedGraph& g, int cap = kStrongCoverCap);

struct MixednessCertificate {
  bool all_vertices_weighted = false;  // V = V+
  bool full_cover_strong = false;      // V is a strong cover
};

/// Enumeration-free mixedness certificates; absence is inconclusive.
std::optional<MixednessCertificate> mixedness_fast_certificates(const WeightedOrientedGraph& g);

/// For unmixed g and stable S, checks the closure theorem and returns the
/// c-minor's report (throws verification_failure if closure fails).
UnmixedReport check_c_minor_closure(const WeightedOrientedGraph& g, Mask stable_set,
                                    int cap = kStrongCoverCap);

/// Conjunction of per-component unmixedness.
bool unmixed_by_components(const WeightedOrientedGraph& g, int cap = kStrongCoverCap);

struct CharacterizationResult {
  bool applicable = false;
  bool verdict = false;
  std::string clause;                 // which theorem clause fired / failed
  std::vector<std::string> witness;   // vertices or edges backing the verdict
};

/// Whisker theorem: unmixed iff every base-to-pendant oriented edge has base
/// weight 1.
CharacterizationResult characterize_whisker(const WeightedOrientedGraph& g);

/// Bipartite theorem: perfect-matching clause plus the out-neighborhood
/// condition on weighted vertices.
CharacterizationResult characterize_bipartite(const WeightedOrientedGraph& g);

/// Cycle theorem with the exceptional 5-cycle templates.
CharacterizationResult characterize_cycle(const WeightedOrientedGraph& g);

/// CM for paths: k=2, or k=4 with the boundary weight conditions.
CharacterizationResult cm_path(const WeightedOrientedGraph& g);

/// CM for complete graphs: no unicycle partition of V.
CharacterizationResult cm_complete(const WeightedOrientedGraph& g);

}  // namespace oideal

#endif
