#ifndef OIDEAL_DECOMPOSITION_HPP
#define OIDEAL_DECOMPOSITION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "oideal/covers.hpp"
#include "oideal/monomial.hpp"

namespace oideal {

/// I(D): one generator x_tail * x_head^w(head) per edge, minimalized.
MonomialIdeal edge_ideal(const WeightedOrientedGraph& g);

/// I_C: exponent 1 on L1(C), w(x) on L2(C) | L3(C).
IrreducibleIdeal irreducible_ideal_of_cover(const WeightedOrientedGraph& g, Mask cover);

struct DecompositionReport {
  MonomialIdeal edge_ideal;
  std::vector<std::pair<CoverAnalysis, IrreducibleIdeal>> components;  // keyed by cover
  std::vector<Mask> associated_primes;
  std::optional<bool> verified;  // present when verification ran

  explicit DecompositionReport(int nvars) : edge_ideal(nvars) {}
};

/// The decomposition theorem as code: components are the I_C over strong
/// covers C. With verify set, cross-checks both that the components intersect
/// to I(D) and that they match the splitting oracle.
DecompositionReport strong_cover_decomposition(const WeightedOrientedGraph& g, bool verify,
                                               int cap = kStrongCoverCap);

/// Supports of the strong covers, canonically ordered.
std::vector<Mask> associated_primes(const WeightedOrientedGraph& g, int cap = kStrongCoverCap);

}  // namespace oideal

#endif
