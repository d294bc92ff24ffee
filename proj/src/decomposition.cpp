#include "oideal/decomposition.hpp"

#include <algorithm>

namespace oideal {

MonomialIdeal edge_ideal(const WeightedOrientedGraph& g) {
  std::vector<Monomial> gens;
  for (auto [tail, head] : g.edges())
    gens.push_back(Monomial::var_power(g.size(), tail, 1) *
                   Monomial::var_power(g.size(), head, g.weight(head)));
  return MonomialIdeal::from_generators(g.size(), std::move(gens));
}

IrreducibleIdeal irreducible_ideal_of_cover(const WeightedOrientedGraph& g, Mask cover) {
  CoverAnalysis a = l_partition(g, cover);
  IrreducibleIdeal q{g.size(), {}};
  for (int v : mask_to_indices(cover))
    q.powers.emplace_back(v, (a.l1 >> v & 1u) ? 1 : g.weight(v));
  return q;
}

DecompositionReport strong_cover_decomposition(const WeightedOrientedGraph& g, bool verify,
                                               int cap) {
  DecompositionReport report(g.size());
  report.edge_ideal = edge_ideal(g);
  for (CoverAnalysis& a : enumerate_strong_covers(g, cap)) {
    IrreducibleIdeal q{g.size(), {}};
    for (int v : mask_to_indices(a.cover))
      q.powers.emplace_back(v, (a.l1 >> v & 1u) ? 1 : g.weight(v));
    report.components.emplace_back(std::move(a), std::move(q));
  }
  for (std::size_t i = 0; i + 1 < report.components.size(); ++i)
    if (report.components[i].second == report.components[i + 1].second)
      fail(errc::verification_failure, "duplicate components from distinct covers");
  for (const auto& [cover, q] : report.components) report.associated_primes.push_back(cover.cover);

  if (verify && !report.edge_ideal.is_zero()) {
    MonomialIdeal meet(g.size());
    bool first = true;
    for (const auto& [cover, q] : report.components) {
      meet = first ? q.as_ideal() : intersect(meet, q.as_ideal());
      first = false;
    }
    if (!(meet == report.edge_ideal))
      fail(errc::verification_failure,
           "intersection of strong-cover components differs from the edge ideal");
    auto oracle = irreducible_decomposition_oracle(report.edge_ideal);
    std::vector<IrreducibleIdeal> ours;
    for (const auto& [cover, q] : report.components) ours.push_back(q);
    std::sort(ours.begin(), ours.end());
    std::sort(oracle.begin(), oracle.end());
    if (!(ours == oracle))
      fail(errc::verification_failure, "strong-cover components differ from the oracle");
    report.verified = true;
  } else if (verify) {
    report.verified = true;  // zero ideal: the empty cover is the sole component
  }
  return report;
}

std::vector<Mask> associated_primes(const WeightedOrientedGraph& g, int cap) {
  std::vector<Mask> primes;
  for (const CoverAnalysis& a : enumerate_strong_covers(g, cap)) primes.push_back(a.cover);
  return primes;
}

}  // namespace oideal
