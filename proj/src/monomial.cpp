#include "oideal/monomial.hpp"

#include <algorithm>
#include <map>

namespace oideal {

Monomial::Monomial(std::vector<long long> exps) : exps_(std::move(exps)) {
  for (long long e : exps_)
    if (e < 0) fail(errc::exponent_overflow, "negative exponent");
}

Monomial Monomial::var_power(int nvars, int var, long long exp) {
  std::vector<long long> e(nvars, 0);
  e.at(var) = exp;
  return Monomial(std::move(e));
}

long long Monomial::degree() const {
  long long d = 0;
  for (long long e : exps_)
    if (__builtin_add_overflow(d, e, &d)) fail(errc::exponent_overflow, "degree overflow");
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](long long e) { return e == 0; });
}

Mask Monomial::support() const {
  Mask m = 0;
  for (int v = 0; v < nvars(); ++v)
    if (exps_[v] > 0) m |= Mask(1) << v;
  return m;
}

bool Monomial::divides(const Monomial& m) const {
  for (int v = 0; v < nvars(); ++v)
    if (exps_[v] > m.exps_[v]) return false;
  return true;
}

Monomial Monomial::divide_by(const Monomial& m) const {
  std::vector<long long> e(exps_);
  for (int v = 0; v < nvars(); ++v) {
    e[v] -= m.exps_[v];
    if (e[v] < 0) fail(errc::exponent_overflow, "monomial division is not exact");
  }
  return Monomial(std::move(e));
}

std::optional<std::pair<int, long long>> Monomial::pure_power() const {
  std::optional<std::pair<int, long long>> p;
  for (int v = 0; v < nvars(); ++v)
    if (exps_[v] > 0) {
      if (p) return std::nullopt;
      p = {v, exps_[v]};
    }
  return p;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<long long> e(a.exps_);
  for (int v = 0; v < a.nvars(); ++v) e[v] = std::max(e[v], b.exps_[v]);
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<long long> e(a.exps_);
  for (int v = 0; v < a.nvars(); ++v)
    if (__builtin_add_overflow(e[v], b.exps_[v], &e[v]))
      fail(errc::exponent_overflow, "exponent overflow in product");
  return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  return exps_ <=> o.exps_;
}

MonomialIdeal MonomialIdeal::from_generators(int nvars, std::vector<Monomial> gens) {
  MonomialIdeal ideal(nvars);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& m : gens) {
    if (m.nvars() != nvars) fail(errc::exponent_overflow, "generator over a different variable set");
    if (m.is_one()) fail(errc::unit_ideal, "the unit ideal is not representable");
    bool redundant = false;
    for (const auto& kept : ideal.gens_)
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) ideal.gens_.push_back(m);
  }
  return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

MonomialIdeal MonomialIdeal::plus(const Monomial& m) const {
  auto gens = gens_;
  gens.push_back(m);
  return from_generators(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::radical() const {
  std::vector<Monomial> gens;
  for (const auto& g : gens_) {
    std::vector<long long> e(nvars_, 0);
    for (int v = 0; v < nvars_; ++v) e[v] = g.exp(v) > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return from_generators(nvars_, std::move(gens));
}

std::optional<IrreducibleIdeal> MonomialIdeal::as_irreducible() const {
  IrreducibleIdeal q{nvars_, {}};
  Mask seen = 0;
  for (const auto& g : gens_) {
    auto p = g.pure_power();
    if (!p) return std::nullopt;
    if (seen >> p->first & 1u) return std::nullopt;  // cannot happen in minimal form
    seen |= Mask(1) << p->first;
    q.powers.push_back(*p);
  }
  std::sort(q.powers.begin(), q.powers.end());
  return q;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.is_zero() || b.is_zero()) return MonomialIdeal(a.nvars());
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& ga : a.generators())
    for (const auto& gb : b.generators()) gens.push_back(lcm(ga, gb));
  return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

Mask IrreducibleIdeal::support() const {
  Mask m = 0;
  for (auto [v, e] : powers) m |= Mask(1) << v;
  return m;
}

MonomialIdeal IrreducibleIdeal::as_ideal() const {
  std::vector<Monomial> gens;
  for (auto [v, e] : powers) gens.push_back(Monomial::var_power(nvars, v, e));
  return MonomialIdeal::from_generators(nvars, std::move(gens));
}

bool IrreducibleIdeal::contains(const Monomial& m) const {
  for (auto [v, e] : powers)
    if (m.exp(v) >= e) return true;
  return false;
}

namespace {

void split(const MonomialIdeal& ideal, std::vector<IrreducibleIdeal>& out,
           std::map<std::vector<Monomial>, std::vector<IrreducibleIdeal>>& memo,
           std::size_t breadth_cap) {
  if (auto q = ideal.as_irreducible()) {
    out.push_back(std::move(*q));
    if (out.size() > breadth_cap) fail(errc::size_cap, "oracle recursion breadth exceeded");
    return;
  }
  auto it = memo.find(ideal.generators());
  if (it != memo.end()) {
    out.insert(out.end(), it->second.begin(), it->second.end());
    if (out.size() > breadth_cap) fail(errc::size_cap, "oracle recursion breadth exceeded");
    return;
  }
  // First non-pure-power generator, split off its first variable's power.
  const Monomial* pivot = nullptr;
  for (const auto& g : ideal.generators())
    if (!g.pure_power()) {
      pivot = &g;
      break;
    }
  int var = lowest_bit(pivot->support());
  Monomial head = Monomial::var_power(ideal.nvars(), var, pivot->exp(var));
  Monomial tail = pivot->divide_by(head);
  std::vector<IrreducibleIdeal> local;
  split(ideal.plus(head), local, memo, breadth_cap);
  split(ideal.plus(tail), local, memo, breadth_cap);
  std::sort(local.begin(), local.end());
  local.erase(std::unique(local.begin(), local.end()), local.end());
  memo.emplace(ideal.generators(), local);
  out.insert(out.end(), local.begin(), local.end());
  if (out.size() > breadth_cap) fail(errc::size_cap, "oracle recursion breadth exceeded");
}

}  // namespace

std::vector<IrreducibleIdeal> irreducible_decomposition_oracle(const MonomialIdeal& ideal,
                                                               std::size_t breadth_cap) {
  if (ideal.is_zero()) fail(errc::unit_ideal, "the zero ideal has no irreducible decomposition");
  std::vector<IrreducibleIdeal> comps;
  std::map<std::vector<Monomial>, std::vector<IrreducibleIdeal>> memo;
  split(ideal, comps, memo, breadth_cap);
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  // Drop every component containing the intersection of the others. Prefix
  // and suffix intersections give each "intersection of the rest" in one
  // extra intersect; restart after a removal since the rest changes.
  for (bool removed = true; removed && comps.size() > 1;) {
    removed = false;
    const std::size_t k = comps.size();
    std::vector<MonomialIdeal> as(k, MonomialIdeal(ideal.nvars()));
    for (std::size_t i = 0; i < k; ++i) as[i] = comps[i].as_ideal();
    std::vector<MonomialIdeal> prefix(k + 1, MonomialIdeal(ideal.nvars()));
    std::vector<MonomialIdeal> suffix(k + 1, MonomialIdeal(ideal.nvars()));
    for (std::size_t i = 0; i < k; ++i)
      prefix[i + 1] = (i == 0) ? as[i] : intersect(prefix[i], as[i]);
    for (std::size_t i = k; i-- > 0;)
      suffix[i] = (i == k - 1) ? as[i] : intersect(suffix[i + 1], as[i]);
    for (std::size_t i = 0; i < k; ++i) {
      MonomialIdeal rest = (i == 0)       ? suffix[1]
                           : (i == k - 1) ? prefix[k - 1]
                                          : intersect(prefix[i], suffix[i + 1]);
      if (as[i].contains(rest)) {
        comps.erase(comps.begin() + i);
        removed = true;
        break;
      }
    }
  }
  // Canonical order: by support (size then lex), then by exponents.
  std::sort(comps.begin(), comps.end(), [](const IrreducibleIdeal& a, const IrreducibleIdeal& b) {
    Mask sa = a.support(), sb = b.support();
    if (sa != sb) return mask_less(sa, sb);
    return a.powers < b.powers;
  });
  return comps;
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  if (m.is_one()) return "1";
  std::string s;
  for (int v = 0; v < m.nvars(); ++v) {
    if (m.exp(v) == 0) continue;
    if (!s.empty()) s += "*";
    s += names[v];
    if (m.exp(v) > 1) s += "^" + std::to_string(m.exp(v));
  }
  return s;
}

std::string render_ideal_cas(const MonomialIdeal& ideal, std::span<const std::string> names) {
  if (ideal.is_zero()) return "ideal(0)";
  std::string s = "ideal(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) s += ", ";
    s += to_string(ideal.generators()[i], names);
  }
  return s + ")";
}

std::string render_component(const IrreducibleIdeal& q, std::span<const std::string> names) {
  std::string s = "(";
  for (std::size_t i = 0; i < q.powers.size(); ++i) {
    if (i) s += ",";
    s += names[q.powers[i].first];
    if (q.powers[i].second > 1) s += "^" + std::to_string(q.powers[i].second);
  }
  return s + ")";
}

}  // namespace oideal
