#ifndef OIDEAL_MONOMIAL_HPP
#define OIDEAL_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oideal/errors.hpp"
#include "oideal/graph.hpp"

namespace oideal {

/// Exponent vector over a fixed set of variables. Exponents are checked
/// machine integers; products raise on overflow.
class Monomial {
public:
  explicit Monomial(std::vector<long long> exps);
  static Monomial one(int nvars) { return Monomial(std::vector<long long>(nvars, 0)); }
  static Monomial var_power(int nvars, int var, long long exp);

  int nvars() const { return static_cast<int>(exps_.size()); }
  long long exp(int v) const { return exps_[v]; }
  long long degree() const;
  bool is_one() const;
  Mask support() const;

  bool divides(const Monomial& m) const;
  Monomial divide_by(const Monomial& m) const;
  /// (var, exp) when the monomial is a power of a single variable.
  std::optional<std::pair<int, long long>> pure_power() const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;
  /// Graded order: by total degree, then by the exponent vector.
  std::strong_ordering operator<=>(const Monomial& o) const;

private:
  std::vector<long long> exps_;
};

struct IrreducibleIdeal;

/// Monomial ideal in canonical form: the minimal generating set, sorted. The
/// zero ideal has no generators; the unit ideal is unrepresentable.
class MonomialIdeal {
public:
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
  static MonomialIdeal from_generators(int nvars, std::vector<Monomial> gens);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;  // other subset of this
  MonomialIdeal plus(const Monomial& m) const;
  MonomialIdeal radical() const;
  std::optional<IrreducibleIdeal> as_irreducible() const;

  bool operator==(const MonomialIdeal&) const = default;

private:
  int nvars_;
  std::vector<Monomial> gens_;
};

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Pure powers of distinct variables, (x_{i1}^{a1}, ..., x_{is}^{as}).
struct IrreducibleIdeal {
  int nvars = 0;
  std::vector<std::pair<int, long long>> powers;  // sorted by variable

  Mask support() const;
  int height() const { return static_cast<int>(powers.size()); }
  MonomialIdeal as_ideal() const;
  bool contains(const Monomial& m) const;

  bool operator==(const IrreducibleIdeal&) const = default;
  auto operator<=>(const IrreducibleIdeal&) const = default;
};

/// Irredundant irreducible decomposition by recursive generator splitting.
/// Independent of the strong-cover route; this is the oracle.
std::vector<IrreducibleIdeal> irreducible_decomposition_oracle(
    const MonomialIdeal& ideal, std::size_t breadth_cap = 1u << 20);

// CAS-compatible rendering, e.g. "ideal(x1^3*x2, x2^4*x3)".
std::string to_string(const Monomial& m, std::span<const std::string> names);
std::string render_ideal_cas(const MonomialIdeal& ideal, std::span<const std::string> names);
/// Textbook-style component, e.g. "(x2^2,x3^5,x4^7)".
std::string render_component(const IrreducibleIdeal& q, std::span<const std::string> names);

}  // namespace oideal

#endif
