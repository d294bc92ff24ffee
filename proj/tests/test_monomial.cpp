#include <doctest.h>

#include <random>

#include "oideal/decomposition.hpp"
#include "oideal/fixtures.hpp"
#include "oideal/monomial.hpp"

using namespace oideal;

namespace {

Monomial mono(std::vector<long long> e) { return Monomial(std::move(e)); }

MonomialIdeal ideal(int n, std::vector<std::vector<long long>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.push_back(Monomial(std::move(g)));
  return MonomialIdeal::from_generators(n, std::move(ms));
}

}  // namespace

TEST_CASE("monomial basics") {
  auto m = mono({3, 0, 2});
  CHECK(m.degree() == 5);
  CHECK(m.support() == 0b101u);
  CHECK(!m.is_one());
  CHECK(Monomial::one(3).is_one());
  CHECK(mono({1, 1, 0}).divides(mono({2, 1, 5})));
  CHECK(!mono({1, 1, 0}).divides(mono({0, 3, 5})));
  CHECK(mono({2, 1, 5}).divide_by(mono({1, 1, 0})) == mono({1, 0, 5}));
  CHECK(lcm(mono({2, 0, 1}), mono({1, 3, 1})) == mono({2, 3, 1}));
  CHECK(mono({2, 0, 1}) * mono({1, 3, 1}) == mono({3, 3, 2}));
  CHECK(Monomial::var_power(4, 2, 7) == mono({0, 0, 7, 0}));
  CHECK(mono({0, 5, 0}).pure_power() == std::pair<int, long long>{1, 5});
  CHECK(!mono({1, 1, 0}).pure_power().has_value());
}

TEST_CASE("minimal generators") {
  CHECK(ideal(2, {{1, 1}, {1, 2}}).generators() == std::vector<Monomial>{mono({1, 1})});
  // x3 divides x3*x4
  auto i = ideal(4, {{3, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}, {0, 0, 1, 1}});
  CHECK(i.generators().size() == 3);
  // Example 1's generators are already minimal
  auto e1 = edge_ideal(fixture("example1"));
  CHECK(e1.generators().size() == 5);
  CHECK(MonomialIdeal::from_generators(5, e1.generators()) == e1);
  // unit ideal is unrepresentable
  CHECK_THROWS_AS(ideal(2, {{0, 0}}), error);
}

TEST_CASE("membership") {
  auto i = ideal(3, {{0, 2, 0}, {0, 0, 1}});  // (x2^2, x3)
  CHECK(i.contains(mono({0, 1, 5})));
  CHECK(!i.contains(Monomial::one(3)));
  CHECK(!i.contains(mono({4, 1, 0})));
}

TEST_CASE("intersection") {
  auto a = ideal(2, {{1, 0}});
  auto b = ideal(2, {{0, 4}});
  CHECK(intersect(a, b) == ideal(2, {{1, 4}}));
  CHECK(intersect(a, a) == a);

  // the five components of the second example meet in its edge ideal
  auto g = fixture("example2");
  auto report = strong_cover_decomposition(g, false);
  MonomialIdeal meet = report.components[0].second.as_ideal();
  for (std::size_t k = 1; k < report.components.size(); ++k)
    meet = intersect(meet, report.components[k].second.as_ideal());
  CHECK(meet == report.edge_ideal);
}

TEST_CASE("membership distributes over intersection") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> ed(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    auto rand_ideal = [&] {
      std::vector<Monomial> gens;
      for (int k = 0; k < 4; ++k) {
        std::vector<long long> e(4);
        for (auto& x : e) x = ed(rng);
        if (Monomial(e).is_one()) e[0] = 1;
        gens.push_back(Monomial(e));
      }
      return MonomialIdeal::from_generators(4, gens);
    };
    auto a = rand_ideal(), b = rand_ideal();
    auto meet = intersect(a, b);
    std::vector<long long> e(4);
    for (auto& x : e) x = ed(rng);
    auto m = Monomial(e);
    CHECK(meet.contains(m) == (a.contains(m) && b.contains(m)));
  }
}

TEST_CASE("radical") {
  auto g = fixture("example2");
  auto rad = edge_ideal(g).radical();
  CHECK(rad == ideal(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
  CHECK(ideal(4, {{3, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}}).radical() ==
        ideal(4, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(rad.radical() == rad);
}

TEST_CASE("as_irreducible") {
  auto q = ideal(4, {{3, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}}).as_irreducible();
  REQUIRE(q.has_value());
  CHECK(q->powers == std::vector<std::pair<int, long long>>{{0, 3}, {2, 1}, {3, 2}});
  CHECK(q->height() == 3);
  CHECK(q->support() == 0b1101u);

  CHECK(!ideal(2, {{1, 1}}).as_irreducible().has_value());
  CHECK(ideal(1, {{1}}).as_irreducible().has_value());
}

TEST_CASE("oracle on the worked examples") {
  auto single = ideal(2, {{1, 4}});  // (x1*x2^4) = (x1) n (x2^4)
  auto d = irreducible_decomposition_oracle(single);
  REQUIRE(d.size() == 2);
  CHECK(d[0].powers == std::vector<std::pair<int, long long>>{{0, 1}});
  CHECK(d[1].powers == std::vector<std::pair<int, long long>>{{1, 4}});

  CHECK(irreducible_decomposition_oracle(edge_ideal(fixture("example2"))).size() == 5);
  CHECK(irreducible_decomposition_oracle(edge_ideal(fixture("example1"))).size() == 9);
}

TEST_CASE("oracle soundness and irredundancy on random ideals") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> ed(0, 5);
  std::uniform_int_distribution<int> gd(1, 8);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Monomial> gens;
    int ng = gd(rng);
    for (int k = 0; k < ng; ++k) {
      std::vector<long long> e(6);
      for (auto& x : e) x = ed(rng);
      if (Monomial(e).is_one()) e[0] = 1;
      gens.push_back(Monomial(e));
    }
    auto i = MonomialIdeal::from_generators(6, gens);
    auto comps = irreducible_decomposition_oracle(i);
    REQUIRE(!comps.empty());

    MonomialIdeal meet = comps[0].as_ideal();
    for (std::size_t k = 1; k < comps.size(); ++k) meet = intersect(meet, comps[k].as_ideal());
    CHECK(meet == i);

    // dropping any component strictly enlarges the intersection
    for (std::size_t skip = 0; skip < comps.size() && comps.size() > 1; ++skip) {
      MonomialIdeal rest(6);
      bool first = true;
      for (std::size_t k = 0; k < comps.size(); ++k) {
        if (k == skip) continue;
        rest = first ? comps[k].as_ideal() : intersect(rest, comps[k].as_ideal());
        first = false;
      }
      CHECK(rest != i);
    }
  }
}

TEST_CASE("rendering") {
  auto g = fixture("example1");
  CHECK(render_ideal_cas(edge_ideal(g), g.names()) ==
        "ideal(x4^2*x5, x3*x5^2, x1^3*x2, x2^4*x3, x3^5*x4)");
  CHECK(render_ideal_cas(MonomialIdeal(3), g.names()) == "ideal(0)");
  IrreducibleIdeal q{5, {{0, 3}, {2, 1}, {3, 2}}};
  CHECK(render_component(q, g.names()) == "(x1^3,x3,x4^2)");
}

TEST_CASE("exponent overflow raises") {
  auto big = Monomial::var_power(1, 0, 1ll << 62);
  CHECK_THROWS_AS(big * big, error);
}
