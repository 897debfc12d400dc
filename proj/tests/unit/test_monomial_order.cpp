#include <doctest.h>

#include <nsatz/monomial.hpp>
#include <nsatz/order.hpp>

#include "../support/oracles.hpp"

using namespace nsatz;
using namespace nsatz::testing;

namespace {

const Variable X("x"), Y("y"), Z("z");

Monomial mono(int a, int b, int c = 0) {
  return Monomial::from_entries({{X, a}, {Y, b}, {Z, c}});
}

}  // namespace

TEST_CASE("monomial lcm and division") {
  Monomial m1 = mono(3, 2), m2 = mono(1, 4, 2);
  Monomial l = Monomial::lcm(m1, m2);
  CHECK(l.degree_of(X) == 3);
  CHECK(l.degree_of(Y) == 4);
  CHECK(l.degree_of(Z) == 2);
  CHECK(l.total_degree() == 9);
  CHECK(m1.divides(l));
  CHECK(m2.divides(l));
  CHECK(l.divided_by(m1) == mono(0, 2, 2));
  CHECK_THROWS_AS(m1.divided_by(m2), InvalidArgument);
  CHECK(Monomial::lcm(m1, Monomial()) == m1);
  CHECK(mono(2, 0).coprime_with(mono(0, 3)));
  CHECK_FALSE(mono(2, 0).coprime_with(mono(1, 1)));
}

TEST_CASE("order definitions on pinned cases") {
  std::vector<Variable> xy{X, Y};
  MonomialOrder lex = MonomialOrder::lex(xy);
  CHECK(monomial_cmp(lex, mono(1, 0), mono(0, 2)) == std::strong_ordering::greater);
  MonomialOrder grevlex = MonomialOrder::grevlex(xy);
  CHECK(monomial_cmp(grevlex, mono(2, 1), mono(1, 2)) == std::strong_ordering::greater);
  CHECK(monomial_cmp(grevlex, mono(2, 1), mono(2, 1)) == std::strong_ordering::equal);
  MonomialOrder grlex = MonomialOrder::grlex(xy);
  CHECK(monomial_cmp(grlex, mono(0, 3), mono(2, 0)) == std::strong_ordering::greater);
}

TEST_CASE("orders agree with independent rules on the full degree-3 table") {
  std::vector<Variable> seq{X, Y, Z};
  VarSet vars{X, Y, Z};
  auto table = monomials_up_to(vars, 3);
  MonomialOrder lex = MonomialOrder::lex(seq);
  MonomialOrder grlex = MonomialOrder::grlex(seq);
  MonomialOrder grevlex = MonomialOrder::grevlex(seq);
  for (const auto& u : table) {
    for (const auto& v : table) {
      auto eu = exponents_along(u, seq), ev = exponents_along(v, seq);
      CHECK(monomial_cmp(lex, u, v) == lex_rule(eu, ev));
      CHECK(monomial_cmp(grlex, u, v) == grlex_rule(eu, ev));
      CHECK(monomial_cmp(grevlex, u, v) == grevlex_rule(eu, ev));
    }
  }
}

TEST_CASE("order axioms: totality, well-foundedness, multiplicativity") {
  VarSet vars{X, Y, Z};
  std::vector<MonomialOrder> orders{MonomialOrder::lex(vars), MonomialOrder::grlex(vars),
                                    MonomialOrder::grevlex(vars),
                                    MonomialOrder::block_elim(VarSet{X}, VarSet{Y, Z})};
  Rng rng(20240002);
  for (const auto& order : orders) {
    for (int i = 0; i < 200; ++i) {
      Monomial u = rng.monomial(vars, 4), v = rng.monomial(vars, 4), w = rng.monomial(vars, 4);
      auto c = order.compare(u, v);
      // antisymmetry / totality
      CHECK(order.compare(v, u) == (c == std::strong_ordering::less
                                        ? std::strong_ordering::greater
                                        : (c == std::strong_ordering::greater
                                               ? std::strong_ordering::less
                                               : std::strong_ordering::equal)));
      CHECK((c == std::strong_ordering::equal) == (u == v));
      // 1 is minimal
      if (!u.is_one()) CHECK(order.greater(u, Monomial()));
      // multiplicative
      if (c == std::strong_ordering::less) CHECK(order.less(u * w, v * w));
    }
  }
}

TEST_CASE("block order eliminates its prefix") {
  MonomialOrder block = MonomialOrder::block_elim(VarSet{Z}, VarSet{X, Y});
  // anything containing z beats anything without z
  CHECK(block.greater(mono(0, 0, 1), mono(3, 3, 0)));
  CHECK(block.less(mono(5, 0, 0), mono(0, 0, 1)));
  CHECK(block.greater(mono(1, 0, 2), mono(4, 0, 1)));
  CHECK_THROWS_AS(MonomialOrder::block_elim(VarSet{X}, VarSet{X, Y}), InvalidArgument);
}

TEST_CASE("variables outside the order sequence are rejected") {
  MonomialOrder lex = MonomialOrder::lex(std::vector<Variable>{X, Y});
  CHECK_THROWS_AS(monomial_cmp(lex, mono(1, 0, 2), mono(0, 1)), UnknownVariable);
}
