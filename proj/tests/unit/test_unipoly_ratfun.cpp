#include <doctest.h>

#include <nsatz/ratfun.hpp>
#include <nsatz/unipoly.hpp>

#include "../support/oracles.hpp"

using namespace nsatz;

namespace {

const Variable S("s");

Unipoly U(std::vector<long> cs) {
  std::vector<Rational> rs(cs.begin(), cs.end());
  return Unipoly(std::move(rs));
}

Unipoly random_unipoly(testing::Rng& rng, int max_deg) {
  std::vector<Rational> cs(static_cast<std::size_t>(rng.range(0, max_deg)) + 1);
  for (auto& c : cs) c = rng.rational();
  return Unipoly(std::move(cs));
}

}  // namespace

TEST_CASE("euclidean division invariant") {
  testing::Rng rng(20240004);
  for (int i = 0; i < 200; ++i) {
    Unipoly a = random_unipoly(rng, 6);
    Unipoly b = random_unipoly(rng, 4);
    if (b.is_zero()) continue;
    auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(U({1, 1}).divmod(Unipoly()), DivisionByZero);
}

TEST_CASE("gcd divides both and is monic") {
  testing::Rng rng(20240005);
  for (int i = 0; i < 100; ++i) {
    Unipoly f = random_unipoly(rng, 3);
    Unipoly g = random_unipoly(rng, 3);
    Unipoly h = random_unipoly(rng, 2);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    Unipoly d = Unipoly::gcd(f * h, g * h);
    CHECK((f * h).divmod(d).second.is_zero());
    CHECK((g * h).divmod(d).second.is_zero());
    CHECK(d.divmod(h).second.is_zero());  // h divides the gcd
    CHECK(d.leading_coeff() == Rational(1));
  }
  CHECK(Unipoly::gcd(Unipoly(), Unipoly()).is_zero());
}

TEST_CASE("rational root extraction") {
  // (v-1)(v+2)^2 * (3v-1), scaled by 6
  Unipoly f = Unipoly::linear_root(Rational(1)) * Unipoly::linear_root(Rational(-2)).pow(2) *
              U({-1, 3}).scaled(Rational(2));
  RootExtraction ex = rational_roots(f);
  REQUIRE(ex.roots.size() == 3);
  CHECK(ex.roots[0] == std::pair{Rational(-2), 2});
  CHECK(ex.roots[1] == std::pair{Rational(1, 3), 1});
  CHECK(ex.roots[2] == std::pair{Rational(1), 1});
  CHECK(ex.residual.is_one());

  RootExtraction mixed = rational_roots(U({0, -1, 0, 1}));  // v^3 - v = v(v-1)(v+1)
  REQUIRE(mixed.roots.size() == 3);
  CHECK(mixed.residual.is_one());

  RootExtraction partial = rational_roots(Unipoly::linear_root(Rational(1)) * U({1, 0, 1}));
  REQUIRE(partial.roots.size() == 1);
  CHECK(partial.roots[0] == std::pair{Rational(1), 1});
  CHECK(partial.residual == U({1, 0, 1}));

  CHECK_THROWS_AS(rational_roots(Unipoly()), ZeroPolynomial);
}

TEST_CASE("rational function normalization and field laws") {
  // 1/(s-1) + 1/(s+1) == 2s/(s^2-1), expected built by cross multiplication
  RationalFunction a(S, U({1}), U({-1, 1}));
  RationalFunction b(S, U({1}), U({1, 1}));
  Unipoly cross_num = U({1}) * U({1, 1}) + U({1}) * U({-1, 1});
  Unipoly cross_den = U({-1, 1}) * U({1, 1});
  CHECK(a + b == RationalFunction(S, cross_num, cross_den));
  CHECK(a + b == RationalFunction(S, U({0, 2}), U({-1, 0, 1})));

  // (s^2-1)/(s-1) reduces to s+1
  CHECK(RationalFunction(S, U({-1, 0, 1}), U({-1, 1})) == RationalFunction(S, U({1, 1}), U({1})));

  RationalFunction f(S, U({3, 1}), U({-2, 0, 5}));
  CHECK(f * f.inverse() == RationalFunction::constant(S, Rational(1)));
  CHECK_THROWS_AS(RationalFunction(S, U({1}), Unipoly()), DivisionByZero);
  CHECK_THROWS_AS(RationalFunction(S).inverse(), DivisionByZero);
}

TEST_CASE("rational function arithmetic is a field on random samples") {
  testing::Rng rng(20240006);
  for (int i = 0; i < 60; ++i) {
    Unipoly n1 = random_unipoly(rng, 3), n2 = random_unipoly(rng, 3);
    Unipoly d1 = random_unipoly(rng, 2), d2 = random_unipoly(rng, 2);
    if (d1.is_zero() || d2.is_zero()) continue;
    RationalFunction a(S, n1, d1), b(S, n2, d2), c(S, random_unipoly(rng, 2), U({1, 2}));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK(a - a == RationalFunction(S));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}
