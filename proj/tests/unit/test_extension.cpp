#include <doctest.h>

#include <nsatz/extension.hpp>
#include <nsatz/parse.hpp>

#include "../support/oracles.hpp"

using namespace nsatz;
using nsatz::testing::Rng;

namespace {

const VarSet XV = VarSet::named({"x"});
const VarSet XY = VarSet::named({"x", "y"});
const VarSet XYZW = VarSet::named({"x", "y", "z", "w"});
const Variable S("s"), T("t");

Ideal I(std::vector<std::string> gens, const VarSet& vars) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, vars));
  return Ideal(std::move(ps), vars, MonomialOrder::grevlex(vars));
}

Unipoly U(std::vector<long> cs) {
  std::vector<Rational> rs(cs.begin(), cs.end());
  return Unipoly(std::move(rs));
}

}  // namespace

TEST_CASE("ideal extension") {
  Ideal a = I({"x^2"}, XV);
  Ideal ext = extend_ideal(a, XY);
  CHECK(ext.vars() == XY);
  CHECK(ext.generators() == a.generators());

  CHECK(extend_ideal(Ideal::zero(XV, MonomialOrder::grevlex(XV)), XY).is_zero());
  CHECK_THROWS_AS(extend_ideal(I({"x*y"}, XY), XV), NotASuperset);

  // basis under an order putting the new variables last equals the basis of
  // the small ideal
  Ideal b = I({"x^2+y^2", "x*y"}, XY);
  Ideal bigger = extend_ideal(b, XYZW);
  MonomialOrder last_block = MonomialOrder::block_elim(XY, XYZW.minus(XY));
  GroebnerBasis over_big = buchberger(bigger.generators(), last_block);
  GroebnerBasis small = b.groebner();
  REQUIRE(over_big.size() == small.size());
  for (std::size_t i = 0; i < small.size(); ++i)
    CHECK(over_big.elements()[i] == small.elements()[i]);
}

TEST_CASE("corollary probe checks") {
  Ideal a = I({"x^2"}, XV);
  std::vector<Polynomial> probe_x{parse_poly("x", XY)};
  CHECK(corollary_check(a, XY, probe_x));
  CHECK(radical_member(parse_poly("x", XY), extend_ideal(a, XY)));

  std::vector<Polynomial> probe_y{parse_poly("y", XY)};
  CHECK(corollary_check(a, XY, probe_y));
  CHECK_FALSE(radical_member(parse_poly("y", XY), extend_ideal(a, XY)));
  // the variety of the extension contains (0, 1), separating y
  Point witness(std::map<Variable, Rational>{{Variable("x"), Rational(0)},
                                             {Variable("y"), Rational(1)}});
  CHECK(parse_poly("x^2", XY).eval(witness).is_zero());
  CHECK_FALSE(parse_poly("y", XY).eval(witness).is_zero());

  Ideal unit = I({"1"}, XV);
  std::vector<Polynomial> probes{parse_poly("x", XY), parse_poly("y", XY),
                                 parse_poly("x*y-3", XY)};
  CHECK(corollary_check(unit, XY, probes));
}

TEST_CASE("extension faithfulness on the small ring") {
  Rng rng(20240017);
  for (int t = 0; t < 15; ++t) {
    Ideal a(std::vector<Polynomial>{rng.nonzero_polynomial(XY, 3, 3),
                                    rng.nonzero_polynomial(XY, 2, 3)},
            XY, MonomialOrder::grevlex(XY));
    Ideal ext = extend_ideal(a, XYZW);
    Polynomial f = rng.chance(40) ? a.generators().front() * rng.polynomial(XY, 1, 2)
                                  : rng.polynomial(XY, 3, 4);
    CHECK(is_member(f, a) == is_member(f.with_vars(XYZW), ext));
    CHECK(radical_member(f, a) == radical_member(f.with_vars(XYZW), ext));
  }
}

TEST_CASE("principal radical persistence via squarefree parts") {
  Polynomial h = parse_poly("x^2*(x-1)", XV);
  Polynomial sf = squarefree_part(h);
  CHECK(sf == parse_poly("x*(x-1)", XV));
  CHECK(principal_radical_persists(h, sf, XYZW));

  // wrong claimed squarefree part: x misses the (x-1) branch
  CHECK_FALSE(principal_radical_persists(h, parse_poly("x", XV), XYZW));
  CHECK_THROWS_AS(principal_radical_persists(Polynomial(XV), sf, XYZW), ZeroPolynomial);
}

TEST_CASE("cylinder membership") {
  std::vector<Point> one{Point(std::map<Variable, Rational>{{Variable("x"), Rational(1)}})};
  CHECK(cylinder_membership(parse_poly("(x-1)*y^2", XY), one, XY));
  CHECK_FALSE(cylinder_membership(parse_poly("y", XY), one, XY));

  std::vector<Point> both{Point(std::map<Variable, Rational>{{Variable("x"), Rational(0)}}),
                          Point(std::map<Variable, Rational>{{Variable("x"), Rational(1)}})};
  CHECK(cylinder_membership(parse_poly("x^2-x", XY), both, XY));

  CHECK_THROWS_AS(cylinder_membership(parse_poly("x", XY), std::vector<Point>{}, XY),
                  EmptyPointSet);
}

TEST_CASE("cylinder membership matches extension membership") {
  Rng rng(20240018);
  for (int t = 0; t < 25; ++t) {
    std::vector<Point> pts;
    int n = rng.range(1, 3);
    for (int i = 0; i < n; ++i) pts.push_back(rng.point(XV, 2, 2));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Ideal cyl = extend_ideal(vanishing_ideal(pts, XV), XY);
    Polynomial f = rng.chance(50)
                       ? cyl.generators().front().with_vars(XY) * rng.polynomial(XY, 2, 3)
                       : rng.polynomial(XY, 3, 4);
    CHECK(cylinder_membership(f, pts, XY) == is_member(f, cyl));
  }
}

TEST_CASE("claim5 construction on the worked example") {
  VarSet tv{T};
  Claim5Certificate cert{T,
                         {{Rational(0), Rational(1), parse_poly("1-t", tv), parse_poly("1", tv)},
                          {Rational(1), Rational(1), parse_poly("t", tv), parse_poly("-1", tv)}}};
  Polynomial g = claim5_construct(cert);
  CHECK(g == parse_poly("2*t-1", tv));
  // identity (t-1)(1-t) + t*t = 2t-1 and g(0) = -1
  CHECK(parse_poly("(t-1)*(1-t) + t*t", tv) == g);
  Point z0(std::map<Variable, Rational>{{T, Rational(0)}});
  CHECK(g.eval(z0) == Rational(-1));
  // g lies in the ideal generated by the m_p
  Ideal m_ideal = I({"1-t", "t"}, tv);
  CHECK(is_member(g, m_ideal));
}

TEST_CASE("claim5 rejects corrupted certificates") {
  VarSet tv{T};
  auto entry = [&](long z, long lambda, const std::string& m, const std::string& g) {
    return Claim5Entry{Rational(z), Rational(lambda), parse_poly(m, tv), parse_poly(g, tv)};
  };
  CHECK_THROWS_AS(claim5_construct({T, {}}), InvalidCertificate);
  CHECK_THROWS_AS(claim5_construct({T, {entry(0, 1, "1-t", "1"), entry(0, 1, "t", "-1")}}),
                  InvalidCertificate);  // repeated z
  CHECK_THROWS_AS(claim5_construct({T, {entry(0, 0, "1-t", "1"), entry(1, 1, "t", "-1")}}),
                  InvalidCertificate);  // zero lambda
  CHECK_THROWS_AS(claim5_construct({T, {entry(0, 1, "1", "1"), entry(1, 1, "t", "-1")}}),
                  InvalidCertificate);  // unit identity broken
  CHECK_THROWS_AS(claim5_construct({T, {entry(0, 1, "1-t", "1"), entry(1, 1, "t", "1")}}),
                  InvalidCertificate);  // linear relation broken
}

TEST_CASE("claim3 factorization worked cases") {
  RationalFunction r(S, U({-1, 0, 1}), U({-2, 1}));  // (s^2-1)/(s-2)
  LinearFactorization fac = claim3_factor(r);
  CHECK(fac.scale == Rational(1));
  REQUIRE(fac.factors.size() == 3);
  CHECK(fac.factors[0] == std::pair{Rational(-1), 1});
  CHECK(fac.factors[1] == std::pair{Rational(1), 1});
  CHECK(fac.factors[2] == std::pair{Rational(2), -1});
  CHECK(fac.reconstruct() == r);

  LinearFactorization s_itself = claim3_factor(RationalFunction::variable(S));
  CHECK(s_itself.scale == Rational(1));
  REQUIRE(s_itself.factors.size() == 1);
  CHECK(s_itself.factors[0] == std::pair{Rational(0), 1});

  CHECK_THROWS_AS(claim3_factor(RationalFunction(S, U({1}), U({1, 0, 1}))), NonSplit);
  CHECK_THROWS_AS(claim3_factor(RationalFunction(S)), ZeroPolynomial);
}

TEST_CASE("claim3 preimage substitution") {
  RationalFunction r(S, U({-1, 0, 1}), U({-2, 1}));
  LinearFactorization fac = claim3_factor(r);
  auto [f, g] = claim3_preimage(fac, T, {{Rational(2), Variable("u")}});
  VarSet tv{T};
  CHECK(f == parse_poly("(t-1)*(t+1)", tv));
  CHECK(g == parse_poly("u", VarSet::named({"u"})));

  // all-positive exponents need no root variables: g = 1
  LinearFactorization pos = claim3_factor(RationalFunction(S, U({0, 0, 3}), U({1})));
  auto [f2, g2] = claim3_preimage(pos, T, {});
  CHECK(f2 == parse_poly("3*t^2", tv));
  CHECK(g2.is_one());

  auto [f3, g3] = claim3_preimage(claim3_factor(RationalFunction::variable(S)), T, {});
  CHECK(f3 == parse_poly("t", tv));
  CHECK(g3.is_one());

  CHECK_THROWS_AS(claim3_preimage(fac, T, {}), MissingRootVariable);
  CHECK_THROWS_AS(claim3_preimage(fac, T, {{Rational(2), T}}), InvalidArgument);
}

TEST_CASE("claim3 round trip on random split functions") {
  Rng rng(20240019);
  for (int t = 0; t < 25; ++t) {
    Rational scale = rng.nonzero_rational(5, 3);
    std::map<Rational, int> chosen;
    int k = rng.range(1, 4);
    for (int i = 0; i < k; ++i) {
      Rational root = rng.rational(4, 2);
      int e = rng.range(1, 3) * (rng.chance(50) ? 1 : -1);
      chosen[root] = e;
    }
    Unipoly num = Unipoly::constant(scale), den = Unipoly::constant(Rational(1));
    for (const auto& [root, e] : chosen) {
      if (e > 0)
        num = num * Unipoly::linear_root(root).pow(e);
      else
        den = den * Unipoly::linear_root(root).pow(-e);
    }
    RationalFunction r(S, num, den);
    LinearFactorization fac = claim3_factor(r);
    CHECK(fac.reconstruct() == r);
    std::map<Rational, Variable> assignment;
    int counter = 0;
    for (const auto& [root, e] : fac.factors)
      if (e < 0) assignment.emplace(root, Variable("u" + std::to_string(counter++)));
    CHECK_NOTHROW(claim3_preimage(fac, T, assignment));
  }
}
