#include <doctest.h>

#include <nsatz/ideal_io.hpp>
#include <nsatz/parse.hpp>

#include "../support/oracles.hpp"

using namespace nsatz;

namespace {

const VarSet XYZ = VarSet::named({"x", "y", "z"});
const MonomialOrder LEX = MonomialOrder::lex(XYZ);

}  // namespace

TEST_CASE("grammar essentials") {
  CHECK(parse_poly("x^2 + y*z - 1", XYZ) ==
        parse_poly("x*x", XYZ) + parse_poly("y", XYZ) * parse_poly("z", XYZ) -
            Polynomial::one(XYZ));
  CHECK(parse_poly("3/2*x - x", XYZ) == Polynomial::from_variable(Variable("x"), XYZ).scaled(Rational(1, 2)));
  CHECK(parse_poly("(x+y)^2", XYZ) == parse_poly("x^2 + 2*x*y + y^2", XYZ));
  CHECK(parse_poly("-x + 0", XYZ) == -parse_poly("x", XYZ));
  CHECK_THROWS_AS(parse_poly("x - -1", XYZ), SyntaxError);  // no nested unary minus
  CHECK(parse_poly("  7/14  ", XYZ) == Polynomial::constant(Rational(1, 2), XYZ));
  CHECK(parse_poly("x^0", XYZ) == Polynomial::one(XYZ));
}

TEST_CASE("grammar rejections carry positions and kinds") {
  CHECK_THROWS_AS(parse_poly("x^-1", XYZ), NegativeExponent);
  CHECK_THROWS_AS(parse_poly("w + 1", XYZ), UnknownVariable);
  CHECK_THROWS_AS(parse_poly("x y", XYZ), SyntaxError);  // implicit multiplication
  CHECK_THROWS_AS(parse_poly("x +", XYZ), SyntaxError);
  CHECK_THROWS_AS(parse_poly("(x", XYZ), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x^(2)", XYZ), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x^1/2", XYZ), SyntaxError);
  CHECK_THROWS_AS(parse_poly("1/0", XYZ), DivisionByZero);
  CHECK_THROWS_AS(parse_poly("", XYZ), SyntaxError);
  CHECK_THROWS_AS(parse_poly("_w0", XYZ), SyntaxError);
  try {
    parse_poly("x + $", XYZ);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("printing is deterministic and descending") {
  CHECK(print_poly(parse_poly("y*z - 1 + x^2", XYZ), LEX) == "x^2 + y*z - 1");
  CHECK(print_poly(Polynomial(XYZ), LEX) == "0");
  CHECK(print_poly(parse_poly("3/2*x - x", XYZ), LEX) == "1/2*x");
  CHECK(print_poly(parse_poly("-x + 1", XYZ), LEX) == "-x + 1");
  CHECK(print_poly(parse_poly("x - 2*y^2", XYZ), LEX) == "x - 2*y^2");
  CHECK_THROWS_AS(
      print_poly(parse_poly("z", XYZ), MonomialOrder::lex(VarSet::named({"x", "y"}))),
      UnknownVariable);
}

TEST_CASE("parse is a left inverse of print") {
  testing::Rng rng(20240007);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = rng.polynomial(XYZ, 5, 7);
    std::string text = print_poly(f, LEX);
    CHECK(parse_poly(text, XYZ) == f);
    CHECK(print_poly(parse_poly(text, XYZ), LEX) == text);  // print-parse-print idempotent
  }
}

TEST_CASE("fuzzed input never crashes") {
  const std::string alphabet = "xyz+-*^()/0123456789 w_";
  testing::Rng rng(20240008);
  int parsed = 0, rejected = 0;
  for (int i = 0; i < 600; ++i) {
    std::string text;
    int len = rng.range(1, 24);
    for (int k = 0; k < len; ++k) text += alphabet[rng.next(alphabet.size())];
    try {
      parse_poly(text, XYZ);
      ++parsed;
    } catch (const Error&) {
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 600);
  CHECK(rejected > 0);
}

TEST_CASE("point syntax") {
  Point p = parse_point("x=1,y=-2/3", XYZ);
  CHECK(p.at(Variable("x")) == Rational(1));
  CHECK(p.at(Variable("y")) == Rational(-2, 3));
  CHECK(print_point(p) == "x=1,y=-2/3");
  CHECK_THROWS_AS(parse_point("x=1,q=2", XYZ), UnknownVariable);
  CHECK_THROWS_AS(parse_point("x=1,x=2", XYZ), SyntaxError);
  CHECK_THROWS_AS(parse_point("x", XYZ), SyntaxError);
  CHECK_THROWS_AS(parse_point("x=", XYZ), SyntaxError);
}

TEST_CASE("ideal files") {
  IdealFile f = parse_ideal_file(R"({"vars":["x","y"],"gens":["x^2+y^2","x*y"]})");
  Ideal a = load_ideal(f);
  CHECK(a.vars() == VarSet::named({"x", "y"}));
  CHECK(a.order().kind() == MonomialOrder::Kind::GrevLex);  // default
  CHECK(a.generators().size() == 2);

  Ideal zero = load_ideal(parse_ideal_file(R"({"vars":["x"],"gens":[]})"));
  CHECK(zero.is_zero());

  IdealFile ordered = parse_ideal_file(R"({"vars":["y","x"],"gens":[],"order":"lex"})");
  Ideal b = load_ideal(ordered);
  CHECK(b.order().sequence().front() == Variable("y"));  // file sequence drives significance

  CHECK_THROWS_AS(load_ideal(parse_ideal_file(R"({"vars":["x"],"gens":["y"]})")),
                  UnknownVariable);
  CHECK_THROWS_AS(parse_ideal_file(R"({"vars":["x"],"gens":[],"order":"degrevlex"})"),
                  SyntaxError);
  CHECK_NOTHROW(load_ideal(parse_ideal_file(R"({"vars":["x"],"gens":[],"order":"grlex"})")));
  CHECK_THROWS_AS(parse_ideal_file(R"({"vars":["x","x"],"gens":[]})"), SyntaxError);
  CHECK_THROWS_AS(parse_ideal_file(R"({"vars":["_w0"],"gens":[]})"), SyntaxError);
  CHECK_THROWS_AS(parse_ideal_file(R"({"vars":["x"],"gens":[],"ordr":"lex"})"), SyntaxError);
  CHECK_THROWS_AS(parse_ideal_file("not json"), SyntaxError);
  CHECK_THROWS_AS(parse_ideal_file(R"(["x"])"), SyntaxError);
}
