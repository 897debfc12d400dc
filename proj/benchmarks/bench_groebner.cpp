#include <benchmark/benchmark.h>

#include <nsatz/nsatz.hpp>

namespace {

using namespace nsatz;

const VarSet kXYZ = VarSet::named({"x", "y", "z"});
const VarSet kXY = VarSet::named({"x", "y"});

std::vector<Polynomial> cyclic3() {
  return {parse_poly("x+y+z", kXYZ), parse_poly("x*y+y*z+z*x", kXYZ),
          parse_poly("x*y*z-1", kXYZ)};
}

void BM_BuchbergerCyclic3Grevlex(benchmark::State& state) {
  auto gens = cyclic3();
  MonomialOrder order = MonomialOrder::grevlex(kXYZ);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, order));
}
BENCHMARK(BM_BuchbergerCyclic3Grevlex);

void BM_BuchbergerCyclic3Lex(benchmark::State& state) {
  auto gens = cyclic3();
  MonomialOrder order = MonomialOrder::lex(kXYZ);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, order));
}
BENCHMARK(BM_BuchbergerCyclic3Lex);

void BM_NormalForm(benchmark::State& state) {
  MonomialOrder order = MonomialOrder::grevlex(kXYZ);
  GroebnerBasis gb = buchberger(cyclic3(), order);
  Polynomial f = parse_poly("(x+y+z+1)^6", kXYZ);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(f, gb));
}
BENCHMARK(BM_NormalForm);

void BM_RadicalMembership(benchmark::State& state) {
  Ideal a({parse_poly("x^2*y", kXY), parse_poly("x*y^2", kXY)}, kXY,
          MonomialOrder::grevlex(kXY));
  Polynomial f = parse_poly("x*y", kXY);
  a.groebner();  // cache, so only the Rabinowitsch extension is measured
  for (auto _ : state) benchmark::DoNotOptimize(radical_member(f, a));
}
BENCHMARK(BM_RadicalMembership);

void BM_VanishingIdeal8Points(benchmark::State& state) {
  std::vector<Point> pts;
  for (long i = 0; i < 8; ++i)
    pts.emplace_back(std::map<Variable, Rational>{{Variable("x"), Rational(i)},
                                                  {Variable("y"), Rational(i * i % 5, 3)}});
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_ideal(pts, kXY));
}
BENCHMARK(BM_VanishingIdeal8Points);

void BM_VarietySolve(benchmark::State& state) {
  Ideal a({parse_poly("(x-1)*(x+2)*(2*x-1)", kXY), parse_poly("y^2-x^2", kXY)}, kXY,
          MonomialOrder::grevlex(kXY));
  for (auto _ : state) {
    Ideal fresh = a.with_order(MonomialOrder::grevlex(kXY));
    benchmark::DoNotOptimize(variety_points(fresh));
  }
}
BENCHMARK(BM_VarietySolve);

void BM_ParsePrintRoundTrip(benchmark::State& state) {
  MonomialOrder lex = MonomialOrder::lex(kXYZ);
  Polynomial f = parse_poly("(x+2*y+3*z+1/2)^4", kXYZ);
  std::string text = print_poly(f, lex);
  for (auto _ : state) benchmark::DoNotOptimize(print_poly(parse_poly(text, kXYZ), lex));
}
BENCHMARK(BM_ParsePrintRoundTrip);

}  // namespace

BENCHMARK_MAIN();
