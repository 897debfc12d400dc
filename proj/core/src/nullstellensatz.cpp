#include "nsatz/nullstellensatz.hpp"

#include <algorithm>

#include "nsatz/unipoly.hpp"

namespace nsatz {

Ideal point_ideal(const Point& x, const VarSet& vars) {
  if (!x.total_on(vars)) throw PartialPoint("point does not assign every variable");
  std::vector<Polynomial> gens;
  gens.reserve(vars.size());
  for (const auto& v : vars)
    gens.push_back(Polynomial::from_variable(v, vars) - Polynomial::constant(x.at(v), vars));
  return Ideal(std::move(gens), vars, MonomialOrder::grevlex(vars));
}

bool solvable(const Ideal& a) { return !a.groebner().is_unit(); }

bool radical_member(const Polynomial& f, const Ideal& a) {
  if (!f.support().subset_of(a.vars()))
    throw InvalidArgument("radical membership query outside the ideal's ring");
  Variable w = fresh_variable(a.vars());
  VarSet ext = a.vars().united(VarSet{w});
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() + 1);
  for (const auto& g : a.generators()) gens.push_back(g.with_vars(ext));
  gens.push_back(Polynomial::one(ext) -
                 Polynomial::from_variable(w, ext) * f.restricted_to(a.vars()).with_vars(ext));
  Ideal extended(std::move(gens), ext, MonomialOrder::grevlex(ext));
  return extended.groebner().is_unit();
}

std::optional<int> bounded_power_member(const Polynomial& f, const Ideal& a, int bound) {
  Polynomial p = Polynomial::one(f.vars());
  for (int n = 1; n <= bound; ++n) {
    p = p * f;
    if (is_member(p, a)) return n;
  }
  return std::nullopt;
}

namespace {

// pure-power leading monomials for every variable <=> dim 0
bool zero_dimensional(const GroebnerBasis& gb, const VarSet& vars) {
  for (const auto& v : vars) {
    bool found = false;
    for (const auto& g : gb.elements()) {
      const Monomial lm = g.leading_monomial(gb.order());
      if (lm.entries().size() == 1 && lm.entries().front().first == v) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

VarietyResult variety_points(const Ideal& a) {
  MonomialOrder lex = MonomialOrder::lex(a.vars());
  const GroebnerBasis gb =
      (a.order() == lex) ? a.groebner() : buchberger(a.generators(), lex);
  if (gb.is_unit()) return VarietyResult::empty();
  if (!zero_dimensional(gb, a.vars())) return VarietyResult::not_zero_dimensional();

  const auto& seq = lex.sequence();
  std::vector<Point> partials{Point{}};
  for (std::size_t idx = seq.size(); idx-- > 0;) {
    const Variable& v = seq[idx];
    std::vector<Variable> suffix_vars(seq.begin() + static_cast<std::ptrdiff_t>(idx), seq.end());
    VarSet suffix(std::move(suffix_vars));

    std::vector<Point> next;
    for (const auto& partial : partials) {
      std::vector<Unipoly> constraints;
      bool dead = false;
      for (const auto& g : gb.elements()) {
        if (!g.support().subset_of(suffix)) continue;
        Polynomial u = g.partial_eval(partial);
        if (u.is_zero()) continue;
        if (u.is_constant()) {  // nonzero constant: no extension of this branch
          dead = true;
          break;
        }
        constraints.push_back(Unipoly::from_polynomial(u, v));
      }
      if (dead) continue;
      if (constraints.empty()) return VarietyResult::not_zero_dimensional();
      Unipoly h = constraints.front();
      for (std::size_t k = 1; k < constraints.size() && h.degree() > 0; ++k)
        h = Unipoly::gcd(h, constraints[k]);
      if (h.degree() == 0) continue;  // contradictory constraints
      RootExtraction ex = rational_roots(h);
      if (ex.residual.degree() >= 1)
        return VarietyResult::non_rational(ex.residual.to_polynomial(v));
      for (const auto& [root, mult] : ex.roots) next.push_back(partial.with(v, root));
    }
    partials = std::move(next);
  }

  std::vector<Point> points;
  for (const auto& candidate : partials) {
    bool ok = true;
    for (const auto& g : a.generators())
      if (!g.eval(candidate).is_zero()) {
        ok = false;
        break;
      }
    if (ok) points.push_back(candidate);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return VarietyResult::of_points(std::move(points));
}

Ideal vanishing_ideal(std::span<const Point> points, const VarSet& vars, bool allow_empty) {
  if (points.empty()) {
    if (!allow_empty) throw EmptyPointSet("vanishing ideal of an empty point set");
    return Ideal::unit(vars, MonomialOrder::grevlex(vars));
  }
  Ideal acc = point_ideal(points.front(), vars);
  for (std::size_t i = 1; i < points.size(); ++i)
    acc = intersect(acc, point_ideal(points[i], vars));
  return acc;
}

Point maximal_point(const Ideal& m) {
  std::map<Variable, Rational> coords;
  for (const auto& v : m.vars()) {
    Ideal contraction = eliminate(m, VarSet{v});
    const auto& els = contraction.groebner().elements();
    if (els.empty())
      throw NotUnitContraction("contraction to Q[" + v.name() + "] is the zero ideal");
    // univariate contraction is principal
    const Polynomial& h = els.front();
    VarSet supp = h.support();
    if (supp.empty())
      throw NotUnitContraction("contraction to Q[" + v.name() + "] is the unit ideal");
    Unipoly u = Unipoly::from_polynomial(h, v);
    if (u.degree() != 1)
      throw NotUnitContraction("contraction to Q[" + v.name() + "] has degree " +
                               std::to_string(u.degree()) +
                               ", not of the form <" + v.name() + " - c> with rational c");
    coords.emplace(v, -u.coeff(0));  // monic: v + c0
  }
  Point x{std::move(coords)};
  if (!ideal_equal(m, point_ideal(x, m.vars())))
    throw NotMaximal("recovered point ideal differs from the input ideal");
  return x;
}

std::optional<Point> check_statement_f(const Ideal& m, const VarSet& subvars) {
  Ideal contraction = eliminate(m, subvars);
  const auto& els = contraction.groebner().elements();
  if (els.size() != subvars.size()) return std::nullopt;
  std::map<Variable, Rational> coords;
  for (const auto& g : els) {
    VarSet supp = g.support();
    if (supp.size() != 1) return std::nullopt;
    const Variable& v = *supp.begin();
    Unipoly u = Unipoly::from_polynomial(g, v);
    if (u.degree() != 1 || !u.coeff(1).is_one()) return std::nullopt;
    if (coords.count(v)) return std::nullopt;
    coords.emplace(v, -u.coeff(0));
  }
  if (coords.size() != subvars.size()) return std::nullopt;
  return Point{std::move(coords)};
}

bool strong_nss_check(const Ideal& a) {
  VarietyResult vr = variety_points(a);
  switch (vr.tag) {
    case VarietyResult::Tag::Empty:
      throw NotCheckable("Empty", "variety is empty (unit ideal): nothing to enumerate");
    case VarietyResult::Tag::NonRational:
      throw NotCheckable("NonRational",
                         "variety has a non-rational coordinate (witness via variety_points)");
    case VarietyResult::Tag::NotZeroDimensional:
      throw NotCheckable("NotZeroDimensional", "ideal is not zero-dimensional");
    case VarietyResult::Tag::Points:
      break;
  }
  if (vr.points.empty())
    throw NotCheckable("Empty", "proper ideal enumerated no points");  // cannot happen
  Ideal iv = vanishing_ideal(vr.points, a.vars());
  for (const auto& g : iv.groebner().elements())
    if (!radical_member(g.restricted_to(a.vars()), a)) return false;
  for (const auto& g : a.generators())
    if (!is_member(g, iv)) return false;
  return true;
}

}  // namespace nsatz
