#include "nsatz/extension.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsatz/parse.hpp"

namespace nsatz {

namespace {

std::string render_residual(const Unipoly& residual, const Variable& var) {
  return print_poly(residual.to_polynomial(var));
}

}  // namespace

Ideal extend_ideal(const Ideal& a, const VarSet& bigger) {
  if (!a.vars().subset_of(bigger))
    throw NotASuperset("extension target does not contain the ideal's variable set");
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size());
  for (const auto& g : a.generators()) gens.push_back(g.with_vars(bigger));
  return Ideal(std::move(gens), bigger, MonomialOrder::of_kind(a.order().kind(), bigger));
}

bool corollary_check(const Ideal& a, const VarSet& bigger, std::span<const Polynomial> probes,
                     int power_bound) {
  Ideal extended = extend_ideal(a, bigger);
  bool ok = true;
  for (const auto& probe : probes) {
    if (!probe.support().subset_of(bigger))
      throw InvalidArgument("probe polynomial outside the extension ring");
    Polynomial f = probe.restricted_to(bigger);
    bool rm_ext = radical_member(f, extended);
    if (probe.support().subset_of(a.vars())) {
      Polynomial small = probe.restricted_to(a.vars());
      ok = ok && (radical_member(small, a) == rm_ext);
    }
    // a bounded power certificate in the extension must agree with the
    // Rabinowitsch verdict; absence of one is inconclusive
    if (bounded_power_member(f, extended, power_bound).has_value()) ok = ok && rm_ext;
  }
  return ok;
}

bool principal_radical_persists(const Polynomial& h, const Polynomial& squarefree_h,
                                const VarSet& bigger) {
  if (h.is_zero() || squarefree_h.is_zero())
    throw ZeroPolynomial("principal radical persistence needs nonzero polynomials");
  VarSet small = h.support().united(squarefree_h.support());
  if (!small.subset_of(bigger))
    throw NotASuperset("extension target does not contain the polynomials' variables");
  MonomialOrder small_order = MonomialOrder::grevlex(small);
  Ideal u = extend_ideal(Ideal({h.restricted_to(small)}, small, small_order), bigger);
  Ideal s = extend_ideal(Ideal({squarefree_h.restricted_to(small)}, small, small_order), bigger);
  if (!is_member(h.restricted_to(small).with_vars(bigger), s)) return false;
  for (const auto& g : s.groebner().elements())
    if (!radical_member(g.restricted_to(bigger), u)) return false;
  return true;
}

bool cylinder_membership(const Polynomial& f, std::span<const Point> points,
                         const VarSet& bigger) {
  if (points.empty()) throw EmptyPointSet("cylinder membership over an empty point set");
  VarSet small = points.front().variables();
  for (const auto& x : points)
    if (x.variables() != small)
      throw InvalidArgument("cylinder points must share one variable set");
  if (!small.subset_of(bigger))
    throw NotASuperset("cylinder target does not contain the points' variable set");
  if (!f.support().subset_of(bigger))
    throw InvalidArgument("cylinder polynomial outside the extension ring");
  Polynomial g = f.restricted_to(bigger);
  for (const auto& x : points)
    if (!g.partial_eval(x).is_zero()) return false;
  return true;
}

Polynomial claim5_construct(const Claim5Certificate& cert) {
  const auto& entries = cert.entries;
  if (entries.empty()) throw InvalidCertificate("certificate has no entries");
  for (std::size_t p = 0; p < entries.size(); ++p) {
    if (entries[p].lambda.is_zero())
      throw InvalidCertificate("lambda is zero at entry " + std::to_string(p));
    for (std::size_t q = p + 1; q < entries.size(); ++q)
      if (entries[p].z == entries[q].z)
        throw InvalidCertificate("sample values are not pairwise distinct (entries " +
                                 std::to_string(p) + ", " + std::to_string(q) + ")");
  }

  VarSet ambient{cert.var};
  for (const auto& e : entries) ambient = ambient.united(e.m.vars()).united(e.g.vars());
  Polynomial t = Polynomial::from_variable(cert.var, ambient);

  for (std::size_t p = 0; p < entries.size(); ++p) {
    Polynomial lhs = entries[p].m.with_vars(ambient) +
                     (t - Polynomial::constant(entries[p].z, ambient)) *
                         entries[p].g.with_vars(ambient);
    if (!lhs.is_one())
      throw InvalidCertificate("unit identity m + (t - z)*g = 1 fails at entry " +
                               std::to_string(p));
  }

  Polynomial relation(ambient);
  for (const auto& e : entries) relation = relation + e.lambda * e.g.with_vars(ambient);
  if (!relation.is_zero())
    throw InvalidCertificate("linear relation sum lambda_p * g_p = 0 fails");

  // g := sum_p lambda_p * prod_{q != p} (t - z_q), univariate in t
  VarSet tv{cert.var};
  Polynomial tv_t = Polynomial::from_variable(cert.var, tv);
  auto partial_product = [&](std::size_t skip) {
    Polynomial prod = Polynomial::one(tv);
    for (std::size_t q = 0; q < entries.size(); ++q) {
      if (q == skip) continue;
      prod = prod * (tv_t - Polynomial::constant(entries[q].z, tv));
    }
    return prod;
  };
  Polynomial g(tv);
  for (std::size_t p = 0; p < entries.size(); ++p)
    g = g + entries[p].lambda * partial_product(p);

  // rearrangement of g through the unit identities
  Polynomial rhs(ambient);
  for (std::size_t p = 0; p < entries.size(); ++p)
    rhs = rhs + (entries[p].lambda * partial_product(p)).with_vars(ambient) *
                    entries[p].m.with_vars(ambient);
  if (!(g == rhs))
    throw std::logic_error("claim5 rearrangement identity failed despite valid certificate");

  Point z1{{{cert.var, entries.front().z}}};
  Rational gz1 = g.eval(z1);
  Rational expected = entries.front().lambda;
  for (std::size_t q = 1; q < entries.size(); ++q)
    expected *= entries.front().z - entries[q].z;
  if (!(gz1 == expected) || gz1.is_zero())
    throw std::logic_error("claim5 evaluation g(z_1) check failed despite valid certificate");
  return g;
}

RationalFunction LinearFactorization::reconstruct() const {
  Unipoly num = Unipoly::constant(scale);
  Unipoly den = Unipoly::constant(Rational(1));
  for (const auto& [root, k] : factors) {
    if (k > 0)
      num = num * Unipoly::linear_root(root).pow(k);
    else
      den = den * Unipoly::linear_root(root).pow(-k);
  }
  return RationalFunction(var, std::move(num), std::move(den));
}

LinearFactorization claim3_factor(const RationalFunction& r) {
  if (r.is_zero())
    throw ZeroPolynomial("the zero rational function has no linear factorization");
  LinearFactorization out{r.var(), r.num().leading_coeff(), {}};

  RootExtraction num_roots = rational_roots(r.num());
  if (num_roots.residual.degree() >= 1)
    throw NonSplit("numerator does not split over Q; residual factor " +
                   render_residual(num_roots.residual, r.var()));
  RootExtraction den_roots = rational_roots(r.den());
  if (den_roots.residual.degree() >= 1)
    throw NonSplit("denominator does not split over Q; residual factor " +
                   render_residual(den_roots.residual, r.var()));

  std::map<Rational, int> exps;
  for (const auto& [root, mult] : num_roots.roots) exps[root] += mult;
  for (const auto& [root, mult] : den_roots.roots) exps[root] -= mult;
  for (const auto& [root, k] : exps)
    if (k != 0) out.factors.emplace_back(root, k);

  if (!(out.reconstruct() == r))
    throw std::logic_error("claim3 factorization failed to reconstruct its input");
  return out;
}

std::pair<Polynomial, Polynomial> claim3_preimage(
    const LinearFactorization& factorization, const Variable& t_j,
    const std::map<Rational, Variable>& root_vars) {
  VarSet tv{t_j};
  Polynomial t = Polynomial::from_variable(t_j, tv);
  Polynomial f = Polynomial::constant(factorization.scale, tv);
  std::vector<std::pair<Variable, int>> monomial_entries;
  std::vector<Variable> used;
  for (const auto& [root, k] : factorization.factors) {
    if (k > 0) {
      f = f * (t - Polynomial::constant(root, tv)).pow(k);
    } else {
      auto it = root_vars.find(root);
      if (it == root_vars.end())
        throw MissingRootVariable("no variable assigned to denominator root " + root.str());
      if (it->second == t_j)
        throw InvalidArgument("root variable collides with the distinguished variable");
      if (std::find(used.begin(), used.end(), it->second) != used.end())
        throw InvalidArgument("root variables must be pairwise distinct");
      used.push_back(it->second);
      monomial_entries.emplace_back(it->second, -k);
    }
  }
  VarSet gvars(used);
  Polynomial g =
      Polynomial::from_monomial(Monomial::from_entries(monomial_entries), Rational(1), gvars);

  // substitution check: t_j -> s, u_i -> 1/(s - a_i) applied to f*g
  RationalFunction image = RationalFunction::constant(factorization.var, Rational(0));
  Polynomial fg = f * g;
  for (const auto& [mono, coeff] : fg.terms()) {
    RationalFunction term = RationalFunction::constant(factorization.var, coeff);
    for (const auto& [v, e] : mono.entries()) {
      if (v == t_j) {
        term = term * RationalFunction::variable(factorization.var).pow(e);
      } else {
        const Rational* root = nullptr;
        for (const auto& [r, u] : root_vars)
          if (u == v) {
            root = &r;
            break;
          }
        if (root == nullptr) throw std::logic_error("claim3 preimage used an unmapped variable");
        term = term * RationalFunction(factorization.var, Unipoly::constant(Rational(1)),
                                       Unipoly::linear_root(*root))
                          .pow(e);
      }
    }
    image = image + term;
  }
  if (!(image == factorization.reconstruct()))
    throw std::logic_error("claim3 preimage substitution failed to reproduce the function");
  return {f, g};
}

}  // namespace nsatz
