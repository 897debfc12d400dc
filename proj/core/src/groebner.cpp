#include "nsatz/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nsatz {

namespace {

struct DescendingCmp {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

// working representation for division: terms sorted leading-first
using WorkPoly = std::map<Monomial, Rational, DescendingCmp>;

WorkPoly to_work(const Polynomial& f, const MonomialOrder& order) {
  WorkPoly p(DescendingCmp{&order});
  for (const auto& [m, c] : f.terms()) p.emplace(m, c);
  return p;
}

// p += c * m * g
void add_scaled(WorkPoly& p, const Rational& c, const Monomial& m, const Polynomial& g) {
  for (const auto& [t, a] : g.terms()) {
    Monomial key = m * t;
    Rational delta = c * a;
    auto it = p.find(key);
    if (it == p.end()) {
      if (!delta.is_zero()) p.emplace(std::move(key), std::move(delta));
    } else {
      it->second += delta;
      if (it->second.is_zero()) p.erase(it);
    }
  }
}

VarSet joint_vars(const Polynomial& f, std::span<const Polynomial> gs) {
  VarSet vars = f.vars();
  for (const auto& g : gs) vars = vars.united(g.vars());
  return vars;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  auto [mf, cf] = f.leading_term(order);
  auto [mg, cg] = g.leading_term(order);
  Monomial l = Monomial::lcm(mf, mg);
  WorkPoly s(DescendingCmp{&order});
  add_scaled(s, cf.inverse(), l.divided_by(mf), f);
  add_scaled(s, -cg.inverse(), l.divided_by(mg), g);
  Polynomial::TermMap terms(s.begin(), s.end());
  return Polynomial(std::move(terms), f.vars().united(g.vars()));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order) {
  std::vector<std::pair<Monomial, Rational>> lts;
  lts.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) throw InvalidArgument("normal_form divisor is zero");
    lts.push_back(g.leading_term(order));
  }
  WorkPoly p = to_work(f, order);
  Polynomial::TermMap remainder;
  while (!p.empty()) {
    const auto& [lm, lc] = *p.begin();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!lts[i].first.divides(lm)) continue;
      Monomial q = lm.divided_by(lts[i].first);
      Rational c = lc / lts[i].second;
      add_scaled(p, -c, q, divisors[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.emplace(lm, lc);
      p.erase(p.begin());
    }
  }
  return Polynomial(std::move(remainder), joint_vars(f, divisors));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return normal_form(f, basis.elements(), basis.order());
}

namespace {

struct PendingPair {
  std::size_t i, j;  // i < j
  Monomial lcm;
  int degree;
};

GroebnerBasis reduce_basis(std::vector<Polynomial> g, const MonomialOrder& order) {
  // minimalization: keep only elements whose leading monomial is not
  // divisible by another kept one; scanning by ascending LM drops duplicates
  std::vector<std::size_t> idx(g.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    auto c = order.compare(g[a].leading_monomial(order), g[b].leading_monomial(order));
    if (c != 0) return c == std::strong_ordering::less;
    return a < b;
  });
  std::vector<Polynomial> minimal;
  for (std::size_t k : idx) {
    const Monomial lm = g[k].leading_monomial(order);
    bool redundant = false;
    for (const auto& kept : minimal)
      if (kept.leading_monomial(order).divides(lm)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g[k]);
  }
  // inter-reduction: tails rewritten against the other elements; leading
  // monomials are untouched by minimality, so one pass suffices
  std::vector<Polynomial> reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(reduced.size() - 1);
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = normal_form(reduced[i], others, order).monic(order);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading_monomial(order), b.leading_monomial(order));
  });
  return GroebnerBasis(std::move(reduced), order);
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order) {
  std::vector<Polynomial> g;
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    Polynomial m = f.monic(order);
    if (std::find(g.begin(), g.end(), m) == g.end()) g.push_back(std::move(m));
  }
  if (g.empty()) return GroebnerBasis({}, order);

  std::vector<Monomial> lms;
  lms.reserve(g.size());
  for (const auto& f : g) lms.push_back(f.leading_monomial(order));

  std::vector<PendingPair> pending;
  std::set<std::pair<std::size_t, std::size_t>> in_queue;
  auto push_pairs = [&](std::size_t t) {
    for (std::size_t i = 0; i < t; ++i) {
      Monomial l = Monomial::lcm(lms[i], lms[t]);
      pending.push_back({i, t, l, l.total_degree()});
      in_queue.emplace(i, t);
    }
  };
  for (std::size_t t = 1; t < g.size(); ++t) push_pairs(t);

  while (!pending.empty()) {
    // normal selection: lowest lcm degree first, deterministic tie-breaks
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const auto& a = pending[k];
      const auto& b = pending[best];
      if (a.degree != b.degree) {
        if (a.degree < b.degree) best = k;
        continue;
      }
      auto c = order.compare(a.lcm, b.lcm);
      if (c == std::strong_ordering::less ||
          (c == std::strong_ordering::equal && std::tie(a.i, a.j) < std::tie(b.i, b.j)))
        best = k;
    }
    PendingPair pr = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    in_queue.erase({pr.i, pr.j});

    // Buchberger's first criterion: coprime leading monomials
    if (lms[pr.i].coprime_with(lms[pr.j])) continue;
    // chain criterion: some g_k divides the lcm and both side pairs already
    // left the queue
    bool skip = false;
    for (std::size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!lms[k].divides(pr.lcm)) continue;
      std::pair<std::size_t, std::size_t> key_ik{std::min(pr.i, k), std::max(pr.i, k)};
      std::pair<std::size_t, std::size_t> key_jk{std::min(pr.j, k), std::max(pr.j, k)};
      if (!in_queue.count(key_ik) && !in_queue.count(key_jk)) skip = true;
    }
    if (skip) continue;

    Polynomial s = s_polynomial(g[pr.i], g[pr.j], order);
    Polynomial r = normal_form(s, g, order);
    if (r.is_zero()) continue;
    // a constant remainder means the unit ideal
    if (r.is_constant()) return GroebnerBasis({Polynomial::one(r.vars())}, order);
    g.push_back(r.monic(order));
    lms.push_back(g.back().leading_monomial(order));
    push_pairs(g.size() - 1);
  }

  return reduce_basis(std::move(g), order);
}

Ideal::Ideal(std::vector<Polynomial> generators, VarSet vars, MonomialOrder order)
    : vars_(std::move(vars)), order_(std::move(order)), cache_(std::make_shared<Cache>()) {
  if (!order_.covers(vars_))
    throw InvalidArgument("monomial order does not cover the ideal's variable set");
  gens_.reserve(generators.size());
  for (auto& f : generators) {
    if (f.is_zero()) continue;
    if (!f.support().subset_of(vars_))
      throw InvalidArgument("generator uses a variable outside the ideal's variable set");
    gens_.push_back(f.restricted_to(vars_));
  }
}

Ideal Ideal::from_basis(GroebnerBasis basis, VarSet vars) {
  Ideal a(basis.elements(), std::move(vars), basis.order());
  std::call_once(a.cache_->once, [&] { a.cache_->basis = std::move(basis); });
  return a;
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [&] { cache_->basis = buchberger(gens_, order_); });
  return *cache_->basis;
}

Ideal Ideal::with_order(MonomialOrder order) const { return Ideal(gens_, vars_, std::move(order)); }

bool is_member(const Polynomial& f, const Ideal& a) {
  if (!f.support().subset_of(a.vars()))
    throw InvalidArgument("membership query for a polynomial outside the ideal's ring");
  return normal_form(f.with_vars(a.vars()), a.groebner()).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.vars() != b.vars()) throw InvalidArgument("ideal_equal across different variable sets");
  const GroebnerBasis& ga = a.groebner();
  if (b.order() == a.order()) return ga.elements() == b.groebner().elements();
  Ideal converted = b.with_order(a.order());
  return ga.elements() == converted.groebner().elements();
}

Ideal eliminate(const Ideal& a, const VarSet& keep) {
  if (!keep.subset_of(a.vars()))
    throw InvalidArgument("eliminate: kept variables must lie in the ideal's variable set");
  VarSet elim = a.vars().minus(keep);
  MonomialOrder block = MonomialOrder::block_elim(elim, keep);
  GroebnerBasis gb = buchberger(a.generators(), block);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements())
    if (g.support().subset_of(keep)) kept.push_back(g.restricted_to(keep));
  // the retained elements are the reduced basis of the contraction under
  // the order's restriction to the kept block, which is grevlex(keep)
  return Ideal::from_basis(GroebnerBasis(std::move(kept), MonomialOrder::grevlex(keep)), keep);
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.vars() != b.vars()) throw InvalidArgument("intersect across different variable sets");
  Variable w = fresh_variable(a.vars());
  VarSet ext = a.vars().united(VarSet{w});
  Polynomial pw = Polynomial::from_variable(w, ext);
  Polynomial cw = Polynomial::one(ext) - pw;
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() + b.generators().size());
  for (const auto& f : a.generators()) gens.push_back(pw * f.with_vars(ext));
  for (const auto& g : b.generators()) gens.push_back(cw * g.with_vars(ext));
  Ideal mixed(std::move(gens), ext, MonomialOrder::grevlex(ext));
  Ideal inter = eliminate(mixed, a.vars());
  if (inter.order() == a.order()) return inter;
  return inter.with_order(a.order());
}

Variable fresh_variable(const VarSet& avoid) {
  for (int n = 0;; ++n) {
    Variable v("_w" + std::to_string(n));
    if (!avoid.contains(v)) return v;
  }
}

}  // namespace nsatz
