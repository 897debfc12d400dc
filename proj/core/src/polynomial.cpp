#include "nsatz/polynomial.hpp"

namespace nsatz {

Polynomial::Polynomial(TermMap terms, VarSet vars) : vars_(std::move(vars)) {
  for (auto& [m, c] : terms) {
    if (c.is_zero()) continue;
    if (!m.supported_on(vars_))
      throw InvalidArgument("polynomial term uses a variable outside its variable set");
    terms_.emplace(m, c);
  }
}

Polynomial Polynomial::constant(Rational c, VarSet vars) {
  Polynomial f(std::move(vars));
  if (!c.is_zero()) f.terms_.emplace(Monomial(), std::move(c));
  return f;
}

Polynomial Polynomial::from_variable(const Variable& v, VarSet vars) {
  return from_monomial(Monomial::power(v, 1), Rational(1), std::move(vars));
}

Polynomial Polynomial::from_monomial(Monomial m, Rational c, VarSet vars) {
  Polynomial f(std::move(vars));
  if (!c.is_zero()) {
    if (!m.supported_on(f.vars_))
      throw InvalidArgument("monomial uses a variable outside the variable set");
    f.terms_.emplace(std::move(m), std::move(c));
  }
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw InvalidArgument("polynomial is not constant");
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

VarSet Polynomial::support() const {
  VarSet s;
  for (const auto& [m, c] : terms_) s = s.united(m.support());
  return s;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(vars_.united(o.vars_));
  r.terms_ = terms_;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = r.terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(vars_.united(o.vars_));
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1 * m2;
      Rational c = c1 * c2;
      auto [it, inserted] = r.terms_.emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw InvalidArgument("polynomial exponent must be nonnegative");
  Polynomial r = one(vars_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

Polynomial Polynomial::partial_eval(const Point& assignment) const {
  VarSet assigned = assignment.variables();
  if (!assigned.subset_of(vars_))
    throw InvalidArgument("assignment uses a variable outside the polynomial's variable set");
  VarSet rest = vars_.minus(assigned);
  Polynomial r(rest);
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    std::vector<Monomial::Entry> kept;
    for (const auto& [v, e] : m.entries()) {
      if (assignment.has(v))
        coeff *= assignment.at(v).pow(e);
      else
        kept.emplace_back(v, e);
    }
    if (coeff.is_zero()) continue;
    Monomial key = Monomial::from_entries(std::move(kept));
    auto [it, inserted] = r.terms_.emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

Rational Polynomial::eval(const Point& assignment) const {
  if (!support().subset_of(assignment.variables()))
    throw PartialPoint("evaluation point does not cover the polynomial's support");
  return partial_eval(assignment.restricted_to(vars_)).constant_value();
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw ZeroPolynomial("zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
  return leading_term(order).first;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  auto [m, c] = leading_term(order);
  if (c.is_one()) return *this;
  return scaled(c.inverse());
}

Polynomial Polynomial::with_vars(const VarSet& bigger) const {
  if (!vars_.subset_of(bigger))
    throw NotASuperset("target variable set does not contain the polynomial's variable set");
  Polynomial r(bigger);
  r.terms_ = terms_;
  return r;
}

Polynomial Polynomial::restricted_to(const VarSet& vars) const {
  Polynomial r(vars);
  for (const auto& [m, c] : terms_) {
    if (!m.supported_on(vars))
      throw InvalidArgument("polynomial support does not fit the target variable set");
    r.terms_.emplace(m, c);
  }
  return r;
}

}  // namespace nsatz
