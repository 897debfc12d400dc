#include "nsatz/unipoly.hpp"

#include <algorithm>

namespace nsatz {

void Unipoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Unipoly::Unipoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Unipoly Unipoly::constant(Rational c) {
  Unipoly f;
  if (!c.is_zero()) f.coeffs_.push_back(std::move(c));
  return f;
}

Unipoly Unipoly::variable() { return Unipoly({Rational(0), Rational(1)}); }

Unipoly Unipoly::linear_root(const Rational& a) { return Unipoly({-a, Rational(1)}); }

Unipoly Unipoly::from_polynomial(const Polynomial& f, const Variable& var) {
  std::vector<Rational> cs;
  for (const auto& [m, c] : f.terms()) {
    if (!m.supported_on(VarSet{var}))
      throw InvalidArgument("polynomial is not univariate in '" + var.name() + "'");
    int e = m.degree_of(var);
    if (static_cast<int>(cs.size()) <= e) cs.resize(e + 1);
    cs[e] = c;
  }
  return Unipoly(std::move(cs));
}

Polynomial Unipoly::to_polynomial(const Variable& var) const {
  return to_polynomial(var, VarSet{var});
}

Polynomial Unipoly::to_polynomial(const Variable& var, const VarSet& vars) const {
  Polynomial::TermMap terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) terms.emplace(Monomial::power(var, static_cast<int>(i)), coeffs_[i]);
  return Polynomial(std::move(terms), vars);
}

const Rational& Unipoly::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[i];
}

const Rational& Unipoly::leading_coeff() const {
  if (coeffs_.empty()) throw ZeroPolynomial("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Unipoly Unipoly::operator-() const {
  Unipoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Unipoly Unipoly::operator+(const Unipoly& o) const {
  std::vector<Rational> cs(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Unipoly(std::move(cs));
}

Unipoly Unipoly::operator-(const Unipoly& o) const { return *this + (-o); }

Unipoly Unipoly::operator*(const Unipoly& o) const {
  if (is_zero() || o.is_zero()) return Unipoly();
  std::vector<Rational> cs(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) cs[i + j] += coeffs_[i] * o.coeffs_[j];
  return Unipoly(std::move(cs));
}

Unipoly Unipoly::scaled(const Rational& c) const {
  if (c.is_zero()) return Unipoly();
  Unipoly r = *this;
  for (auto& a : r.coeffs_) a *= c;
  return r;
}

Unipoly Unipoly::pow(int e) const {
  if (e < 0) throw InvalidArgument("polynomial exponent must be nonnegative");
  Unipoly r = constant(Rational(1));
  Unipoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

std::pair<Unipoly, Unipoly> Unipoly::divmod(const Unipoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("univariate division by zero");
  Unipoly rem = *this;
  int dd = divisor.degree();
  if (rem.degree() < dd) return {Unipoly(), rem};
  std::vector<Rational> q(rem.degree() - dd + 1);
  const Rational& lc = divisor.leading_coeff();
  while (!rem.is_zero() && rem.degree() >= dd) {
    int k = rem.degree() - dd;
    Rational c = rem.leading_coeff() / lc;
    q[k] = c;
    // rem -= c * x^k * divisor
    for (int i = 0; i <= dd; ++i) rem.coeffs_[k + i] -= c * divisor.coeffs_[i];
    rem.trim();
  }
  return {Unipoly(std::move(q)), rem};
}

Unipoly Unipoly::derivative() const {
  if (coeffs_.size() <= 1) return Unipoly();
  std::vector<Rational> cs(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Unipoly(std::move(cs));
}

Unipoly Unipoly::monic() const {
  const Rational& lc = leading_coeff();
  if (lc.is_one()) return *this;
  return scaled(lc.inverse());
}

Rational Unipoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Unipoly Unipoly::gcd(Unipoly a, Unipoly b) {
  while (!b.is_zero()) {
    Unipoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Unipoly squarefree(const Unipoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree part of the zero polynomial");
  if (f.degree() == 0) return Unipoly::constant(Rational(1));
  Unipoly g = Unipoly::gcd(f, f.derivative());
  auto [q, r] = f.divmod(g);
  // r == 0 by construction
  return q.monic();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree part of the zero polynomial");
  VarSet supp = f.support();
  if (supp.size() > 1) throw InvalidArgument("squarefree_part expects a univariate polynomial");
  if (supp.empty()) return Polynomial::one(f.vars());
  const Variable& v = *supp.begin();
  return squarefree(Unipoly::from_polynomial(f, v)).to_polynomial(v, f.vars());
}

namespace {

// divisors of |n| from trial-division factorization; a cofactor surviving
// the bound is treated as prime (see header note)
std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> factors;
  if (n == 0) throw InvalidArgument("divisors of zero requested");
  mpz_class p = 2;
  const long bound = 1000000;
  while (p <= bound && p * p <= n) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : factors) {
    std::size_t sz = divs.size();
    mpz_class pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= q;
      for (std::size_t k = 0; k < sz; ++k) divs.push_back(divs[k] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

RootExtraction rational_roots(const Unipoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("root extraction from the zero polynomial");
  RootExtraction out;
  Unipoly h = f.monic();
  if (h.degree() == 0) {
    out.residual = h;
    return out;
  }

  // strip the root at 0 first
  int zero_mult = 0;
  while (h.degree() > 0 && h.coeff(0).is_zero()) {
    std::vector<Rational> cs(h.coeffs().begin() + 1, h.coeffs().end());
    h = Unipoly(std::move(cs));
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);

  if (h.degree() > 0) {
    // clear denominators: candidates p/q with p | c0, q | cn of the integer model
    mpz_class den_lcm = 1;
    for (const auto& c : h.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> ics;
    ics.reserve(h.coeffs().size());
    for (const auto& c : h.coeffs()) ics.push_back(c.numerator() * (den_lcm / c.denominator()));
    mpz_class content = 0;
    for (const auto& ci : ics) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ci.get_mpz_t());
    for (auto& ci : ics) ci /= content;

    auto ps = positive_divisors(ics.front());
    auto qs = positive_divisors(ics.back());
    std::vector<Rational> candidates;
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        mpq_class r(p, q);
        r.canonicalize();
        candidates.push_back(Rational::from_raw(r));
        candidates.push_back(Rational::from_raw(mpq_class(-r)));
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& r : candidates) {
      if (h.degree() == 0) break;
      int mult = 0;
      while (h.degree() > 0 && h.eval(r).is_zero()) {
        h = h.divmod(Unipoly::linear_root(r)).first;
        ++mult;
      }
      if (mult > 0) out.roots.emplace_back(r, mult);
    }
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.residual = h.degree() == 0 ? Unipoly::constant(Rational(1)) : h.monic();
  return out;
}

}  // namespace nsatz
