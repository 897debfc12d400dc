#pragma once

#include <map>
#include <utility>

#include "nsatz/monomial.hpp"
#include "nsatz/order.hpp"
#include "nsatz/point.hpp"
#include "nsatz/rational.hpp"
#include "nsatz/variable.hpp"

namespace nsatz {

/// Sparse multivariate polynomial with exact rational coefficients over an
/// explicit variable set. Zero coefficients are never stored; the zero
/// polynomial has an empty term map. Values are immutable after
/// construction and safe to share across threads.
///
/// Equality compares term maps only, i.e. polynomials over nested variable
/// sets are equal when they agree under the canonical inclusion.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;  // zero over the empty variable set
  explicit Polynomial(VarSet vars) : vars_(std::move(vars)) {}
  /// Validates support ⊆ vars and drops zero coefficients.
  Polynomial(TermMap terms, VarSet vars);

  static Polynomial constant(Rational c, VarSet vars);
  static Polynomial one(VarSet vars) { return constant(Rational(1), std::move(vars)); }
  static Polynomial from_variable(const Variable& v, VarSet vars);
  static Polynomial from_monomial(Monomial m, Rational c, VarSet vars);

  const VarSet& vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Value of a constant polynomial (0 for zero); InvalidArgument otherwise.
  Rational constant_value() const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Variables actually occurring (⊆ vars()).
  VarSet support() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(int e) const;  // e >= 0

  /// Substitutes the assigned variables exactly; the result lives over the
  /// remaining variables. The assignment must be within vars().
  Polynomial partial_eval(const Point& assignment) const;
  /// Full evaluation; the assignment must cover support().
  Rational eval(const Point& assignment) const;

  std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;  // ZeroPolynomial
  Monomial leading_monomial(const MonomialOrder& order) const;
  Polynomial monic(const MonomialOrder& order) const;

  /// The same polynomial viewed in a larger ring; NotASuperset when
  /// `bigger` does not contain vars().
  Polynomial with_vars(const VarSet& bigger) const;
  /// Re-declares the ambient variable set to exactly `vars`; the support
  /// must fit (InvalidArgument otherwise). Used for contractions.
  Polynomial restricted_to(const VarSet& vars) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

private:
  TermMap terms_;
  VarSet vars_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& f) { return f.scaled(c); }

}  // namespace nsatz
