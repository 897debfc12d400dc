#pragma once

#include "nsatz/unipoly.hpp"
#include "nsatz/variable.hpp"

namespace nsatz {

/// Element of the rational function field Q(s) for one distinguished
/// variable s. Canonical form: denominator monic and coprime to the
/// numerator, so equality is componentwise.
class RationalFunction {
public:
  explicit RationalFunction(Variable var);  // zero
  /// Normalizes; DivisionByZero when den == 0.
  RationalFunction(Variable var, Unipoly num, Unipoly den);

  static RationalFunction constant(Variable var, Rational c);
  static RationalFunction variable(Variable var);  // s itself
  static RationalFunction of(Variable var, Unipoly num) {
    return RationalFunction(std::move(var), std::move(num), Unipoly::constant(Rational(1)));
  }

  const Variable& var() const noexcept { return var_; }
  const Unipoly& num() const noexcept { return num_; }
  const Unipoly& den() const noexcept { return den_; }
  Polynomial numerator_poly() const { return num_.to_polynomial(var_); }
  Polynomial denominator_poly() const { return den_.to_polynomial(var_); }

  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;  // DivisionByZero
  RationalFunction inverse() const;                             // DivisionByZero on zero
  /// Integer power; negative exponents invert.
  RationalFunction pow(int e) const;

  bool operator==(const RationalFunction& o) const = default;

private:
  void require_same_var(const RationalFunction& o) const;

  Variable var_;
  Unipoly num_;
  Unipoly den_;
};

}  // namespace nsatz
