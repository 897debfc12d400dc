#pragma once

#include <utility>
#include <vector>

#include "nsatz/polynomial.hpp"
#include "nsatz/rational.hpp"

namespace nsatz {

/// Dense univariate polynomial over the rationals. Coefficient i belongs to
/// the i-th power of the (anonymous) variable; the vector carries no
/// trailing zeros. Workhorse behind eliminant root extraction, squarefree
/// parts and the rational function field.
class Unipoly {
public:
  Unipoly() = default;  // zero
  explicit Unipoly(std::vector<Rational> coeffs);

  static Unipoly constant(Rational c);
  static Unipoly variable();                       // v
  static Unipoly linear_root(const Rational& a);   // v - a
  /// Conversion from a sparse polynomial whose support is at most {var}.
  static Unipoly from_polynomial(const Polynomial& f, const Variable& var);

  Polynomial to_polynomial(const Variable& var) const;
  Polynomial to_polynomial(const Variable& var, const VarSet& vars) const;

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const { return degree() == 0 && coeffs_[0].is_one(); }
  const Rational& coeff(int i) const;
  const Rational& leading_coeff() const;  // ZeroPolynomial on zero
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  Unipoly operator-() const;
  Unipoly operator+(const Unipoly& o) const;
  Unipoly operator-(const Unipoly& o) const;
  Unipoly operator*(const Unipoly& o) const;
  Unipoly scaled(const Rational& c) const;
  Unipoly pow(int e) const;

  /// Euclidean division: returns (quotient, remainder) with
  /// deg(remainder) < deg(divisor). DivisionByZero on zero divisor.
  std::pair<Unipoly, Unipoly> divmod(const Unipoly& divisor) const;

  Unipoly derivative() const;
  Unipoly monic() const;  // ZeroPolynomial on zero
  Rational eval(const Rational& x) const;

  /// Monic gcd; gcd(0, 0) = 0.
  static Unipoly gcd(Unipoly a, Unipoly b);

  bool operator==(const Unipoly& o) const = default;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// f / gcd(f, f'), made monic. ZeroPolynomial on zero input.
Unipoly squarefree(const Unipoly& f);

/// Squarefree part of a univariate sparse polynomial (support of
/// f must have at most one variable); constants map to 1.
Polynomial squarefree_part(const Polynomial& f);

struct RootExtraction {
  std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity), roots ascending
  Unipoly residual;                             // monic, no rational roots; 1 when f splits
};

/// Complete rational root extraction by the rational root theorem. The
/// divisor search factors by trial division; an implausibly huge prime
/// cofactor is treated as prime, which is exact for every desk-scale input
/// this library targets. ZeroPolynomial on zero input.
RootExtraction rational_roots(const Unipoly& f);

}  // namespace nsatz
