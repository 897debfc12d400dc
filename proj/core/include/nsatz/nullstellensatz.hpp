#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nsatz/groebner.hpp"
#include "nsatz/point.hpp"

namespace nsatz {

/// Outcome of rational variety enumeration. Points enumerate the whole
/// variety over the algebraic closure exactly when the tag is Points — any
/// branch with an irrational coordinate yields NonRational before points
/// are reported, so a Points answer is always complete.
struct VarietyResult {
  enum class Tag { Empty, Points, NonRational, NotZeroDimensional };

  Tag tag;
  std::vector<Point> points;          // Points: sorted, pairwise distinct
  std::optional<Polynomial> witness;  // NonRational: univariate factor with no rational root

  static VarietyResult empty() { return {Tag::Empty, {}, std::nullopt}; }
  static VarietyResult of_points(std::vector<Point> ps) {
    return {Tag::Points, std::move(ps), std::nullopt};
  }
  static VarietyResult non_rational(Polynomial w) {
    return {Tag::NonRational, {}, std::move(w)};
  }
  static VarietyResult not_zero_dimensional() {
    return {Tag::NotZeroDimensional, {}, std::nullopt};
  }
};

/// The point ideal m_x = ⟨t_i − x_i⟩ of all polynomials vanishing at x.
/// The point must be total on `vars` (PartialPoint otherwise); extra
/// coordinates are ignored.
Ideal point_ideal(const Point& x, const VarSet& vars);

/// Weak Nullstellensatz test: the variety over the algebraic closure is
/// nonempty iff the reduced basis is not {1}. Computing over Q decides the
/// statement over the closure because 1 ∈ a is stable under field extension.
bool solvable(const Ideal& a);

/// Radical membership f ∈ √a by Rabinowitsch's trick: true iff
/// 1 ∈ a + ⟨1 − w·f⟩ in the ring extended by a fresh variable w.
bool radical_member(const Polynomial& f, const Ideal& a);

/// Least N ≤ bound with f^N ∈ a, if any. Test-harness oracle for the
/// Rabinowitsch route; the exponent is unbounded in general, so a nullopt
/// is inconclusive rather than a negative answer.
std::optional<int> bounded_power_member(const Polynomial& f, const Ideal& a, int bound);

/// Rational variety enumeration for zero-dimensional ideals: lex basis,
/// triangular back-substitution, rational root extraction per eliminant,
/// and exact verification of every candidate against every generator.
VarietyResult variety_points(const Ideal& a);

/// Vanishing ideal of a finite point set, as the intersection of the point
/// ideals. Empty input raises EmptyPointSet unless allow_empty, in which
/// case the unit ideal (the vanishing ideal of the empty set) is returned.
Ideal vanishing_ideal(std::span<const Point> points, const VarSet& vars, bool allow_empty = false);

/// Recovers x with m = m_x from a proper ideal by contracting to each
/// Q[t_i]. NotUnitContraction when some contraction is zero or not of the
/// linear form ⟨t_i − x_i⟩ with rational x_i; NotMaximal when the recovered
/// point ideal differs from m.
Point maximal_point(const Ideal& m);

/// Contraction shape check: eliminates down to `subvars` and reports
/// whether the result is exactly ⟨t_k − x_k | t_k ∈ subvars⟩, returning the
/// coordinate restriction when so. Empty subvars hold over a field exactly
/// when the contraction to constants is zero.
std::optional<Point> check_statement_f(const Ideal& m, const VarSet& subvars);

/// Strong Nullstellensatz instance check √a = I(V(a)), certified by the two
/// containments: every reduced-basis element of I(V(a)) is a Rabinowitsch
/// radical member of a, and every generator of a lies in I(V(a)). Requires
/// a rational, zero-dimensional variety; NotCheckable otherwise, with
/// reason "Empty", "NonRational" or "NotZeroDimensional".
bool strong_nss_check(const Ideal& a);

}  // namespace nsatz
