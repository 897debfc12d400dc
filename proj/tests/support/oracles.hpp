#pragma once

// Test-side oracles, independent of the library's Groebner machinery, plus
// deterministic random corpus generation. The Macaulay-matrix oracle decides
// bounded-degree ideal membership by exact linear algebra only.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <nsatz/nsatz.hpp>

namespace nsatz::testing {

/// All monomials over `vars` with total degree <= max_degree, in canonical
/// container order.
std::vector<Monomial> monomials_up_to(const VarSet& vars, int max_degree);

/// Incremental exact row space over Q (row echelon with recorded pivots).
class RowSpace {
public:
  /// Reduces the row against the current basis rows.
  std::vector<Rational> reduce(std::vector<Rational> row) const;
  /// Adds the reduced row when nonzero; true when the space grew.
  bool add(std::vector<Rational> row);
  bool contains(std::vector<Rational> row) const;
  std::size_t rank() const { return rows_.size(); }

private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// True iff f = sum h_i g_i for some h_i with deg(h_i g_i) <= degree_bound:
/// rank test on the matrix of all products monomial * generator against the
/// monomial basis of degree <= degree_bound.
bool macaulay_member(const Polynomial& f, std::span<const Polynomial> gens, const VarSet& vars,
                     int degree_bound);

/// Exponent vector of m along a variable sequence.
std::vector<int> exponents_along(const Monomial& m, const std::vector<Variable>& seq);

// Independent order formulations on raw exponent vectors: grevlex as
// "higher total degree wins, ties broken by the sign of the last nonzero
// entry of u - v" and friends.
std::strong_ordering lex_rule(const std::vector<int>& u, const std::vector<int>& v);
std::strong_ordering grlex_rule(const std::vector<int>& u, const std::vector<int>& v);
std::strong_ordering grevlex_rule(const std::vector<int>& u, const std::vector<int>& v);

/// Deterministic corpus generator (engine output reduced by modulo so the
/// streams do not depend on distribution implementations).
struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t next(std::uint64_t n) { return eng() % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(next(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool chance(int percent) { return static_cast<int>(next(100)) < percent; }

  Rational rational(int max_abs_num = 9, int max_den = 4);
  Rational nonzero_rational(int max_abs_num = 9, int max_den = 4);
  Monomial monomial(const VarSet& vars, int max_degree);
  Polynomial polynomial(const VarSet& vars, int max_degree, int max_terms);
  Polynomial nonzero_polynomial(const VarSet& vars, int max_degree, int max_terms);
  Point point(const VarSet& vars, int max_abs_num = 5, int max_den = 3);

  std::mt19937_64 eng;
};

}  // namespace nsatz::testing
