#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "nsatz/errors.hpp"
#include "nsatz/variable.hpp"

namespace nsatz {

/// Power product of variables. Exponents are strictly positive; the entry
/// list is sorted by variable, so the default comparison is a canonical
/// container order (not a monomial order — those live in MonomialOrder).
class Monomial {
public:
  using Entry = std::pair<Variable, int>;

  Monomial() = default;  // the monomial 1

  static Monomial power(const Variable& v, int exponent);
  static Monomial from_entries(std::vector<Entry> entries);  // sorts, drops zeros

  bool is_one() const noexcept { return entries_.empty(); }
  int total_degree() const;
  int degree_of(const Variable& v) const;
  /// Sum of exponents over the given variables only (block-order degrees).
  int degree_in(const VarSet& vars) const;

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  VarSet support() const;
  bool supported_on(const VarSet& vars) const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Exact quotient this / o; InvalidArgument when o does not divide this.
  Monomial divided_by(const Monomial& o) const;
  Monomial pow(int e) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime_with(const Monomial& o) const;

  auto operator<=>(const Monomial& o) const = default;

private:
  std::vector<Entry> entries_;
};

}  // namespace nsatz
