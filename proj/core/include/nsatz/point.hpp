#pragma once

#include <compare>
#include <map>

#include "nsatz/rational.hpp"
#include "nsatz/variable.hpp"

namespace nsatz {

/// Finite assignment of exact rational values to variables; an element of
/// F^I restricted to named variables when total on the ambient VarSet.
class Point {
public:
  Point() = default;
  explicit Point(std::map<Variable, Rational> values) : values_(std::move(values)) {}

  bool has(const Variable& v) const { return values_.count(v) != 0; }
  const Rational& at(const Variable& v) const;

  bool total_on(const VarSet& vars) const;
  Point restricted_to(const VarSet& vars) const;
  Point with(const Variable& v, Rational value) const;

  VarSet variables() const;
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  bool operator==(const Point& o) const = default;
  auto operator<=>(const Point& o) const = default;

private:
  std::map<Variable, Rational> values_;
};

}  // namespace nsatz
