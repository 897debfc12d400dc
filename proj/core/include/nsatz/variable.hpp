#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace nsatz {

/// A named indeterminate. Variables compare by name; that lexicographic
/// order is the canonical global order shared by every ring, so variable
/// sets of nested rings agree on how they sort.
class Variable {
public:
  explicit Variable(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

  std::strong_ordering operator<=>(const Variable& o) const { return name_ <=> o.name_; }
  bool operator==(const Variable& o) const { return name_ == o.name_; }

private:
  std::string name_;
};

/// Duplicate-free set of variables kept in canonical (name) order.
/// Models nested index sets I ⊆ J.
class VarSet {
public:
  VarSet() = default;
  VarSet(std::initializer_list<Variable> vars) : VarSet(std::vector<Variable>(vars)) {}
  explicit VarSet(std::vector<Variable> vars);

  static VarSet named(std::initializer_list<std::string> names);

  bool contains(const Variable& v) const;
  bool subset_of(const VarSet& o) const;
  VarSet united(const VarSet& o) const;
  VarSet minus(const VarSet& o) const;

  std::size_t size() const noexcept { return vars_.size(); }
  bool empty() const noexcept { return vars_.empty(); }
  const std::vector<Variable>& items() const noexcept { return vars_; }
  auto begin() const { return vars_.begin(); }
  auto end() const { return vars_.end(); }

  bool operator==(const VarSet& o) const = default;

private:
  std::vector<Variable> vars_;  // sorted, unique
};

}  // namespace nsatz
