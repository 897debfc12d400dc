#include "nsatz/variable.hpp"

#include <algorithm>

namespace nsatz {

VarSet::VarSet(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

VarSet VarSet::named(std::initializer_list<std::string> names) {
  std::vector<Variable> vs;
  vs.reserve(names.size());
  for (const auto& n : names) vs.emplace_back(n);
  return VarSet(std::move(vs));
}

bool VarSet::contains(const Variable& v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

bool VarSet::subset_of(const VarSet& o) const {
  return std::includes(o.vars_.begin(), o.vars_.end(), vars_.begin(), vars_.end());
}

VarSet VarSet::united(const VarSet& o) const {
  VarSet r;
  std::set_union(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                 std::back_inserter(r.vars_));
  return r;
}

VarSet VarSet::minus(const VarSet& o) const {
  VarSet r;
  std::set_difference(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                      std::back_inserter(r.vars_));
  return r;
}

}  // namespace nsatz
