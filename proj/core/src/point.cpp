#include "nsatz/point.hpp"

namespace nsatz {

const Rational& Point::at(const Variable& v) const {
  auto it = values_.find(v);
  if (it == values_.end()) throw PartialPoint("point has no value for '" + v.name() + "'");
  return it->second;
}

bool Point::total_on(const VarSet& vars) const {
  for (const auto& v : vars)
    if (!has(v)) return false;
  return true;
}

Point Point::restricted_to(const VarSet& vars) const {
  std::map<Variable, Rational> m;
  for (const auto& [v, r] : values_)
    if (vars.contains(v)) m.emplace(v, r);
  return Point(std::move(m));
}

Point Point::with(const Variable& v, Rational value) const {
  auto m = values_;
  m.insert_or_assign(v, std::move(value));
  return Point(std::move(m));
}

VarSet Point::variables() const {
  std::vector<Variable> vs;
  vs.reserve(values_.size());
  for (const auto& [v, r] : values_) vs.push_back(v);
  return VarSet(std::move(vs));
}

}  // namespace nsatz
