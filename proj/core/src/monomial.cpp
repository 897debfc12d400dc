#include "nsatz/monomial.hpp"

#include <algorithm>

namespace nsatz {

Monomial Monomial::power(const Variable& v, int exponent) {
  if (exponent < 0) throw InvalidArgument("monomial exponent must be nonnegative");
  Monomial m;
  if (exponent > 0) m.entries_.emplace_back(v, exponent);
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Monomial m;
  for (auto& [v, e] : entries) {
    if (e < 0) throw InvalidArgument("monomial exponent must be nonnegative");
    if (e == 0) continue;
    if (!m.entries_.empty() && m.entries_.back().first == v)
      m.entries_.back().second += e;
    else
      m.entries_.emplace_back(v, e);
  }
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

int Monomial::degree_of(const Variable& v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& a, const Variable& b) { return a.first < b; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

int Monomial::degree_in(const VarSet& vars) const {
  int d = 0;
  for (const auto& [v, e] : entries_)
    if (vars.contains(v)) d += e;
  return d;
}

VarSet Monomial::support() const {
  std::vector<Variable> vs;
  vs.reserve(entries_.size());
  for (const auto& [v, e] : entries_) vs.push_back(v);
  return VarSet(std::move(vs));
}

bool Monomial::supported_on(const VarSet& vars) const {
  for (const auto& [v, e] : entries_)
    if (!vars.contains(v)) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  auto a = entries_.begin(), b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      r.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      r.entries_.push_back(*b++);
    } else {
      r.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (const auto& [v, e] : entries_)
    if (o.degree_of(v) < e) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial r;
  auto a = entries_.begin(), b = o.entries_.begin();
  while (a != entries_.end()) {
    while (b != o.entries_.end() && b->first < a->first)
      throw InvalidArgument("monomial quotient is not exact");
    if (b != o.entries_.end() && b->first == a->first) {
      int e = a->second - b->second;
      if (e < 0) throw InvalidArgument("monomial quotient is not exact");
      if (e > 0) r.entries_.emplace_back(a->first, e);
      ++a;
      ++b;
    } else {
      r.entries_.push_back(*a++);
    }
  }
  if (b != o.entries_.end()) throw InvalidArgument("monomial quotient is not exact");
  return r;
}

Monomial Monomial::pow(int e) const {
  if (e < 0) throw InvalidArgument("monomial exponent must be nonnegative");
  Monomial r;
  if (e == 0) return r;
  r.entries_ = entries_;
  for (auto& [v, k] : r.entries_) k *= e;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.entries_.begin(), j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      r.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      r.entries_.push_back(*j++);
    } else {
      r.entries_.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
  for (const auto& [v, e] : entries_)
    if (o.degree_of(v) > 0) return false;
  return true;
}

}  // namespace nsatz
