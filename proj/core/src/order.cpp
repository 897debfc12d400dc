#include "nsatz/order.hpp"

#include <algorithm>

namespace nsatz {

namespace {

// lex on the exponent vector along seq[first, last)
std::strong_ordering lex_range(const std::vector<Variable>& seq, std::size_t first,
                               std::size_t last, const Monomial& u, const Monomial& v) {
  for (std::size_t i = first; i < last; ++i) {
    int du = u.degree_of(seq[i]);
    int dv = v.degree_of(seq[i]);
    if (du != dv) return du <=> dv;
  }
  return std::strong_ordering::equal;
}

// reverse scan: the monomial with the smaller exponent in the last
// differing position is the greater one
std::strong_ordering revlex_range(const std::vector<Variable>& seq, std::size_t first,
                                  std::size_t last, const Monomial& u, const Monomial& v) {
  for (std::size_t i = last; i > first; --i) {
    int du = u.degree_of(seq[i - 1]);
    int dv = v.degree_of(seq[i - 1]);
    if (du != dv) return dv <=> du;
  }
  return std::strong_ordering::equal;
}

int degree_range(const std::vector<Variable>& seq, std::size_t first, std::size_t last,
                 const Monomial& m) {
  int d = 0;
  for (std::size_t i = first; i < last; ++i) d += m.degree_of(seq[i]);
  return d;
}

std::strong_ordering grevlex_range(const std::vector<Variable>& seq, std::size_t first,
                                   std::size_t last, const Monomial& u, const Monomial& v) {
  int du = degree_range(seq, first, last, u);
  int dv = degree_range(seq, first, last, v);
  if (du != dv) return du <=> dv;
  return revlex_range(seq, first, last, u, v);
}

std::vector<Variable> require_unique(std::vector<Variable> seq) {
  auto sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("monomial order sequence has duplicate variables");
  return seq;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::vector<Variable> sequence) {
  return MonomialOrder(Kind::Lex, require_unique(std::move(sequence)), 0);
}

MonomialOrder MonomialOrder::grlex(std::vector<Variable> sequence) {
  return MonomialOrder(Kind::GrLex, require_unique(std::move(sequence)), 0);
}

MonomialOrder MonomialOrder::grevlex(std::vector<Variable> sequence) {
  return MonomialOrder(Kind::GrevLex, require_unique(std::move(sequence)), 0);
}

MonomialOrder MonomialOrder::block_elim(const VarSet& eliminated, const VarSet& kept) {
  if (eliminated.minus(kept) != eliminated)
    throw InvalidArgument("elimination block overlaps kept block");
  if (eliminated.empty()) return grevlex(kept);
  std::vector<Variable> seq = eliminated.items();
  seq.insert(seq.end(), kept.begin(), kept.end());
  return MonomialOrder(Kind::Block, std::move(seq), eliminated.size());
}

MonomialOrder MonomialOrder::of_kind(Kind kind, const VarSet& vars) {
  switch (kind) {
    case Kind::Lex:
      return lex(vars);
    case Kind::GrLex:
      return grlex(vars);
    case Kind::GrevLex:
    case Kind::Block:
      return grevlex(vars);
  }
  throw InvalidArgument("unknown monomial order kind");
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GrLex:
      return "grlex";
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Block:
      return "block";
  }
  return "?";
}

void MonomialOrder::check_known(const Monomial& m) const {
  // every support variable must be reachable through the sequence
  int seen = 0;
  for (const auto& v : seq_)
    if (m.degree_of(v) > 0) ++seen;
  if (static_cast<std::size_t>(seen) != m.entries().size()) {
    for (const auto& [v, e] : m.entries())
      if (std::find(seq_.begin(), seq_.end(), v) == seq_.end())
        throw UnknownVariable("monomial variable '" + v.name() + "' outside order sequence");
  }
}

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  check_known(u);
  check_known(v);
  switch (kind_) {
    case Kind::Lex:
      return lex_range(seq_, 0, seq_.size(), u, v);
    case Kind::GrLex: {
      if (auto c = u.total_degree() <=> v.total_degree(); c != 0) return c;
      return lex_range(seq_, 0, seq_.size(), u, v);
    }
    case Kind::GrevLex: {
      if (auto c = u.total_degree() <=> v.total_degree(); c != 0) return c;
      return revlex_range(seq_, 0, seq_.size(), u, v);
    }
    case Kind::Block: {
      if (auto c = grevlex_range(seq_, 0, elim_count_, u, v); c != 0) return c;
      return grevlex_range(seq_, elim_count_, seq_.size(), u, v);
    }
  }
  return std::strong_ordering::equal;
}

bool MonomialOrder::covers(const VarSet& vars) const {
  for (const auto& v : vars)
    if (std::find(seq_.begin(), seq_.end(), v) == seq_.end()) return false;
  return true;
}

}  // namespace nsatz
