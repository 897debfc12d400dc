#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nsatz/monomial.hpp"
#include "nsatz/variable.hpp"

namespace nsatz {

/// Total, multiplicative, well-founded order on monomials over a fixed
/// variable sequence (most significant variable first).
///
/// Kinds: lex, grlex, grevlex and the elimination block order used for
/// contractions: monomials compare first by grevlex restricted to the
/// eliminated block, then by grevlex on the kept block.
class MonomialOrder {
public:
  enum class Kind { Lex, GrLex, GrevLex, Block };

  static MonomialOrder lex(std::vector<Variable> sequence);
  static MonomialOrder grlex(std::vector<Variable> sequence);
  static MonomialOrder grevlex(std::vector<Variable> sequence);
  static MonomialOrder lex(const VarSet& vars) { return lex(vars.items()); }
  static MonomialOrder grlex(const VarSet& vars) { return grlex(vars.items()); }
  static MonomialOrder grevlex(const VarSet& vars) { return grevlex(vars.items()); }

  /// Elimination order for `eliminated`; the two sets must be disjoint.
  /// With an empty eliminated block this degenerates to grevlex(kept).
  static MonomialOrder block_elim(const VarSet& eliminated, const VarSet& kept);

  /// Same-kind order over another variable set (Block falls back to grevlex).
  static MonomialOrder of_kind(Kind kind, const VarSet& vars);

  Kind kind() const noexcept { return kind_; }
  const std::vector<Variable>& sequence() const noexcept { return seq_; }
  /// Length of the eliminated prefix of the sequence (0 unless Block).
  std::size_t elim_count() const noexcept { return elim_count_; }
  std::string name() const;

  /// Compares u and v; throws UnknownVariable when either monomial uses a
  /// variable outside the order's sequence.
  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  bool less(const Monomial& u, const Monomial& v) const {
    return compare(u, v) == std::strong_ordering::less;
  }
  bool greater(const Monomial& u, const Monomial& v) const {
    return compare(u, v) == std::strong_ordering::greater;
  }

  bool covers(const VarSet& vars) const;

  bool operator==(const MonomialOrder& o) const = default;

private:
  MonomialOrder(Kind kind, std::vector<Variable> seq, std::size_t elim_count)
      : kind_(kind), seq_(std::move(seq)), elim_count_(elim_count) {}

  void check_known(const Monomial& m) const;

  Kind kind_;
  std::vector<Variable> seq_;
  std::size_t elim_count_ = 0;
};

/// Free-function comparison entry point.
inline std::strong_ordering monomial_cmp(const MonomialOrder& order, const Monomial& u,
                                         const Monomial& v) {
  return order.compare(u, v);
}

}  // namespace nsatz
