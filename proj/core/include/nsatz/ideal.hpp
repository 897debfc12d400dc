#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "nsatz/order.hpp"
#include "nsatz/polynomial.hpp"

namespace nsatz {

/// The unique reduced monic Gröbner basis of an ideal under an order:
/// elements are monic, no leading monomial divides another's, every element
/// is reduced against the rest, and the sequence is sorted by leading
/// monomial descending. The zero ideal has an empty basis; the unit ideal's
/// basis is {1}.
class GroebnerBasis {
public:
  GroebnerBasis(std::vector<Polynomial> elements, MonomialOrder order)
      : elements_(std::move(elements)), order_(std::move(order)) {}

  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool is_unit() const { return elements_.size() == 1 && elements_.front().is_one(); }

  bool operator==(const GroebnerBasis& o) const {
    return order_ == o.order_ && elements_ == o.elements_;
  }

private:
  std::vector<Polynomial> elements_;
  MonomialOrder order_;
};

/// Finitely generated ideal of Q[vars]: a generator sequence, a monomial
/// order and a lazily computed reduced Gröbner basis. Zero generators are
/// dropped on construction. The value is immutable apart from the basis
/// cache, whose fill is serialized with std::call_once, so concurrent reads
/// and groebner() calls on shared Ideals are safe; copies share the cache.
class Ideal {
public:
  Ideal(std::vector<Polynomial> generators, VarSet vars, MonomialOrder order);

  static Ideal zero(VarSet vars, MonomialOrder order) {
    return Ideal({}, std::move(vars), std::move(order));
  }
  static Ideal unit(VarSet vars, MonomialOrder order) {
    Polynomial one = Polynomial::one(vars);
    return Ideal({std::move(one)}, std::move(vars), std::move(order));
  }
  /// Wraps an already reduced basis as an Ideal with a pre-seeded cache.
  static Ideal from_basis(GroebnerBasis basis, VarSet vars);

  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  const VarSet& vars() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// Reduced monic Gröbner basis, computed on first use and cached.
  const GroebnerBasis& groebner() const;

  /// Same generators under another order (fresh cache).
  Ideal with_order(MonomialOrder order) const;

private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> basis;
  };

  std::vector<Polynomial> gens_;
  VarSet vars_;
  MonomialOrder order_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace nsatz
