#pragma once

#include <span>

#include "nsatz/ideal.hpp"

namespace nsatz {

/// S-polynomial of two nonzero polynomials: the leading-term cancellation
/// lcm/lt(f)·f − lcm/lt(g)·g driving Buchberger completion.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Multivariate division remainder: returns r with f − r ∈ ⟨divisors⟩ and no
/// term of r divisible by any divisor's leading monomial. Divisors are tried
/// in sequence order, so the result is deterministic.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Buchberger's algorithm with the normal selection strategy (pairs by
/// increasing lcm degree) and the coprimality and chain criteria, followed
/// by minimalization and inter-reduction. Deterministic; terminates by
/// Dickson's lemma.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order);

/// f ∈ a, decided by reduction against the cached reduced basis.
bool is_member(const Polynomial& f, const Ideal& a);

/// Equality of ideals over the same variable set, via reduced bases under a
/// common order.
bool ideal_equal(const Ideal& a, const Ideal& b);

/// Contraction a ∩ Q[keep], computed with the elimination block order. The
/// result lives over `keep` with a grevlex order and a pre-seeded basis.
Ideal eliminate(const Ideal& a, const VarSet& keep);

/// a ∩ b over a common variable set, by eliminating a fresh variable w from
/// w·a + (1−w)·b.
Ideal intersect(const Ideal& a, const Ideal& b);

/// Reserved-name fresh variable "_w<n>" outside `avoid`; user input cannot
/// collide because parsed names must start with a letter.
Variable fresh_variable(const VarSet& avoid);

}  // namespace nsatz
