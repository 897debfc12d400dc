#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "nsatz/nullstellensatz.hpp"
#include "nsatz/ratfun.hpp"

namespace nsatz {

/// The extension a·Q[bigger]: the same generator sequence reinterpreted in
/// the larger ring. NotASuperset when bigger does not contain a's
/// variables.
Ideal extend_ideal(const Ideal& a, const VarSet& bigger);

/// Probe-based check of radical persistence under extension. For probes
/// supported on the small ring, radical membership must agree between the
/// small ideal and its extension; for every probe, a bounded power found in
/// the extension must be confirmed by the Rabinowitsch verdict. Returns the
/// conjunction over all probes.
bool corollary_check(const Ideal& a, const VarSet& bigger, std::span<const Polynomial> probes,
                     int power_bound = 12);

/// Exact radical-persistence certification for a principal ideal ⟨h⟩ whose
/// squarefree part is known: certifies ⟨sf⟩·Q[bigger] = √(⟨h⟩·Q[bigger]) by
/// the two containments (h ∈ ⟨sf⟩ by basis membership, and every reduced
/// basis element of ⟨sf⟩·Q[bigger] is a radical member of ⟨h⟩·Q[bigger]).
bool principal_radical_persists(const Polynomial& h, const Polynomial& squarefree_h,
                                const VarSet& bigger);

/// Membership of f in the vanishing ideal of the cylinder X × F^H over a
/// point set X: true iff partially evaluating f at each x ∈ X yields the
/// zero polynomial in the remaining variables. All points must share one
/// variable set I ⊆ bigger.
bool cylinder_membership(const Polynomial& f, std::span<const Point> points,
                         const VarSet& bigger);

/// One certified unit identity m_p + (t − z_p)·g_p = 1 at the sample z_p.
struct Claim5Entry {
  Rational z;
  Rational lambda;  // nonzero
  Polynomial m;
  Polynomial g;
};

/// Certificate data behind the interpolation gadget: pairwise distinct
/// sample values z_p, unit identities per entry, and the linear relation
/// Σ λ_p·g_p = 0.
struct Claim5Certificate {
  Variable var;
  std::vector<Claim5Entry> entries;
};

/// Validates every certificate invariant (InvalidCertificate naming the
/// failed one), builds g = Σ λ_p ∏_{q≠p} (t − z_q), and verifies exactly
/// the rearrangement g = Σ [λ_p ∏_{q≠p}(t − z_q)]·m_p together with
/// g(z_1) = λ_1·∏_{q≥2}(z_1 − z_q) ≠ 0.
Polynomial claim5_construct(const Claim5Certificate& cert);

/// λ·∏(s − a_i)^{k_i} with pairwise distinct roots and nonzero integer
/// exponents; reconstructs the original rational function exactly.
struct LinearFactorization {
  Variable var;
  Rational scale;  // nonzero
  std::vector<std::pair<Rational, int>> factors;  // roots ascending

  RationalFunction reconstruct() const;
};

/// Splits numerator and denominator into rational linear factors. NonSplit
/// when an irreducible factor of degree >= 2 remains (impossible over an
/// algebraically closed field, reported honestly over Q).
LinearFactorization claim3_factor(const RationalFunction& r);

/// Builds the polynomial preimage (f, g) with f = λ·∏(t_j − a_i)^{α_i} over
/// {t_j} and g the monomial in the per-root variables assigned to negative
/// exponents, then verifies that substituting t_j ↦ s and u_i ↦ 1/(s − a_i)
/// into f·g reproduces the factorized function exactly.
std::pair<Polynomial, Polynomial> claim3_preimage(
    const LinearFactorization& factorization, const Variable& t_j,
    const std::map<Rational, Variable>& root_vars);

}  // namespace nsatz
