#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gforms/crossed_product.hpp"
#include "gforms/hilbert.hpp"
#include "gforms/root_datum.hpp"

namespace gforms {

/// Homomorphisms Γ → Out up to conjugation in Out.
struct QuasiSplitClass {
  std::vector<std::size_t> representative;  // lexicographically least member
  std::vector<std::vector<std::size_t>> members;
};

/// Classes sorted by representative.
std::vector<QuasiSplitClass> classify_quasisplit(const FiniteGroup& gamma, const FiniteGroup& out);

struct CoweightOrbit {
  std::vector<IntVector> coweights;  // sorted
  std::vector<IntVector> pairings;   // ⟨α_i, λ⟩ for each member
};

struct QuasiSplitCocharacters {
  Cokernel coinvariants;       // X_*(T)_Γ
  std::size_t fixed_rank = 0;  // rank of X_*(T)^Γ
  std::size_t moved_rank = 0;  // rank of span{γλ − λ}
  std::vector<CoweightOrbit> orbits;
};

/// rho[γ] indexes outer_automorphisms(brd).elements. Dominant coweights are
/// those with 0 ≤ ⟨α_i, λ⟩ ≤ height; when the simple roots do not span,
/// coordinates are additionally bounded by height in absolute value.
/// DomainError if rho is not a homomorphism into Out.
QuasiSplitCocharacters quasisplit_cocharacter_data(const BasedRootDatum& brd, const FiniteGroup& gamma,
                                                   const std::vector<std::size_t>& rho, int height = 4);

/// Quaternion data (d, c) for one generator of π₁: the class of (d, c)_ℚ.
struct QuaternionAssignment {
  Integer d = -1;
  Rational c = 1;
};

struct InnerInvariant {
  FiniteAbelianGroup pi1;
  Integer d = 0;                     // common quadratic field ℚ(√d)
  std::vector<IntVector> elements;   // every α ∈ π₁, invariant-factor coordinates
  std::vector<Rational> c;           // A_α is the crossed product with ζ(σ,σ) = c_α
  std::vector<BrauerClass> classes;  // μ(α)
  std::vector<CrossedProductAlgebra> algebras;

  std::size_t index_of(const IntVector& alpha) const;
};

/// Extends generator ↦ (d, c) to μ on all of π₁ and checks the homomorphism
/// law on every pair. DomainError for an order violation (odd-order
/// generator sent to a non-split class) or an infinite π₁; InputError when
/// the generator count or fields disagree.
InnerInvariant build_inner_invariant(const RootDatum& rd, const std::vector<QuaternionAssignment>& assignments);

/// π₁(G), which indexes the connected components of the affine Grassmannian.
FiniteAbelianGroup component_index(const RootDatum& rd);

}  // namespace gforms
