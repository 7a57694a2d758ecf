#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gforms/finite_group.hpp"
#include "gforms/linalg.hpp"

namespace gforms {

enum class Isogeny { simply_connected, adjoint };

/// A Cartan label such as "A2", "E8", or "T3" for a rank-3 torus.
struct CartanType {
  char family = 'A';
  std::size_t rank = 1;

  static CartanType parse(std::string_view label);
  std::string label() const;
  bool is_torus() const { return family == 'T'; }
};

Isogeny parse_isogeny(std::string_view text);
std::string to_string(Isogeny iso);

/// Cartan matrix with C(i, j) = ⟨α_i^∨, α_j⟩, Bourbaki numbering.
IntMatrix cartan_matrix(const CartanType& type);

/// (X, R, X^∨, R^∨) in coordinates: X = X^∨ = ℤ^rank, pairing the dot product.
/// roots[i] and coroots[i] correspond.
struct RootDatum {
  std::size_t rank = 0;
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;

  std::size_t root_count() const { return roots.size(); }
  /// Throws DomainError when ⟨α, α^∨⟩ ≠ 2 or a reflection leaves the root set.
  void validate() const;

  friend bool operator==(const RootDatum&, const RootDatum&) = default;
};

/// A root datum with a chosen simple system Π (indices into roots).
struct BasedRootDatum {
  RootDatum datum;
  std::vector<std::size_t> simple;

  std::size_t rank() const { return datum.rank; }
  std::size_t semisimple_rank() const { return simple.size(); }
  IntMatrix cartan() const;
  IntVector simple_root(std::size_t i) const { return datum.roots[simple[i]]; }
  IntVector simple_coroot(std::size_t i) const { return datum.coroots[simple[i]]; }
  /// Coefficients of every root in the simple roots (rows = roots).
  std::vector<IntVector> simple_coordinates() const;
  std::size_t positive_root_count() const;
  /// Throws DomainError unless every root is a signed nonnegative integer
  /// combination of Π and the datum itself is valid.
  void validate() const;
  /// Same lattices and the same set of (root, coroot) pairs and simple pairs,
  /// regardless of listing order.
  bool equivalent(const BasedRootDatum& other) const;

  friend bool operator==(const BasedRootDatum&, const BasedRootDatum&) = default;
};

BasedRootDatum build_root_datum(const CartanType& type, Isogeny isogeny);
/// Direct sum; roots of the second summand are listed after the first.
BasedRootDatum direct_sum(const BasedRootDatum& a, const BasedRootDatum& b);
/// Closes a simple system under reflections to produce the full root list.
BasedRootDatum from_simple_system(std::size_t rank, const std::vector<IntVector>& simple_roots,
                                  const std::vector<IntVector>& simple_coroots);

BasedRootDatum dual(const BasedRootDatum& rd);

/// π₁ = X^∨ / (coroot lattice), free part included.
Cokernel fundamental_group_presentation(const RootDatum& rd);
FiniteAbelianGroup fundamental_group(const RootDatum& rd);

struct OuterAutomorphism {
  IntMatrix matrix;                     // action on X^∨
  std::vector<std::size_t> permutation; // simple root i ↦ simple root permutation[i]

  /// The contragredient action on X: (matrix⁻¹)ᵀ.
  IntMatrix character_matrix() const;
};

struct OuterAutomorphismGroup {
  std::vector<OuterAutomorphism> elements;  // identity first
  FiniteGroup group;                        // mul(a,b) ↔ elements[a] ∘ elements[b]
  std::size_t order() const { return elements.size(); }
};

/// All based-datum automorphisms. The extension of a Cartan-preserving
/// permutation to the lattices is unique when the coroots span X^∨ ⊗ ℚ;
/// otherwise candidate matrices with entries in {−1, 0, 1} are searched and
/// the result must close under composition (DomainError if not).
OuterAutomorphismGroup outer_automorphisms(const BasedRootDatum& brd);

IntVector act_on_coweight(const OuterAutomorphism& delta, const IntVector& coweight);
bool is_dominant(const BasedRootDatum& brd, const IntVector& coweight);

}  // namespace gforms
