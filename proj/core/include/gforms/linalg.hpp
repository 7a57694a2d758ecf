#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gforms/matrix.hpp"

namespace gforms {

// ---------------------------------------------------------------------------
// Finite(ly generated) abelian groups
// ---------------------------------------------------------------------------

/// ℤ^free_rank ⊕ ⊕ ℤ/dᵢ with d₁ | d₂ | … and every dᵢ ≥ 2.
struct FiniteAbelianGroup {
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;

  /// Normalizes an arbitrary list of cyclic orders (0 meaning ℤ, 1 dropped)
  /// into invariant-factor form.
  static FiniteAbelianGroup from_cyclic_orders(std::span<const Integer> orders);

  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  /// Order of the torsion part (the whole group when finite).
  Integer torsion_order() const;
  Integer exponent() const;
  std::size_t generator_count() const { return invariant_factors.size() + free_rank; }

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

std::string to_string(const FiniteAbelianGroup& g);

// ---------------------------------------------------------------------------
// Smith normal form and lattice quotients
// ---------------------------------------------------------------------------

struct SmithForm {
  IntMatrix S;  // diagonal, d₁ | d₂ | …, nonnegative
  IntMatrix U;  // rows × rows, unimodular
  IntMatrix V;  // cols × cols, unimodular
  IntMatrix U_inverse;
  std::size_t rank = 0;
  std::vector<Integer> diagonal() const;
};

/// U·M·V = S. Pivot: smallest nonzero |entry|, ties broken by lowest row then
/// lowest column, so the result is reproducible.
SmithForm smith_normal_form(const IntMatrix& m);

/// Quotient ℤ^rows / column-span(M).
struct Cokernel {
  FiniteAbelianGroup group;
  /// generator_count × rows. Row i sends an ambient vector to its i-th
  /// coordinate (torsion coordinates first, read modulo dᵢ, then free ones).
  IntMatrix projection;
  /// rows × generator_count. Column i is an ambient lift of generator i.
  IntMatrix generators;

  /// Coordinates of an ambient vector, torsion entries reduced into [0, dᵢ).
  IntVector coordinates(const IntVector& v) const;
};

Cokernel cokernel(const IntMatrix& m);

/// Some x ∈ ℤ^cols with A x = b, or nullopt.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Saturated basis (as columns) of {x ∈ ℤ^cols : M x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Integer determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

/// A sublattice of ℤ^ambient given by a basis (columns of `basis`).
struct Sublattice {
  std::size_t ambient_rank = 0;
  IntMatrix basis;
  std::size_t rank() const { return basis.cols(); }
};

/// L_Γ = ℤ^rank / span{g·x − x}. Every action matrix must be rank×rank with
/// determinant ±1 (DomainError otherwise).
Cokernel coinvariants(std::size_t rank, std::span<const IntMatrix> action);

/// L^Γ = ⋂ ker(g − I), returned with a saturated basis.
Sublattice fixed_sublattice(std::size_t rank, std::span<const IntMatrix> action);

/// Rank of span{g·x − x : g ∈ action, x ∈ basis}.
std::size_t moved_span_rank(std::size_t rank, std::span<const IntMatrix> action);

// ---------------------------------------------------------------------------
// Linear algebra over ℚ
// ---------------------------------------------------------------------------

struct RowEchelon {
  RatMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);
/// Basis of the right null space as columns (cols × nullity).
RatMatrix nullspace(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
/// Some solution x of A x = b, or nullopt if inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

}  // namespace gforms
