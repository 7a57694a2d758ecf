#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gforms/cohomology.hpp"

namespace gforms {

/// Coordinates over the ℚ-basis {βᵢ·e_a}, index a·[K:ℚ] + i, where βᵢ is
/// the power basis of K.
struct AlgebraElement {
  RatVector coords;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// A = ⊕_{a∈Γ} K·e_a with e_a·e_b = ζ(a,b)·e_ab and e_a·λ = a(λ)·e_a.
/// A k-algebra of dimension |Γ|², stored by restriction of scalars to ℚ.
class CrossedProductAlgebra {
 public:
  /// Normalizes ζ and checks associativity on every triple (e_a, e_b, e_c).
  /// DomainError naming the first failing triple.
  static CrossedProductAlgebra build(GaloisExtension ext, const FieldCochain2& zeta);

  const GaloisExtension& extension() const { return ext_; }
  const FieldCochain2& cocycle() const { return zeta_; }
  std::size_t dimension() const { return dim_; }
  std::size_t degree() const { return ext_.field().degree(); }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement basis(std::size_t index) const;
  /// λ·e_a.
  AlgebraElement monomial(std::size_t a, const FieldElement& lambda) const;
  FieldElement component(const AlgebraElement& x, std::size_t a) const;

  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement scale(const Rational& q, const AlgebraElement& x) const;
  /// InputError on a coordinate count mismatch.
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  bool is_zero(const AlgebraElement& x) const;

  /// Matrices over ℚ of y ↦ x·y and y ↦ y·x.
  RatMatrix left_multiplication(const AlgebraElement& x) const;
  RatMatrix right_multiplication(const AlgebraElement& x) const;
  /// Product of basis elements i and j, for every (i, j) (row-major).
  std::vector<RatVector> structure_constants() const;

 private:
  CrossedProductAlgebra(GaloisExtension ext, FieldCochain2 zeta);
  void check_element(const AlgebraElement& x) const;

  GaloisExtension ext_;
  FieldCochain2 zeta_;
  std::size_t dim_ = 0;
};

/// ℚ-basis of {z : z·x = x·z for all x}.
std::vector<AlgebraElement> center(const CrossedProductAlgebra& a);

struct CentralSimpleReport {
  std::size_t center_dimension = 0;  // over ℚ
  std::size_t base_degree = 0;       // [k : ℚ] the center is compared with
  Rational trace_form_determinant = 0;
  bool central() const { return center_dimension == base_degree; }
  bool semisimple() const { return trace_form_determinant != 0; }
  bool central_simple() const { return central() && semisimple(); }
};

/// Center compared with a base field of the given ℚ-degree (default: k), and
/// the Gram determinant of (x, y) ↦ tr(L_{xy}).
CentralSimpleReport central_simple_report(const CrossedProductAlgebra& a,
                                          std::optional<std::size_t> base_degree = std::nullopt);
bool is_central_simple(const CrossedProductAlgebra& a);

struct QuaternionSplitting {
  bool split = false;
  Integer d = 0;   // K = ℚ(√d)
  Rational c = 0;  // ζ(σ, σ)
  /// x·y = 0 with x, y ≠ 0, found by a bounded search when split.
  std::optional<std::pair<AlgebraElement, AlgebraElement>> zero_divisor;
};

/// For a quadratic crossed product over ℚ: split iff c is a norm from K.
/// InputError for any other algebra.
QuaternionSplitting split_quaternion(const CrossedProductAlgebra& a, int search_bound = 12);
bool is_split_quaternion(const CrossedProductAlgebra& a);

/// φ: A_ζ → A_ζ′ with φ(λ·e_a) = λ·b(a)⁻¹·e′_a, valid when ζ′ = ζ·∂b.
/// Stored cocycles are normalized, so b is first divided by b(1).
struct AlgebraIsomorphism {
  RatMatrix matrix;  // over the ℚ-bases
  AlgebraElement apply(const AlgebraElement& x) const { return {matrix * x.coords}; }
};

/// DomainError when ζ′ ≠ ζ·∂b. Verifies unit, multiplicativity on all basis
/// pairs and invertibility before returning.
AlgebraIsomorphism coboundary_isomorphism(const CrossedProductAlgebra& from, const CrossedProductAlgebra& to,
                                          const FieldCochain1& b);

/// ζ_α·ζ_β cohomologous to ζ_{α+β}, by norm classes.
bool cocycle_sum_class_check(const GaloisExtension& ext, const FieldCochain2& zeta_alpha,
                             const FieldCochain2& zeta_beta, const FieldCochain2& zeta_sum);

}  // namespace gforms
