#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gforms/crossed_product.hpp"

namespace gforms {

/// Dense matrix over a Galois field, row-major.
struct FieldMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FieldElement> entries;

  static FieldMatrix zero(const GaloisField& k, std::size_t rows, std::size_t cols);
  static FieldMatrix identity(const GaloisField& k, std::size_t n);
  FieldElement& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;
};

FieldMatrix multiply(const GaloisField& k, const FieldMatrix& x, const FieldMatrix& y);
/// Entrywise Galois action of field automorphism g (a global index).
FieldMatrix apply_automorphism(const GaloisField& k, std::size_t g, const FieldMatrix& x);
FieldMatrix scale(const GaloisField& k, const FieldElement& s, const FieldMatrix& x);
std::optional<FieldMatrix> inverse(const GaloisField& k, const FieldMatrix& x);
/// The ℚ-matrix of v ↦ X·v on coordinates j·[K:ℚ] + i.
RatMatrix realize(const GaloisField& k, const FieldMatrix& x);

/// A twisted semilinear descent datum on V = K^dim: a_V(v) = M_a·a⁻¹(v), with
/// a⁻¹ applied coordinatewise, subject to
///   b_V ∘ a_V = (ab)_V ∘ ζ(a, b),  i.e.  M_b·b⁻¹(M_a) = (ab)⁻¹(ζ(a, b))·M_ab.
/// Indices a, b are elements of Γ = ext.group().
struct SemilinearDatum {
  GaloisExtension ext;
  std::size_t dim = 0;
  FieldCochain2 zeta;
  std::vector<FieldMatrix> maps;

  /// a_V applied to a vector of K-coordinates.
  std::vector<FieldElement> apply(std::size_t a, const std::vector<FieldElement>& v) const;
};

bool same_datum(const SemilinearDatum& x, const SemilinearDatum& y);

struct Violation {
  std::string what;
  std::size_t a = 0;
  std::size_t b = 0;
};

/// Shapes, cocycle, normalization 1_V = id, invertibility and twisted
/// composition; the first failure is returned.
std::optional<Violation> validate_datum(const SemilinearDatum& d);

/// M_a = identity for every a, ζ trivial.
SemilinearDatum trivial_datum(const GaloisExtension& ext, std::size_t dim);
/// g ∘ a_V ∘ g⁻¹: M_a ↦ g·M_a·a⁻¹(g)⁻¹. DomainError when g is singular.
SemilinearDatum conjugate_datum(const SemilinearDatum& d, const FieldMatrix& g);
/// a_V ↦ a_V ∘ b(a): a datum over ζ·∂b.
SemilinearDatum transport_datum(const SemilinearDatum& d, const FieldCochain1& b);

/// A right module over a crossed product: action[j] is the ℚ-matrix of
/// v ↦ v·x_j for the j-th ℚ-basis element x_j of the algebra.
struct AModule {
  std::shared_ptr<const CrossedProductAlgebra> algebra;
  std::size_t dimension = 0;
  std::vector<RatMatrix> action;

  /// v·x for an arbitrary algebra element.
  RatMatrix action_of(const AlgebraElement& x) const;
};

/// Unit acts as identity and (v·x)·y = v·(xy) on all basis pairs.
std::optional<Violation> validate_module(const AModule& m);

AModule regular_module(std::shared_ptr<const CrossedProductAlgebra> a);
/// v·(λ·e_a) = a_V(λ·v) on the ℚ-restriction of V. Builds A_ζ when no
/// algebra is passed. DomainError on an invalid datum.
AModule to_module(const SemilinearDatum& d, std::shared_ptr<const CrossedProductAlgebra> a = nullptr);
/// Recovers the K-structure from K ⊂ A (greedy basis from unit vectors)
/// and sets a_V to the action of e_a. DomainError on an invalid module.
SemilinearDatum from_module(const AModule& m);
/// The module over `source` with v·x := v·φ(x).
AModule pullback(const AModule& m, std::shared_ptr<const CrossedProductAlgebra> source,
                 const AlgebraIsomorphism& phi);

struct FixedSpace {
  RatMatrix basis;  // columns, in the ℚ-coordinates of V
  std::size_t k_dimension = 0;
};

/// {v : a_V(v) = v for all a}. DomainError unless ζ is trivial.
FixedSpace fixed_space(const SemilinearDatum& d);

/// K-linear T: V → W with T ∘ a_V = a_W ∘ T, as a ℚ-basis.
std::vector<FieldMatrix> datum_morphisms(const SemilinearDatum& from, const SemilinearDatum& to);
/// ℚ-linear X with X·(v·x) = (X v)·x for all x in A, as a ℚ-basis.
std::vector<RatMatrix> module_morphisms(const AModule& from, const AModule& to);

}  // namespace gforms
