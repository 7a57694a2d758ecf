#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gforms/field.hpp"
#include "gforms/gmodule.hpp"

namespace gforms {

/// Cochains are flat tables indexed by group elements: f[a] for 1-cochains,
/// z[a * |Γ| + b] for 2-cochains.
using Cochain1 = std::vector<Elem>;
using Cochain2 = std::vector<Elem>;
using FieldCochain1 = std::vector<FieldElement>;
using FieldCochain2 = std::vector<FieldElement>;

/// A failing instance of the 2-cocycle identity.
struct Triple {
  std::size_t a = 0, b = 0, c = 0;
};

// ---------------------------------------------------------------------------
// Finite modules (additive notation)
// ---------------------------------------------------------------------------

/// z(a, bc) + a·z(b, c) = z(ab, c) + z(a, b) for all a, b, c.
bool is_two_cocycle(const GModule& m, const Cochain2& z, Triple* violation = nullptr);
bool is_normalized(const GModule& m, const Cochain2& z);
/// ∂f(a, b) = f(a) + a·f(b) − f(ab).
Cochain2 coboundary_of(const GModule& m, const Cochain1& f);
/// Some f with ∂f = z, found by solving the integer system exactly.
std::optional<Cochain1> is_coboundary(const GModule& m, const Cochain2& z);
/// z − ∂(constant z(1,1)); normalized whenever z is a cocycle.
Cochain2 normalize(const GModule& m, const Cochain2& z);
Cochain2 add_cochains(const GModule& m, const Cochain2& x, const Cochain2& y);

// ---------------------------------------------------------------------------
// H⁰ and nonabelian H¹
// ---------------------------------------------------------------------------

/// Elements of A fixed by every element of Γ, ascending.
std::vector<std::size_t> h0(const GGroup& a);

/// f(st) = f(s)·s(f(t)).
bool is_one_cocycle(const GGroup& a, const std::vector<std::size_t>& f);

struct H1Set {
  /// Every 1-cocycle, in lexicographic order of tables.
  std::vector<std::vector<std::size_t>> cocycles;
  /// Class id of each cocycle; class 0 holds the constant-identity cocycle.
  std::vector<std::size_t> class_of;
  std::size_t class_count = 0;

  /// First cocycle of each class.
  std::vector<std::vector<std::size_t>> representatives() const;
};

/// Enumerates all 1-cocycles and partitions them by b(s) = c⁻¹·a(s)·s(c).
/// DomainError when |A|^(|Γ|−1) exceeds the budget.
H1Set h1_nonabelian(const GGroup& a, std::uint64_t budget = 10'000'000);

// ---------------------------------------------------------------------------
// H² by the normalized bar complex
// ---------------------------------------------------------------------------

class H2Group {
 public:
  const FiniteAbelianGroup& group() const { return group_; }
  /// One normalized cocycle per invariant factor, in order.
  const std::vector<Cochain2>& representatives() const { return representatives_; }
  /// Coordinates of the class of z in the invariant-factor basis.
  /// DomainError when z is not a cocycle.
  IntVector class_of(const Cochain2& z) const;
  bool is_trivial_class(const Cochain2& z) const;

 private:
  friend H2Group h2_bar(const GModule& m);

  GModule module_;
  std::vector<std::size_t> nonidentity_;
  FiniteAbelianGroup group_;
  std::vector<Cochain2> representatives_;
  RatMatrix cocycle_basis_inverse_;
  Cokernel quotient_;
};

H2Group h2_bar(const GModule& m);

// ---------------------------------------------------------------------------
// Hom(P, M) transport: z(a, b)(α) = μ(α)(a, b)
// ---------------------------------------------------------------------------

/// μ(α) for every α ∈ P (indexed as in HomModule::decode_p).
std::vector<Cochain2> h2_transport(const HomModule& h, const Cochain2& z);
/// Inverse of h2_transport. DomainError when α ↦ μ(α) is not additive.
Cochain2 h2_transport_inverse(const HomModule& h, const std::vector<Cochain2>& mu);
/// g(α)(a) = f(a)(α): transports a coboundary witness f for z to witnesses
/// for every μ(α).
std::vector<Cochain1> h2_transport_witness(const HomModule& h, const Cochain1& f);

// ---------------------------------------------------------------------------
// Boundary map of a central extension 1 → Z → B → C → 1
// ---------------------------------------------------------------------------

struct CentralExtension {
  GGroup z;
  GGroup b;
  GGroup c;
  std::vector<std::size_t> inclusion;   // Z → B
  std::vector<std::size_t> projection;  // B → C

  /// Homomorphisms, Γ-equivariance, exactness, centrality. DomainError.
  void validate() const;
  std::vector<std::size_t> preimages(std::size_t c_elem) const;
};

/// δc(a, b) = c̃(a)·a(c̃(b))·c̃(ab)⁻¹ as a table of Z elements. The lift c̃
/// defaults to the smallest preimage of each value.
std::vector<std::size_t> boundary_map(const CentralExtension& ext, const std::vector<std::size_t>& c,
                                      const std::vector<std::size_t>* lift = nullptr);

// ---------------------------------------------------------------------------
// K^× coefficients (multiplicative notation)
// ---------------------------------------------------------------------------

/// Nonzero values and z(a, bc)·a(z(b, c)) = z(ab, c)·z(a, b).
bool is_two_cocycle(const GaloisExtension& ext, const FieldCochain2& z, Triple* violation = nullptr);
bool is_normalized(const GaloisExtension& ext, const FieldCochain2& z);
/// ∂f(a, b) = f(a)·a(f(b))·f(ab)⁻¹.
FieldCochain2 coboundary_of(const GaloisExtension& ext, const FieldCochain1& f);
/// Searches f with f(1) = z(1, 1) and other values drawn from candidates.
std::optional<FieldCochain1> is_coboundary(const GaloisExtension& ext, const FieldCochain2& z,
                                           const std::vector<FieldElement>& candidates,
                                           std::uint64_t budget = 10'000'000);
/// z(a, b) / a(z(1, 1)).
FieldCochain2 normalize(const GaloisExtension& ext, const FieldCochain2& z);
FieldCochain2 multiply_cochains(const GaloisExtension& ext, const FieldCochain2& x, const FieldCochain2& y);
FieldCochain2 trivial_cochain(const GaloisExtension& ext);

/// H²(Γ, K^×) ≅ k^× / N(K^×) for cyclic Γ.
class CyclicNormClasses {
 public:
  /// DomainError unless Γ is cyclic.
  explicit CyclicNormClasses(GaloisExtension ext);

  const GaloisExtension& extension() const { return ext_; }
  std::size_t generator() const { return generator_; }
  /// ∏ᵢ z(σⁱ, σ) ∈ k^×; a coboundary ∂f maps to N(f(σ)).
  FieldElement class_element(const FieldCochain2& z) const;
  /// z(σⁱ, σʲ) = c when i + j ≥ n, else 1. c must lie in k^×.
  FieldCochain2 cocycle_from_element(const FieldElement& c) const;
  /// Decided for |Γ| ≤ 2 over ℚ; DomainError for larger cyclic steps
  /// unless the class element is 1.
  bool is_trivial_element(const FieldElement& c) const;
  bool is_trivial(const FieldCochain2& z) const { return is_trivial_element(class_element(z)); }
  bool same_class(const FieldCochain2& x, const FieldCochain2& y) const;
  /// Squarefree d with K = ℚ(√d), when K/ℚ is quadratic.
  std::optional<Integer> quadratic_parameter() const { return d_; }

 private:
  GaloisExtension ext_;
  std::size_t generator_ = 0;
  std::vector<std::size_t> powers_;  // powers_[i] = σⁱ
  std::optional<Integer> d_;
};

}  // namespace gforms
