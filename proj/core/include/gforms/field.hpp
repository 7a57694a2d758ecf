#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "gforms/finite_group.hpp"
#include "gforms/linalg.hpp"

namespace gforms {

/// Coordinates over a field's ℚ-basis. Meaningless without the field.
struct FieldElement {
  RatVector coords;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// ℚ, ℚ(√d) or ℚ(ζ_n) with its power basis and explicit Galois group.
class GaloisField {
 public:
  enum class Kind { rationals, quadratic, cyclotomic };

  static GaloisField rationals();
  /// d squarefree, d ∉ {0, 1}. Basis {1, √d}.
  static GaloisField quadratic(const Integer& d);
  /// n ≥ 3. Basis {1, ζ, …, ζ^{φ(n)−1}}.
  static GaloisField cyclotomic(unsigned n);

  Kind kind() const { return kind_; }
  const Integer& parameter() const { return parameter_; }
  std::size_t degree() const { return degree_; }
  std::string describe() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement basis(std::size_t i) const;
  /// √d for quadratic fields, ζ_n for cyclotomic ones, 1 for ℚ.
  FieldElement generator() const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement scale(const Rational& q, const FieldElement& x) const;
  /// DomainError on zero.
  FieldElement inv(const FieldElement& x) const;
  FieldElement div(const FieldElement& x, const FieldElement& y) const { return mul(x, inv(y)); }
  FieldElement pow(const FieldElement& x, long long e) const;

  bool is_zero(const FieldElement& x) const;
  bool is_rational(const FieldElement& x) const;
  /// Requires is_rational(x).
  Rational to_rational(const FieldElement& x) const;
  void check(const FieldElement& x) const;

  /// Matrix of y ↦ x·y on the basis.
  RatMatrix multiplication_matrix(const FieldElement& x) const;
  Rational trace(const FieldElement& x) const;
  /// Product of all Galois conjugates; asserted to lie in ℚ.
  Rational norm(const FieldElement& x) const;

  /// Gal(K/ℚ); index 0 is the identity, mul(a, b) = a ∘ b.
  const FiniteGroup& galois_group() const { return group_; }
  const RatMatrix& action_matrix(std::size_t g) const { return actions_[g]; }
  /// For ℚ(ζ_n) the unit u with ζ ↦ ζ^u; for ℚ(√d) ±1.
  long long automorphism_label(std::size_t g) const { return labels_[g]; }
  FieldElement apply(std::size_t g, const FieldElement& x) const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.kind_ == b.kind_ && a.parameter_ == b.parameter_;
  }

 private:
  GaloisField() = default;
  void finish();  // derives the group table and verifies the action

  Kind kind_ = Kind::rationals;
  Integer parameter_ = 1;
  std::size_t degree_ = 1;
  std::vector<RatVector> products_;  // basis_i · basis_j at i * degree + j
  std::vector<RatMatrix> actions_;
  std::vector<long long> labels_;
  FiniteGroup group_;
};

/// K/k where k is the fixed field of a subgroup H ≤ Gal(K/ℚ); Γ = H.
class GaloisExtension {
 public:
  /// Full Galois group: k = ℚ.
  explicit GaloisExtension(std::shared_ptr<const GaloisField> field);
  /// subgroup: indices into field->galois_group(); must be a subgroup.
  GaloisExtension(std::shared_ptr<const GaloisField> field, std::vector<std::size_t> subgroup);

  const GaloisField& field() const { return *field_; }
  std::shared_ptr<const GaloisField> field_ptr() const { return field_; }
  const FiniteGroup& group() const { return group_; }
  /// Index of Γ element a inside Gal(K/ℚ).
  std::size_t global_index(std::size_t a) const { return subgroup_[a]; }
  const std::vector<std::size_t>& subgroup() const { return subgroup_; }
  /// [k : ℚ].
  std::size_t base_degree() const { return field_->degree() / subgroup_.size(); }
  bool is_full() const { return subgroup_.size() == field_->degree(); }

  FieldElement act(std::size_t a, const FieldElement& x) const { return field_->apply(subgroup_[a], x); }
  /// ℚ-basis of k = K^Γ, as field elements.
  std::vector<FieldElement> base_field_basis() const;
  bool in_base_field(const FieldElement& x) const;

 private:
  std::shared_ptr<const GaloisField> field_;
  std::vector<std::size_t> subgroup_;
  FiniteGroup group_;
};

/// Euler's totient.
unsigned euler_phi(unsigned n);
/// Coefficients (constant term first) of the n-th cyclotomic polynomial.
std::vector<Integer> cyclotomic_polynomial(unsigned n);
bool is_squarefree(const Integer& d);
/// Squarefree part s of a nonzero integer: n = s · m².
Integer squarefree_part(const Integer& n);

}  // namespace gforms
