#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gforms/finite_group.hpp"
#include "gforms/linalg.hpp"

namespace gforms {

/// Elements of a finite module or group are plain indices.
using Elem = std::uint64_t;

/// A finite Γ-module M = ⊕ ℤ/mᵢ with Γ acting through integer matrices.
/// Elements are encoded in mixed radix (first factor least significant).
class GModule {
 public:
  GModule() = default;
  /// action[g] is r×r with r = moduli.size(); every mᵢ ≥ 1. Checks that each
  /// matrix is well defined modulo the moduli, invertible on M, and that
  /// g ↦ action[g] is a homomorphism. InputError / DomainError otherwise.
  GModule(FiniteGroup gamma, std::vector<std::int64_t> moduli, std::vector<IntMatrix> action);

  static GModule trivial(FiniteGroup gamma, std::vector<std::int64_t> moduli);
  /// ℤ/m with g acting as multiplication by multipliers[g].
  static GModule cyclic(FiniteGroup gamma, std::int64_t m, const std::vector<std::int64_t>& multipliers);

  const FiniteGroup& gamma() const { return gamma_; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  const IntMatrix& action(std::size_t g) const { return action_[g]; }
  std::size_t rank() const { return moduli_.size(); }
  Elem order() const { return order_; }

  std::vector<std::int64_t> decode(Elem x) const;
  Elem encode(const std::vector<std::int64_t>& coords) const;
  /// Reduces arbitrary integer coordinates.
  Elem encode(const IntVector& coords) const;

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem times(std::int64_t k, Elem x) const;
  Elem act(std::size_t g, Elem x) const;

 private:
  FiniteGroup gamma_;
  std::vector<std::int64_t> moduli_;
  std::vector<IntMatrix> action_;
  Elem order_ = 1;
  std::vector<Elem> act_table_;  // g * order + x, filled for small modules
};

/// A finite group A (not necessarily abelian) with Γ acting by automorphisms.
class GGroup {
 public:
  GGroup() = default;
  /// action[g][x] is the image of x under g. Checks that every action[g] is
  /// an automorphism and that g ↦ action[g] is a homomorphism.
  GGroup(FiniteGroup gamma, FiniteGroup group, std::vector<std::vector<std::size_t>> action);

  static GGroup trivial_action(FiniteGroup gamma, FiniteGroup group);
  /// The underlying group of a module with its action. Element indices agree
  /// with the module encoding.
  static GGroup from_module(const GModule& m);

  const FiniteGroup& gamma() const { return gamma_; }
  const FiniteGroup& group() const { return group_; }
  std::size_t act(std::size_t g, std::size_t x) const { return action_[g][x]; }
  const std::vector<std::vector<std::size_t>>& action() const { return action_; }

 private:
  FiniteGroup gamma_;
  FiniteGroup group_;
  std::vector<std::vector<std::size_t>> action_;
};

/// Decomposes an abelian Γ-group into cyclic factors. element_index[x] is
/// the module element corresponding to group element x.
GModule module_from_abelian(const GGroup& a, std::vector<Elem>* element_index = nullptr);

/// Hom(P, M) for P = ⊕ ℤ/pᵢ with trivial Γ-action, as the Γ-module
/// ⊕_{i,j} ℤ/gcd(pᵢ, mⱼ). Coordinate t of component (i, j) is the
/// homomorphism eᵢ ↦ t·(mⱼ / gcd)·eⱼ.
class HomModule {
 public:
  HomModule(std::vector<std::int64_t> p_orders, GModule target);

  const GModule& module() const { return module_; }
  const GModule& target() const { return target_; }
  const std::vector<std::int64_t>& p_orders() const { return p_; }
  /// |P|; elements of P are mixed-radix indices over p_orders.
  Elem p_order() const { return p_order_; }
  std::vector<std::int64_t> decode_p(Elem alpha) const;

  /// f(α) ∈ M.
  Elem evaluate(Elem f, Elem alpha) const;
  /// The homomorphism with f(eᵢ) = images[i]; DomainError unless
  /// pᵢ·images[i] = 0.
  Elem from_images(const std::vector<Elem>& images) const;

 private:
  struct Component {
    std::size_t i;
    std::size_t j;
    std::int64_t scale;  // mⱼ / gcd(pᵢ, mⱼ)
  };
  std::vector<std::int64_t> p_;
  Elem p_order_ = 1;
  GModule target_;
  std::vector<Component> components_;
  GModule module_;
};

}  // namespace gforms
