#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gforms {

/// A finite group given by its multiplication table on indices 0..order-1.
/// mul(a, b) is the product a·b; for groups of automorphisms a·b = a ∘ b.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(std::vector<std::size_t>{0}) {}

  /// Validates closure, associativity, a two-sided identity and inverses.
  /// Throws InputError on a malformed table.
  explicit FiniteGroup(std::vector<std::size_t> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  /// Permutations of {0..n-1}, listed in lexicographic order (identity first).
  static FiniteGroup symmetric(std::size_t n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// Group generated by composing the given permutations (listed identity
  /// first, then in discovery order). Returns the permutations as well.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& perms,
                                       std::vector<std::vector<std::size_t>>* elements = nullptr);

  std::size_t order() const { return order_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;
  bool is_abelian() const;
  /// A generator when the group is cyclic.
  bool is_cyclic(std::size_t* generator = nullptr) const;
  const std::vector<std::size_t>& table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::size_t order_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

/// Every homomorphism Γ → H as an index table of length |Γ|, in
/// lexicographic order. Searches by backtracking over element images.
std::vector<std::vector<std::size_t>> homomorphisms(const FiniteGroup& gamma, const FiniteGroup& target);

bool is_homomorphism(const FiniteGroup& gamma, const FiniteGroup& target, const std::vector<std::size_t>& map);

}  // namespace gforms
