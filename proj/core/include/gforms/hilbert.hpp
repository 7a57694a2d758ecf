#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gforms/numbers.hpp"

namespace gforms {

/// A place of ℚ: a prime p, or the real place (prime == 0).
struct Place {
  Integer prime = 0;

  static Place infinite() { return Place{0}; }
  static Place finite(const Integer& p);
  /// "inf", "infinity", "oo" or a prime.
  static Place parse(std::string_view text);

  bool is_infinite() const { return prime == 0; }
  std::string to_string() const;

  /// Primes ascending, the real place last.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.is_infinite() != b.is_infinite()) return b.is_infinite();
    return a.prime < b.prime;
  }
  friend bool operator==(const Place&, const Place&) = default;
};

bool is_prime(const Integer& n);
/// Distinct prime factors by trial division.
std::vector<Integer> prime_factors(Integer n);
int legendre_symbol(const Integer& a, const Integer& p);

/// (a, b)_v ∈ {+1, −1}: +1 iff z² = a x² + b y² has a nontrivial solution
/// over ℚ_v. Closed formulas for odd p, p = 2 and the real place.
/// InputError when a or b is zero.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// ∞, 2, and every prime dividing a numerator or denominator of a or b.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

/// c ∈ N(ℚ(√d)^×), by the local symbols at every relevant place.
bool is_norm_quadratic(const Integer& d, const Rational& c);

/// A Brauer class over ℚ by its local Hasse invariants (in ℚ/ℤ, stored in
/// [0, 1)). Only places with nonzero invariant are stored.
class BrauerClass {
 public:
  BrauerClass() = default;
  /// Throws DomainError if the invariants do not sum to an integer.
  explicit BrauerClass(std::map<Place, Rational> invariants);

  const std::map<Place, Rational>& invariants() const { return invariants_; }
  std::set<Place> ramified_places() const;
  bool is_split() const { return invariants_.empty(); }
  /// Sum in Br(ℚ); for quaternion classes the symmetric difference of the
  /// ramified sets.
  BrauerClass operator+(const BrauerClass& other) const;
  BrauerClass times(const Integer& n) const;

  friend bool operator==(const BrauerClass&, const BrauerClass&) = default;

 private:
  std::map<Place, Rational> invariants_;
};

/// Class of the quaternion algebra (d, c)_ℚ: invariant ½ exactly where the
/// Hilbert symbol is −1.
BrauerClass brauer_class_quaternion(const Rational& d, const Rational& c);

}  // namespace gforms
