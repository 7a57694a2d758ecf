#include "gforms/hilbert.hpp"

#include <algorithm>

#include "gforms/error.hpp"

namespace gforms {

namespace mp = boost::multiprecision;

Place Place::finite(const Integer& p) {
  if (!is_prime(p)) throw InputError(p.str() + " is not a prime");
  return Place{p};
}

Place Place::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo" || text == "real") return infinite();
  return finite(parse_integer(text));
}

std::string Place::to_string() const { return is_infinite() ? "inf" : prime.str(); }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (Integer p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<Integer> prime_factors(Integer n) {
  n = mp::abs(n);
  std::vector<Integer> out;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

int legendre_symbol(const Integer& a, const Integer& p) {
  const Integer r = floor_mod(a, p);
  if (r == 0) return 0;
  const Integer e = mp::powm(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

namespace {

// a = p^valuation · unit, for an integer a ≠ 0.
void split_valuation(Integer a, const Integer& p, int& valuation, Integer& unit) {
  valuation = 0;
  while (a % p == 0) {
    a /= p;
    ++valuation;
  }
  unit = a;
}

// Integer in the same square class as q.
Integer square_class_integer(const Rational& q) { return numerator(q) * denominator(q); }

int parity(const Integer& x) { return static_cast<int>(floor_mod(x, 2)); }

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw InputError("Hilbert symbol of zero");
  if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
  const Integer& p = v.prime;
  int alpha = 0, beta = 0;
  Integer u, w;
  split_valuation(square_class_integer(a), p, alpha, u);
  split_valuation(square_class_integer(b), p, beta, w);
  if (p == 2) {
    auto eps = [](const Integer& x) { return parity((floor_mod(x, 8) - 1) / 2); };
    auto omega = [](const Integer& x) {
      const Integer r = floor_mod(x, 8);
      return parity((r * r - 1) / 8);
    };
    const int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return e % 2 ? -1 : 1;
  }
  int sign = 1;
  if ((alpha * beta) % 2 && parity((p - 1) / 2)) sign = -sign;
  if (beta % 2) sign *= legendre_symbol(u, p);
  if (alpha % 2) sign *= legendre_symbol(w, p);
  return sign;
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
  std::vector<Integer> primes{2};
  for (const Integer& n : {numerator(a), denominator(a), numerator(b), denominator(b)})
    for (const auto& p : prime_factors(n)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out;
  for (const auto& p : primes) out.push_back(Place{p});
  out.push_back(Place::infinite());
  return out;
}

bool is_norm_quadratic(const Integer& d, const Rational& c) {
  if (c == 0) throw InputError("norm test of zero");
  if (d == 0) throw InputError("quadratic parameter zero");
  for (const auto& v : relevant_places(Rational(d), c))
    if (hilbert_symbol(Rational(d), c, v) == -1) return false;
  return true;
}

// ---------------------------------------------------------------------------

BrauerClass::BrauerClass(std::map<Place, Rational> invariants) {
  Rational total = 0;
  for (auto& [place, inv] : invariants) {
    Rational r = inv - Rational(floor_div(numerator(inv), denominator(inv)));
    if (place.is_infinite() && r != 0 && r != Rational(1, 2))
      throw DomainError("real local invariant must be 0 or 1/2");
    total += r;
    if (r != 0) invariants_.emplace(place, r);
  }
  if (!is_integral(total)) throw DomainError("local invariants do not sum to zero in Q/Z");
}

std::set<Place> BrauerClass::ramified_places() const {
  std::set<Place> out;
  for (const auto& [place, inv] : invariants_) out.insert(place);
  return out;
}

BrauerClass BrauerClass::operator+(const BrauerClass& other) const {
  std::map<Place, Rational> sum = invariants_;
  for (const auto& [place, inv] : other.invariants_) sum[place] += inv;
  return BrauerClass(std::move(sum));
}

BrauerClass BrauerClass::times(const Integer& n) const {
  std::map<Place, Rational> out;
  for (const auto& [place, inv] : invariants_) out[place] = inv * Rational(n);
  return BrauerClass(std::move(out));
}

BrauerClass brauer_class_quaternion(const Rational& d, const Rational& c) {
  if (d == 0 || c == 0) throw InputError("quaternion symbol with a zero entry");
  std::map<Place, Rational> inv;
  for (const auto& v : relevant_places(d, c))
    if (hilbert_symbol(d, c, v) == -1) inv[v] = Rational(1, 2);
  if (inv.size() % 2) throw DomainError("odd number of ramified places (reciprocity violated)");
  return BrauerClass(std::move(inv));
}

}  // namespace gforms
