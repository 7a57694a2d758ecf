#include "gforms/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "gforms/error.hpp"

namespace gforms {

namespace mp = boost::multiprecision;

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<Integer>;  // constant term first

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

// Exact quotient by a monic divisor.
Poly poly_div_exact(Poly num, const Poly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) throw DomainError("polynomial division degree mismatch");
  Poly q(num.size() - dd, Integer(0));
  for (std::size_t k = num.size(); k-- > dd;) {
    const Integer c = num[k];
    q[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  for (const auto& r : num)
    if (r != 0) throw DomainError("cyclotomic division left a remainder");
  return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw InputError("cyclotomic polynomial of index 0");
  Poly num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  Poly den{Integer(1)};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
  return poly_div_exact(num, den);
}

bool is_squarefree(const Integer& d) {
  Integer n = mp::abs(d);
  if (n == 0) return false;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

Integer squarefree_part(const Integer& value) {
  if (value == 0) throw DomainError("squarefree part of zero");
  Integer n = mp::abs(value);
  Integer s = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) s *= p;
  }
  s *= n;
  return value < 0 ? Integer(-s) : s;
}

// ---------------------------------------------------------------------------

GaloisField GaloisField::rationals() {
  GaloisField f;
  f.kind_ = Kind::rationals;
  f.degree_ = 1;
  f.products_ = {RatVector{Rational(1)}};
  f.actions_ = {RatMatrix::identity(1)};
  f.labels_ = {1};
  f.finish();
  return f;
}

GaloisField GaloisField::quadratic(const Integer& d) {
  if (d == 0 || d == 1 || !is_squarefree(d)) throw InputError("quadratic field needs squarefree d ∉ {0, 1}, got " + d.str());
  GaloisField f;
  f.kind_ = Kind::quadratic;
  f.parameter_ = d;
  f.degree_ = 2;
  f.products_ = {RatVector{1, 0}, RatVector{0, 1}, RatVector{0, 1}, RatVector{Rational(d), 0}};
  f.actions_ = {RatMatrix::identity(2), RatMatrix{{1, 0}, {0, -1}}};
  f.labels_ = {1, -1};
  f.finish();
  return f;
}

GaloisField GaloisField::cyclotomic(unsigned n) {
  if (n < 3) throw InputError("cyclotomic field needs n ≥ 3");
  if (n > 256) throw InputError("cyclotomic conductor too large for desk-scale arithmetic");
  GaloisField f;
  f.kind_ = Kind::cyclotomic;
  f.parameter_ = n;
  const Poly phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  f.degree_ = deg;

  // ζ^m in the power basis, m = 0..n-1.
  std::vector<RatVector> powers;
  RatVector cur(deg, Rational(0));
  cur[0] = 1;
  for (unsigned m = 0; m < n; ++m) {
    powers.push_back(cur);
    RatVector next(deg, Rational(0));
    for (std::size_t i = 0; i + 1 < deg; ++i) next[i + 1] = cur[i];
    const Rational top = cur[deg - 1];
    if (top != 0)
      for (std::size_t i = 0; i < deg; ++i) next[i] -= top * Rational(phi[i]);
    cur = std::move(next);
  }
  f.products_.resize(deg * deg);
  for (std::size_t i = 0; i < deg; ++i)
    for (std::size_t j = 0; j < deg; ++j) f.products_[i * deg + j] = powers[(i + j) % n];
  for (unsigned u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    RatMatrix a(deg, deg);
    for (std::size_t j = 0; j < deg; ++j) {
      const RatVector& col = powers[(u * j) % n];
      for (std::size_t i = 0; i < deg; ++i) a(i, j) = col[i];
    }
    f.actions_.push_back(std::move(a));
    f.labels_.push_back(u);
  }
  f.finish();
  return f;
}

void GaloisField::finish() {
  const std::size_t m = actions_.size();
  if (m != degree_) throw DomainError("Galois group order differs from the degree");
  std::map<std::vector<Rational>, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index[actions_[i].data()] = i;
  std::vector<std::size_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto it = index.find((actions_[a] * actions_[b]).data());
      if (it == index.end()) throw DomainError("Galois actions do not close under composition");
      table[a * m + b] = it->second;
    }
  group_ = FiniteGroup(std::move(table));
  // Each action must be multiplicative on basis products.
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t i = 0; i < degree_; ++i)
      for (std::size_t j = 0; j < degree_; ++j) {
        const FieldElement lhs = apply(g, FieldElement{products_[i * degree_ + j]});
        const FieldElement rhs = mul(apply(g, basis(i)), apply(g, basis(j)));
        if (!(lhs == rhs)) throw DomainError("Galois action is not multiplicative");
      }
}

std::string GaloisField::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::rationals: os << "Q"; break;
    case Kind::quadratic: os << "Q(sqrt(" << parameter_ << "))"; break;
    case Kind::cyclotomic: os << "Q(zeta_" << parameter_ << ")"; break;
  }
  return os.str();
}

FieldElement GaloisField::zero() const { return FieldElement{RatVector(degree_, Rational(0))}; }

FieldElement GaloisField::one() const { return from_rational(1); }

FieldElement GaloisField::from_rational(const Rational& q) const {
  FieldElement x = zero();
  x.coords[0] = q;
  return x;
}

FieldElement GaloisField::basis(std::size_t i) const {
  FieldElement x = zero();
  x.coords.at(i) = 1;
  return x;
}

FieldElement GaloisField::generator() const { return degree_ > 1 ? basis(1) : one(); }

void GaloisField::check(const FieldElement& x) const {
  if (x.coords.size() != degree_) throw InputError("field element has " + std::to_string(x.coords.size()) +
                                                   " coordinates, expected " + std::to_string(degree_));
}

FieldElement GaloisField::add(const FieldElement& x, const FieldElement& y) const {
  FieldElement z = x;
  for (std::size_t i = 0; i < degree_; ++i) z.coords[i] += y.coords[i];
  return z;
}

FieldElement GaloisField::sub(const FieldElement& x, const FieldElement& y) const {
  FieldElement z = x;
  for (std::size_t i = 0; i < degree_; ++i) z.coords[i] -= y.coords[i];
  return z;
}

FieldElement GaloisField::neg(const FieldElement& x) const {
  FieldElement z = x;
  for (auto& c : z.coords) c = -c;
  return z;
}

FieldElement GaloisField::scale(const Rational& q, const FieldElement& x) const {
  FieldElement z = x;
  for (auto& c : z.coords) c *= q;
  return z;
}

FieldElement GaloisField::mul(const FieldElement& x, const FieldElement& y) const {
  FieldElement z = zero();
  for (std::size_t i = 0; i < degree_; ++i) {
    if (x.coords[i] == 0) continue;
    for (std::size_t j = 0; j < degree_; ++j) {
      if (y.coords[j] == 0) continue;
      const Rational c = x.coords[i] * y.coords[j];
      const RatVector& p = products_[i * degree_ + j];
      for (std::size_t k = 0; k < degree_; ++k)
        if (p[k] != 0) z.coords[k] += c * p[k];
    }
  }
  return z;
}

RatMatrix GaloisField::multiplication_matrix(const FieldElement& x) const {
  RatMatrix m(degree_, degree_);
  for (std::size_t j = 0; j < degree_; ++j) {
    const FieldElement col = mul(x, basis(j));
    for (std::size_t i = 0; i < degree_; ++i) m(i, j) = col.coords[i];
  }
  return m;
}

FieldElement GaloisField::inv(const FieldElement& x) const {
  if (is_zero(x)) throw DomainError("inverse of zero field element");
  auto sol = solve(multiplication_matrix(x), one().coords);
  if (!sol) throw DomainError("field element not invertible");
  return FieldElement{std::move(*sol)};
}

FieldElement GaloisField::pow(const FieldElement& x, long long e) const {
  FieldElement base = e < 0 ? inv(x) : x;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  FieldElement result = one();
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool GaloisField::is_zero(const FieldElement& x) const {
  return std::all_of(x.coords.begin(), x.coords.end(), [](const Rational& c) { return c == 0; });
}

bool GaloisField::is_rational(const FieldElement& x) const {
  return std::all_of(x.coords.begin() + 1, x.coords.end(), [](const Rational& c) { return c == 0; });
}

Rational GaloisField::to_rational(const FieldElement& x) const {
  if (!is_rational(x)) throw DomainError("field element is not rational");
  return x.coords[0];
}

Rational GaloisField::trace(const FieldElement& x) const {
  Rational t = 0;
  const RatMatrix m = multiplication_matrix(x);
  for (std::size_t i = 0; i < degree_; ++i) t += m(i, i);
  return t;
}

Rational GaloisField::norm(const FieldElement& x) const {
  FieldElement p = one();
  for (std::size_t g = 0; g < group_.order(); ++g) p = mul(p, apply(g, x));
  if (!is_rational(p)) throw DomainError("norm did not land in Q");
  return p.coords[0];
}

FieldElement GaloisField::apply(std::size_t g, const FieldElement& x) const {
  return FieldElement{actions_.at(g) * x.coords};
}

// ---------------------------------------------------------------------------

GaloisExtension::GaloisExtension(std::shared_ptr<const GaloisField> field)
    : GaloisExtension(field, [&] {
        std::vector<std::size_t> all(field->degree());
        std::iota(all.begin(), all.end(), 0);
        return all;
      }()) {}

GaloisExtension::GaloisExtension(std::shared_ptr<const GaloisField> field, std::vector<std::size_t> subgroup)
    : field_(std::move(field)), subgroup_(std::move(subgroup)) {
  const FiniteGroup& g = field_->galois_group();
  std::sort(subgroup_.begin(), subgroup_.end());
  subgroup_.erase(std::unique(subgroup_.begin(), subgroup_.end()), subgroup_.end());
  if (subgroup_.empty() || subgroup_.front() != g.identity()) throw InputError("subgroup must contain the identity");
  for (auto x : subgroup_)
    if (x >= g.order()) throw InputError("subgroup index out of range");
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < subgroup_.size(); ++i) local[subgroup_[i]] = i;
  const std::size_t m = subgroup_.size();
  std::vector<std::size_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto it = local.find(g.mul(subgroup_[a], subgroup_[b]));
      if (it == local.end()) throw InputError("subgroup is not closed under composition");
      table[a * m + b] = it->second;
    }
  group_ = FiniteGroup(std::move(table));
}

std::vector<FieldElement> GaloisExtension::base_field_basis() const {
  const std::size_t n = field_->degree();
  RatMatrix stacked(0, n);
  for (auto g : subgroup_) stacked = stacked.vstack(field_->action_matrix(g) - RatMatrix::identity(n));
  const RatMatrix ns = nullspace(stacked);
  std::vector<FieldElement> out;
  for (std::size_t j = 0; j < ns.cols(); ++j) out.push_back(FieldElement{ns.column(j)});
  return out;
}

bool GaloisExtension::in_base_field(const FieldElement& x) const {
  for (std::size_t a = 0; a < group_.order(); ++a)
    if (!(act(a, x) == x)) return false;
  return true;
}

}  // namespace gforms
