#include "gforms/crossed_product.hpp"

#include <cstdlib>
#include <string>

#include "gforms/error.hpp"
#include "gforms/hilbert.hpp"

namespace gforms {

CrossedProductAlgebra::CrossedProductAlgebra(GaloisExtension ext, FieldCochain2 zeta)
    : ext_(std::move(ext)), zeta_(std::move(zeta)) {
  dim_ = ext_.group().order() * ext_.field().degree();
}

CrossedProductAlgebra CrossedProductAlgebra::build(GaloisExtension ext, const FieldCochain2& zeta) {
  const std::size_t n = ext.group().order();
  if (zeta.size() != n * n) throw InputError("cocycle table needs |Γ|² entries");
  for (const auto& v : zeta) {
    ext.field().check(v);
    if (ext.field().is_zero(v)) throw DomainError("cocycle takes the value zero");
  }
  FieldCochain2 normalized = normalize(ext, zeta);
  CrossedProductAlgebra alg(std::move(ext), std::move(normalized));
  const FieldElement one = alg.ext_.field().one();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const AlgebraElement ea = alg.monomial(a, one), eb = alg.monomial(b, one), ec = alg.monomial(c, one);
        if (!(alg.multiply(alg.multiply(ea, eb), ec) == alg.multiply(ea, alg.multiply(eb, ec))))
          throw DomainError("not a 2-cocycle: (e_" + std::to_string(a) + " e_" + std::to_string(b) + ") e_" +
                            std::to_string(c) + " != e_" + std::to_string(a) + " (e_" + std::to_string(b) +
                            " e_" + std::to_string(c) + ")");
      }
  return alg;
}

void CrossedProductAlgebra::check_element(const AlgebraElement& x) const {
  if (x.coords.size() != dim_)
    throw InputError("algebra element has " + std::to_string(x.coords.size()) + " coordinates, expected " +
                     std::to_string(dim_));
}

AlgebraElement CrossedProductAlgebra::zero() const { return {RatVector(dim_, Rational(0))}; }

AlgebraElement CrossedProductAlgebra::one() const {
  return monomial(ext_.group().identity(), ext_.field().one());
}

AlgebraElement CrossedProductAlgebra::basis(std::size_t index) const {
  AlgebraElement x = zero();
  x.coords.at(index) = 1;
  return x;
}

AlgebraElement CrossedProductAlgebra::monomial(std::size_t a, const FieldElement& lambda) const {
  ext_.field().check(lambda);
  AlgebraElement x = zero();
  const std::size_t d = degree();
  for (std::size_t i = 0; i < d; ++i) x.coords[a * d + i] = lambda.coords[i];
  return x;
}

FieldElement CrossedProductAlgebra::component(const AlgebraElement& x, std::size_t a) const {
  check_element(x);
  const std::size_t d = degree();
  return {RatVector(x.coords.begin() + static_cast<std::ptrdiff_t>(a * d),
                    x.coords.begin() + static_cast<std::ptrdiff_t>((a + 1) * d))};
}

AlgebraElement CrossedProductAlgebra::add(const AlgebraElement& x, const AlgebraElement& y) const {
  check_element(x);
  check_element(y);
  AlgebraElement z = x;
  for (std::size_t i = 0; i < dim_; ++i) z.coords[i] += y.coords[i];
  return z;
}

AlgebraElement CrossedProductAlgebra::sub(const AlgebraElement& x, const AlgebraElement& y) const {
  check_element(x);
  check_element(y);
  AlgebraElement z = x;
  for (std::size_t i = 0; i < dim_; ++i) z.coords[i] -= y.coords[i];
  return z;
}

AlgebraElement CrossedProductAlgebra::scale(const Rational& q, const AlgebraElement& x) const {
  check_element(x);
  AlgebraElement z = x;
  for (auto& c : z.coords) c *= q;
  return z;
}

AlgebraElement CrossedProductAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  check_element(x);
  check_element(y);
  const GaloisField& k = ext_.field();
  const FiniteGroup& g = ext_.group();
  const std::size_t n = g.order();
  const std::size_t d = degree();
  AlgebraElement z = zero();
  for (std::size_t a = 0; a < n; ++a) {
    const FieldElement la = component(x, a);
    if (k.is_zero(la)) continue;
    for (std::size_t b = 0; b < n; ++b) {
      const FieldElement mb = component(y, b);
      if (k.is_zero(mb)) continue;
      const FieldElement t = k.mul(k.mul(la, ext_.act(a, mb)), zeta_[a * n + b]);
      const std::size_t ab = g.mul(a, b);
      for (std::size_t i = 0; i < d; ++i) z.coords[ab * d + i] += t.coords[i];
    }
  }
  return z;
}

bool CrossedProductAlgebra::is_zero(const AlgebraElement& x) const {
  check_element(x);
  for (const auto& c : x.coords)
    if (c != 0) return false;
  return true;
}

RatMatrix CrossedProductAlgebra::left_multiplication(const AlgebraElement& x) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const AlgebraElement col = multiply(x, basis(j));
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col.coords[i];
  }
  return m;
}

RatMatrix CrossedProductAlgebra::right_multiplication(const AlgebraElement& x) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const AlgebraElement col = multiply(basis(j), x);
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col.coords[i];
  }
  return m;
}

std::vector<RatVector> CrossedProductAlgebra::structure_constants() const {
  std::vector<RatVector> out;
  out.reserve(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out.push_back(multiply(basis(i), basis(j)).coords);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// e_a for every a together with K·e_1 generate A as a ring.
std::vector<AlgebraElement> ring_generators(const CrossedProductAlgebra& a) {
  std::vector<AlgebraElement> gens;
  const GaloisField& k = a.extension().field();
  for (std::size_t g = 0; g < a.extension().group().order(); ++g) gens.push_back(a.monomial(g, k.one()));
  for (std::size_t i = 0; i < k.degree(); ++i)
    gens.push_back(a.monomial(a.extension().group().identity(), k.basis(i)));
  return gens;
}

}  // namespace

std::vector<AlgebraElement> center(const CrossedProductAlgebra& a) {
  const std::size_t dim = a.dimension();
  RatMatrix system(0, dim);
  for (const auto& g : ring_generators(a)) system = system.vstack(a.right_multiplication(g) - a.left_multiplication(g));
  const RatMatrix basis = nullspace(system);
  std::vector<AlgebraElement> out;
  for (std::size_t j = 0; j < basis.cols(); ++j) out.push_back({basis.column(j)});
  return out;
}

CentralSimpleReport central_simple_report(const CrossedProductAlgebra& a, std::optional<std::size_t> base_degree) {
  CentralSimpleReport r;
  r.center_dimension = center(a).size();
  r.base_degree = base_degree.value_or(a.extension().base_degree());
  const std::size_t dim = a.dimension();
  RatVector trace(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const RatMatrix l = a.left_multiplication(a.basis(k));
    Rational t = 0;
    for (std::size_t i = 0; i < dim; ++i) t += l(i, i);
    trace[k] = t;
  }
  RatMatrix gram(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const AlgebraElement p = a.multiply(a.basis(i), a.basis(j));
      Rational s = 0;
      for (std::size_t k = 0; k < dim; ++k)
        if (p.coords[k] != 0) s += trace[k] * p.coords[k];
      gram(i, j) = s;
    }
  r.trace_form_determinant = determinant(gram);
  return r;
}

bool is_central_simple(const CrossedProductAlgebra& a) { return central_simple_report(a).central_simple(); }

namespace {

struct QuaternionData {
  std::size_t sigma = 0;
  Integer d = 0;
  Rational c = 0;
};

QuaternionData quaternion_data(const CrossedProductAlgebra& a) {
  const GaloisExtension& ext = a.extension();
  if (ext.group().order() != 2 || !ext.is_full() || ext.field().degree() != 2)
    throw InputError("not a quaternion crossed product over Q");
  CyclicNormClasses classes(ext);
  QuaternionData q;
  q.sigma = classes.generator();
  q.d = *classes.quadratic_parameter();
  q.c = ext.field().to_rational(a.cocycle()[q.sigma * 2 + q.sigma]);
  return q;
}

}  // namespace

QuaternionSplitting split_quaternion(const CrossedProductAlgebra& a, int search_bound) {
  const QuaternionData q = quaternion_data(a);
  QuaternionSplitting out;
  out.d = q.d;
  out.c = q.c;
  out.split = is_norm_quadratic(q.d, q.c);
  if (!out.split) return out;
  // N(w) = c gives (e_σ − w)(e_σ + σ(w)) = c − w·σ(w) = 0.
  const GaloisExtension& ext = a.extension();
  const GaloisField& k = ext.field();
  const std::size_t e = ext.group().identity();
  for (int den = 1; den <= 4 && !out.zero_divisor; ++den)
    for (int radius = 0; radius <= search_bound * den && !out.zero_divisor; ++radius)
      for (int u = -radius; u <= radius && !out.zero_divisor; ++u)
        for (int v = -radius; v <= radius; ++v) {
          if (std::max(std::abs(u), std::abs(v)) != radius) continue;
          FieldElement w = k.add(k.scale(Rational(u, den), k.basis(0)), k.scale(Rational(v, den), k.basis(1)));
          if (k.is_zero(w) || k.to_rational(k.mul(w, ext.act(q.sigma, w))) != q.c) continue;
          const AlgebraElement es = a.monomial(q.sigma, k.one());
          AlgebraElement x = a.sub(es, a.monomial(e, w));
          AlgebraElement y = a.add(es, a.monomial(e, ext.act(q.sigma, w)));
          if (!a.is_zero(a.multiply(x, y))) throw DomainError("zero-divisor witness failed to multiply to zero");
          out.zero_divisor = std::make_pair(std::move(x), std::move(y));
          break;
        }
  return out;
}

bool is_split_quaternion(const CrossedProductAlgebra& a) {
  const QuaternionData q = quaternion_data(a);
  return is_norm_quadratic(q.d, q.c);
}

AlgebraIsomorphism coboundary_isomorphism(const CrossedProductAlgebra& from, const CrossedProductAlgebra& to,
                                          const FieldCochain1& b) {
  const GaloisExtension& ext = from.extension();
  if (!(ext.field() == to.extension().field()) || ext.subgroup() != to.extension().subgroup())
    throw InputError("algebras are built over different extensions");
  const GaloisField& k = ext.field();
  const std::size_t n = ext.group().order();
  if (b.size() != n) throw InputError("coboundary datum needs one value per group element");
  for (const auto& v : b)
    if (k.is_zero(v)) throw DomainError("coboundary datum takes the value zero");
  // Both algebras hold normalized cocycles; b/b(1) connects them.
  const FieldElement scale = k.inv(b[ext.group().identity()]);
  FieldCochain1 bn;
  for (const auto& v : b) bn.push_back(k.mul(v, scale));
  if (!(multiply_cochains(ext, from.cocycle(), coboundary_of(ext, bn)) == to.cocycle()))
    throw DomainError("b does not connect the two cocycles");

  const std::size_t d = k.degree();
  const std::size_t dim = from.dimension();
  AlgebraIsomorphism iso{RatMatrix(dim, dim)};
  for (std::size_t a = 0; a < n; ++a) {
    const FieldElement binv = k.inv(bn[a]);
    for (std::size_t i = 0; i < d; ++i) {
      const AlgebraElement img = to.monomial(a, k.mul(k.basis(i), binv));
      for (std::size_t r = 0; r < dim; ++r) iso.matrix(r, a * d + i) = img.coords[r];
    }
  }
  if (!(iso.apply(from.one()) == to.one())) throw DomainError("isomorphism is not unital");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const AlgebraElement lhs = iso.apply(from.multiply(from.basis(i), from.basis(j)));
      const AlgebraElement rhs = to.multiply(iso.apply(from.basis(i)), iso.apply(from.basis(j)));
      if (!(lhs == rhs))
        throw DomainError("map is not multiplicative on basis pair (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
    }
  if (determinant(iso.matrix) == 0) throw DomainError("map is not bijective");
  return iso;
}

bool cocycle_sum_class_check(const GaloisExtension& ext, const FieldCochain2& zeta_alpha,
                             const FieldCochain2& zeta_beta, const FieldCochain2& zeta_sum) {
  for (const auto* z : {&zeta_alpha, &zeta_beta, &zeta_sum})
    if (!is_two_cocycle(ext, *z)) throw DomainError("input is not a 2-cocycle");
  CyclicNormClasses classes(ext);
  return classes.same_class(multiply_cochains(ext, zeta_alpha, zeta_beta), zeta_sum);
}

}  // namespace gforms
