#include <gtest/gtest.h>

#include <memory>

#include "gforms/crossed_product.hpp"
#include "gforms/error.hpp"
#include "gforms/hilbert.hpp"
#include "gforms/linalg.hpp"
#include "samples.hpp"
#include "test_support.hpp"

using namespace gforms;
using gforms::testkit::random_nonzero;
using gforms::testkit::random_rational;

namespace {

GaloisExtension full(GaloisField k) { return GaloisExtension(std::make_shared<const GaloisField>(std::move(k))); }

// ζ(a,b)·ζ(ab,c) = a(ζ(b,c))·ζ(a,bc), written out from the group table.
bool cocycle_identity(const GaloisExtension& ext, const FieldCochain2& z) {
  const auto& k = ext.field();
  const auto& gal = ext.group();
  const std::size_t n = gal.order();
  for (const auto& v : z)
    if (k.is_zero(v)) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto lhs = k.mul(z[a * n + b], z[gal.mul(a, b) * n + c]);
        const auto rhs = k.mul(ext.act(a, z[b * n + c]), z[a * n + gal.mul(b, c)]);
        if (!(lhs == rhs)) return false;
      }
  return true;
}

AlgebraElement random_algebra_element(const CrossedProductAlgebra& a, std::mt19937_64& g) {
  AlgebraElement x = a.zero();
  for (auto& c : x.coords) c = Rational(testkit::uniform(g, -4, 4), testkit::uniform(g, 1, 3));
  return x;
}

FieldCochain1 random_cochain1(const GaloisExtension& ext, std::mt19937_64& g) {
  FieldCochain1 b;
  for (std::size_t a = 0; a < ext.group().order(); ++a) b.push_back(random_nonzero(ext.field(), g, 3));
  return b;
}

// Grid search for x² − d·y² = c with x = u/t, y = v/t.
bool norm_found_on_grid(long long d, const Rational& c) {
  const long long p = static_cast<long long>(numerator(c)), q = static_cast<long long>(denominator(c));
  for (long long t = 1; t <= 6; ++t)
    for (long long u = -24; u <= 24; ++u)
      for (long long v = -24; v <= 24; ++v)
        if (q * (u * u - d * v * v) == p * t * t) return true;
  return false;
}

CrossedProductAlgebra quaternion(long long d, const Rational& c) {
  auto ext = full(GaloisField::quadratic(d));
  const CyclicNormClasses nc(ext);
  return CrossedProductAlgebra::build(ext, nc.cocycle_from_element(ext.field().from_rational(c)));
}

}  // namespace

TEST(CrossedProduct, MultiplicationRules) {
  const auto ext = full(GaloisField::cyclotomic(5));
  const auto& k = ext.field();
  const CyclicNormClasses nc(ext);
  const auto a = CrossedProductAlgebra::build(ext, nc.cocycle_from_element(k.from_rational(3)));
  EXPECT_EQ(a.dimension(), 16u);
  auto g = testkit::rng("crossed-rules");
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_algebra_element(a, g), y = random_algebra_element(a, g), z = random_algebra_element(a, g);
    ASSERT_EQ(a.multiply(a.multiply(x, y), z), a.multiply(x, a.multiply(y, z)));
    ASSERT_EQ(a.multiply(a.one(), x), x);
    ASSERT_EQ(a.multiply(x, a.one()), x);
  }
  for (std::size_t s = 0; s < ext.group().order(); ++s) {
    const auto lambda = random_nonzero(k, g);
    EXPECT_EQ(a.multiply(a.monomial(s, k.one()), a.monomial(ext.group().identity(), lambda)),
              a.monomial(s, ext.act(s, lambda)));
    for (std::size_t t = 0; t < ext.group().order(); ++t)
      EXPECT_EQ(a.multiply(a.monomial(s, k.one()), a.monomial(t, k.one())),
                a.monomial(ext.group().mul(s, t), a.cocycle()[s * 4 + t]));
  }
}

TEST(CrossedProduct, BuildAcceptsExactlyTheCocycles) {
  auto g = testkit::rng("crossed-build");
  for (long long d : {-1, 2, -3}) {
    const auto ext = full(GaloisField::quadratic(d));
    const auto& k = ext.field();
    const CyclicNormClasses nc(ext);
    for (int trial = 0; trial < 20; ++trial) {
      auto z = multiply_cochains(ext, nc.cocycle_from_element(k.from_rational(random_rational(g, 9))),
                                 coboundary_of(ext, random_cochain1(ext, g)));
      ASSERT_TRUE(cocycle_identity(ext, z));
      EXPECT_NO_THROW(CrossedProductAlgebra::build(ext, z));
      const std::size_t slot = static_cast<std::size_t>(testkit::uniform(g, 0, 3));
      z[slot] = k.mul(z[slot], random_nonzero(k, g));
      if (cocycle_identity(ext, z))
        EXPECT_NO_THROW(CrossedProductAlgebra::build(ext, z));
      else
        EXPECT_THROW(CrossedProductAlgebra::build(ext, z), DomainError);
    }
  }
}

TEST(CrossedProduct, CentralSimple) {
  for (long long d : {-1, 2, -3, 5}) {
    const auto a = quaternion(d, 7);
    const auto r = central_simple_report(a);
    EXPECT_EQ(r.center_dimension, 1u);
    EXPECT_EQ(r.base_degree, 1u);
    EXPECT_TRUE(r.central_simple());
  }
  const auto c5 = full(GaloisField::cyclotomic(5));
  const CyclicNormClasses nc(c5);
  EXPECT_TRUE(is_central_simple(CrossedProductAlgebra::build(c5, nc.cocycle_from_element(c5.field().from_rational(2)))));

  const auto klein = full(GaloisField::cyclotomic(8));
  const auto trivial = CrossedProductAlgebra::build(klein, trivial_cochain(klein));
  EXPECT_EQ(trivial.dimension(), 16u);
  EXPECT_TRUE(is_central_simple(trivial));

  auto k8 = std::make_shared<const GaloisField>(GaloisField::cyclotomic(8));
  std::size_t conj = 0;
  for (std::size_t s = 0; s < k8->degree(); ++s)
    if (k8->automorphism_label(s) == 7) conj = s;
  const GaloisExtension rel(k8, {0, conj});
  const auto a = CrossedProductAlgebra::build(rel, trivial_cochain(rel));
  const auto r = central_simple_report(a);
  EXPECT_EQ(a.dimension(), 8u);
  EXPECT_EQ(r.base_degree, 2u);
  EXPECT_EQ(r.center_dimension, 2u);
  EXPECT_TRUE(r.central_simple());
  EXPECT_EQ(center(a).size(), 2u);
}

TEST(Quaternions, HamiltonIsDivisionAlgebra) {
  const auto h = quaternion(-1, -1);
  const auto s = split_quaternion(h);
  EXPECT_FALSE(s.split);
  EXPECT_FALSE(s.zero_divisor.has_value());
  EXPECT_EQ(s.d, Integer(-1));
  EXPECT_EQ(s.c, Rational(-1));
  auto g = testkit::rng("hamilton");
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_algebra_element(h, g);
    if (h.is_zero(x)) continue;
    EXPECT_NE(determinant(h.left_multiplication(x)), 0);
  }
}

TEST(Quaternions, SplitCasesCarryZeroDivisors) {
  for (const auto& [d, c] : std::vector<std::pair<long long, long long>>{{-1, 1}, {2, 2}, {-1, 2}, {5, -1}}) {
    const auto a = quaternion(d, c);
    const auto s = split_quaternion(a);
    ASSERT_TRUE(s.split) << d << ", " << c;
    ASSERT_TRUE(s.zero_divisor.has_value());
    const auto& [x, y] = *s.zero_divisor;
    EXPECT_FALSE(a.is_zero(x));
    EXPECT_FALSE(a.is_zero(y));
    EXPECT_TRUE(a.is_zero(a.multiply(x, y)));
    EXPECT_EQ(determinant(a.left_multiplication(x)), 0);
  }
  EXPECT_THROW(split_quaternion(CrossedProductAlgebra::build(full(GaloisField::cyclotomic(5)),
                                                             trivial_cochain(full(GaloisField::cyclotomic(5))))),
               InputError);
}

TEST(Quaternions, SplittingAgreesWithNormsAndUnits) {
  auto g = testkit::rng("quaternion-split");
  const long long ds[] = {-1, 2, -2, 3, -3, 5, 6, -7};
  for (int trial = 0; trial < 100; ++trial) {
    const long long d = ds[testkit::uniform(g, 0, 7)];
    const Rational c = random_rational(g, 12);
    const auto a = quaternion(d, c);
    const bool split = is_split_quaternion(a);
    EXPECT_EQ(split, is_norm_quadratic(d, c));
    EXPECT_EQ(split, brauer_class_quaternion(d, c).is_split());
    if (norm_found_on_grid(d, c)) {
      EXPECT_TRUE(split) << d << ", " << c;
    }
    if (!split) {
      for (int i = 0; i < 3; ++i) {
        const auto x = random_algebra_element(a, g);
        if (!a.is_zero(x)) {
          EXPECT_NE(determinant(a.left_multiplication(x)), 0);
        }
      }
    } else if (auto s = split_quaternion(a); s.zero_divisor) {
      EXPECT_TRUE(a.is_zero(a.multiply(s.zero_divisor->first, s.zero_divisor->second)));
    }
  }
}

TEST(CoboundaryIsomorphism, ScalesBasisByInverse) {
  const auto ext = full(GaloisField::quadratic(-1));
  const auto& k = ext.field();
  const std::size_t s = CyclicNormClasses(ext).generator();
  const std::size_t e = ext.group().identity();
  FieldCochain1 b(2, k.one());
  b[s] = k.from_rational(2);
  const auto z = trivial_cochain(ext);
  const auto zp = multiply_cochains(ext, z, coboundary_of(ext, b));
  EXPECT_EQ(zp[s * 2 + s], k.from_rational(4));
  const auto from = CrossedProductAlgebra::build(ext, z);
  const auto to = CrossedProductAlgebra::build(ext, zp);
  const auto phi = coboundary_isomorphism(from, to, b);
  EXPECT_EQ(phi.apply(from.monomial(s, k.one())), to.monomial(s, k.from_rational(Rational(1, 2))));
  EXPECT_EQ(phi.apply(from.monomial(e, k.generator())), to.monomial(e, k.generator()));
  EXPECT_THROW(coboundary_isomorphism(to, from, b), DomainError);
}

TEST(CoboundaryIsomorphism, HomomorphismOnRandomElements) {
  auto g = testkit::rng("coboundary-iso");
  for (auto field : {GaloisField::quadratic(-3), GaloisField::cyclotomic(5)}) {
    const auto ext = full(std::move(field));
    const CyclicNormClasses nc(ext);
    const auto z = nc.cocycle_from_element(ext.field().from_rational(random_rational(g, 7)));
    const auto b = random_cochain1(ext, g);
    const auto from = CrossedProductAlgebra::build(ext, z);
    const auto to = CrossedProductAlgebra::build(ext, multiply_cochains(ext, z, coboundary_of(ext, b)));
    const auto phi = coboundary_isomorphism(from, to, b);
    EXPECT_EQ(phi.apply(from.one()), to.one());
    EXPECT_NE(determinant(phi.matrix), 0);
    for (int trial = 0; trial < 5; ++trial) {
      const auto x = random_algebra_element(from, g), y = random_algebra_element(from, g);
      ASSERT_EQ(phi.apply(from.multiply(x, y)), to.multiply(phi.apply(x), phi.apply(y)));
    }
  }
}

TEST(CoboundaryIsomorphism, ComposesAlongChains) {
  auto g = testkit::rng("coboundary-chain");
  const auto ext = full(GaloisField::cyclotomic(5));
  const auto& k = ext.field();
  const CyclicNormClasses nc(ext);
  std::vector<FieldCochain2> zs{nc.cocycle_from_element(k.from_rational(5))};
  std::vector<FieldCochain1> bs;
  for (int step = 0; step < 3; ++step) {
    bs.push_back(random_cochain1(ext, g));
    zs.push_back(multiply_cochains(ext, zs.back(), coboundary_of(ext, bs.back())));
  }
  std::vector<CrossedProductAlgebra> algebras;
  for (const auto& z : zs) algebras.push_back(CrossedProductAlgebra::build(ext, z));
  RatMatrix composed = RatMatrix::identity(algebras[0].dimension());
  FieldCochain1 product(ext.group().order(), k.one());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    composed = coboundary_isomorphism(algebras[i], algebras[i + 1], bs[i]).matrix * composed;
    for (std::size_t a = 0; a < product.size(); ++a) product[a] = k.mul(product[a], bs[i][a]);
    EXPECT_EQ(composed, coboundary_isomorphism(algebras[0], algebras[i + 1], product).matrix);
  }
}

TEST(CocycleSums, ClassOfProductIsSumOfClasses) {
  const auto ext = full(GaloisField::quadratic(-1));
  const auto& k = ext.field();
  const CyclicNormClasses nc(ext);
  const auto of = [&](long long c) { return nc.cocycle_from_element(k.from_rational(c)); };
  EXPECT_TRUE(cocycle_sum_class_check(ext, of(-1), of(3), of(-3)));
  EXPECT_TRUE(cocycle_sum_class_check(ext, of(-1), of(-1), of(1)));
  EXPECT_TRUE(cocycle_sum_class_check(ext, of(-1), of(3), of(-75)));  // −75 = −3·5²
  EXPECT_FALSE(cocycle_sum_class_check(ext, of(-1), of(3), of(3)));
  FieldCochain2 bad = of(1);
  bad[3] = k.generator();
  EXPECT_THROW(cocycle_sum_class_check(ext, bad, of(1), of(1)), DomainError);
}
