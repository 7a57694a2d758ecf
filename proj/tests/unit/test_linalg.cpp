#include <gtest/gtest.h>

#include "gforms/error.hpp"
#include "gforms/linalg.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace gforms;
namespace oc = gforms::oracle;

namespace {

IntMatrix random_matrix(std::mt19937_64& g, std::size_t r, std::size_t c, long long bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = testkit::uniform(g, -bound, bound);
  return m;
}

oc::Table to_table(const IntMatrix& m) {
  oc::Table t(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t[i][j] = static_cast<long long>(m(i, j));
  return t;
}

oc::Table columns(const IntMatrix& m) { return to_table(m.transpose()); }

}  // namespace

TEST(Numbers, RationalTextRoundTrip) {
  for (const char* s : {"0", "7", "-3", "2/3", "-5/12"}) EXPECT_EQ(to_string(parse_rational(s)), s);
  EXPECT_EQ(to_string(parse_rational("4/6")), "2/3");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
  EXPECT_THROW(parse_integer("3/4"), InputError);
}

TEST(Numbers, FloorDivision) {
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_mod(-7, 2), 1);
  EXPECT_EQ(mod64(-1, 5), 4);
}

TEST(SmithNormalForm, KnownExample) {
  const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto s = smith_normal_form(m);
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(s.rank, 3u);
}

TEST(SmithNormalForm, RandomMatricesSatisfyDefinition) {
  auto g = testkit::rng("snf");
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(testkit::uniform(g, 1, 5));
    const auto c = static_cast<std::size_t>(testkit::uniform(g, 1, 5));
    const IntMatrix m = random_matrix(g, r, c, 6);
    const auto s = smith_normal_form(m);
    ASSERT_EQ(s.U * m * s.V, s.S);
    ASSERT_EQ(abs(determinant(s.U)), 1);
    ASSERT_EQ(abs(determinant(s.V)), 1);
    ASSERT_EQ(s.U * s.U_inverse, IntMatrix::identity(r));
    const auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i + 1] != 0) {
        ASSERT_EQ(d[i + 1] % d[i], 0);
      }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) {
          ASSERT_EQ(s.S(i, j), 0);
        }
    std::vector<long long> nonzero;
    for (const auto& x : d)
      if (x > 1) nonzero.push_back(static_cast<long long>(x));
    ASSERT_EQ(nonzero, oc::invariant_factors(to_table(m)));
  }
}

TEST(SmithNormalForm, Reproducible) {
  const IntMatrix m{{3, 1}, {1, 3}};
  const auto a = smith_normal_form(m), b = smith_normal_form(m);
  EXPECT_EQ(a.U, b.U);
  EXPECT_EQ(a.V, b.V);
}

TEST(Cokernel, AgreesWithEnumeration) {
  auto g = testkit::rng("cokernel");
  int checked = 0;
  while (checked < 150) {
    const auto r = static_cast<std::size_t>(testkit::uniform(g, 1, 3));
    const auto c = static_cast<std::size_t>(testkit::uniform(g, 1, 4));
    const IntMatrix m = random_matrix(g, r, c, 3);
    const auto q = cokernel(m);
    for (long long n = 1; n <= 12; ++n) {
      Integer expected = 1;
      for (const auto& d : q.group.invariant_factors) expected *= gcd(d, Integer(n));
      for (std::size_t i = 0; i < q.group.free_rank; ++i) expected *= n;
      ASSERT_EQ(expected, oc::quotient_order_mod(r, columns(m), n)) << "n = " << n;
    }
    // Columns of M map to zero.
    for (std::size_t j = 0; j < c; ++j) {
      const auto coords = q.coordinates(m.column(j));
      for (const auto& x : coords) ASSERT_EQ(x, 0);
    }
    ++checked;
  }
}

TEST(FiniteAbelianGroup, NormalizesCyclicOrders) {
  const std::vector<Integer> orders{6, 4, 1, 0};
  const auto g = FiniteAbelianGroup::from_cyclic_orders(orders);
  EXPECT_EQ(g.invariant_factors, (std::vector<Integer>{2, 12}));
  EXPECT_EQ(g.free_rank, 1u);
  EXPECT_EQ(to_string(FiniteAbelianGroup{}), "0");
}

TEST(IntegerSolve, FindsSolutionsExactly) {
  auto g = testkit::rng("solve-int");
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = random_matrix(g, 3, 4, 5);
    IntVector x(4);
    for (auto& v : x) v = testkit::uniform(g, -4, 4);
    const IntVector b = a * x;
    const auto sol = solve_integer(a, b);
    ASSERT_TRUE(sol.has_value());
    ASSERT_EQ(a * *sol, b);
  }
  EXPECT_FALSE(solve_integer(IntMatrix{{2}}, IntVector{Integer(1)}).has_value());
}

TEST(IntegerKernel, IsSaturatedKernel) {
  auto g = testkit::rng("kernel");
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = random_matrix(g, 2, 4, 4);
    const auto k = integer_kernel(a);
    ASSERT_TRUE((a * k).is_zero());
    std::vector<Rational> entries(a.data().begin(), a.data().end());
    ASSERT_EQ(k.cols(), 4 - rank(RatMatrix(a.rows(), a.cols(), std::move(entries))));
    // Saturated: Z^4 / span(kernel) is torsion-free.
    if (k.cols() > 0) {
      const auto q = cokernel(k);
      ASSERT_TRUE(q.group.invariant_factors.empty());
    }
  }
}

TEST(Coinvariants, TrivialActionGivesLattice) {
  const std::vector<IntMatrix> action{IntMatrix::identity(3)};
  const auto c = coinvariants(3, action);
  EXPECT_EQ(c.group.free_rank, 3u);
  EXPECT_TRUE(c.group.invariant_factors.empty());
  EXPECT_EQ(fixed_sublattice(3, action).rank(), 3u);
  EXPECT_EQ(moved_span_rank(3, action), 0u);
}

TEST(Coinvariants, SwapAndNegation) {
  const std::vector<IntMatrix> swap{IntMatrix::identity(2), IntMatrix{{0, 1}, {1, 0}}};
  const auto c = coinvariants(2, swap);
  EXPECT_EQ(c.group.free_rank, 1u);
  EXPECT_TRUE(c.group.invariant_factors.empty());
  const std::vector<IntMatrix> neg{IntMatrix::identity(1), IntMatrix{{-1}}};
  const auto n = coinvariants(1, neg);
  EXPECT_EQ(n.group.invariant_factors, (std::vector<Integer>{2}));
  EXPECT_EQ(n.group.free_rank, 0u);
  EXPECT_THROW(coinvariants(1, std::vector<IntMatrix>{IntMatrix{{2}}}), DomainError);
}

TEST(Coinvariants, RankAdditivityOnRandomInvolutions) {
  auto g = testkit::rng("additivity");
  for (int trial = 0; trial < 60; ++trial) {
    // P·diag(±1)·P⁻¹ with a unimodular P gives an involution.
    IntMatrix p = IntMatrix::identity(3);
    for (int k = 0; k < 4; ++k) {
      const auto i = static_cast<std::size_t>(testkit::uniform(g, 0, 2));
      const auto j = static_cast<std::size_t>(testkit::uniform(g, 0, 2));
      if (i != j) p.add_row_multiple(i, j, testkit::uniform(g, -2, 2));
    }
    const auto sp = smith_normal_form(p);  // U·P·V = I, so P⁻¹ = V·U
    const IntMatrix pinv = sp.V * sp.U;
    IntMatrix d = IntMatrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i)
      if (testkit::uniform(g, 0, 1)) d(i, i) = -1;
    const IntMatrix inv = p * d * pinv;
    const std::vector<IntMatrix> action{IntMatrix::identity(3), inv};
    ASSERT_EQ(fixed_sublattice(3, action).rank() + moved_span_rank(3, action), 3u);
  }
}

TEST(RationalLinearAlgebra, InverseAndNullspace) {
  const RatMatrix m{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  const auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, RatMatrix::identity(2));
  EXPECT_EQ(determinant(m), -2);
  const RatMatrix s{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  EXPECT_FALSE(inverse(s).has_value());
  const auto ns = nullspace(s);
  ASSERT_EQ(ns.cols(), 1u);
  EXPECT_TRUE((s * ns).is_zero());
  EXPECT_FALSE(solve(s, RatVector{Rational(1), Rational(0)}).has_value());
}
