#include "gforms/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace gforms {

namespace mp = boost::multiprecision;

// ---------------------------------------------------------------------------
// FiniteAbelianGroup
// ---------------------------------------------------------------------------

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(std::span<const Integer> orders) {
  std::vector<Integer> diag;
  std::size_t free = 0;
  for (const auto& d : orders) {
    if (d < 0) throw InputError("negative cyclic order");
    if (d == 0)
      ++free;
    else if (d != 1)
      diag.push_back(d);
  }
  FiniteAbelianGroup g;
  g.free_rank = free;
  if (diag.empty()) return g;
  const auto snf = smith_normal_form(IntMatrix::diagonal(diag));
  for (const auto& d : snf.diagonal())
    if (d != 1) g.invariant_factors.push_back(d);
  return g;
}

Integer FiniteAbelianGroup::torsion_order() const {
  Integer n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

Integer FiniteAbelianGroup::exponent() const {
  if (free_rank > 0) return 0;
  return invariant_factors.empty() ? Integer(1) : invariant_factors.back();
}

std::string to_string(const FiniteAbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& d : g.invariant_factors) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  for (std::size_t i = 0; i < g.free_rank; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
  return d;
}

namespace {

struct SmithWork {
  IntMatrix a;
  IntMatrix u;
  IntMatrix v;
  IntMatrix u_inv;
  bool track_u;
  bool track_v;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (track_u) {
      u.swap_rows(i, j);
      u_inv.swap_cols(i, j);
    }
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (track_v) v.swap_cols(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    if (track_u) {
      u.add_row_multiple(dst, src, f);
      u_inv.add_col_multiple(src, dst, -f);
    }
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    if (track_v) v.add_col_multiple(dst, src, f);
  }
  void negate_row(std::size_t r) {
    a.negate_row(r);
    if (track_u) {
      u.negate_row(r);
      for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv(i, r) = -u_inv(i, r);
    }
  }

  // Smallest nonzero |a(i,j)| with i,j >= t; lowest row, then column, wins ties.
  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        const Integer& x = a(i, j);
        if (x == 0) continue;
        Integer ax = mp::abs(x);
        if (!found || ax < best) {
          best = ax;
          pr = i;
          pc = j;
          found = true;
        }
      }
    return found;
  }

  void run() {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(t, pr, pc)) break;
      for (;;) {
        swap_rows(t, pr);
        swap_cols(t, pc);
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a(i, t) == 0) continue;
          Integer q = a(i, t) / a(t, t);
          add_row(i, t, -q);
          if (a(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a(t, j) == 0) continue;
          Integer q = a(t, j) / a(t, t);
          add_col(j, t, -q);
          if (a(t, j) != 0) clean = false;
        }
        if (clean) {
          // Divisibility: fold in any row whose entry the pivot does not divide.
          std::size_t bad_row = m;
          for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
              if (a(i, j) % a(t, t) != 0) {
                bad_row = i;
                break;
              }
          if (bad_row == m) break;
          add_row(t, bad_row, Integer(1));
        }
        find_pivot(t, pr, pc);
      }
      if (a(t, t) < 0) negate_row(t);
    }
  }
};

SmithForm smith_impl(const IntMatrix& m, bool track_u, bool track_v) {
  SmithWork w{m, track_u ? IntMatrix::identity(m.rows()) : IntMatrix(),
              track_v ? IntMatrix::identity(m.cols()) : IntMatrix(),
              track_u ? IntMatrix::identity(m.rows()) : IntMatrix(), track_u, track_v};
  w.run();
  SmithForm out;
  out.S = std::move(w.a);
  out.U = std::move(w.u);
  out.V = std::move(w.v);
  out.U_inverse = std::move(w.u_inv);
  std::size_t r = 0;
  while (r < std::min(out.S.rows(), out.S.cols()) && out.S(r, r) != 0) ++r;
  out.rank = r;
  return out;
}

void check_action(std::size_t rank, std::span<const IntMatrix> action) {
  for (const auto& g : action) {
    if (g.rows() != rank || g.cols() != rank) throw InputError("action matrix has wrong shape");
    const Integer d = determinant(g);
    if (d != 1 && d != -1) throw DomainError("action matrix is not a lattice automorphism (det " + d.str() + ")");
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return smith_impl(m, true, true); }

IntVector Cokernel::coordinates(const IntVector& v) const {
  IntVector c = projection * v;
  for (std::size_t i = 0; i < group.invariant_factors.size(); ++i)
    c[i] = floor_mod(c[i], group.invariant_factors[i]);
  return c;
}

Cokernel cokernel(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const SmithForm snf = smith_impl(m, true, false);
  std::vector<std::size_t> torsion_rows;
  Cokernel out;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    if (snf.S(i, i) == 1) continue;
    torsion_rows.push_back(i);
    out.group.invariant_factors.push_back(snf.S(i, i));
  }
  out.group.free_rank = n - snf.rank;
  std::vector<std::size_t> kept = torsion_rows;
  for (std::size_t i = snf.rank; i < n; ++i) kept.push_back(i);

  const IntMatrix& u_inv = snf.U_inverse;
  out.projection = IntMatrix(kept.size(), n);
  out.generators = IntMatrix(n, kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) {
      out.projection(k, j) = snf.U(kept[k], j);
      out.generators(j, k) = u_inv(j, kept[k]);
    }
  return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw InputError("right-hand side has wrong length");
  const SmithForm snf = smith_normal_form(a);
  const IntVector c = snf.U * b;
  IntVector y(a.cols(), Integer(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf.rank) {
      if (c[i] % snf.S(i, i) != 0) return std::nullopt;
      y[i] = c[i] / snf.S(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * y;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm snf = smith_impl(m, false, true);
  return snf.V.select_columns(snf.rank, m.cols() - snf.rank);
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Cokernel coinvariants(std::size_t rank, std::span<const IntMatrix> action) {
  check_action(rank, action);
  IntMatrix relations(rank, 0);
  const IntMatrix id = IntMatrix::identity(rank);
  for (const auto& g : action) relations = relations.hstack(g - id);
  return cokernel(relations);
}

Sublattice fixed_sublattice(std::size_t rank, std::span<const IntMatrix> action) {
  check_action(rank, action);
  IntMatrix stacked(0, rank);
  const IntMatrix id = IntMatrix::identity(rank);
  for (const auto& g : action) stacked = stacked.vstack(g - id);
  return Sublattice{rank, integer_kernel(stacked)};
}

std::size_t moved_span_rank(std::size_t rank, std::span<const IntMatrix> action) {
  check_action(rank, action);
  IntMatrix relations(rank, 0);
  const IntMatrix id = IntMatrix::identity(rank);
  for (const auto& g : action) relations = relations.hstack(g - id);
  return gforms::rank(to_rational(relations));
}

// ---------------------------------------------------------------------------
// ℚ-linear algebra
// ---------------------------------------------------------------------------

RowEchelon rref(RatMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

RatMatrix nullspace(const RatMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return RatMatrix::from_columns(m.cols(), basis);
}

Rational determinant(const RatMatrix& input) {
  if (input.rows() != input.cols()) throw InputError("determinant of non-square matrix");
  RatMatrix a = input;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const RowEchelon e = rref(m.hstack(RatMatrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.select_columns(n, n);
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw InputError("solve: shape mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = rref(std::move(aug));
  RatVector x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

}  // namespace gforms
