#include "gforms/descent.hpp"

#include <string>

#include "gforms/error.hpp"

namespace gforms {

// ---------------------------------------------------------------------------
// Matrices over K

FieldMatrix FieldMatrix::zero(const GaloisField& k, std::size_t rows, std::size_t cols) {
  return {rows, cols, std::vector<FieldElement>(rows * cols, k.zero())};
}

FieldMatrix FieldMatrix::identity(const GaloisField& k, std::size_t n) {
  FieldMatrix m = zero(k, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

FieldMatrix multiply(const GaloisField& k, const FieldMatrix& x, const FieldMatrix& y) {
  if (x.cols != y.rows) throw InputError("matrix product shape mismatch");
  FieldMatrix out = FieldMatrix::zero(k, x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t t = 0; t < x.cols; ++t) {
      if (k.is_zero(x(i, t))) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out(i, j) = k.add(out(i, j), k.mul(x(i, t), y(t, j)));
    }
  return out;
}

FieldMatrix apply_automorphism(const GaloisField& k, std::size_t g, const FieldMatrix& x) {
  FieldMatrix out = x;
  for (auto& e : out.entries) e = k.apply(g, e);
  return out;
}

FieldMatrix scale(const GaloisField& k, const FieldElement& s, const FieldMatrix& x) {
  FieldMatrix out = x;
  for (auto& e : out.entries) e = k.mul(s, e);
  return out;
}

std::optional<FieldMatrix> inverse(const GaloisField& k, const FieldMatrix& x) {
  if (x.rows != x.cols) throw InputError("inverse of a non-square matrix");
  const std::size_t n = x.rows;
  FieldMatrix a = x;
  FieldMatrix inv = FieldMatrix::identity(k, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && k.is_zero(a(p, c))) ++p;
    if (p == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    const FieldElement s = k.inv(a(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = k.mul(s, a(c, j));
      inv(c, j) = k.mul(s, inv(c, j));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || k.is_zero(a(r, c))) continue;
      const FieldElement f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) = k.sub(a(r, j), k.mul(f, a(c, j)));
        inv(r, j) = k.sub(inv(r, j), k.mul(f, inv(c, j)));
      }
    }
  }
  return inv;
}

RatMatrix realize(const GaloisField& k, const FieldMatrix& x) {
  const std::size_t d = k.degree();
  RatMatrix out(x.rows * d, x.cols * d);
  for (std::size_t r = 0; r < x.rows; ++r)
    for (std::size_t c = 0; c < x.cols; ++c) {
      const RatMatrix m = k.multiplication_matrix(x(r, c));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out(r * d + i, c * d + j) = m(i, j);
    }
  return out;
}

namespace {

bool same_extension(const GaloisExtension& x, const GaloisExtension& y) {
  return x.field() == y.field() && x.subgroup() == y.subgroup();
}

// ℚ-matrix of a_V on coordinates j·deg + i.
RatMatrix semilinear_matrix(const SemilinearDatum& d, std::size_t a) {
  const GaloisField& k = d.ext.field();
  const std::size_t deg = k.degree();
  const std::size_t ainv = d.ext.group().inv(a);
  RatMatrix out(d.dim * deg, d.dim * deg);
  for (std::size_t j = 0; j < d.dim; ++j)
    for (std::size_t i = 0; i < deg; ++i) {
      const FieldElement t = d.ext.act(ainv, k.basis(i));
      for (std::size_t r = 0; r < d.dim; ++r) {
        const FieldElement v = k.mul(d.maps[a](r, j), t);
        for (std::size_t s = 0; s < deg; ++s) out(r * deg + s, j * deg + i) = v.coords[s];
      }
    }
  return out;
}

// ℚ-matrix of v ↦ λ·v on K^dim.
RatMatrix scalar_matrix(const GaloisField& k, std::size_t dim, const FieldElement& lambda) {
  const std::size_t deg = k.degree();
  const RatMatrix m = k.multiplication_matrix(lambda);
  RatMatrix out(dim * deg, dim * deg);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t r = 0; r < deg; ++r)
      for (std::size_t c = 0; c < deg; ++c) out(j * deg + r, j * deg + c) = m(r, c);
  return out;
}

bool is_identity(const RatMatrix& m) { return m == RatMatrix::identity(m.rows()); }

}  // namespace

// ---------------------------------------------------------------------------
// Data

std::vector<FieldElement> SemilinearDatum::apply(std::size_t a, const std::vector<FieldElement>& v) const {
  if (v.size() != dim) throw InputError("vector has wrong dimension");
  const GaloisField& k = ext.field();
  const std::size_t ainv = ext.group().inv(a);
  std::vector<FieldElement> out(dim, k.zero());
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) out[r] = k.add(out[r], k.mul(maps[a](r, c), ext.act(ainv, v[c])));
  return out;
}

bool same_datum(const SemilinearDatum& x, const SemilinearDatum& y) {
  return same_extension(x.ext, y.ext) && x.dim == y.dim && x.zeta == y.zeta && x.maps == y.maps;
}

std::optional<Violation> validate_datum(const SemilinearDatum& d) {
  const GaloisField& k = d.ext.field();
  const FiniteGroup& g = d.ext.group();
  const std::size_t n = g.order();
  if (d.maps.size() != n) return Violation{"need one map per group element", 0, 0};
  if (d.zeta.size() != n * n) return Violation{"cocycle table has wrong size", 0, 0};
  for (std::size_t a = 0; a < n; ++a) {
    const auto& m = d.maps[a];
    if (m.rows != d.dim || m.cols != d.dim || m.entries.size() != d.dim * d.dim)
      return Violation{"map has wrong shape", a, a};
    for (const auto& e : m.entries) k.check(e);
  }
  Triple t;
  if (!is_two_cocycle(d.ext, d.zeta, &t)) return Violation{"twist is not a 2-cocycle", t.a, t.b};
  if (!is_normalized(d.ext, d.zeta)) return Violation{"twist is not normalized", 0, 0};
  if (!(d.maps[g.identity()] == FieldMatrix::identity(k, d.dim)))
    return Violation{"identity element does not act as the identity", g.identity(), g.identity()};
  for (std::size_t a = 0; a < n; ++a)
    if (!inverse(k, d.maps[a])) return Violation{"map is not bijective", a, a};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = g.mul(a, b);
      const FieldMatrix lhs =
          multiply(k, d.maps[b], apply_automorphism(k, d.ext.global_index(g.inv(b)), d.maps[a]));
      const FieldMatrix rhs = scale(k, d.ext.act(g.inv(ab), d.zeta[a * n + b]), d.maps[ab]);
      if (!(lhs == rhs)) return Violation{"b_V o a_V != (ab)_V o zeta(a,b)", a, b};
    }
  return std::nullopt;
}

SemilinearDatum trivial_datum(const GaloisExtension& ext, std::size_t dim) {
  const std::size_t n = ext.group().order();
  return {ext, dim, trivial_cochain(ext), std::vector<FieldMatrix>(n, FieldMatrix::identity(ext.field(), dim))};
}

SemilinearDatum conjugate_datum(const SemilinearDatum& d, const FieldMatrix& g) {
  const GaloisField& k = d.ext.field();
  const auto ginv = inverse(k, g);
  if (!ginv || g.rows != d.dim) throw DomainError("conjugating matrix is singular or has wrong size");
  SemilinearDatum out = d;
  for (std::size_t a = 0; a < d.maps.size(); ++a) {
    const std::size_t ainv = d.ext.global_index(d.ext.group().inv(a));
    out.maps[a] = multiply(k, multiply(k, g, d.maps[a]), apply_automorphism(k, ainv, *ginv));
  }
  return out;
}

SemilinearDatum transport_datum(const SemilinearDatum& d, const FieldCochain1& b) {
  const GaloisField& k = d.ext.field();
  const std::size_t n = d.ext.group().order();
  if (b.size() != n) throw InputError("transport needs one value per group element");
  for (const auto& v : b)
    if (k.is_zero(v)) throw DomainError("transport value is zero");
  SemilinearDatum out = d;
  out.zeta = multiply_cochains(d.ext, d.zeta, coboundary_of(d.ext, b));
  for (std::size_t a = 0; a < n; ++a)
    out.maps[a] = scale(k, d.ext.act(d.ext.group().inv(a), b[a]), d.maps[a]);
  return out;
}

// ---------------------------------------------------------------------------
// Modules

RatMatrix AModule::action_of(const AlgebraElement& x) const {
  if (x.coords.size() != action.size()) throw InputError("algebra element has wrong length");
  RatMatrix out(dimension, dimension);
  for (std::size_t j = 0; j < action.size(); ++j) {
    if (x.coords[j] == 0) continue;
    const RatMatrix& r = action[j];
    for (std::size_t p = 0; p < dimension; ++p)
      for (std::size_t q = 0; q < dimension; ++q)
        if (r(p, q) != 0) out(p, q) += x.coords[j] * r(p, q);
  }
  return out;
}

std::optional<Violation> validate_module(const AModule& m) {
  if (!m.algebra) return Violation{"module has no algebra", 0, 0};
  const CrossedProductAlgebra& a = *m.algebra;
  if (m.action.size() != a.dimension()) return Violation{"need one action matrix per algebra basis element", 0, 0};
  for (std::size_t j = 0; j < m.action.size(); ++j)
    if (m.action[j].rows() != m.dimension || m.action[j].cols() != m.dimension)
      return Violation{"action matrix has wrong shape", j, j};
  if (!is_identity(m.action_of(a.one()))) return Violation{"unit does not act as the identity", 0, 0};
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j) {
      const RatMatrix lhs = m.action_of(a.multiply(a.basis(i), a.basis(j)));
      if (!(lhs == m.action[j] * m.action[i])) return Violation{"(v.x).y != v.(xy)", i, j};
    }
  return std::nullopt;
}

AModule regular_module(std::shared_ptr<const CrossedProductAlgebra> a) {
  AModule m{a, a->dimension(), {}};
  for (std::size_t j = 0; j < a->dimension(); ++j) m.action.push_back(a->right_multiplication(a->basis(j)));
  return m;
}

AModule to_module(const SemilinearDatum& d, std::shared_ptr<const CrossedProductAlgebra> a) {
  if (auto v = validate_datum(d)) throw DomainError("invalid descent datum: " + v->what);
  if (!a) a = std::make_shared<const CrossedProductAlgebra>(CrossedProductAlgebra::build(d.ext, d.zeta));
  if (!same_extension(a->extension(), d.ext) || !(a->cocycle() == d.zeta))
    throw InputError("algebra does not match the datum's extension and twist");
  const GaloisField& k = d.ext.field();
  const std::size_t deg = k.degree();
  AModule m{a, d.dim * deg, {}};
  std::vector<RatMatrix> semilinear;
  for (std::size_t g = 0; g < d.ext.group().order(); ++g) semilinear.push_back(semilinear_matrix(d, g));
  for (std::size_t g = 0; g < d.ext.group().order(); ++g)
    for (std::size_t i = 0; i < deg; ++i) m.action.push_back(semilinear[g] * scalar_matrix(k, d.dim, k.basis(i)));
  if (auto v = validate_module(m)) throw DomainError("module axiom fails: " + v->what);
  return m;
}

SemilinearDatum from_module(const AModule& m) {
  if (auto v = validate_module(m)) throw DomainError("invalid module: " + v->what);
  const CrossedProductAlgebra& a = *m.algebra;
  const GaloisExtension& ext = a.extension();
  const GaloisField& k = ext.field();
  const std::size_t deg = k.degree();
  const std::size_t e = ext.group().identity();
  if (m.dimension % deg != 0) throw DomainError("module dimension is not a multiple of [K:Q]");
  const std::size_t n = m.dimension / deg;

  std::vector<RatMatrix> scalars;
  for (std::size_t i = 0; i < deg; ++i) scalars.push_back(m.action_of(a.monomial(e, k.basis(i))));

  // Greedy K-basis among unit vectors.
  std::vector<std::size_t> chosen;
  RatMatrix span(m.dimension, 0);
  std::size_t span_rank = 0;
  for (std::size_t t = 0; t < m.dimension && chosen.size() < n; ++t) {
    RatVector u(m.dimension, Rational(0));
    u[t] = 1;
    RatMatrix trial = span.hstack(RatMatrix::from_columns(m.dimension, {u}));
    if (rank(trial) == span_rank) continue;
    chosen.push_back(t);
    std::vector<RatVector> cols;
    for (const auto& s : scalars) cols.push_back(s * u);
    span = span.hstack(RatMatrix::from_columns(m.dimension, cols));
    span_rank = rank(span);
  }
  if (span_rank != m.dimension) throw DomainError("module is not free over K");
  const auto p_inv = inverse(span);
  if (!p_inv) throw DomainError("K-basis is degenerate");

  SemilinearDatum d{ext, n, a.cocycle(), {}};
  for (std::size_t g = 0; g < ext.group().order(); ++g) {
    const RatMatrix rg = *p_inv * m.action_of(a.monomial(g, k.one())) * span;
    FieldMatrix mg = FieldMatrix::zero(k, n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < deg; ++s) mg(r, j).coords[s] = rg(r * deg + s, j * deg);
    d.maps.push_back(std::move(mg));
  }
  if (auto v = validate_datum(d)) throw DomainError("recovered datum is invalid: " + v->what);
  return d;
}

AModule pullback(const AModule& m, std::shared_ptr<const CrossedProductAlgebra> source,
                 const AlgebraIsomorphism& phi) {
  AModule out{source, m.dimension, {}};
  for (std::size_t j = 0; j < source->dimension(); ++j) out.action.push_back(m.action_of({phi.matrix.column(j)}));
  return out;
}

FixedSpace fixed_space(const SemilinearDatum& d) {
  if (auto v = validate_datum(d)) throw DomainError("invalid descent datum: " + v->what);
  if (!(d.zeta == trivial_cochain(d.ext))) throw DomainError("fixed space needs an untwisted datum");
  const std::size_t dim = d.dim * d.ext.field().degree();
  RatMatrix system(0, dim);
  for (std::size_t a = 0; a < d.ext.group().order(); ++a)
    system = system.vstack(semilinear_matrix(d, a) - RatMatrix::identity(dim));
  FixedSpace out;
  out.basis = nullspace(system);
  out.k_dimension = out.basis.cols() / d.ext.base_degree();
  return out;
}

std::vector<FieldMatrix> datum_morphisms(const SemilinearDatum& from, const SemilinearDatum& to) {
  if (!same_extension(from.ext, to.ext)) throw InputError("data live over different extensions");
  const GaloisField& k = from.ext.field();
  const FiniteGroup& g = from.ext.group();
  const std::size_t deg = k.degree();
  const std::size_t rows = to.dim, cols = from.dim;
  const std::size_t unknowns = rows * cols * deg;
  const std::size_t block = rows * cols * deg;
  RatMatrix system(g.order() * block, unknowns);
  auto unit = [&](std::size_t u) {
    FieldMatrix t = FieldMatrix::zero(k, rows, cols);
    t.entries[u / deg] = k.basis(u % deg);
    return t;
  };
  for (std::size_t u = 0; u < unknowns; ++u) {
    const FieldMatrix t = unit(u);
    for (std::size_t a = 0; a < g.order(); ++a) {
      const FieldMatrix lhs = multiply(k, t, from.maps[a]);
      const FieldMatrix rhs = multiply(k, to.maps[a], apply_automorphism(k, from.ext.global_index(g.inv(a)), t));
      for (std::size_t e = 0; e < rows * cols; ++e) {
        const FieldElement diff = k.sub(lhs.entries[e], rhs.entries[e]);
        for (std::size_t s = 0; s < deg; ++s) system(a * block + e * deg + s, u) = diff.coords[s];
      }
    }
  }
  const RatMatrix basis = nullspace(system);
  std::vector<FieldMatrix> out;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    FieldMatrix t = FieldMatrix::zero(k, rows, cols);
    for (std::size_t u = 0; u < unknowns; ++u) t.entries[u / deg].coords[u % deg] = basis(u, c);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<RatMatrix> module_morphisms(const AModule& from, const AModule& to) {
  if (from.algebra.get() != to.algebra.get() &&
      !(from.algebra->cocycle() == to.algebra->cocycle() &&
        same_extension(from.algebra->extension(), to.algebra->extension())))
    throw InputError("modules over different algebras");
  const CrossedProductAlgebra& a = *from.algebra;
  const GaloisField& k = a.extension().field();
  std::vector<AlgebraElement> gens;
  for (std::size_t g = 0; g < a.extension().group().order(); ++g) gens.push_back(a.monomial(g, k.one()));
  gens.push_back(a.monomial(a.extension().group().identity(), k.generator()));
  const std::size_t p = to.dimension, q = from.dimension;
  RatMatrix system(gens.size() * p * q, p * q);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const RatMatrix r = from.action_of(gens[gi]);
    const RatMatrix rp = to.action_of(gens[gi]);
    // (X R − R′ X)(i, j) with X(i, s) at index i·q + s.
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        const std::size_t row = (gi * p + i) * q + j;
        for (std::size_t s = 0; s < q; ++s)
          if (r(s, j) != 0) system(row, i * q + s) += r(s, j);
        for (std::size_t s = 0; s < p; ++s)
          if (rp(i, s) != 0) system(row, s * q + j) -= rp(i, s);
      }
  }
  const RatMatrix basis = nullspace(system);
  std::vector<RatMatrix> out;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    RatMatrix x(p, q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) x(i, j) = basis(i * q + j, c);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace gforms
