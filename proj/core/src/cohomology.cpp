#include "gforms/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "gforms/error.hpp"
#include "gforms/hilbert.hpp"

namespace gforms {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

void check_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw InputError(std::string(what) + " has " + std::to_string(got) + " entries, expected " +
                     std::to_string(want));
}

// Integer coordinates of a module element, one per cyclic factor.
void put(const GModule& m, Elem x, IntVector& out, std::size_t offset) {
  const auto c = m.decode(x);
  for (std::size_t i = 0; i < c.size(); ++i) out[offset + i] = c[i];
}

Elem take(const GModule& m, const IntVector& v, std::size_t offset) {
  IntVector c(v.begin() + static_cast<std::ptrdiff_t>(offset),
              v.begin() + static_cast<std::ptrdiff_t>(offset + m.rank()));
  return m.encode(c);
}

std::uint64_t saturating_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Finite modules

bool is_two_cocycle(const GModule& m, const Cochain2& z, Triple* violation) {
  const FiniteGroup& g = m.gamma();
  const std::size_t n = g.order();
  check_size(z.size(), n * n, "2-cochain");
  for (auto v : z)
    if (v >= m.order()) throw InputError("2-cochain value out of range");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Elem lhs = m.add(z[a * n + g.mul(b, c)], m.act(a, z[b * n + c]));
        const Elem rhs = m.add(z[g.mul(a, b) * n + c], z[a * n + b]);
        if (lhs != rhs) {
          if (violation) *violation = {a, b, c};
          return false;
        }
      }
  return true;
}

bool is_normalized(const GModule& m, const Cochain2& z) {
  const std::size_t n = m.gamma().order();
  const std::size_t e = m.gamma().identity();
  check_size(z.size(), n * n, "2-cochain");
  for (std::size_t a = 0; a < n; ++a)
    if (z[e * n + a] != 0 || z[a * n + e] != 0) return false;
  return true;
}

Cochain2 coboundary_of(const GModule& m, const Cochain1& f) {
  const FiniteGroup& g = m.gamma();
  const std::size_t n = g.order();
  check_size(f.size(), n, "1-cochain");
  Cochain2 z(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) z[a * n + b] = m.sub(m.add(f[a], m.act(a, f[b])), f[g.mul(a, b)]);
  return z;
}

std::optional<Cochain1> is_coboundary(const GModule& m, const Cochain2& z) {
  const FiniteGroup& g = m.gamma();
  const std::size_t n = g.order();
  const std::size_t r = m.rank();
  check_size(z.size(), n * n, "2-cochain");
  // [D¹ | R] x = z over ℤ, with R the diagonal of moduli.
  IntMatrix sys(n * n * r, n * r + n * n * r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t row = (a * n + b) * r;
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < r; ++i) sys(row + i, b * r + j) += m.action(a)(i, j);
        sys(row + j, g.mul(a, b) * r + j) -= 1;
        sys(row + j, a * r + j) += 1;
        sys(row + j, n * r + row + j) = m.moduli()[j];
      }
    }
  IntVector rhs(n * n * r);
  for (std::size_t k = 0; k < n * n; ++k) put(m, z[k], rhs, k * r);
  const auto x = solve_integer(sys, rhs);
  if (!x) return std::nullopt;
  Cochain1 f(n);
  for (std::size_t a = 0; a < n; ++a) f[a] = take(m, *x, a * r);
  return f;
}

Cochain2 normalize(const GModule& m, const Cochain2& z) {
  const std::size_t n = m.gamma().order();
  check_size(z.size(), n * n, "2-cochain");
  const Elem c = z[m.gamma().identity() * n + m.gamma().identity()];
  Cochain2 out(z.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[a * n + b] = m.sub(z[a * n + b], m.act(a, c));
  return out;
}

Cochain2 add_cochains(const GModule& m, const Cochain2& x, const Cochain2& y) {
  check_size(y.size(), x.size(), "2-cochain");
  Cochain2 out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = m.add(x[i], y[i]);
  return out;
}

// ---------------------------------------------------------------------------
// H⁰, H¹

std::vector<std::size_t> h0(const GGroup& a) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < a.group().order(); ++x) {
    bool fixed = true;
    for (std::size_t s = 0; s < a.gamma().order() && fixed; ++s) fixed = a.act(s, x) == x;
    if (fixed) out.push_back(x);
  }
  return out;
}

bool is_one_cocycle(const GGroup& a, const std::vector<std::size_t>& f) {
  const FiniteGroup& g = a.gamma();
  const FiniteGroup& grp = a.group();
  check_size(f.size(), g.order(), "1-cochain");
  for (auto v : f)
    if (v >= grp.order()) throw InputError("1-cochain value out of range");
  for (std::size_t s = 0; s < g.order(); ++s)
    for (std::size_t t = 0; t < g.order(); ++t)
      if (f[g.mul(s, t)] != grp.mul(f[s], a.act(s, f[t]))) return false;
  return true;
}

std::vector<std::vector<std::size_t>> H1Set::representatives() const {
  std::vector<std::vector<std::size_t>> out(class_count);
  std::vector<bool> seen(class_count, false);
  for (std::size_t i = 0; i < cocycles.size(); ++i)
    if (!seen[class_of[i]]) {
      seen[class_of[i]] = true;
      out[class_of[i]] = cocycles[i];
    }
  return out;
}

H1Set h1_nonabelian(const GGroup& a, std::uint64_t budget) {
  const FiniteGroup& g = a.gamma();
  const FiniteGroup& grp = a.group();
  const std::size_t n = g.order();
  const std::size_t e = g.identity();
  if (saturating_power(grp.order(), n - 1, budget) > budget)
    throw DomainError("H^1 enumeration exceeds the budget of " + std::to_string(budget) + " maps");

  H1Set out;
  std::vector<std::size_t> f(n, npos);
  f[e] = grp.identity();
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < n; ++s)
    if (s != e) order.push_back(s);

  auto consistent = [&](std::size_t k) {
    for (std::size_t s = 0; s < n; ++s) {
      if (f[s] == npos) continue;
      for (std::size_t t = 0; t < n; ++t) {
        if (f[t] == npos) continue;
        const std::size_t st = g.mul(s, t);
        if (f[st] == npos || (s != k && t != k && st != k)) continue;
        if (f[st] != grp.mul(f[s], a.act(s, f[t]))) return false;
      }
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      out.cocycles.push_back(f);
      return;
    }
    const std::size_t s = order[depth];
    for (std::size_t x = 0; x < grp.order(); ++x) {
      f[s] = x;
      if (consistent(s)) self(self, depth + 1);
    }
    f[s] = npos;
  };
  if (consistent(e)) recurse(recurse, 0);
  std::sort(out.cocycles.begin(), out.cocycles.end());

  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < out.cocycles.size(); ++i) index[out.cocycles[i]] = i;
  std::vector<std::size_t> parent(out.cocycles.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < out.cocycles.size(); ++i) {
    const auto& c1 = out.cocycles[i];
    for (std::size_t c = 0; c < grp.order(); ++c) {
      std::vector<std::size_t> twisted(n);
      for (std::size_t s = 0; s < n; ++s) twisted[s] = grp.mul(grp.mul(grp.inv(c), c1[s]), a.act(s, c));
      const std::size_t j = index.at(twisted);
      parent[find(i)] = find(j);
    }
  }
  const std::vector<std::size_t> base(n, grp.identity());
  const std::size_t base_root = find(index.at(base));
  std::map<std::size_t, std::size_t> ids{{base_root, 0}};
  out.class_of.resize(out.cocycles.size());
  for (std::size_t i = 0; i < out.cocycles.size(); ++i) {
    const std::size_t root = find(i);
    auto it = ids.find(root);
    if (it == ids.end()) it = ids.emplace(root, ids.size()).first;
    out.class_of[i] = it->second;
  }
  out.class_count = ids.size();
  return out;
}

// ---------------------------------------------------------------------------
// H² via normalized bar cochains

H2Group h2_bar(const GModule& m) {
  const FiniteGroup& g = m.gamma();
  const std::size_t r = m.rank();
  H2Group out;
  out.module_ = m;
  for (std::size_t s = 0; s < g.order(); ++s)
    if (s != g.identity()) out.nonidentity_.push_back(s);
  const std::size_t k = out.nonidentity_.size();
  const auto& nid = out.nonidentity_;
  std::vector<std::size_t> pos(g.order(), npos);
  for (std::size_t i = 0; i < k; ++i) pos[nid[i]] = i;

  const std::size_t n1 = k * r, n2 = k * k * r, n3 = k * k * k * r;
  if (n2 == 0) return out;

  auto c1 = [&](std::size_t x) { return pos[x] * r; };
  auto c2 = [&](std::size_t x, std::size_t y) { return (pos[x] * k + pos[y]) * r; };
  auto c3 = [&](std::size_t x, std::size_t y, std::size_t z) { return ((pos[x] * k + pos[y]) * k + pos[z]) * r; };

  IntMatrix d1(n2, n1);
  for (auto a : nid)
    for (auto b : nid) {
      const std::size_t row = c2(a, b);
      const std::size_t ab = g.mul(a, b);
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < r; ++i) d1(row + i, c1(b) + j) += m.action(a)(i, j);
        if (ab != g.identity()) d1(row + j, c1(ab) + j) -= 1;
        d1(row + j, c1(a) + j) += 1;
      }
    }

  IntMatrix d2r(n3, n2 + n3);
  for (auto a : nid)
    for (auto b : nid)
      for (auto c : nid) {
        const std::size_t row = c3(a, b, c);
        const std::size_t ab = g.mul(a, b), bc = g.mul(b, c);
        for (std::size_t j = 0; j < r; ++j) {
          for (std::size_t i = 0; i < r; ++i) d2r(row + i, c2(b, c) + j) += m.action(a)(i, j);
          if (ab != g.identity()) d2r(row + j, c2(ab, c) + j) -= 1;
          if (bc != g.identity()) d2r(row + j, c2(a, bc) + j) += 1;
          d2r(row + j, c2(a, b) + j) -= 1;
          d2r(row + j, n2 + row + j) = m.moduli()[j];
        }
      }

  // Lifted cocycles: x with ∂x ≡ 0 modulo the moduli. A full-rank lattice.
  const IntMatrix spanning = integer_kernel(d2r).select_rows(0, n2);
  const SmithForm snf = smith_normal_form(spanning);
  if (snf.rank != n2) throw DomainError("cocycle lattice is not of full rank");
  IntMatrix basis(n2, n2);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j) basis(i, j) = snf.U_inverse(i, j) * snf.S(j, j);
  auto inv = inverse(to_rational(basis));
  out.cocycle_basis_inverse_ = std::move(*inv);

  IntMatrix relations(n2, n2);
  for (std::size_t t = 0; t < k * k; ++t)
    for (std::size_t j = 0; j < r; ++j) relations(t * r + j, t * r + j) = m.moduli()[j];
  const IntMatrix bound = d1.hstack(relations);
  const RatMatrix y_rat = out.cocycle_basis_inverse_ * to_rational(bound);
  IntMatrix y(y_rat.rows(), y_rat.cols());
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) {
      if (!is_integral(y_rat(i, j))) throw DomainError("coboundaries are not cocycles");
      y(i, j) = numerator(y_rat(i, j));
    }
  out.quotient_ = cokernel(y);
  out.group_ = out.quotient_.group;

  const std::size_t n = g.order();
  for (std::size_t gen = 0; gen < out.group_.invariant_factors.size(); ++gen) {
    const IntVector x = basis * out.quotient_.generators.column(gen);
    Cochain2 z(n * n, 0);
    for (auto a : nid)
      for (auto b : nid) z[a * n + b] = take(m, x, c2(a, b));
    out.representatives_.push_back(std::move(z));
  }
  return out;
}

IntVector H2Group::class_of(const Cochain2& input) const {
  Triple t;
  if (!is_two_cocycle(module_, input, &t))
    throw DomainError("not a 2-cocycle: identity fails at (" + std::to_string(t.a) + ", " +
                      std::to_string(t.b) + ", " + std::to_string(t.c) + ")");
  if (group_.is_trivial()) return {};
  const Cochain2 z = normalize(module_, input);
  const std::size_t n = module_.gamma().order();
  const std::size_t k = nonidentity_.size();
  const std::size_t r = module_.rank();
  IntVector x(k * k * r);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) put(module_, z[nonidentity_[i] * n + nonidentity_[j]], x, (i * k + j) * r);
  RatVector xr(x.begin(), x.end());
  const RatVector yr = cocycle_basis_inverse_ * xr;
  IntVector y(yr.size());
  for (std::size_t i = 0; i < yr.size(); ++i) {
    if (!is_integral(yr[i])) throw DomainError("cocycle does not lie in the cocycle lattice");
    y[i] = numerator(yr[i]);
  }
  return quotient_.coordinates(y);
}

bool H2Group::is_trivial_class(const Cochain2& z) const {
  const IntVector c = class_of(z);
  return std::all_of(c.begin(), c.end(), [](const Integer& v) { return v == 0; });
}

// ---------------------------------------------------------------------------
// Hom(P, M) transport

std::vector<Cochain2> h2_transport(const HomModule& h, const Cochain2& z) {
  const std::size_t nn = h.module().gamma().order() * h.module().gamma().order();
  check_size(z.size(), nn, "2-cochain");
  std::vector<Cochain2> mu(h.p_order(), Cochain2(nn));
  for (Elem alpha = 0; alpha < h.p_order(); ++alpha)
    for (std::size_t t = 0; t < nn; ++t) mu[alpha][t] = h.evaluate(z[t], alpha);
  return mu;
}

Cochain2 h2_transport_inverse(const HomModule& h, const std::vector<Cochain2>& mu) {
  const GModule& m = h.target();
  const std::size_t nn = m.gamma().order() * m.gamma().order();
  check_size(mu.size(), h.p_order(), "family of cochains");
  for (const auto& c : mu) check_size(c.size(), nn, "2-cochain");
  // Additivity: μ(α + β) = μ(α) + μ(β).
  const auto& p = h.p_orders();
  auto add_p = [&](Elem x, Elem y) {
    Elem out = 0, place = 1;
    for (auto pi : p) {
      const Elem u = static_cast<Elem>(pi);
      out += ((x % u + y % u) % u) * place;
      x /= u;
      y /= u;
      place *= u;
    }
    return out;
  };
  for (Elem x = 0; x < h.p_order(); ++x)
    for (Elem y = 0; y < h.p_order(); ++y)
      if (mu[add_p(x, y)] != add_cochains(m, mu[x], mu[y]))
        throw DomainError("family is not additive in P at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  std::vector<Elem> unit(p.size());
  Elem place = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    unit[i] = p[i] > 1 ? place : 0;
    place *= static_cast<Elem>(p[i]);
  }
  Cochain2 z(nn);
  for (std::size_t t = 0; t < nn; ++t) {
    std::vector<Elem> images(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) images[i] = mu[unit[i]][t];
    z[t] = h.from_images(images);
  }
  return z;
}

std::vector<Cochain1> h2_transport_witness(const HomModule& h, const Cochain1& f) {
  const std::size_t n = h.module().gamma().order();
  check_size(f.size(), n, "1-cochain");
  std::vector<Cochain1> g(h.p_order(), Cochain1(n));
  for (Elem alpha = 0; alpha < h.p_order(); ++alpha)
    for (std::size_t a = 0; a < n; ++a) g[alpha][a] = h.evaluate(f[a], alpha);
  return g;
}

// ---------------------------------------------------------------------------
// Central extensions

void CentralExtension::validate() const {
  const FiniteGroup& gz = z.group();
  const FiniteGroup& gb = b.group();
  const FiniteGroup& gc = c.group();
  if (!(z.gamma() == b.gamma()) || !(b.gamma() == c.gamma()))
    throw InputError("extension groups carry actions of different groups");
  check_size(inclusion.size(), gz.order(), "inclusion");
  check_size(projection.size(), gb.order(), "projection");
  for (auto x : inclusion)
    if (x >= gb.order()) throw InputError("inclusion value out of range");
  for (auto x : projection)
    if (x >= gc.order()) throw InputError("projection value out of range");
  if (!is_homomorphism(gz, gb, inclusion)) throw DomainError("inclusion is not a homomorphism");
  if (!is_homomorphism(gb, gc, projection)) throw DomainError("projection is not a homomorphism");
  std::vector<bool> in_image(gb.order(), false);
  for (auto x : inclusion) {
    if (in_image[x]) throw DomainError("inclusion is not injective");
    in_image[x] = true;
  }
  std::vector<bool> hit(gc.order(), false);
  for (std::size_t y = 0; y < gb.order(); ++y) {
    hit[projection[y]] = true;
    if ((projection[y] == gc.identity()) != in_image[y]) throw DomainError("sequence is not exact at B");
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw DomainError("projection is not surjective");
  for (auto x : inclusion)
    for (std::size_t y = 0; y < gb.order(); ++y)
      if (gb.mul(x, y) != gb.mul(y, x)) throw DomainError("Z is not central in B");
  for (std::size_t s = 0; s < b.gamma().order(); ++s) {
    for (std::size_t x = 0; x < gz.order(); ++x)
      if (inclusion[z.act(s, x)] != b.act(s, inclusion[x])) throw DomainError("inclusion is not equivariant");
    for (std::size_t y = 0; y < gb.order(); ++y)
      if (projection[b.act(s, y)] != c.act(s, projection[y])) throw DomainError("projection is not equivariant");
  }
}

std::vector<std::size_t> CentralExtension::preimages(std::size_t c_elem) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < projection.size(); ++y)
    if (projection[y] == c_elem) out.push_back(y);
  return out;
}

std::vector<std::size_t> boundary_map(const CentralExtension& ext, const std::vector<std::size_t>& c,
                                      const std::vector<std::size_t>* lift) {
  ext.validate();
  const FiniteGroup& g = ext.b.gamma();
  const FiniteGroup& gb = ext.b.group();
  const std::size_t n = g.order();
  if (!is_one_cocycle(ext.c, c)) throw DomainError("input is not a 1-cocycle");
  std::vector<std::size_t> ct(n);
  if (lift) {
    check_size(lift->size(), n, "lift");
    for (std::size_t s = 0; s < n; ++s) {
      if ((*lift)[s] >= gb.order() || ext.projection[(*lift)[s]] != c[s])
        throw InputError("lift does not map to the cocycle");
      ct[s] = (*lift)[s];
    }
  } else {
    for (std::size_t s = 0; s < n; ++s) ct[s] = ext.preimages(c[s]).front();
  }
  std::vector<std::size_t> back(gb.order(), npos);
  for (std::size_t x = 0; x < ext.inclusion.size(); ++x) back[ext.inclusion[x]] = x;
  std::vector<std::size_t> out(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t v = gb.mul(gb.mul(ct[a], ext.b.act(a, ct[b])), gb.inv(ct[g.mul(a, b)]));
      if (back[v] == npos) throw DomainError("boundary value does not lie in Z");
      out[a * n + b] = back[v];
    }
  return out;
}

// ---------------------------------------------------------------------------
// K^× coefficients

bool is_two_cocycle(const GaloisExtension& ext, const FieldCochain2& z, Triple* violation) {
  const GaloisField& k = ext.field();
  const FiniteGroup& g = ext.group();
  const std::size_t n = g.order();
  check_size(z.size(), n * n, "2-cochain");
  for (const auto& v : z) {
    k.check(v);
    if (k.is_zero(v)) {
      if (violation) *violation = {0, 0, 0};
      return false;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const FieldElement lhs = k.mul(z[a * n + g.mul(b, c)], ext.act(a, z[b * n + c]));
        const FieldElement rhs = k.mul(z[g.mul(a, b) * n + c], z[a * n + b]);
        if (!(lhs == rhs)) {
          if (violation) *violation = {a, b, c};
          return false;
        }
      }
  return true;
}

bool is_normalized(const GaloisExtension& ext, const FieldCochain2& z) {
  const std::size_t n = ext.group().order();
  const std::size_t e = ext.group().identity();
  check_size(z.size(), n * n, "2-cochain");
  const FieldElement one = ext.field().one();
  for (std::size_t a = 0; a < n; ++a)
    if (!(z[e * n + a] == one) || !(z[a * n + e] == one)) return false;
  return true;
}

FieldCochain2 coboundary_of(const GaloisExtension& ext, const FieldCochain1& f) {
  const GaloisField& k = ext.field();
  const FiniteGroup& g = ext.group();
  const std::size_t n = g.order();
  check_size(f.size(), n, "1-cochain");
  std::vector<FieldElement> inv(n);
  for (std::size_t a = 0; a < n; ++a) inv[a] = k.inv(f[a]);
  FieldCochain2 z(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      z[a * n + b] = k.mul(k.mul(f[a], ext.act(a, f[b])), inv[g.mul(a, b)]);
  return z;
}

std::optional<FieldCochain1> is_coboundary(const GaloisExtension& ext, const FieldCochain2& z,
                                           const std::vector<FieldElement>& candidates, std::uint64_t budget) {
  const FiniteGroup& g = ext.group();
  const std::size_t n = g.order();
  const std::size_t e = g.identity();
  check_size(z.size(), n * n, "2-cochain");
  std::vector<FieldElement> cands;
  for (const auto& c : candidates)
    if (!ext.field().is_zero(c)) cands.push_back(c);
  if (saturating_power(cands.size(), n - 1, budget) > budget)
    throw DomainError("coboundary search exceeds the budget of " + std::to_string(budget) + " maps");
  FieldCochain1 f(n, z[e * n + e]);
  if (n == 1) return coboundary_of(ext, f) == z ? std::optional(f) : std::nullopt;
  if (cands.empty()) return std::nullopt;
  std::vector<std::size_t> slots;
  for (std::size_t a = 0; a < n; ++a)
    if (a != e) slots.push_back(a);
  std::vector<std::size_t> digit(slots.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < slots.size(); ++i) f[slots[i]] = cands[digit[i]];
    if (coboundary_of(ext, f) == z) return f;
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == cands.size()) digit[i++] = 0;
    if (i == digit.size()) return std::nullopt;
  }
}

FieldCochain2 normalize(const GaloisExtension& ext, const FieldCochain2& z) {
  const GaloisField& k = ext.field();
  const std::size_t n = ext.group().order();
  check_size(z.size(), n * n, "2-cochain");
  const FieldElement c = z[ext.group().identity() * n + ext.group().identity()];
  FieldCochain2 out(z.size());
  for (std::size_t a = 0; a < n; ++a) {
    const FieldElement ac = k.inv(ext.act(a, c));
    for (std::size_t b = 0; b < n; ++b) out[a * n + b] = k.mul(z[a * n + b], ac);
  }
  return out;
}

FieldCochain2 multiply_cochains(const GaloisExtension& ext, const FieldCochain2& x, const FieldCochain2& y) {
  check_size(y.size(), x.size(), "2-cochain");
  FieldCochain2 out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ext.field().mul(x[i], y[i]);
  return out;
}

FieldCochain2 trivial_cochain(const GaloisExtension& ext) {
  const std::size_t n = ext.group().order();
  return FieldCochain2(n * n, ext.field().one());
}

CyclicNormClasses::CyclicNormClasses(GaloisExtension ext) : ext_(std::move(ext)) {
  const FiniteGroup& g = ext_.group();
  if (!g.is_cyclic(&generator_)) throw DomainError("norm classes need a cyclic Galois group");
  std::size_t x = g.identity();
  for (std::size_t i = 0; i < g.order(); ++i) {
    powers_.push_back(x);
    x = g.mul(x, generator_);
  }
  if (g.order() == 2 && ext_.is_full() && ext_.field().degree() == 2) {
    const GaloisField& k = ext_.field();
    for (std::size_t i = 0; i < k.degree(); ++i) {
      const FieldElement w = k.sub(k.basis(i), ext_.act(generator_, k.basis(i)));
      if (k.is_zero(w)) continue;
      const Rational sq = k.to_rational(k.mul(w, w));
      d_ = squarefree_part(numerator(sq) * denominator(sq));
      break;
    }
  }
}

FieldElement CyclicNormClasses::class_element(const FieldCochain2& z) const {
  const std::size_t n = ext_.group().order();
  check_size(z.size(), n * n, "2-cochain");
  const GaloisField& k = ext_.field();
  FieldElement c = k.one();
  for (auto p : powers_) c = k.mul(c, z[p * n + generator_]);
  if (!ext_.in_base_field(c)) throw DomainError("class element is not fixed by the Galois group");
  return c;
}

FieldCochain2 CyclicNormClasses::cocycle_from_element(const FieldElement& c) const {
  const GaloisField& k = ext_.field();
  k.check(c);
  if (k.is_zero(c) || !ext_.in_base_field(c)) throw DomainError("class element must lie in k^×");
  const std::size_t n = powers_.size();
  std::vector<std::size_t> exponent(n);
  for (std::size_t i = 0; i < n; ++i) exponent[powers_[i]] = i;
  FieldCochain2 z(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) z[a * n + b] = exponent[a] + exponent[b] >= n ? c : k.one();
  return z;
}

bool CyclicNormClasses::is_trivial_element(const FieldElement& c) const {
  const GaloisField& k = ext_.field();
  k.check(c);
  if (k.is_zero(c) || !ext_.in_base_field(c)) throw DomainError("class element must lie in k^×");
  if (c == k.one() || powers_.size() == 1) return true;
  if (!d_) throw DomainError("norm test implemented only for quadratic extensions of Q");
  return is_norm_quadratic(*d_, k.to_rational(c));
}

bool CyclicNormClasses::same_class(const FieldCochain2& x, const FieldCochain2& y) const {
  return is_trivial_element(ext_.field().div(class_element(x), class_element(y)));
}

}  // namespace gforms
