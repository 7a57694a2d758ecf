#include "gforms/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "gforms/error.hpp"

namespace gforms {

namespace {

Integer pairing(const IntVector& x, const IntVector& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

IntVector axpy(const IntVector& y, const Integer& a, const IntVector& x) {
  IntVector out = y;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += a * x[i];
  return out;
}

constexpr std::size_t kMaxRoots = 4096;

}  // namespace

CartanType CartanType::parse(std::string_view label) {
  if (label.size() < 2) throw InputError("bad Cartan label '" + std::string(label) + "'");
  CartanType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  std::size_t rank = 0;
  for (char c : label.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad Cartan label '" + std::string(label) + "'");
    rank = rank * 10 + static_cast<std::size_t>(c - '0');
    if (rank > 64) throw InputError("Cartan rank too large");
  }
  t.rank = rank;
  const bool ok = [&] {
    switch (t.family) {
      case 'A': return rank >= 1 && rank <= 8;
      case 'B': return rank >= 2 && rank <= 8;
      case 'C': return rank >= 2 && rank <= 8;
      case 'D': return rank >= 3 && rank <= 8;
      case 'E': return rank >= 6 && rank <= 8;
      case 'F': return rank == 4;
      case 'G': return rank == 2;
      case 'T': return rank <= 8;
      default: return false;
    }
  }();
  if (!ok) throw InputError("unsupported Cartan label '" + std::string(label) + "'");
  return t;
}

std::string CartanType::label() const { return std::string(1, family) + std::to_string(rank); }

Isogeny parse_isogeny(std::string_view text) {
  if (text == "sc" || text == "simply_connected" || text == "simply-connected") return Isogeny::simply_connected;
  if (text == "ad" || text == "adjoint") return Isogeny::adjoint;
  throw InputError("unknown isogeny '" + std::string(text) + "'");
}

std::string to_string(Isogeny iso) { return iso == Isogeny::simply_connected ? "simply_connected" : "adjoint"; }

IntMatrix cartan_matrix(const CartanType& type) {
  const std::size_t n = type.rank;
  IntMatrix c(n, n);
  if (type.is_torus()) return c;
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) {
    c(i, j) = -1;
    c(j, i) = -1;
  };
  switch (type.family) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // α_n short
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;
      break;
    case 'C':  // α_n long
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c(2, 1) = -2;
      break;
    case 'G':
      link(0, 1);
      c(1, 0) = -3;
      break;
    default:
      throw InputError("unsupported Cartan family");
  }
  return c;
}

// ---------------------------------------------------------------------------

void RootDatum::validate() const {
  if (roots.size() != coroots.size()) throw DomainError("roots and coroots differ in number");
  std::map<IntVector, IntVector> pairs;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].size() != rank || coroots[i].size() != rank) throw DomainError("root vector has wrong length");
    if (pairing(roots[i], coroots[i]) != 2) throw DomainError("root " + std::to_string(i) + " pairs to ≠ 2 with its coroot");
    if (!pairs.emplace(roots[i], coroots[i]).second) throw DomainError("repeated root");
  }
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = 0; b < roots.size(); ++b) {
      const IntVector r = axpy(roots[b], -pairing(coroots[a], roots[b]), roots[a]);
      const IntVector cr = axpy(coroots[b], -pairing(coroots[b], roots[a]), coroots[a]);
      auto it = pairs.find(r);
      if (it == pairs.end() || it->second != cr)
        throw DomainError("reflection in root " + std::to_string(a) + " does not preserve the root system");
    }
}

IntMatrix BasedRootDatum::cartan() const {
  const std::size_t l = simple.size();
  IntMatrix c(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) c(i, j) = pairing(simple_coroot(i), simple_root(j));
  return c;
}

std::vector<IntVector> BasedRootDatum::simple_coordinates() const {
  const std::size_t l = simple.size();
  std::vector<std::vector<Rational>> cols;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<Rational> col;
    for (const auto& x : simple_root(i)) col.emplace_back(x);
    cols.push_back(std::move(col));
  }
  const RatMatrix basis = RatMatrix::from_columns(rank(), cols);
  if (gforms::rank(basis) != l) throw DomainError("simple roots are linearly dependent");
  std::vector<IntVector> out;
  for (const auto& root : datum.roots) {
    RatVector target;
    for (const auto& x : root) target.emplace_back(x);
    auto sol = solve(basis, target);
    if (!sol) throw DomainError("root outside the span of the simple roots");
    IntVector coeffs;
    for (const auto& q : *sol) {
      if (!is_integral(q)) throw DomainError("root is not an integral combination of simple roots");
      coeffs.push_back(numerator(q));
    }
    out.push_back(std::move(coeffs));
  }
  return out;
}

std::size_t BasedRootDatum::positive_root_count() const {
  std::size_t n = 0;
  for (const auto& c : simple_coordinates())
    if (std::any_of(c.begin(), c.end(), [](const Integer& x) { return x > 0; })) ++n;
  return n;
}

void BasedRootDatum::validate() const {
  datum.validate();
  for (auto s : simple)
    if (s >= datum.roots.size()) throw DomainError("simple root index out of range");
  for (const auto& c : simple_coordinates()) {
    const bool nonneg = std::all_of(c.begin(), c.end(), [](const Integer& x) { return x >= 0; });
    const bool nonpos = std::all_of(c.begin(), c.end(), [](const Integer& x) { return x <= 0; });
    if (!nonneg && !nonpos) throw DomainError("a root is neither positive nor negative for the simple system");
  }
}

bool BasedRootDatum::equivalent(const BasedRootDatum& other) const {
  if (rank() != other.rank() || datum.roots.size() != other.datum.roots.size()) return false;
  using Pair = std::pair<IntVector, IntVector>;
  auto pair_set = [](const BasedRootDatum& d) {
    std::set<Pair> s;
    for (std::size_t i = 0; i < d.datum.roots.size(); ++i) s.emplace(d.datum.roots[i], d.datum.coroots[i]);
    return s;
  };
  auto simple_set = [](const BasedRootDatum& d) {
    std::set<Pair> s;
    for (auto i : d.simple) s.emplace(d.datum.roots[i], d.datum.coroots[i]);
    return s;
  };
  return pair_set(*this) == pair_set(other) && simple_set(*this) == simple_set(other);
}

BasedRootDatum from_simple_system(std::size_t rank, const std::vector<IntVector>& simple_roots,
                                  const std::vector<IntVector>& simple_coroots) {
  if (simple_roots.size() != simple_coroots.size()) throw InputError("simple roots and coroots differ in number");
  BasedRootDatum out;
  out.datum.rank = rank;
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < simple_roots.size(); ++i) {
    if (simple_roots[i].size() != rank || simple_coroots[i].size() != rank)
      throw InputError("simple root vector has wrong length");
    if (!index.emplace(simple_roots[i], i).second) throw DomainError("repeated simple root");
    out.datum.roots.push_back(simple_roots[i]);
    out.datum.coroots.push_back(simple_coroots[i]);
    out.simple.push_back(i);
  }
  for (std::size_t k = 0; k < out.datum.roots.size(); ++k)
    for (std::size_t i = 0; i < simple_roots.size(); ++i) {
      const IntVector& b = out.datum.roots[k];
      const IntVector bc = out.datum.coroots[k];
      IntVector r = axpy(b, -pairing(simple_coroots[i], b), simple_roots[i]);
      IntVector cr = axpy(bc, -pairing(bc, simple_roots[i]), simple_coroots[i]);
      auto it = index.find(r);
      if (it != index.end()) {
        if (out.datum.coroots[it->second] != cr) throw DomainError("inconsistent coroot for a reflected root");
        continue;
      }
      if (out.datum.roots.size() >= kMaxRoots) throw DomainError("root system is not finite");
      index.emplace(r, out.datum.roots.size());
      out.datum.roots.push_back(std::move(r));
      out.datum.coroots.push_back(std::move(cr));
    }
  return out;
}

BasedRootDatum build_root_datum(const CartanType& type, Isogeny isogeny) {
  const std::size_t n = type.rank;
  if (type.is_torus()) {
    BasedRootDatum t;
    t.datum.rank = n;
    return t;
  }
  const IntMatrix c = cartan_matrix(type);
  std::vector<IntVector> roots(n, IntVector(n)), coroots(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (isogeny == Isogeny::simply_connected) {
        coroots[i][j] = i == j ? 1 : 0;
        roots[i][j] = c(j, i);  // α_i = Σ_j ⟨α_j^∨, α_i⟩ ω_j
      } else {
        roots[i][j] = i == j ? 1 : 0;
        coroots[i][j] = c(i, j);  // α_i^∨ = Σ_j ⟨α_i^∨, α_j⟩ ω_j^∨
      }
    }
  return from_simple_system(n, roots, coroots);
}

BasedRootDatum direct_sum(const BasedRootDatum& a, const BasedRootDatum& b) {
  BasedRootDatum out;
  const std::size_t ra = a.rank(), rb = b.rank();
  out.datum.rank = ra + rb;
  auto pad = [&](const IntVector& v, bool first) {
    IntVector w(ra + rb, Integer(0));
    for (std::size_t i = 0; i < v.size(); ++i) w[first ? i : ra + i] = v[i];
    return w;
  };
  for (std::size_t i = 0; i < a.datum.roots.size(); ++i) {
    out.datum.roots.push_back(pad(a.datum.roots[i], true));
    out.datum.coroots.push_back(pad(a.datum.coroots[i], true));
  }
  for (std::size_t i = 0; i < b.datum.roots.size(); ++i) {
    out.datum.roots.push_back(pad(b.datum.roots[i], false));
    out.datum.coroots.push_back(pad(b.datum.coroots[i], false));
  }
  out.simple = a.simple;
  for (auto s : b.simple) out.simple.push_back(a.datum.roots.size() + s);
  return out;
}

BasedRootDatum dual(const BasedRootDatum& rd) {
  BasedRootDatum out = rd;
  std::swap(out.datum.roots, out.datum.coroots);
  return out;
}

Cokernel fundamental_group_presentation(const RootDatum& rd) {
  return cokernel(IntMatrix::from_columns(rd.rank, rd.coroots));
}

FiniteAbelianGroup fundamental_group(const RootDatum& rd) { return fundamental_group_presentation(rd).group; }

// ---------------------------------------------------------------------------
// Outer automorphisms
// ---------------------------------------------------------------------------

IntMatrix OuterAutomorphism::character_matrix() const {
  auto inv = inverse(to_rational(matrix));
  if (!inv) throw DomainError("outer automorphism matrix is singular");
  IntMatrix out(matrix.rows(), matrix.cols());
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) out(i, j) = numerator((*inv)(j, i));
  return out;
}

namespace {

bool respects_simple_system(const BasedRootDatum& brd, const IntMatrix& g, const std::vector<std::size_t>& perm) {
  const IntMatrix gt = g.transpose();
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (g * brd.simple_coroot(i) != brd.simple_coroot(perm[i])) return false;
    if (gt * brd.simple_root(perm[i]) != brd.simple_root(i)) return false;
  }
  const Integer d = determinant(g);
  return d == 1 || d == -1;
}

std::vector<IntMatrix> extensions(const BasedRootDatum& brd, const std::vector<std::size_t>& perm) {
  const std::size_t n = brd.rank();
  std::vector<IntMatrix> out;
  if (brd.semisimple_rank() == n) {
    std::vector<IntVector> src, dst;
    for (std::size_t i = 0; i < n; ++i) {
      src.push_back(brd.simple_coroot(i));
      dst.push_back(brd.simple_coroot(perm[i]));
    }
    const auto src_inv = inverse(to_rational(IntMatrix::from_columns(n, src)));
    if (!src_inv) return out;
    const RatMatrix g = to_rational(IntMatrix::from_columns(n, dst)) * *src_inv;
    IntMatrix gi(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_integral(g(i, j))) return out;
        gi(i, j) = numerator(g(i, j));
      }
    if (respects_simple_system(brd, gi, perm)) out.push_back(std::move(gi));
    return out;
  }
  if (n > 3) throw DomainError("automorphisms of non-semisimple data supported only up to rank 3");
  const std::size_t cells = n * n;
  std::vector<int> digits(cells, -1);
  for (;;) {
    IntMatrix g(n, n);
    for (std::size_t k = 0; k < cells; ++k) g(k / n, k % n) = digits[k];
    if (respects_simple_system(brd, g, perm)) out.push_back(std::move(g));
    std::size_t pos = 0;
    while (pos < cells && ++digits[pos] == 2) digits[pos++] = -1;
    if (pos == cells) break;
  }
  return out;
}

}  // namespace

OuterAutomorphismGroup outer_automorphisms(const BasedRootDatum& brd) {
  const IntMatrix c = brd.cartan();
  const std::size_t l = brd.semisimple_rank();
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<OuterAutomorphism> found;
  do {
    bool preserves = true;
    for (std::size_t i = 0; i < l && preserves; ++i)
      for (std::size_t j = 0; j < l && preserves; ++j) preserves = c(perm[i], perm[j]) == c(i, j);
    if (!preserves) continue;
    for (auto& g : extensions(brd, perm)) found.push_back(OuterAutomorphism{std::move(g), perm});
  } while (std::next_permutation(perm.begin(), perm.end()));

  const IntMatrix id = IntMatrix::identity(brd.rank());
  std::sort(found.begin(), found.end(), [&](const OuterAutomorphism& a, const OuterAutomorphism& b) {
    const bool ai = a.matrix == id, bi = b.matrix == id;
    if (ai != bi) return ai;
    if (a.permutation != b.permutation) return a.permutation < b.permutation;
    return a.matrix.data() < b.matrix.data();
  });
  if (found.empty() || !(found.front().matrix == id)) throw DomainError("identity missing from automorphism search");

  const std::size_t m = found.size();
  std::map<std::vector<Integer>, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index[found[i].matrix.data()] = i;
  std::vector<std::size_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto it = index.find((found[a].matrix * found[b].matrix).data());
      if (it == index.end()) throw DomainError("automorphism search did not close under composition (group infinite?)");
      table[a * m + b] = it->second;
    }
  return OuterAutomorphismGroup{std::move(found), FiniteGroup(std::move(table))};
}

IntVector act_on_coweight(const OuterAutomorphism& delta, const IntVector& coweight) {
  return delta.matrix * coweight;
}

bool is_dominant(const BasedRootDatum& brd, const IntVector& coweight) {
  for (std::size_t i = 0; i < brd.semisimple_rank(); ++i)
    if (pairing(brd.simple_root(i), coweight) < 0) return false;
  return true;
}

}  // namespace gforms
