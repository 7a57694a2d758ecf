#include "gforms/classifier.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>

#include "gforms/error.hpp"

namespace gforms {

std::vector<QuasiSplitClass> classify_quasisplit(const FiniteGroup& gamma, const FiniteGroup& out) {
  const auto homs = homomorphisms(gamma, out);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < homs.size(); ++i) index[homs[i]] = i;
  std::vector<bool> done(homs.size(), false);
  std::vector<QuasiSplitClass> classes;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (done[i]) continue;
    std::set<std::vector<std::size_t>> orbit;
    for (std::size_t g = 0; g < out.order(); ++g) {
      std::vector<std::size_t> conj(homs[i].size());
      for (std::size_t s = 0; s < conj.size(); ++s) conj[s] = out.mul(out.mul(g, homs[i][s]), out.inv(g));
      orbit.insert(conj);
    }
    QuasiSplitClass c;
    for (const auto& h : orbit) {
      done[index.at(h)] = true;
      c.members.push_back(h);
    }
    c.representative = c.members.front();
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(),
            [](const QuasiSplitClass& a, const QuasiSplitClass& b) { return a.representative < b.representative; });
  return classes;
}

namespace {

Integer dot(const IntVector& x, const IntVector& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

std::vector<IntVector> dominant_coweights(const BasedRootDatum& brd, int height) {
  const std::size_t l = brd.semisimple_rank();
  const std::size_t n = brd.rank();
  std::vector<IntVector> out;
  auto pairings_ok = [&](const IntVector& lambda) {
    for (std::size_t i = 0; i < l; ++i) {
      const Integer p = dot(brd.simple_root(i), lambda);
      if (p < 0 || p > height) return false;
    }
    return true;
  };
  if (l == n) {
    // The pairing vector determines λ.
    RatMatrix a(l, n);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = brd.simple_root(i)[j];
    const auto ainv = inverse(a);
    if (!ainv) throw DomainError("simple roots are dependent");
    std::vector<int> p(l, 0);
    for (;;) {
      RatVector target(p.begin(), p.end());
      const RatVector lam = *ainv * target;
      if (std::all_of(lam.begin(), lam.end(), [](const Rational& q) { return is_integral(q); })) {
        IntVector v;
        for (const auto& q : lam) v.push_back(numerator(q));
        out.push_back(std::move(v));
      }
      std::size_t i = 0;
      while (i < l && ++p[i] > height) p[i++] = 0;
      if (i == l) break;
    }
  } else {
    if (n > 4) throw DomainError("coweight box enumeration limited to rank 4 for non-semisimple data");
    IntVector v(n, Integer(-height));
    for (;;) {
      if (pairings_ok(v)) out.push_back(v);
      std::size_t i = 0;
      while (i < n && ++v[i] > height) v[i++] = -height;
      if (i == n) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

QuasiSplitCocharacters quasisplit_cocharacter_data(const BasedRootDatum& brd, const FiniteGroup& gamma,
                                                   const std::vector<std::size_t>& rho, int height) {
  if (height < 0) throw InputError("height must be nonnegative");
  const OuterAutomorphismGroup out = outer_automorphisms(brd);
  if (rho.size() != gamma.order()) throw InputError("rho needs one value per element of Gamma");
  for (auto r : rho)
    if (r >= out.order()) throw DomainError("rho value outside Out(G)");
  if (!is_homomorphism(gamma, out.group, rho)) throw DomainError("rho is not a homomorphism into Out(G)");

  std::vector<IntMatrix> action;
  for (auto r : rho) action.push_back(out.elements[r].matrix);
  QuasiSplitCocharacters res;
  res.coinvariants = coinvariants(brd.rank(), action);
  res.fixed_rank = fixed_sublattice(brd.rank(), action).rank();
  res.moved_rank = moved_span_rank(brd.rank(), action);

  const auto dominant = dominant_coweights(brd, height);
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < dominant.size(); ++i) index[dominant[i]] = i;
  std::vector<bool> seen(dominant.size(), false);
  for (std::size_t i = 0; i < dominant.size(); ++i) {
    if (seen[i]) continue;
    std::set<IntVector> orbit;
    for (const auto& m : action) orbit.insert(m * dominant[i]);
    CoweightOrbit o;
    for (const auto& v : orbit) {
      auto it = index.find(v);
      if (it == index.end()) throw DomainError("Gamma does not preserve the bounded dominant set");
      seen[it->second] = true;
      o.coweights.push_back(v);
      IntVector p;
      for (std::size_t j = 0; j < brd.semisimple_rank(); ++j) p.push_back(dot(brd.simple_root(j), v));
      o.pairings.push_back(std::move(p));
    }
    res.orbits.push_back(std::move(o));
  }
  return res;
}

std::size_t InnerInvariant::index_of(const IntVector& alpha) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == alpha) return i;
  throw InputError("element not in the fundamental group");
}

InnerInvariant build_inner_invariant(const RootDatum& rd, const std::vector<QuaternionAssignment>& assignments) {
  InnerInvariant inv;
  inv.pi1 = fundamental_group(rd);
  if (!inv.pi1.is_finite()) throw DomainError("fundamental group is infinite");
  const auto& orders = inv.pi1.invariant_factors;
  if (assignments.size() != orders.size())
    throw InputError("need one assignment per invariant factor of pi_1 (" + std::to_string(orders.size()) + ")");

  inv.d = orders.empty() ? Integer(-1) : assignments.front().d;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i].d != inv.d) throw InputError("all assignments must use the same quadratic field");
    if (assignments[i].c == 0) throw InputError("quaternion entry c is zero");
    const bool split = is_norm_quadratic(assignments[i].d, assignments[i].c);
    if (!split && orders[i] % 2 != 0)
      throw DomainError("order violation: generator " + std::to_string(i) + " has order " + orders[i].str() +
                        " but its class has order 2, so " + orders[i].str() + "*mu(g) = mu(g) != 0");
  }

  auto field = std::make_shared<const GaloisField>(GaloisField::quadratic(inv.d));
  const GaloisExtension ext(field);
  const CyclicNormClasses classes(ext);

  // Every α, odometer order over the invariant factors.
  IntVector alpha(orders.size(), Integer(0));
  for (;;) {
    Rational c = 1;
    for (std::size_t i = 0; i < orders.size(); ++i)
      for (Integer k = 0; k < alpha[i]; ++k) c *= assignments[i].c;
    inv.elements.push_back(alpha);
    inv.c.push_back(c);
    inv.classes.push_back(brauer_class_quaternion(Rational(inv.d), c));
    inv.algebras.push_back(CrossedProductAlgebra::build(ext, classes.cocycle_from_element(field->from_rational(c))));
    std::size_t i = 0;
    while (i < orders.size() && ++alpha[i] == orders[i]) alpha[i++] = 0;
    if (i == orders.size()) break;
  }

  const std::size_t n = inv.elements.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!is_central_simple(inv.algebras[a])) throw DomainError("component algebra is not central simple");
    for (std::size_t b = 0; b < n; ++b) {
      IntVector sum(orders.size());
      for (std::size_t i = 0; i < orders.size(); ++i) sum[i] = (inv.elements[a][i] + inv.elements[b][i]) % orders[i];
      const std::size_t s = inv.index_of(sum);
      std::set<Place> sym;
      const auto ra = inv.classes[a].ramified_places(), rb = inv.classes[b].ramified_places();
      std::set_symmetric_difference(ra.begin(), ra.end(), rb.begin(), rb.end(), std::inserter(sym, sym.end()));
      const bool ok = sym == inv.classes[s].ramified_places() && inv.classes[a] + inv.classes[b] == inv.classes[s] &&
                      cocycle_sum_class_check(ext, inv.algebras[a].cocycle(), inv.algebras[b].cocycle(),
                                              inv.algebras[s].cocycle());
      if (!ok)
        throw DomainError("homomorphism law fails at elements " + std::to_string(a) + " and " + std::to_string(b));
    }
  }
  return inv;
}

FiniteAbelianGroup component_index(const RootDatum& rd) { return fundamental_group(rd); }

}  // namespace gforms
