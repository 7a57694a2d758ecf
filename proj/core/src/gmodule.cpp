#include "gforms/gmodule.hpp"

#include <numeric>
#include <string>

#include "gforms/error.hpp"

namespace gforms {

namespace {

constexpr Elem kTableLimit = 1u << 16;
constexpr Elem kGroupTableLimit = 1024;

std::int64_t to_i64(const Integer& x) { return static_cast<std::int64_t>(x); }

IntVector lift(const std::vector<std::int64_t>& c) { return IntVector(c.begin(), c.end()); }

}  // namespace

// ---------------------------------------------------------------------------
// GModule

GModule::GModule(FiniteGroup gamma, std::vector<std::int64_t> moduli, std::vector<IntMatrix> action)
    : gamma_(std::move(gamma)), moduli_(std::move(moduli)), action_(std::move(action)) {
  const std::size_t r = moduli_.size();
  for (auto m : moduli_) {
    if (m < 1) throw InputError("module moduli must be positive");
    if (order_ > (Elem(1) << 40) / static_cast<Elem>(m)) throw InputError("module too large");
    order_ *= static_cast<Elem>(m);
  }
  if (action_.size() != gamma_.order()) throw InputError("need one action matrix per group element");
  for (auto& a : action_) {
    if (a.rows() != r || a.cols() != r) throw InputError("action matrix has wrong shape");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if ((a(i, j) * moduli_[j]) % moduli_[i] != 0)
          throw DomainError("action matrix is not well defined modulo the moduli");
        a(i, j) = floor_mod(a(i, j), moduli_[i]);
      }
  }
  auto same_map = [&](const IntMatrix& x, const IntMatrix& y) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (floor_mod(x(i, j) - y(i, j), moduli_[i]) != 0) return false;
    return true;
  };
  if (!same_map(action_[gamma_.identity()], IntMatrix::identity(r)))
    throw DomainError("identity of the group does not act trivially");
  for (std::size_t g = 0; g < gamma_.order(); ++g)
    for (std::size_t h = 0; h < gamma_.order(); ++h)
      if (!same_map(action_[g] * action_[h], action_[gamma_.mul(g, h)]))
        throw DomainError("action is not a homomorphism at (" + std::to_string(g) + ", " +
                          std::to_string(h) + ")");
  if (order_ <= kTableLimit && gamma_.order() * order_ <= 4 * kTableLimit) {
    act_table_.resize(gamma_.order() * order_);
    for (std::size_t g = 0; g < gamma_.order(); ++g)
      for (Elem x = 0; x < order_; ++x) act_table_[g * order_ + x] = encode(action_[g] * lift(decode(x)));
  }
}

GModule GModule::trivial(FiniteGroup gamma, std::vector<std::int64_t> moduli) {
  std::vector<IntMatrix> action(gamma.order(), IntMatrix::identity(moduli.size()));
  return GModule(std::move(gamma), std::move(moduli), std::move(action));
}

GModule GModule::cyclic(FiniteGroup gamma, std::int64_t m, const std::vector<std::int64_t>& multipliers) {
  if (multipliers.size() != gamma.order()) throw InputError("need one multiplier per group element");
  std::vector<IntMatrix> action;
  for (auto k : multipliers) action.push_back(IntMatrix{{Integer(k)}});
  return GModule(std::move(gamma), {m}, std::move(action));
}

std::vector<std::int64_t> GModule::decode(Elem x) const {
  std::vector<std::int64_t> c(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    c[i] = static_cast<std::int64_t>(x % static_cast<Elem>(moduli_[i]));
    x /= static_cast<Elem>(moduli_[i]);
  }
  return c;
}

Elem GModule::encode(const std::vector<std::int64_t>& coords) const {
  if (coords.size() != moduli_.size()) throw InputError("module element has wrong length");
  Elem x = 0;
  for (std::size_t i = moduli_.size(); i-- > 0;)
    x = x * static_cast<Elem>(moduli_[i]) + static_cast<Elem>(mod64(coords[i], moduli_[i]));
  return x;
}

Elem GModule::encode(const IntVector& coords) const {
  std::vector<std::int64_t> c(coords.size());
  for (std::size_t i = 0; i < coords.size() && i < moduli_.size(); ++i)
    c[i] = to_i64(floor_mod(coords[i], moduli_[i]));
  return encode(c);
}

Elem GModule::add(Elem x, Elem y) const {
  Elem out = 0, place = 1;
  for (auto m : moduli_) {
    const Elem um = static_cast<Elem>(m);
    out += ((x % um + y % um) % um) * place;
    x /= um;
    y /= um;
    place *= um;
  }
  return out;
}

Elem GModule::neg(Elem x) const {
  Elem out = 0, place = 1;
  for (auto m : moduli_) {
    const Elem um = static_cast<Elem>(m);
    out += ((um - x % um) % um) * place;
    x /= um;
    place *= um;
  }
  return out;
}

Elem GModule::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem GModule::times(std::int64_t k, Elem x) const {
  auto c = decode(x);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = mod64(c[i] * mod64(k, moduli_[i]), moduli_[i]);
  return encode(c);
}

Elem GModule::act(std::size_t g, Elem x) const {
  if (!act_table_.empty()) return act_table_[g * order_ + x];
  return encode(action_[g] * lift(decode(x)));
}

// ---------------------------------------------------------------------------
// GGroup

GGroup::GGroup(FiniteGroup gamma, FiniteGroup group, std::vector<std::vector<std::size_t>> action)
    : gamma_(std::move(gamma)), group_(std::move(group)), action_(std::move(action)) {
  const std::size_t n = group_.order();
  if (action_.size() != gamma_.order()) throw InputError("need one automorphism per group element");
  for (const auto& perm : action_) {
    if (perm.size() != n) throw InputError("automorphism has wrong length");
    std::vector<bool> seen(n, false);
    for (auto x : perm) {
      if (x >= n || seen[x]) throw DomainError("action map is not a bijection");
      seen[x] = true;
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (perm[group_.mul(x, y)] != group_.mul(perm[x], perm[y]))
          throw DomainError("action map is not a group homomorphism");
  }
  for (std::size_t x = 0; x < n; ++x)
    if (action_[gamma_.identity()][x] != x) throw DomainError("identity of Γ does not act trivially");
  for (std::size_t g = 0; g < gamma_.order(); ++g)
    for (std::size_t h = 0; h < gamma_.order(); ++h)
      for (std::size_t x = 0; x < n; ++x)
        if (action_[g][action_[h][x]] != action_[gamma_.mul(g, h)][x])
          throw DomainError("Γ-action is not a homomorphism");
}

GGroup GGroup::trivial_action(FiniteGroup gamma, FiniteGroup group) {
  std::vector<std::size_t> id(group.order());
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<std::size_t>> action(gamma.order(), id);
  return GGroup(std::move(gamma), std::move(group), std::move(action));
}

GGroup GGroup::from_module(const GModule& m) {
  const Elem n = m.order();
  if (n > kGroupTableLimit) throw DomainError("module too large for an explicit group table");
  std::vector<std::size_t> table(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) table[x * n + y] = m.add(x, y);
  std::vector<std::vector<std::size_t>> action(m.gamma().order(), std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < m.gamma().order(); ++g)
    for (Elem x = 0; x < n; ++x) action[g][x] = m.act(g, x);
  return GGroup(m.gamma(), FiniteGroup(std::move(table)), std::move(action));
}

GModule module_from_abelian(const GGroup& a, std::vector<Elem>* element_index) {
  const FiniteGroup& grp = a.group();
  if (!grp.is_abelian()) throw DomainError("group is not abelian");
  const std::size_t n = grp.order();
  // ℤ^n / ⟨e_x + e_y − e_xy⟩ ≅ A.
  IntMatrix rel(n, n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t c = x * n + y;
      rel(x, c) += 1;
      rel(y, c) += 1;
      rel(grp.mul(x, y), c) -= 1;
    }
  const Cokernel coker = cokernel(rel);
  std::vector<std::int64_t> moduli;
  for (const auto& d : coker.group.invariant_factors) moduli.push_back(to_i64(d));

  auto coords_of = [&](std::size_t x) {
    IntVector e(n, Integer(0));
    e[x] = 1;
    return coker.coordinates(e);
  };
  auto power = [&](std::size_t x, Integer k) {
    k = floor_mod(k, Integer(grp.element_order(x)));
    std::size_t out = grp.identity();
    for (Integer i = 0; i < k; ++i) out = grp.mul(out, x);
    return out;
  };
  std::vector<std::size_t> gens;
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    std::size_t g = grp.identity();
    for (std::size_t x = 0; x < n; ++x) g = grp.mul(g, power(x, coker.generators(x, k)));
    gens.push_back(g);
  }
  std::vector<IntMatrix> action;
  for (std::size_t s = 0; s < a.gamma().order(); ++s) {
    IntMatrix m(moduli.size(), moduli.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const IntVector c = coords_of(a.act(s, gens[k]));
      for (std::size_t i = 0; i < moduli.size(); ++i) m(i, k) = c[i];
    }
    action.push_back(std::move(m));
  }
  GModule out(a.gamma(), moduli, std::move(action));
  if (element_index) {
    element_index->assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) (*element_index)[x] = out.encode(coords_of(x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// HomModule

HomModule::HomModule(std::vector<std::int64_t> p_orders, GModule target)
    : p_(std::move(p_orders)), target_(std::move(target)) {
  for (auto p : p_) {
    if (p < 1) throw InputError("orders of P must be positive");
    p_order_ *= static_cast<Elem>(p);
  }
  const auto& m = target_.moduli();
  std::vector<std::int64_t> moduli;
  for (std::size_t i = 0; i < p_.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const std::int64_t g = std::gcd(p_[i], m[j]);
      if (g == 1) continue;
      components_.push_back({i, j, m[j] / g});
      moduli.push_back(g);
    }
  std::vector<IntMatrix> action;
  for (std::size_t s = 0; s < target_.gamma().order(); ++s) {
    const IntMatrix& a = target_.action(s);
    IntMatrix h(components_.size(), components_.size());
    for (std::size_t col = 0; col < components_.size(); ++col)
      for (std::size_t row = 0; row < components_.size(); ++row) {
        const auto& from = components_[col];
        const auto& to = components_[row];
        if (from.i != to.i) continue;
        const Integer v = a(to.j, from.j) * from.scale;
        if (v % to.scale != 0) throw DomainError("Hom(P, M) action is not integral");
        h(row, col) = v / to.scale;
      }
    action.push_back(std::move(h));
  }
  module_ = GModule(target_.gamma(), std::move(moduli), std::move(action));
}

std::vector<std::int64_t> HomModule::decode_p(Elem alpha) const {
  std::vector<std::int64_t> c(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) {
    c[i] = static_cast<std::int64_t>(alpha % static_cast<Elem>(p_[i]));
    alpha /= static_cast<Elem>(p_[i]);
  }
  return c;
}

Elem HomModule::evaluate(Elem f, Elem alpha) const {
  const auto t = module_.decode(f);
  const auto a = decode_p(alpha);
  std::vector<std::int64_t> value(target_.rank(), 0);
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const auto& c = components_[k];
    value[c.j] = mod64(value[c.j] + a[c.i] * t[k] * c.scale, target_.moduli()[c.j]);
  }
  return target_.encode(value);
}

Elem HomModule::from_images(const std::vector<Elem>& images) const {
  if (images.size() != p_.size()) throw InputError("need one image per generator of P");
  std::vector<std::int64_t> t(components_.size(), 0);
  for (std::size_t i = 0; i < p_.size(); ++i)
    if (target_.times(p_[i], images[i]) != 0)
      throw DomainError("image of generator " + std::to_string(i) + " is not killed by its order");
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const auto& c = components_[k];
    const std::int64_t y = target_.decode(images[c.i])[c.j];
    t[k] = (y / c.scale) % module_.moduli()[k];
  }
  return module_.encode(t);
}

}  // namespace gforms
