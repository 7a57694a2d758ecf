#include "gforms/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gforms/error.hpp"

namespace gforms {

FiniteGroup::FiniteGroup(std::vector<std::size_t> table) : table_(std::move(table)) {
  std::size_t n = 0;
  while (n * n < table_.size()) ++n;
  if (n == 0 || n * n != table_.size()) throw InputError("group table is not square");
  order_ = n;
  for (auto x : table_)
    if (x >= n) throw InputError("group table entry out of range");

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InputError("group table has no identity");

  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[a] = b;
  for (auto x : inverse_)
    if (x == n) throw InputError("group table has an element without inverse");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InputError("group table is not associative");
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(std::vector<std::size_t>{0}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw InputError("symmetric groups supported for 1 ≤ n ≤ 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  const std::size_t m = perms.size();
  std::vector<std::size_t> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a * m + b] = index.at(c);
    }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order(), m = b.order(), nm = n * m;
  std::vector<std::size_t> t(nm * nm);
  for (std::size_t x = 0; x < nm; ++x)
    for (std::size_t y = 0; y < nm; ++y)
      t[x * nm + y] = a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::size_t>>& gens,
                                           std::vector<std::vector<std::size_t>>* elements) {
  if (gens.empty()) {
    if (elements) *elements = {};
    return trivial();
  }
  const std::size_t n = gens.front().size();
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<std::size_t>> elems{id};
  std::map<std::vector<std::size_t>, std::size_t> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      if (g.size() != n) throw InputError("permutation length mismatch");
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = elems[k][g[i]];
      if (!index.count(c)) {
        index[c] = elems.size();
        elems.push_back(c);
      }
    }
  const std::size_t m = elems.size();
  std::vector<std::size_t> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = elems[a][elems[b][i]];
      t[a * m + b] = index.at(c);
    }
  if (elements) *elements = elems;
  return FiniteGroup(std::move(t));
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_cyclic(std::size_t* generator) const {
  for (std::size_t a = 0; a < order_; ++a)
    if (element_order(a) == order_) {
      if (generator) *generator = a;
      return true;
    }
  return false;
}

bool is_homomorphism(const FiniteGroup& gamma, const FiniteGroup& target, const std::vector<std::size_t>& map) {
  if (map.size() != gamma.order()) return false;
  for (auto x : map)
    if (x >= target.order()) return false;
  for (std::size_t a = 0; a < gamma.order(); ++a)
    for (std::size_t b = 0; b < gamma.order(); ++b)
      if (map[gamma.mul(a, b)] != target.mul(map[a], map[b])) return false;
  return true;
}

namespace {

std::vector<std::size_t> generating_set(const FiniteGroup& g) {
  std::vector<std::size_t> gens;
  std::vector<bool> in_span(g.order(), false);
  in_span[g.identity()] = true;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (in_span[x]) continue;
    gens.push_back(x);
    // Recompute the generated subgroup.
    std::vector<std::size_t> frontier{g.identity()};
    std::fill(in_span.begin(), in_span.end(), false);
    in_span[g.identity()] = true;
    for (std::size_t k = 0; k < frontier.size(); ++k)
      for (auto s : gens) {
        const std::size_t y = g.mul(frontier[k], s);
        if (!in_span[y]) {
          in_span[y] = true;
          frontier.push_back(y);
        }
      }
  }
  return gens;
}

}  // namespace

std::vector<std::vector<std::size_t>> homomorphisms(const FiniteGroup& gamma, const FiniteGroup& target) {
  const auto gens = generating_set(gamma);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> images(gens.size(), 0);
  const std::size_t none = target.order();
  for (;;) {
    std::vector<std::size_t> map(gamma.order(), none);
    map[gamma.identity()] = target.identity();
    std::vector<std::size_t> frontier{gamma.identity()};
    bool consistent = true;
    for (std::size_t k = 0; k < frontier.size() && consistent; ++k)
      for (std::size_t i = 0; i < gens.size() && consistent; ++i) {
        const std::size_t x = gamma.mul(frontier[k], gens[i]);
        const std::size_t fx = target.mul(map[frontier[k]], images[i]);
        if (map[x] == none) {
          map[x] = fx;
          frontier.push_back(x);
        } else if (map[x] != fx) {
          consistent = false;
        }
      }
    if (consistent && is_homomorphism(gamma, target, map)) out.push_back(std::move(map));
    std::size_t pos = 0;
    while (pos < images.size() && ++images[pos] == target.order()) images[pos++] = 0;
    if (pos == images.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gforms
