#include "json_io.hpp"

#include <limits>
#include <string_view>

#include "gforms/error.hpp"

namespace gforms::cli {

std::string schema_name(const std::string& what) { return std::string(kSchemaPrefix) + what + "/v1"; }

json to_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

json to_json(const Rational& q) { return to_string(q); }

Integer integer_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError(where + ": expected an integer");
}

Rational rational_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(integer_from(j, where));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError(where + ": expected a rational (integer or \"p/q\" string)");
}

std::int64_t int64_from(const json& j, const std::string& where) {
  const Integer n = integer_from(j, where);
  if (n < std::numeric_limits<std::int64_t>::min() || n > std::numeric_limits<std::int64_t>::max())
    throw InputError(where + ": integer out of range");
  return static_cast<std::int64_t>(n);
}

std::size_t index_from(const json& j, const std::string& where) {
  const auto n = int64_from(j, where);
  if (n < 0) throw InputError(where + ": expected a nonnegative index");
  return static_cast<std::size_t>(n);
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

namespace {

const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  return j;
}

std::vector<std::size_t> index_list(const json& j, const std::string& where) {
  std::vector<std::size_t> out;
  for (const auto& x : array_at(j, where)) out.push_back(index_from(x, where));
  return out;
}

}  // namespace

json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

IntVector int_vector_from(const json& j, const std::string& where) {
  IntVector v;
  for (const auto& x : array_at(j, where)) v.push_back(integer_from(x, where));
  return v;
}

IntMatrix int_matrix_from(const json& j, const std::string& where) {
  array_at(j, where);
  std::vector<Integer> data;
  std::size_t cols = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto row = int_vector_from(j[i], where);
    if (i == 0) cols = row.size();
    if (row.size() != cols) throw InputError(where + ": ragged matrix");
    data.insert(data.end(), row.begin(), row.end());
  }
  return IntMatrix(j.size(), cols, std::move(data));
}

json to_json(const RatMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    a.push_back(std::move(row));
  }
  return a;
}

json to_json(const FiniteAbelianGroup& g) {
  return json{{"invariant_factors", to_json(IntVector(g.invariant_factors))}, {"free_rank", g.free_rank}};
}

FiniteGroup group_from(const json& j) {
  if (!j.is_object()) throw InputError("group: expected an object");
  if (j.contains("cyclic")) return FiniteGroup::cyclic(index_from(j["cyclic"], "group.cyclic"));
  if (j.contains("symmetric")) {
    const auto n = index_from(j["symmetric"], "group.symmetric");
    if (n > 6) throw InputError("group.symmetric: n ≤ 6 supported");
    return FiniteGroup::symmetric(n);
  }
  if (j.contains("table")) {
    const auto& rows = array_at(j["table"], "group.table");
    std::vector<std::size_t> table;
    for (const auto& r : rows) {
      const auto row = index_list(r, "group.table");
      if (row.size() != rows.size()) throw InputError("group.table must be square");
      table.insert(table.end(), row.begin(), row.end());
    }
    return FiniteGroup(std::move(table));
  }
  if (j.contains("permutations")) {
    std::vector<std::vector<std::size_t>> perms;
    for (const auto& p : array_at(j["permutations"], "group.permutations"))
      perms.push_back(index_list(p, "group.permutations"));
    return FiniteGroup::from_permutations(perms);
  }
  if (j.contains("product")) {
    const auto& parts = array_at(j["product"], "group.product");
    if (parts.empty()) return FiniteGroup::trivial();
    FiniteGroup g = group_from(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) g = FiniteGroup::direct_product(g, group_from(parts[i]));
    return g;
  }
  throw InputError("group: expected one of cyclic, symmetric, table, permutations, product");
}

json group_table(const FiniteGroup& g) {
  json rows = json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  return json{{"table", std::move(rows)}};
}

namespace {

std::vector<std::string> split_components(const std::string& type) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : type) {
    if (ch == '+' || ch == ' ') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  if (parts.empty()) throw InputError("empty root datum type");
  return parts;
}

}  // namespace

BasedRootDatum root_datum_from(const json& j) {
  if (!j.is_object()) throw InputError("root datum: expected an object");
  if (j.contains("type")) {
    if (!j["type"].is_string()) throw InputError("type: expected a string such as \"A2\" or \"A1+T1\"");
    const Isogeny iso = j.contains("isogeny") ? parse_isogeny(j["isogeny"].get<std::string>())
                                              : Isogeny::simply_connected;
    std::optional<BasedRootDatum> out;
    for (const auto& part : split_components(j["type"].get<std::string>())) {
      auto piece = build_root_datum(CartanType::parse(part), iso);
      out = out ? direct_sum(*out, piece) : piece;
    }
    return *out;
  }
  const auto rank = index_from(require(j, "rank"), "rank");
  std::vector<IntVector> roots, coroots;
  for (const auto& r : array_at(require(j, "simple_roots"), "simple_roots")) roots.push_back(int_vector_from(r, "simple_roots"));
  for (const auto& r : array_at(require(j, "simple_coroots"), "simple_coroots"))
    coroots.push_back(int_vector_from(r, "simple_coroots"));
  return from_simple_system(rank, roots, coroots);
}

json to_json(const BasedRootDatum& rd) {
  json simple_roots = json::array(), simple_coroots = json::array();
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
    simple_roots.push_back(to_json(rd.simple_root(i)));
    simple_coroots.push_back(to_json(rd.simple_coroot(i)));
  }
  json roots = json::array(), coroots = json::array();
  for (std::size_t i = 0; i < rd.datum.root_count(); ++i) {
    roots.push_back(to_json(rd.datum.roots[i]));
    coroots.push_back(to_json(rd.datum.coroots[i]));
  }
  return json{{"rank", rd.rank()},
              {"simple_roots", std::move(simple_roots)},
              {"simple_coroots", std::move(simple_coroots)},
              {"roots", std::move(roots)},
              {"coroots", std::move(coroots)}};
}

std::shared_ptr<const GaloisField> field_from(const json& j) {
  if (j.is_string() && j.get<std::string>() == "rationals")
    return std::make_shared<const GaloisField>(GaloisField::rationals());
  const auto& kind = require(j, "kind");
  if (!kind.is_string()) throw InputError("field.kind: expected a string");
  const auto k = kind.get<std::string>();
  if (k == "rationals") return std::make_shared<const GaloisField>(GaloisField::rationals());
  if (k == "quadratic") return std::make_shared<const GaloisField>(GaloisField::quadratic(integer_from(require(j, "d"), "field.d")));
  if (k == "cyclotomic") {
    const auto n = index_from(require(j, "n"), "field.n");
    if (n > 1000) throw InputError("field.n too large");
    return std::make_shared<const GaloisField>(GaloisField::cyclotomic(static_cast<unsigned>(n)));
  }
  throw InputError("field.kind must be rationals, quadratic or cyclotomic");
}

json to_json(const GaloisField& k) {
  switch (k.kind()) {
    case GaloisField::Kind::rationals:
      return json{{"kind", "rationals"}};
    case GaloisField::Kind::quadratic:
      return json{{"kind", "quadratic"}, {"d", to_json(k.parameter())}};
    case GaloisField::Kind::cyclotomic:
      return json{{"kind", "cyclotomic"}, {"n", to_json(k.parameter())}};
  }
  return {};
}

GaloisExtension extension_from(const json& j) {
  auto field = field_from(require(j, "field"));
  if (j.contains("subgroup")) return GaloisExtension(field, index_list(j["subgroup"], "subgroup"));
  return GaloisExtension(field);
}

json to_json(const GaloisExtension& ext) {
  json labels = json::array();
  for (auto g : ext.subgroup()) labels.push_back(ext.field().automorphism_label(g));
  return json{{"field", to_json(ext.field())}, {"subgroup", ext.subgroup()}, {"automorphism_labels", std::move(labels)}};
}

FieldElement element_from(const GaloisField& k, const json& j, const std::string& where) {
  if (!j.is_array()) return k.from_rational(rational_from(j, where));
  if (j.size() != k.degree())
    throw InputError(where + ": field element needs " + std::to_string(k.degree()) + " coordinates");
  FieldElement x;
  for (const auto& c : j) x.coords.push_back(rational_from(c, where));
  return x;
}

json to_json(const FieldElement& x) {
  json a = json::array();
  for (const auto& c : x.coords) a.push_back(to_json(c));
  return a;
}

json to_json(const std::vector<FieldElement>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

namespace {

// A table of `count` entries, either flat or as rows of equal length.
std::vector<const json*> table_items(const json& j, std::size_t count, const std::string& where) {
  const auto& outer = array_at(j, where);
  std::vector<const json*> items;
  if (outer.size() == count) {
    for (const auto& x : outer) items.push_back(&x);
    return items;
  }
  for (const auto& row : outer)
    for (const auto& x : array_at(row, where)) items.push_back(&x);
  if (items.size() != count) throw InputError(where + ": expected " + std::to_string(count) + " entries");
  return items;
}

std::vector<FieldElement> elements_from(const GaloisField& k, const json& j, std::size_t count, const std::string& where) {
  std::vector<FieldElement> out;
  for (const auto* x : table_items(j, count, where)) out.push_back(element_from(k, *x, where));
  return out;
}

}  // namespace

FieldCochain2 field_cochain2_from(const GaloisExtension& ext, const json& j) {
  const auto n = ext.group().order();
  return elements_from(ext.field(), j, n * n, "cocycle");
}

FieldCochain1 field_cochain1_from(const GaloisExtension& ext, const json& j) {
  return elements_from(ext.field(), j, ext.group().order(), "cochain");
}

FieldMatrix field_matrix_from(const GaloisField& k, const json& j, const std::string& where) {
  const auto& rows = array_at(j, where);
  FieldMatrix m;
  m.rows = rows.size();
  m.cols = m.rows == 0 ? 0 : array_at(rows[0], where).size();
  for (const auto& r : rows) {
    if (array_at(r, where).size() != m.cols) throw InputError(where + ": ragged matrix");
    for (const auto& x : r) m.entries.push_back(element_from(k, x, where));
  }
  return m;
}

json to_json(const FieldMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

GModule module_from(const json& j) {
  FiniteGroup gamma = group_from(require(j, "gamma"));
  std::vector<std::int64_t> moduli;
  for (const auto& m : array_at(require(j, "moduli"), "moduli")) moduli.push_back(int64_from(m, "moduli"));
  if (!j.contains("action")) return GModule::trivial(std::move(gamma), std::move(moduli));
  std::vector<IntMatrix> action;
  for (const auto& m : array_at(j["action"], "action")) action.push_back(int_matrix_from(m, "action"));
  return GModule(std::move(gamma), std::move(moduli), std::move(action));
}

json to_json(const GModule& m) {
  json action = json::array();
  for (std::size_t g = 0; g < m.gamma().order(); ++g) action.push_back(to_json(m.action(g)));
  return json{{"gamma", group_table(m.gamma())}, {"moduli", m.moduli()}, {"action", std::move(action)}};
}

Cochain2 cochain2_from(const GModule& m, const json& j) {
  const auto n = m.gamma().order();
  Cochain2 z;
  for (const auto* x : table_items(j, n * n, "cocycle")) {
    if (x->is_array()) {
      z.push_back(m.encode(int_vector_from(*x, "cocycle")));
    } else {
      const auto e = index_from(*x, "cocycle");
      if (e >= m.order()) throw InputError("cocycle: element index out of range");
      z.push_back(e);
    }
  }
  return z;
}

json to_json(const std::vector<Elem>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

GGroup ggroup_from(const json& j) {
  FiniteGroup gamma = group_from(require(j, "gamma"));
  FiniteGroup group = group_from(require(j, "group"));
  if (!j.contains("action")) return GGroup::trivial_action(std::move(gamma), std::move(group));
  std::vector<std::vector<std::size_t>> action;
  for (const auto& p : array_at(j["action"], "action")) action.push_back(index_list(p, "action"));
  return GGroup(std::move(gamma), std::move(group), std::move(action));
}

json to_json(const GGroup& g) {
  return json{{"gamma", group_table(g.gamma())}, {"group", group_table(g.group())}, {"action", g.action()}};
}

json to_json(const BrauerClass& c) {
  json inv = json::object();
  for (const auto& [place, value] : c.invariants()) inv[place.to_string()] = to_json(value);
  json ram = json::array();
  for (const auto& p : c.ramified_places()) ram.push_back(p.to_string());
  return json{{"invariants", std::move(inv)}, {"ramified_places", std::move(ram)}, {"split", c.is_split()}};
}

}  // namespace gforms::cli
