#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "gforms/classifier.hpp"
#include "gforms/descent.hpp"

namespace gforms::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaPrefix = "gforms/";

std::string schema_name(const std::string& what);

// Scalars. Integers are written as numbers when they fit in 64 bits and as
// decimal strings otherwise; rationals always as "p/q" strings.
json to_json(const Integer& n);
json to_json(const Rational& q);
Integer integer_from(const json& j, const std::string& where);
Rational rational_from(const json& j, const std::string& where);
std::int64_t int64_from(const json& j, const std::string& where);
std::size_t index_from(const json& j, const std::string& where);

const json& require(const json& obj, const char* key);

json to_json(const IntVector& v);
json to_json(const IntMatrix& m);
IntVector int_vector_from(const json& j, const std::string& where);
IntMatrix int_matrix_from(const json& j, const std::string& where);
json to_json(const RatMatrix& m);
json to_json(const FiniteAbelianGroup& g);

// Groups: {"cyclic": n}, {"symmetric": n}, {"table": [[...]]},
// {"permutations": [[...]]} or {"product": [g, h]}.
FiniteGroup group_from(const json& j);
json group_table(const FiniteGroup& g);

// Root data: {"type": "A2" or "A1+T1", "isogeny": "sc"|"adjoint"} or an
// explicit {"rank", "simple_roots", "simple_coroots"}.
BasedRootDatum root_datum_from(const json& j);
json to_json(const BasedRootDatum& rd);

// Fields and extensions: {"field": {"kind": "quadratic", "d": -1},
// "subgroup": [...]}; field elements are arrays of rational coordinates.
std::shared_ptr<const GaloisField> field_from(const json& j);
json to_json(const GaloisField& k);
GaloisExtension extension_from(const json& j);
json to_json(const GaloisExtension& ext);
FieldElement element_from(const GaloisField& k, const json& j, const std::string& where);
json to_json(const FieldElement& x);
FieldCochain2 field_cochain2_from(const GaloisExtension& ext, const json& j);
FieldCochain1 field_cochain1_from(const GaloisExtension& ext, const json& j);
json to_json(const std::vector<FieldElement>& xs);
FieldMatrix field_matrix_from(const GaloisField& k, const json& j, const std::string& where);
json to_json(const FieldMatrix& m);

// Finite modules: {"gamma": group, "moduli": [...], "action": [matrices]};
// the action may be omitted for the trivial module.
GModule module_from(const json& j);
json to_json(const GModule& m);
Cochain2 cochain2_from(const GModule& m, const json& j);
json to_json(const std::vector<Elem>& v);

// Γ-groups: {"gamma": group, "group": group, "action": [perm per γ]}.
GGroup ggroup_from(const json& j);
json to_json(const GGroup& g);

json to_json(const BrauerClass& c);

}  // namespace gforms::cli
