#pragma once

#include <string>

#include <json.hpp>

#include "nkwb/hopf.hpp"

namespace nkwb {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "nkwb/1";

// Field: {"kind":"Q"} | {"kind":"Fp","p":13} |
//        {"kind":"ext","base":{...},"minpoly":[c0,...,1],"gen":"i"}.
Field field_from_json(const json& j);
json field_to_json(Field f);
/// Command-line form: "Q", "F13", "Fp:13", or an inline field JSON object.
Field parse_field_flag(const std::string& text);

Scalar scalar_from_json(Field f, const json& j);

// Coalgebra: {"field", "basis":[labels], "comul":[[i,j,k,"c"],...],
// "counit":["c",...]} with Delta(b_i) containing c b_j (x) b_k. A quiver
// {"field", "vertices":[...], "arrows":[[label, source, target],...]} is
// accepted in place of explicit structure constants.
// Hopf algebra adds "mul":[[i,j,k,"c"],...] for b_i b_j containing c b_k,
// "unit":["c",...] and a dense "antipode" with row i, column j the
// coefficient of b_i in S(b_j).
// Comodule: {"coalgebra": inline object or path, "basis":[...],
// "coaction":[[a,b,k,"c"],...]} with delta(m_a) containing c m_b (x) c_k.
// `field` replaces the declared field when non-null.
CoalgebraPtr coalgebra_from_json(const json& j, Field field = nullptr);
HopfPtr hopf_from_json(const json& j, Field field = nullptr);
Comodule comodule_from_json(const json& j, const std::string& base_dir = ".", Field field = nullptr);
/// Dense matrix of scalars, rows first.
Matrix matrix_from_json(Field f, const json& j);

json coalgebra_to_json(const Coalgebra& c);
json hopf_to_json(const HopfAlgebra& h);
json comodule_to_json(const Comodule& m);
json matrix_to_json(const Matrix& m);

/// Parses text as JSON; syntax errors become ParseError with line and column.
json parse_json_text(const std::string& text, const std::string& source = "input");
json read_json_file(const std::string& path);

struct LoadedObject {
  std::string name;
  CoalgebraPtr coalgebra;
  HopfPtr hopf;  // null when the input carries no Hopf structure
};
/// "builtin:NAME" or a bare builtin name resolves through the builtin
/// registry; anything else is read as a JSON file.
LoadedObject load_object(const std::string& spec, Field field = nullptr);

}  // namespace nkwb
