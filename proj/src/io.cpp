#include "nkwb/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nkwb/builtins.hpp"

namespace nkwb {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::size_t index_of(const json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad(where + ": index must be a non-negative integer");
  auto v = j.get<std::size_t>();
  if (v >= bound) bad(where + ": index " + std::to_string(v) + " out of range");
  return v;
}

std::vector<std::string> labels_of(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": \"basis\" must be an array of labels");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) bad(where + ": basis labels must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Matrix row_vector(Field f, const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) bad(where + " must have " + std::to_string(n) + " entries");
  Matrix out(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) out(0, i) = scalar_from_json(f, j[i]);
  return out;
}

// Entries [i, j, k, c]: comultiplication layout (row j * n + k, column i)
// or multiplication layout (row k, column i * n + j).
Matrix triples(Field f, const json& j, std::size_t n, bool pair_column, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array of [i, j, k, coeff]");
  Matrix out = pair_column ? Matrix(f, n, n * n) : Matrix(f, n * n, n);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) bad(where + ": each entry is [i, j, k, coeff]");
    std::size_t a = index_of(e[0], n, where), b = index_of(e[1], n, where), c = index_of(e[2], n, where);
    Scalar s = scalar_from_json(f, e[3]);
    if (pair_column) out(c, a * n + b) += s;
    else out(b * n + c, a) += s;
  }
  return out;
}

json triples_to_json(const Matrix& m, bool pair_column) {
  json out = json::array();
  std::size_t n = pair_column ? m.rows() : m.cols();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar& s = pair_column ? m(c, a * n + b) : m(b * n + c, a);
        if (!s.is_zero()) out.push_back(json::array({a, b, c, s.str()}));
      }
  return out;
}

json row_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.cols(); ++i) out.push_back(m(0, i).str());
  return out;
}

Field declared_field(const json& j, Field field) {
  if (field) return field;
  if (!j.is_object()) bad("expected a JSON object");
  return j.contains("field") ? field_from_json(j.at("field")) : rationals();
}

}  // namespace

Field field_from_json(const json& j) {
  if (j.is_string()) return parse_field_flag(j.get<std::string>());
  std::string kind = need(j, "kind", "field").get<std::string>();
  if (kind == "Q") return rationals();
  if (kind == "Fp") {
    const json& p = need(j, "p", "field");
    if (!p.is_number_integer() || p.get<long long>() < 2) bad("field: \"p\" must be an integer >= 2");
    return prime_field(p.get<std::uint64_t>());
  }
  if (kind == "ext") {
    Field base = field_from_json(need(j, "base", "field"));
    const json& mp = need(j, "minpoly", "field");
    if (!mp.is_array()) bad("field: \"minpoly\" must be an array");
    std::vector<Scalar> coeffs;
    for (const auto& c : mp) coeffs.push_back(scalar_from_json(base, c));
    std::string gen = j.contains("gen") ? j.at("gen").get<std::string>() : "t";
    return extension(base, coeffs, gen);
  }
  bad("field: unknown kind \"" + kind + "\"");
}

json field_to_json(Field f) {
  switch (f->kind) {
    case FieldKind::Rational:
      return {{"kind", "Q"}};
    case FieldKind::Prime:
      return {{"kind", "Fp"}, {"p", f->p}};
    case FieldKind::Extension: {
      json mp = json::array();
      for (const auto& c : f->minpoly) mp.push_back(c.str());
      return {{"kind", "ext"}, {"base", field_to_json(f->base)}, {"minpoly", mp}, {"gen", f->gen}};
    }
  }
  return {};
}

Field parse_field_flag(const std::string& text) {
  if (text == "Q" || text == "q") return rationals();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0) digits = text.substr(3);
  else if (text.rfind("F_", 0) == 0) digits = text.substr(2);
  else if (!text.empty() && (text[0] == 'F' || text[0] == 'f')) digits = text.substr(1);
  if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
    return prime_field(std::stoull(digits));
  if (!text.empty() && text[0] == '{') return field_from_json(parse_json_text(text, "--field"));
  throw Error(ErrorKind::InvalidField, "unrecognized field \"" + text + "\" (use Q, F13, Fp:13 or a field JSON object)");
}

Scalar scalar_from_json(Field f, const json& j) {
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
  if (j.is_string()) return parse_scalar(f, j.get<std::string>());
  bad("coefficients must be integers or strings");
}

CoalgebraPtr coalgebra_from_json(const json& j, Field field) {
  Field f = declared_field(j, field);
  if (j.contains("arrows") || j.contains("vertices")) {
    Quiver q;
    q.vertices = labels_of(need(j, "vertices", "quiver"), "quiver");
    const json& arrows = need(j, "arrows", "quiver");
    if (!arrows.is_array()) bad("quiver: \"arrows\" must be an array");
    auto vertex = [&](const json& v) -> std::size_t {
      if (v.is_string()) {
        for (std::size_t i = 0; i < q.vertices.size(); ++i)
          if (q.vertices[i] == v.get<std::string>()) return i;
        bad("quiver: unknown vertex \"" + v.get<std::string>() + "\"");
      }
      return index_of(v, q.vertices.size(), "quiver");
    };
    for (const auto& a : arrows) {
      if (!a.is_array() || a.size() != 3 || !a[0].is_string()) bad("quiver: each arrow is [label, source, target]");
      q.arrows.push_back({a[0].get<std::string>(), vertex(a[1]), vertex(a[2])});
    }
    return quiver_coalgebra(f, q);
  }
  auto labels = labels_of(need(j, "basis", "coalgebra"), "coalgebra");
  std::size_t n = labels.size();
  Matrix comul = triples(f, need(j, "comul", "coalgebra"), n, false, "comul");
  Matrix counit = row_vector(f, need(j, "counit", "coalgebra"), n, "counit");
  return std::make_shared<const Coalgebra>(f, labels, comul, counit);
}

HopfPtr hopf_from_json(const json& j, Field field) {
  CoalgebraPtr c = coalgebra_from_json(j, field);
  Field f = c->field();
  std::size_t n = c->dim();
  Matrix mult = triples(f, need(j, "mul", "hopf"), n, true, "mul");
  Matrix unit = row_vector(f, need(j, "unit", "hopf"), n, "unit").transpose();
  Matrix antipode = matrix_from_json(f, need(j, "antipode", "hopf"));
  if (antipode.rows() != n || antipode.cols() != n) bad("antipode must be " + std::to_string(n) + " x " + std::to_string(n));
  return std::make_shared<const HopfAlgebra>(c, mult, unit, antipode);
}

Comodule comodule_from_json(const json& j, const std::string& base_dir, Field field) {
  const json& cj = need(j, "coalgebra", "comodule");
  CoalgebraPtr c;
  if (cj.is_string()) {
    std::string ref = cj.get<std::string>();
    std::filesystem::path p(ref);
    if (p.is_relative() && std::filesystem::exists(std::filesystem::path(base_dir) / p)) ref = (std::filesystem::path(base_dir) / p).string();
    c = load_object(ref, field).coalgebra;
  } else {
    c = coalgebra_from_json(cj, field);
  }
  auto labels = labels_of(need(j, "basis", "comodule"), "comodule");
  std::size_t d = labels.size(), n = c->dim();
  Side side = Side::Right;
  if (j.contains("side")) {
    std::string s = j.at("side").get<std::string>();
    if (s == "left") side = Side::Left;
    else if (s != "right") bad("comodule: \"side\" is left or right");
  }
  Matrix rho(c->field(), d * n, d);
  const json& co = need(j, "coaction", "comodule");
  if (!co.is_array()) bad("coaction must be an array of [a, b, k, coeff]");
  for (const auto& e : co) {
    if (!e.is_array() || e.size() != 4) bad("coaction: each entry is [a, b, k, coeff]");
    std::size_t a = index_of(e[0], d, "coaction"), b = index_of(e[1], d, "coaction"), k = index_of(e[2], n, "coaction");
    Scalar s = scalar_from_json(c->field(), e[3]);
    if (side == Side::Right) rho(b * n + k, a) += s;
    else rho(k * d + b, a) += s;
  }
  return Comodule(c, side, rho, labels);
}

Matrix matrix_from_json(Field f, const json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  Matrix out(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = scalar_from_json(f, j[r][c]);
  }
  return out;
}

json coalgebra_to_json(const Coalgebra& c) {
  json out;
  out["schema"] = kSchema;
  out["type"] = "coalgebra";
  out["field"] = field_to_json(c.field());
  out["basis"] = c.labels();
  out["comul"] = triples_to_json(c.comul(), false);
  out["counit"] = row_to_json(c.counit());
  return out;
}

json hopf_to_json(const HopfAlgebra& h) {
  json out = coalgebra_to_json(*h.coalgebra());
  out["type"] = "hopf";
  out["mul"] = triples_to_json(h.mult(), true);
  out["unit"] = row_to_json(h.unit().transpose());
  out["antipode"] = matrix_to_json(h.antipode());
  return out;
}

json comodule_to_json(const Comodule& m) {
  json out;
  out["schema"] = kSchema;
  out["type"] = "comodule";
  out["side"] = m.side() == Side::Right ? "right" : "left";
  out["coalgebra"] = coalgebra_to_json(*m.coalgebra());
  out["basis"] = m.labels();
  json co = json::array();
  std::size_t n = m.coalgebra()->dim(), d = m.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& s = m.side() == Side::Right ? m.coaction()(b * n + k, a) : m.coaction()(k * d + b, a);
        if (!s.is_zero()) co.push_back(json::array({a, b, k, s.str()}));
      }
  out["coaction"] = co;
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(row);
  }
  return out;
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line and column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON", e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

LoadedObject load_object(const std::string& spec, Field field) {
  std::string name = spec;
  bool force_builtin = name.rfind("builtin:", 0) == 0;
  if (force_builtin) name = name.substr(8);
  if (force_builtin || !std::filesystem::exists(name)) {
    BuiltinObject b = builtin(name, field);
    return {b.name, b.coalgebra, b.hopf};
  }
  json j = read_json_file(name);
  LoadedObject out;
  out.name = name;
  try {
    if (j.contains("mul") || j.value("type", "") == "hopf") {
      out.hopf = hopf_from_json(j, field);
      out.coalgebra = out.hopf->coalgebra();
    } else {
      out.coalgebra = coalgebra_from_json(j, field);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, name + ": " + e.what());
  }
  return out;
}

}  // namespace nkwb
