#include "nkwb/builtins.hpp"

#include <array>
#include <fstream>
#include <tuple>
#include <sstream>

namespace nkwb {

namespace {

std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::InvalidArgument, "invalid " + what + ": '" + text + "'");
  }
  return std::stoull(text);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// Product in H (x) H from multiplication constants.
Matrix tensor_product(const Matrix& mult, std::size_t n, const Matrix& x, const Matrix& y) {
  Field f = mult.field();
  Matrix out(f, n * n, 1);
  for (std::size_t p = 0; p < n * n; ++p) {
    if (x(p, 0).is_zero()) continue;
    for (std::size_t q = 0; q < n * n; ++q) {
      if (y(q, 0).is_zero()) continue;
      Scalar c = x(p, 0) * y(q, 0);
      std::size_t a = p / n, b = p % n, cc = q / n, d = q % n;
      for (std::size_t r = 0; r < n; ++r) {
        const Scalar& l = mult(r, a * n + cc);
        if (l.is_zero()) continue;
        for (std::size_t s = 0; s < n; ++s) {
          const Scalar& rr = mult(s, b * n + d);
          if (!rr.is_zero()) out(r * n + s, 0) += c * l * rr;
        }
      }
    }
  }
  return out;
}

Matrix product(const Matrix& mult, std::size_t n, const Matrix& x, const Matrix& y) {
  Field f = mult.field();
  Matrix out(f, n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    if (x(a, 0).is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (y(b, 0).is_zero()) continue;
      Scalar c = x(a, 0) * y(b, 0);
      for (std::size_t r = 0; r < n; ++r)
        if (!mult(r, a * n + b).is_zero()) out(r, 0) += c * mult(r, a * n + b);
    }
  }
  return out;
}

Matrix unit_vector(Field f, std::size_t n, std::size_t i) {
  Matrix v(f, n, 1);
  v(i, 0) = Scalar::one(f);
  return v;
}

CoalgebraPtr quiver_builtin(Field f, const std::vector<std::string>& vertices,
                            const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
  Quiver q;
  q.vertices = vertices;
  auto index = [&](const std::string& v) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return i;
    throw Error(ErrorKind::InvalidStructure, "unknown vertex " + v);
  };
  for (const auto& [label, s, t] : arrows) q.arrows.push_back({label, index(s), index(t)});
  return quiver_coalgebra(f, q);
}

std::string taft_label(std::size_t i, std::size_t j) {
  std::string s;
  if (i == 1) s += "g";
  else if (i > 1) s += "g^" + std::to_string(i);
  if (j == 1) s += "x";
  else if (j > 1) s += (i ? " x^" : "x^") + std::to_string(j);
  return s.empty() ? "1" : s;
}

CayleyTable named_group(const std::string& spec, std::vector<std::string>& labels) {
  if (spec == "S3") {
    labels = {"e", "(23)", "(12)", "(123)", "(132)", "(13)"};
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    CayleyTable t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        for (std::size_t r = 0; r < 6; ++r)
          if (perms[r] == c) t[a][b] = r;
      }
    return t;
  }
  if (spec.size() > 1 && spec[0] == 'C' && spec.find_first_not_of("0123456789", 1) == std::string::npos) {
    std::size_t n = parse_count(spec.substr(1), "cyclic group order");
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group of order 0");
    CayleyTable t(n, std::vector<std::size_t>(n));
    labels.clear();
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a)));
      for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return t;
  }
  CayleyTable t = read_cayley_table(spec);
  labels.clear();
  for (std::size_t i = 0; i < t.size(); ++i) labels.push_back("g" + std::to_string(i));
  return t;
}

}  // namespace

CayleyTable parse_cayley_table(const std::string& text) {
  std::istringstream in(text);
  long long n = -1;
  if (!(in >> n) || n <= 0) throw Error(ErrorKind::ParseError, "Cayley table: expected a positive order first");
  CayleyTable t(static_cast<std::size_t>(n), std::vector<std::size_t>(static_cast<std::size_t>(n)));
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) {
      long long v = -1;
      if (!(in >> v)) {
        throw Error(ErrorKind::ParseError, "Cayley table: missing entry at row " + std::to_string(a + 1) +
                                               ", column " + std::to_string(b + 1));
      }
      if (v < 0 || v >= n) {
        throw Error(ErrorKind::ParseError, "Cayley table: entry out of range at row " + std::to_string(a + 1) +
                                               ", column " + std::to_string(b + 1));
      }
      t[a][b] = static_cast<std::size_t>(v);
    }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::ParseError, "Cayley table: trailing data '" + extra + "'");
  return t;
}

CayleyTable read_cayley_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open Cayley table file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_cayley_table(buf.str());
}

std::size_t check_group(const CayleyTable& t) {
  std::size_t n = t.size();
  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = t[a][b] == b && t[b][a] == b;
    if (ok) e = a;
  }
  if (e == n) throw Error(ErrorKind::InvalidStructure, "Cayley table has no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    bool inv = false;
    for (std::size_t b = 0; b < n && !inv; ++b) inv = t[a][b] == e;
    if (!inv) throw Error(ErrorKind::InvalidStructure, "element " + std::to_string(a) + " has no inverse");
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) {
          throw Error(ErrorKind::InvalidStructure, "Cayley table is not associative at (" + std::to_string(a) + ", " +
                                                       std::to_string(b) + ", " + std::to_string(c) + ")");
        }
  }
  return e;
}

CoalgebraPtr comatrix_coalgebra(Field f, std::size_t n) {
  std::vector<std::string> labels;
  std::vector<ComulEntry> entries;
  std::vector<Scalar> counit;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("x" + std::to_string(i + 1) + std::to_string(j + 1));
      counit.push_back(i == j ? Scalar::one(f) : Scalar::zero(f));
      for (std::size_t k = 0; k < n; ++k) entries.push_back({i * n + j, i * n + k, k * n + j, Scalar::one(f)});
    }
  return make_coalgebra(f, labels, entries, counit);
}

HopfPtr taft_algebra(Field f, std::size_t n, const Scalar& zeta) {
  std::size_t d = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return j * n + i; };
  std::vector<std::string> labels(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels[idx(i, j)] = taft_label(i, j);
  Matrix mult(f, d, d * d);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e) {
          // (g^a x^b)(g^c x^e) = zeta^{bc} g^{a+c} x^{b+e}
          if (b + e >= n) continue;
          mult(idx((a + c) % n, b + e), idx(a, b) * d + idx(c, e)) = zeta.pow(static_cast<long long>(b * c));
        }
  Matrix g = unit_vector(f, d, idx(1 % n, 0));
  Matrix x = unit_vector(f, d, idx(0, 1));
  Matrix one = unit_vector(f, d, idx(0, 0));
  Matrix dg = kron(g, g);
  Matrix dx = kron(x, one) + kron(g, x);
  Matrix comul(f, d * d, d);
  Matrix counit(f, 1, d);
  Matrix antipode(f, d, d);
  Matrix ginv = unit_vector(f, d, idx((n - 1) % n, 0));
  Matrix sx = -product(mult, d, ginv, x);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix delta = kron(one, one);
      Matrix s = one;
      for (std::size_t k = 0; k < i; ++k) delta = tensor_product(mult, d, delta, dg);
      for (std::size_t k = 0; k < j; ++k) delta = tensor_product(mult, d, delta, dx);
      // S(g^i x^j) = S(x)^j S(g)^i
      for (std::size_t k = 0; k < j; ++k) s = product(mult, d, s, sx);
      for (std::size_t k = 0; k < i; ++k) s = product(mult, d, s, ginv);
      std::size_t col = idx(i, j);
      for (std::size_t r = 0; r < d * d; ++r) comul(r, col) = delta(r, 0);
      for (std::size_t r = 0; r < d; ++r) antipode(r, col) = s(r, 0);
      counit(0, col) = j == 0 ? Scalar::one(f) : Scalar::zero(f);
    }
  auto coalg = make_coalgebra(f, labels, comul, counit);
  return std::make_shared<const HopfAlgebra>(coalg, mult, one, antipode);
}

HopfPtr group_algebra(Field f, const CayleyTable& t, const std::vector<std::string>& labels) {
  std::size_t e = check_group(t);
  std::size_t n = t.size();
  Matrix comul(f, n * n, n), counit(f, 1, n), mult(f, n, n * n), antipode(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    comul(a * n + a, a) = Scalar::one(f);
    counit(0, a) = Scalar::one(f);
    for (std::size_t b = 0; b < n; ++b) {
      mult(t[a][b], a * n + b) = Scalar::one(f);
      if (t[a][b] == e) antipode(b, a) = Scalar::one(f);
    }
  }
  auto coalg = make_coalgebra(f, labels, comul, counit);
  return std::make_shared<const HopfAlgebra>(coalg, mult, unit_vector(f, n, e), antipode);
}

HopfPtr dual_group_algebra(Field f, const CayleyTable& t, const std::vector<std::string>& labels) {
  std::size_t e = check_group(t);
  std::size_t n = t.size();
  std::vector<std::string> dual_labels;
  for (const auto& l : labels) dual_labels.push_back("δ" + l);
  Matrix comul(f, n * n, n), counit(f, 1, n), mult(f, n, n * n), antipode(f, n, n), unit(f, n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    unit(a, 0) = Scalar::one(f);
    mult(a, a * n + a) = Scalar::one(f);
    for (std::size_t b = 0; b < n; ++b) {
      // delta_{t[a][b]} has the term delta_a (x) delta_b
      comul(a * n + b, t[a][b]) = Scalar::one(f);
      if (t[a][b] == e) antipode(b, a) = Scalar::one(f);
    }
  }
  counit(0, e) = Scalar::one(f);
  auto coalg = make_coalgebra(f, dual_labels, comul, counit);
  return std::make_shared<const HopfAlgebra>(coalg, mult, unit, antipode);
}

std::vector<std::string> builtin_names() {
  return {"k2", "star:N", "example0:N", "mat:N", "sweedler", "taft:N:P", "group:SPEC", "dualgroup:SPEC"};
}

BuiltinObject builtin(const std::string& name, Field field) {
  BuiltinObject out;
  out.name = name;
  Field q = field ? field : rationals();
  auto parts = split(name, ':');
  const std::string& kind = parts[0];
  auto need = [&](std::size_t count) {
    if (parts.size() != count) throw Error(ErrorKind::InvalidArgument, "builtin '" + name + "' has the wrong number of parameters");
  };
  if (kind == "k2") {
    need(1);
    out.coalgebra = quiver_builtin(q, {"u", "v"}, {{"e", "u", "v"}});
  } else if (kind == "star") {
    need(2);
    std::size_t n = parse_count(parts[1], "star size");
    std::vector<std::string> vertices = {"w", "w'"};
    std::vector<std::tuple<std::string, std::string, std::string>> arrows = {{"e0", "w", "w'"}};
    for (std::size_t i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) arrows.emplace_back("f" + std::to_string(i), "v" + std::to_string(i), "w");
    out.coalgebra = quiver_builtin(q, vertices, arrows);
  } else if (kind == "example0") {
    need(2);
    std::size_t n = parse_count(parts[1], "arrow count");
    std::vector<std::tuple<std::string, std::string, std::string>> arrows = {{"e0", "u", "v"}};
    for (std::size_t i = 1; i <= n; ++i) arrows.emplace_back("p" + std::to_string(i), "v", "w");
    out.coalgebra = quiver_builtin(q, {"u", "v", "w"}, arrows);
  } else if (kind == "mat") {
    need(2);
    std::size_t n = parse_count(parts[1], "matrix size");
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "mat:0 is empty");
    out.coalgebra = comatrix_coalgebra(q, n);
  } else if (kind == "sweedler") {
    need(1);
    if (characteristic(q) == 2) throw Error(ErrorKind::InvalidArgument, "sweedler needs characteristic other than 2");
    out.hopf = taft_algebra(q, 2, -Scalar::one(q));
  } else if (kind == "taft") {
    need(3);
    std::size_t n = parse_count(parts[1], "Taft order");
    std::uint64_t p = parse_count(parts[2], "prime");
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "Taft order must be at least 2");
    Field fp = prime_field(p);
    if ((p - 1) % n != 0) {
      throw Error(ErrorKind::NoSuchRoot, std::to_string(n) + " does not divide " + std::to_string(p) + " - 1");
    }
    out.hopf = taft_algebra(fp, n, root_of_unity(fp, n));
  } else if (kind == "group" || kind == "dualgroup") {
    if (parts.size() < 2) throw Error(ErrorKind::InvalidArgument, "builtin '" + name + "' needs a group");
    std::string spec = name.substr(kind.size() + 1);
    std::vector<std::string> labels;
    CayleyTable t = named_group(spec, labels);
    out.hopf = kind == "group" ? group_algebra(q, t, labels) : dual_group_algebra(q, t, labels);
  } else {
    throw Error(ErrorKind::UnknownBuiltin, "unknown builtin '" + name + "'");
  }
  if (out.hopf) out.coalgebra = out.hopf->coalgebra();
  return out;
}

}  // namespace nkwb
