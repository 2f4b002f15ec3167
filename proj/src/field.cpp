#include "nkwb/field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "nkwb/poly.hpp"

namespace nkwb {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::NoSuchRoot: return "NoSuchRoot";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidStructure: return "InvalidStructure";
    case ErrorKind::SplitnessError: return "SplitnessError";
    case ErrorKind::CharTooSmall: return "CharTooSmall";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::DegenerateSearchInconclusive: return "DegenerateSearchInconclusive";
    case ErrorKind::NotCoalgebraMap: return "NotCoalgebraMap";
    case ErrorKind::NotQcF: return "NotQcF";
    case ErrorKind::DimensionNotOne: return "DimensionNotOne";
    case ErrorKind::NotGrouplike: return "NotGrouplike";
    case ErrorKind::InconsistentChi: return "InconsistentChi";
    case ErrorKind::NotRForm: return "NotRForm";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::TraceZero: return "TraceZero";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NotPivotal: return "NotPivotal";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::unique_ptr<FieldData>>& registry() {
  static std::map<std::string, std::unique_ptr<FieldData>> r;
  return r;
}

Field intern(std::unique_ptr<FieldData> data) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  auto it = reg.find(data->key);
  if (it != reg.end()) return it->second.get();
  Field f = data.get();
  reg.emplace(data->key, std::move(data));
  return f;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % mpz_class(std::to_string(p));
  if (m < 0) m += mpz_class(std::to_string(p));
  return std::stoull(m.get_str());
}

void require_same(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field() || a.field() == nullptr) {
    throw Error(ErrorKind::FieldMismatch,
                "operands live in " + (a.field() ? field_name(a.field()) : std::string("<none>")) +
                    " and " + (b.field() ? field_name(b.field()) : std::string("<none>")));
  }
}

std::size_t ext_degree(Field f) { return f->minpoly.size() - 1; }

std::vector<Scalar> reduce_ext(Field f, Poly p) {
  // p is over the base; reduce modulo the monic minimal polynomial.
  const Poly& m = f->minpoly;
  std::size_t d = ext_degree(f);
  poly_trim(p);
  while (p.size() > d) {
    Scalar lead = p.back();
    std::size_t shift = p.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) p[shift + i] -= lead * m[i];
    p.pop_back();
    poly_trim(p);
  }
  std::vector<Scalar> out(d, Scalar::zero(f->base));
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i];
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field rationals() {
  auto d = std::make_unique<FieldData>();
  d->kind = FieldKind::Rational;
  d->key = "Q";
  return intern(std::move(d));
}

Field prime_field(std::uint64_t p) {
  if (p >= (1ull << 62)) throw Error(ErrorKind::InvalidField, "prime too large: " + std::to_string(p));
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  auto d = std::make_unique<FieldData>();
  d->kind = FieldKind::Prime;
  d->p = p;
  d->key = "F" + std::to_string(p);
  return intern(std::move(d));
}

Field extension(Field base, const std::vector<Scalar>& minpoly, const std::string& gen) {
  if (base == nullptr || base->kind == FieldKind::Extension) {
    throw Error(ErrorKind::InvalidField, "extension base must be Q or a prime field");
  }
  Poly m = minpoly;
  for (const auto& c : m) {
    if (c.field() != base) throw Error(ErrorKind::FieldMismatch, "minimal polynomial not over the base field");
  }
  poly_trim(m);
  if (m.size() < 3) throw Error(ErrorKind::InvalidField, "minimal polynomial must have degree >= 2");
  if (!m.back().is_one()) throw Error(ErrorKind::InvalidField, "minimal polynomial must be monic");
  if (gen.empty()) throw Error(ErrorKind::InvalidField, "generator name must be non-empty");
  auto d = std::make_unique<FieldData>();
  d->kind = FieldKind::Extension;
  d->base = base;
  d->minpoly = m;
  d->gen = gen;
  std::ostringstream key;
  key << base->key << "[" << gen << "]/(";
  for (std::size_t i = 0; i < m.size(); ++i) key << (i ? "," : "") << m[i].str();
  key << ")";
  d->key = key.str();
  return intern(std::move(d));
}

std::uint64_t characteristic(Field f) {
  switch (f->kind) {
    case FieldKind::Rational: return 0;
    case FieldKind::Prime: return f->p;
    case FieldKind::Extension: return characteristic(f->base);
  }
  return 0;
}

std::uint64_t field_order(Field f) {
  switch (f->kind) {
    case FieldKind::Rational: return 0;
    case FieldKind::Prime: return f->p;
    case FieldKind::Extension: {
      std::uint64_t q = field_order(f->base);
      if (q == 0) return 0;
      unsigned __int128 r = 1;
      for (std::size_t i = 0; i < ext_degree(f); ++i) {
        r *= q;
        if (r > static_cast<unsigned __int128>(UINT64_MAX)) return 0;
      }
      return static_cast<std::uint64_t>(r);
    }
  }
  return 0;
}

std::string field_name(Field f) {
  if (f == nullptr) return "<none>";
  switch (f->kind) {
    case FieldKind::Rational: return "Q";
    case FieldKind::Prime: return "F_" + std::to_string(f->p);
    case FieldKind::Extension:
      return field_name(f->base) + "[" + f->gen + "]/(" + poly_str(f->minpoly, f->gen) + ")";
  }
  return "?";
}

Scalar Scalar::zero(Field f) { return from_int(f, 0); }
Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long long v) {
  Scalar s;
  s.field_ = f;
  switch (f->kind) {
    case FieldKind::Rational: s.value_ = mpq_class(static_cast<long>(v)); break;
    case FieldKind::Prime: {
      long long m = v % static_cast<long long>(f->p);
      if (m < 0) m += static_cast<long long>(f->p);
      s.value_ = static_cast<std::uint64_t>(m);
      break;
    }
    case FieldKind::Extension: {
      std::vector<Scalar> c(ext_degree(f), Scalar::zero(f->base));
      c[0] = Scalar::from_int(f->base, v);
      s.value_ = std::move(c);
      break;
    }
  }
  return s;
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  Scalar s;
  s.field_ = f;
  switch (f->kind) {
    case FieldKind::Rational: {
      mpq_class c = q;
      c.canonicalize();
      s.value_ = c;
      break;
    }
    case FieldKind::Prime: {
      std::uint64_t num = mpz_mod_u(q.get_num(), f->p);
      std::uint64_t den = mpz_mod_u(q.get_den(), f->p);
      if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes in " + field_name(f));
      s.value_ = mulmod(num, powmod(den, f->p - 2, f->p), f->p);
      break;
    }
    case FieldKind::Extension: {
      std::vector<Scalar> c(ext_degree(f), Scalar::zero(f->base));
      c[0] = Scalar::from_rational(f->base, q);
      s.value_ = std::move(c);
      break;
    }
  }
  return s;
}

Scalar Scalar::from_coeffs(Field f, std::vector<Scalar> coeffs) {
  if (f->kind != FieldKind::Extension) {
    throw Error(ErrorKind::InvalidArgument, "from_coeffs requires an extension field");
  }
  for (const auto& c : coeffs) {
    if (c.field() != f->base) throw Error(ErrorKind::FieldMismatch, "coefficient not in base field");
  }
  Scalar s;
  s.field_ = f;
  s.value_ = reduce_ext(f, std::move(coeffs));
  return s;
}

bool Scalar::is_zero() const {
  switch (field_->kind) {
    case FieldKind::Rational: return rational() == 0;
    case FieldKind::Prime: return residue() == 0;
    case FieldKind::Extension:
      for (const auto& c : coeffs())
        if (!c.is_zero()) return false;
      return true;
  }
  return false;
}

bool Scalar::is_one() const {
  switch (field_->kind) {
    case FieldKind::Rational: return rational() == 1;
    case FieldKind::Prime: return residue() == 1;
    case FieldKind::Extension: {
      const auto& c = coeffs();
      if (!c[0].is_one()) return false;
      for (std::size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return false;
      return true;
    }
  }
  return false;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  Field f = a.field_;
  Scalar s;
  s.field_ = f;
  switch (f->kind) {
    case FieldKind::Rational: s.value_ = mpq_class(a.rational() + b.rational()); break;
    case FieldKind::Prime: {
      std::uint64_t r = a.residue() + b.residue();
      if (r >= f->p) r -= f->p;
      s.value_ = r;
      break;
    }
    case FieldKind::Extension: {
      std::vector<Scalar> c(a.coeffs().size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] + b.coeffs()[i];
      s.value_ = std::move(c);
      break;
    }
  }
  return s;
}

Scalar operator-(const Scalar& a) {
  Field f = a.field_;
  Scalar s;
  s.field_ = f;
  switch (f->kind) {
    case FieldKind::Rational: s.value_ = mpq_class(-a.rational()); break;
    case FieldKind::Prime: s.value_ = a.residue() == 0 ? 0 : f->p - a.residue(); break;
    case FieldKind::Extension: {
      std::vector<Scalar> c(a.coeffs().size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs()[i];
      s.value_ = std::move(c);
      break;
    }
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.field_->kind == FieldKind::Rational) {
    Scalar s;
    s.field_ = a.field_;
    s.value_ = mpq_class(a.rational() - b.rational());
    return s;
  }
  return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  Field f = a.field_;
  Scalar s;
  s.field_ = f;
  switch (f->kind) {
    case FieldKind::Rational: s.value_ = mpq_class(a.rational() * b.rational()); break;
    case FieldKind::Prime: s.value_ = mulmod(a.residue(), b.residue(), f->p); break;
    case FieldKind::Extension:
      s.value_ = reduce_ext(f, poly_mul(a.coeffs(), b.coeffs()));
      break;
  }
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + field_name(field_));
  Scalar s;
  s.field_ = field_;
  switch (field_->kind) {
    case FieldKind::Rational: s.value_ = mpq_class(1 / rational()); break;
    case FieldKind::Prime: s.value_ = powmod(residue(), field_->p - 2, field_->p); break;
    case FieldKind::Extension: {
      Poly a = coeffs();
      poly_trim(a);
      Poly u, v;
      Poly g = poly_xgcd(a, field_->minpoly, u, v);
      if (poly_degree(g) > 0) {
        throw Error(ErrorKind::ZeroDivisor,
                    str() + " is a zero divisor in " + field_name(field_),
                    poly_str(g, field_->gen));
      }
      s.value_ = reduce_ext(field_, u);
      break;
    }
  }
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a * b.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  switch (a.field_->kind) {
    case FieldKind::Rational: return a.rational() == b.rational();
    case FieldKind::Prime: return a.residue() == b.residue();
    case FieldKind::Extension:
      for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        if (a.coeffs()[i] != b.coeffs()[i]) return false;
      return true;
  }
  return false;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r = Scalar::one(field_);
  Scalar b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string Scalar::str() const {
  if (!field_) return "<invalid>";
  switch (field_->kind) {
    case FieldKind::Rational: return rational().get_str();
    case FieldKind::Prime: return std::to_string(residue());
    case FieldKind::Extension: {
      Poly p = coeffs();
      poly_trim(p);
      if (p.empty()) return "0";
      return poly_str(p, field_->gen);
    }
  }
  return "?";
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

Scalar parse_base(Field f, const std::string& raw) {
  std::string t = strip(raw);
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty scalar");
  if (t[0] == '+') t = t.substr(1);
  for (char c : t) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
      throw Error(ErrorKind::ParseError, "not a rational literal: '" + raw + "'");
    }
  }
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw Error(ErrorKind::ParseError, "not a rational literal: '" + raw + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + raw + "'");
  q.canonicalize();
  return Scalar::from_rational(f, q);
}

}  // namespace

Scalar parse_scalar(Field f, const std::string& text) {
  if (f->kind != FieldKind::Extension) return parse_base(f, text);
  // Sum of terms  c, c*g, c*g^k, g, g^k, with optional signs.
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty scalar");
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if ((c == '+' || c == '-') && i > 0 && s[i - 1] != '^' && s[i - 1] != '*' && s[i - 1] != '/') {
      terms.push_back(cur);
      cur.clear();
    }
    cur += c;
  }
  terms.push_back(cur);
  Field b = f->base;
  std::vector<Scalar> coeffs(ext_degree(f), Scalar::zero(b));
  Poly acc;
  for (auto term : terms) {
    if (term.empty() || term == "+" || term == "-") throw Error(ErrorKind::ParseError, "malformed term in '" + text + "'");
    std::size_t pos = term.find(f->gen);
    Scalar coeff = Scalar::one(b);
    std::size_t power = 0;
    if (pos == std::string::npos) {
      coeff = parse_base(b, term);
    } else {
      std::string head = term.substr(0, pos);
      std::string tail = term.substr(pos + f->gen.size());
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (head.empty() || head == "+") coeff = Scalar::one(b);
      else if (head == "-") coeff = -Scalar::one(b);
      else coeff = parse_base(b, head);
      power = 1;
      if (!tail.empty()) {
        if (tail[0] != '^') throw Error(ErrorKind::ParseError, "malformed power in '" + text + "'");
        try {
          power = std::stoul(tail.substr(1));
        } catch (...) {
          throw Error(ErrorKind::ParseError, "malformed power in '" + text + "'");
        }
      }
    }
    Poly mono(power + 1, Scalar::zero(b));
    mono[power] = coeff;
    acc = poly_add(acc, mono);
  }
  return Scalar::from_coeffs(f, acc);
}

Scalar root_of_unity(Field f, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "order must be positive");
  switch (f->kind) {
    case FieldKind::Rational:
      if (n == 1) return Scalar::one(f);
      if (n == 2) return -Scalar::one(f);
      throw Error(ErrorKind::NoSuchRoot, "Q has no primitive " + std::to_string(n) + "-th root of unity");
    case FieldKind::Prime: {
      std::uint64_t p = f->p;
      if ((p - 1) % n != 0) {
        throw Error(ErrorKind::NoSuchRoot,
                    std::to_string(n) + " does not divide " + std::to_string(p - 1));
      }
      std::vector<std::uint64_t> primes;
      std::uint64_t m = n;
      for (std::uint64_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
          primes.push_back(q);
          while (m % q == 0) m /= q;
        }
      }
      if (m > 1) primes.push_back(m);
      for (std::uint64_t r = 1; r < p; ++r) {
        if (powmod(r, n, p) != 1) continue;
        bool primitive = true;
        for (std::uint64_t q : primes) {
          if (powmod(r, n / q, p) == 1) {
            primitive = false;
            break;
          }
        }
        if (primitive) return Scalar::from_int(f, static_cast<long long>(r));
      }
      throw Error(ErrorKind::NoSuchRoot, "no primitive root found");
    }
    case FieldKind::Extension: {
      std::vector<long long> phi = cyclotomic(n);
      Poly target;
      for (long long c : phi) target.push_back(Scalar::from_int(f->base, c));
      poly_trim(target);
      if (target == f->minpoly) {
        std::vector<Scalar> c(ext_degree(f), Scalar::zero(f->base));
        c[1] = Scalar::one(f->base);
        return Scalar::from_coeffs(f, c);
      }
      try {
        Scalar r = root_of_unity(f->base, n);
        return Scalar::from_coeffs(f, {r});
      } catch (const Error&) {
        throw Error(ErrorKind::NoSuchRoot,
                    "minimal polynomial is not the " + std::to_string(n) + "-th cyclotomic polynomial");
      }
    }
  }
  throw Error(ErrorKind::NoSuchRoot, "unsupported field");
}

Scalar field_arith(ArithOp op, const Scalar& a, const Scalar& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Neg: return -a;
    case ArithOp::Inv: return a.inv();
  }
  return a;
}

}  // namespace nkwb
