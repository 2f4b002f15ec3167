#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "nkwb/error.hpp"

namespace nkwb {

enum class FieldKind { Rational, Prime, Extension };

struct FieldData;
/// Fields are interned: two handles compare equal iff the fields are equal.
using Field = const FieldData*;

class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long long v);
  static Scalar from_rational(Field f, const mpq_class& q);
  /// Extension element from its coefficients over the base field.
  static Scalar from_coeffs(Field f, std::vector<Scalar> coeffs);

  Field field() const { return field_; }
  bool valid() const { return field_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  /// Coefficients over the base field, length = degree of the minimal polynomial.
  const std::vector<Scalar>& coeffs() const { return std::get<std::vector<Scalar>>(value_); }

  Scalar inv() const;
  Scalar pow(long long e) const;

  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

 private:
  Field field_ = nullptr;
  std::variant<std::uint64_t, mpq_class, std::vector<Scalar>> value_;
};

struct FieldData {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t p = 0;             // Prime
  Field base = nullptr;            // Extension
  std::vector<Scalar> minpoly;     // Extension: monic, little-endian, over base
  std::string gen;                 // Extension generator name
  std::string key;                 // canonical description, used for interning
};

Field rationals();
/// Throws NotPrime unless p is prime; p must fit below 2^62.
Field prime_field(std::uint64_t p);
/// Minimal polynomial is monic, little-endian, degree >= 2, over a Q or F_p base.
Field extension(Field base, const std::vector<Scalar>& minpoly, const std::string& gen);

/// Characteristic (0 for Q-based fields).
std::uint64_t characteristic(Field f);
/// Number of elements, or 0 when infinite or too large for 64 bits.
std::uint64_t field_order(Field f);
std::string field_name(Field f);

bool is_prime(std::uint64_t n);

/// Deterministic total order on the elements of one field.
bool scalar_less(const Scalar& a, const Scalar& b);

/// Parses "a/b", "-3", or for extensions "c0+c1*t+c2*t^2" with the generator name.
Scalar parse_scalar(Field f, const std::string& text);

/// Deterministic primitive n-th root of unity: smallest residue in F_p, the
/// generator for a cyclotomic extension, and +-1 over Q.
Scalar root_of_unity(Field f, std::uint64_t n);

/// Elementwise arithmetic dispatcher over ArithOp.
enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv };
Scalar field_arith(ArithOp op, const Scalar& a, const Scalar& b = Scalar());

}  // namespace nkwb
