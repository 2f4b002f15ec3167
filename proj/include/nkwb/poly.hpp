#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nkwb/field.hpp"

namespace nkwb {

/// Univariate polynomial, little-endian coefficients, trailing zeros trimmed.
/// The zero polynomial is the empty vector.
using Poly = std::vector<Scalar>;

void poly_trim(Poly& p);
long poly_degree(const Poly& p);  // -1 for zero
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Scalar& c);
/// a = q*b + r with deg r < deg b. b must be nonzero.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_monic(const Poly& a);
Poly poly_gcd(const Poly& a, const Poly& b);
/// Returns monic g = gcd(a,b) and s, t with s*a + t*b = g.
Poly poly_xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);
Poly poly_derivative(const Poly& a);
Scalar poly_eval(const Poly& a, const Scalar& x);
Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& mod);
Poly poly_x(Field f);                    // the polynomial t
Poly poly_linear(const Scalar& root);    // t - root
std::string poly_str(const Poly& p, const std::string& var = "t");

/// Distinct roots of p in its coefficient field, in a deterministic order.
/// Complete over F_p and small finite extensions; over Q the roots are found
/// numerically and confirmed exactly, so a returned root is always a root.
std::vector<Scalar> poly_roots(const Poly& p);

/// n-th cyclotomic polynomial over the integers (little-endian).
std::vector<long long> cyclotomic(std::uint64_t n);

}  // namespace nkwb
