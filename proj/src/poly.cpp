#include "nkwb/poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace nkwb {

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long poly_degree(const Poly& p) {
  Poly q = p;
  poly_trim(q);
  return static_cast<long>(q.size()) - 1;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r = a.size() >= b.size() ? a : b;
  const Poly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  poly_trim(r);
  return r;
}

Poly poly_scale(const Poly& a, const Scalar& c) {
  Poly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  poly_trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r = a;
  if (r.size() < b.size()) {
    Field f = b[0].field();
    r.resize(b.size(), Scalar::zero(f));
  }
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Field f = a[0].field();
  Poly r(a.size() + b.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  Poly d = b;
  poly_trim(d);
  if (d.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  r = a;
  poly_trim(r);
  Field f = d[0].field();
  q.assign(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, Scalar::zero(f));
  Scalar lead_inv = d.back().inv();
  while (r.size() >= d.size() && !r.empty()) {
    std::size_t shift = r.size() - d.size();
    Scalar c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
    r.pop_back();
    poly_trim(r);
  }
  poly_trim(q);
}

Poly poly_mod(const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(a, b, q, r);
  return r;
}

Poly poly_monic(const Poly& a) {
  Poly r = a;
  poly_trim(r);
  if (r.empty()) return r;
  return poly_scale(r, r.back().inv());
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  poly_trim(x);
  poly_trim(y);
  while (!y.empty()) {
    Poly r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(x);
}

Poly poly_xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b;
  poly_trim(r0);
  poly_trim(r1);
  Field f = !r0.empty() ? r0[0].field() : r1[0].field();
  Poly s0{Scalar::one(f)}, s1{}, t0{}, t1{Scalar::one(f)};
  while (!r1.empty()) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    Poly t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = s0;
    t = t0;
    return r0;
  }
  Scalar c = r0.back().inv();
  s = poly_scale(s0, c);
  t = poly_scale(t0, c);
  return poly_scale(r0, c);
}

Poly poly_derivative(const Poly& a) {
  if (a.size() <= 1) return {};
  Field f = a[0].field();
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Scalar::from_int(f, static_cast<long long>(i)));
  poly_trim(r);
  return r;
}

Scalar poly_eval(const Poly& a, const Scalar& x) {
  Scalar r = Scalar::zero(x.field());
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Field f = mod[0].field();
  Poly r{Scalar::one(f)};
  r = poly_mod(r, mod);
  Poly b = poly_mod(base, mod);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, b), mod);
    b = poly_mod(poly_mul(b, b), mod);
    e >>= 1;
  }
  return r;
}

Poly poly_x(Field f) { return Poly{Scalar::zero(f), Scalar::one(f)}; }

Poly poly_linear(const Scalar& root) { return Poly{-root, Scalar::one(root.field())}; }

std::string poly_str(const Poly& p, const std::string& var) {
  Poly q = p;
  poly_trim(q);
  if (q.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].is_zero()) continue;
    std::string c = q[i].str();
    bool neg = !c.empty() && c[0] == '-';
    if (!first) out << (neg ? "-" : "+");
    else if (neg) out << "-";
    if (neg) c = c.substr(1);
    if (i == 0) out << c;
    else {
      if (c != "1") out << c << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

namespace {

std::vector<Scalar> roots_by_enumeration(const Poly& p, Field f, std::uint64_t order) {
  std::vector<Scalar> out;
  if (f->kind == FieldKind::Prime) {
    std::uint64_t q = f->p;
    std::vector<std::uint64_t> c;
    for (const auto& x : p) c.push_back(x.residue());
    for (std::uint64_t r = 0; r < q; ++r) {
      unsigned __int128 acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) acc = (acc * r + c[i]) % q;
      if (acc == 0) out.push_back(Scalar::from_int(f, static_cast<long long>(r)));
    }
    return out;
  }
  // Small finite extension: enumerate coefficient vectors.
  std::size_t d = f->minpoly.size() - 1;
  std::uint64_t q = f->base->p;
  std::vector<std::uint64_t> digits(d, 0);
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    std::uint64_t v = idx;
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < d; ++i) {
      c.push_back(Scalar::from_int(f->base, static_cast<long long>(v % q)));
      v /= q;
    }
    Scalar x = Scalar::from_coeffs(f, c);
    if (poly_eval(p, x).is_zero()) out.push_back(x);
  }
  return out;
}

void split_linear_factors(const Poly& g, std::uint64_t p, std::vector<Scalar>& out, std::uint64_t& shift) {
  long deg = poly_degree(g);
  if (deg <= 0) return;
  Field f = g[0].field();
  if (deg == 1) {
    Poly m = poly_monic(g);
    out.push_back(-m[0]);
    return;
  }
  for (int attempt = 0; attempt < 200; ++attempt) {
    ++shift;
    Poly base{Scalar::from_int(f, static_cast<long long>(shift % p)), Scalar::one(f)};
    Poly h = poly_powmod(base, (p - 1) / 2, g);
    h = poly_sub(h, Poly{Scalar::one(f)});
    Poly d = poly_gcd(g, h);
    long dd = poly_degree(d);
    if (dd > 0 && dd < deg) {
      Poly q, r;
      poly_divmod(g, d, q, r);
      split_linear_factors(d, p, out, shift);
      split_linear_factors(q, p, out, shift);
      return;
    }
  }
  throw Error(ErrorKind::InvalidStructure, "root splitting did not converge");
}

std::vector<Scalar> roots_large_prime(const Poly& p, Field f) {
  std::uint64_t q = f->p;
  Poly g = poly_monic(p);
  Poly xp = poly_powmod(poly_x(f), q, g);
  Poly lin = poly_gcd(g, poly_sub(xp, poly_x(f)));
  std::vector<Scalar> out;
  std::uint64_t shift = 0;
  split_linear_factors(lin, q, out, shift);
  return out;
}

std::vector<Scalar> roots_rational(const Poly& p, Field f) {
  // Squarefree part, then numerical approximation confirmed exactly.
  Poly g = poly_monic(p);
  Poly dg = poly_derivative(g);
  if (!dg.empty()) {
    Poly c = poly_gcd(g, dg);
    if (poly_degree(c) > 0) {
      Poly q, r;
      poly_divmod(g, c, q, r);
      g = poly_monic(q);
    }
  }
  std::vector<Scalar> out;
  if (g[0].is_zero()) {
    out.push_back(Scalar::zero(f));
    Poly q(g.begin() + 1, g.end());
    g = q;
  }
  long n = poly_degree(g);
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back(-g[0]);
    return out;
  }
  using cplx = std::complex<long double>;
  std::vector<long double> a(n + 1);
  for (long i = 0; i <= n; ++i) a[i] = static_cast<long double>(g[i].rational().get_d());
  long double bound = 0;
  for (long i = 0; i < n; ++i) bound = std::max(bound, std::pow(std::fabs(a[i]), 1.0L / (n - i)));
  bound = 2 * bound + 1;
  std::vector<cplx> z(n);
  for (long k = 0; k < n; ++k) {
    long double ang = 2 * M_PI * (k + 0.25L) / n;
    z[k] = std::polar(bound * 0.5L, ang);
  }
  auto eval = [&](cplx x, cplx& d) {
    cplx v = 0;
    d = 0;
    for (long i = n; i >= 0; --i) {
      d = d * x + v;
      v = v * x + cplx(a[i], 0);
    }
    return v;
  };
  for (int iter = 0; iter < 800; ++iter) {
    long double moved = 0;
    for (long k = 0; k < n; ++k) {
      cplx d;
      cplx v = eval(z[k], d);
      if (std::abs(v) == 0) continue;
      cplx ratio = v / d;
      cplx sum = 0;
      for (long j = 0; j < n; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      cplx w = ratio / (1.0L - ratio * sum);
      z[k] -= w;
      moved = std::max(moved, std::abs(w) / (1 + std::abs(z[k])));
    }
    if (moved < 1e-17L) break;
  }
  auto try_candidate = [&](const mpq_class& c) {
    Scalar s = Scalar::from_rational(f, c);
    if (!poly_eval(g, s).is_zero()) return;
    for (const auto& o : out)
      if (o == s) return;
    out.push_back(s);
  };
  for (const auto& r : z) {
    long double re = r.real();
    if (std::fabs(r.imag()) > 1e-3L * (1 + std::fabs(re))) continue;
    // Continued-fraction convergents of the real part.
    long double x = re;
    mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    for (int step = 0; step < 40; ++step) {
      long double fl = std::floor(x);
      mpz_class ai(static_cast<double>(fl));
      mpz_class h2 = ai * h0 + h1, k2 = ai * k0 + k1;
      h1 = h0;
      h0 = h2;
      k1 = k0;
      k0 = k2;
      try_candidate(mpq_class(h0, k0));
      long double frac = x - fl;
      if (frac < 1e-12L || k0 > mpz_class("1000000000000")) break;
      x = 1 / frac;
    }
  }
  return out;
}

std::vector<Scalar> roots_by_candidates(const Poly& p, Field f) {
  std::vector<Scalar> out;
  std::size_t d = f->minpoly.size() - 1;
  Field b = f->base;
  auto consider = [&](const Scalar& s) {
    if (!poly_eval(p, s).is_zero()) return;
    for (const auto& o : out)
      if (o == s) return;
    out.push_back(s);
  };
  for (long long a0 = -4; a0 <= 4; ++a0) {
    for (std::size_t k = 1; k < d; ++k) {
      for (long long a1 = -4; a1 <= 4; ++a1) {
        std::vector<Scalar> c(d, Scalar::zero(b));
        c[0] = Scalar::from_int(b, a0);
        c[k] = Scalar::from_int(b, a1);
        consider(Scalar::from_coeffs(f, c));
      }
    }
  }
  return out;
}

}  // namespace

bool scalar_less(const Scalar& a, const Scalar& b) {
  switch (a.field()->kind) {
    case FieldKind::Rational: return a.rational() < b.rational();
    case FieldKind::Prime: return a.residue() < b.residue();
    case FieldKind::Extension:
      for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] != b.coeffs()[i]) return scalar_less(a.coeffs()[i], b.coeffs()[i]);
      }
      return false;
  }
  return false;
}

std::vector<Scalar> poly_roots(const Poly& p0) {
  Poly p = p0;
  poly_trim(p);
  if (p.size() <= 1) return {};
  Field f = p[0].field();
  std::vector<Scalar> out;
  std::uint64_t order = field_order(f);
  if (f->kind == FieldKind::Prime && order > (1ull << 16)) {
    out = roots_large_prime(p, f);
  } else if (order != 0 && order <= (1ull << 16)) {
    out = roots_by_enumeration(p, f, order);
  } else if (f->kind == FieldKind::Rational) {
    out = roots_rational(p, f);
  } else {
    out = roots_by_candidates(p, f);
  }
  std::sort(out.begin(), out.end(), scalar_less);
  return out;
}

std::vector<long long> cyclotomic(std::uint64_t n) {
  // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, computed over the integers.
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long long> den = cyclotomic(d);
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      long long c = num[i + den.size() - 1];
      q[i] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    num = q;
  }
  return num;
}

}  // namespace nkwb
