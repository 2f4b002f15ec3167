#include "nkwb/algebra.hpp"

#include <numeric>

namespace nkwb {

Algebra::Algebra(Field f, Matrix mult, Matrix unit)
    : field_(f), dim_(unit.rows()), mult_(std::move(mult)), unit_(std::move(unit)) {
  if (mult_.rows() != dim_ || mult_.cols() != dim_ * dim_ || unit_.cols() != 1) {
    throw Error(ErrorKind::DimensionMismatch, "algebra structure constants have the wrong shape");
  }
}

Matrix Algebra::basis(std::size_t i) const {
  Matrix v(field_, dim_, 1);
  v(i, 0) = Scalar::one(field_);
  return v;
}

Matrix Algebra::product(const Matrix& x, const Matrix& y) const { return left_mul(x) * y; }

Matrix Algebra::left_mul(const Matrix& x) const {
  Matrix l(field_, dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    const Scalar& c = x(k, 0);
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        const Scalar& m = mult_(i, k * dim_ + j);
        if (!m.is_zero()) l(i, j) += c * m;
      }
  }
  return l;
}

Matrix Algebra::right_mul(const Matrix& y) const {
  Matrix r(field_, dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    const Scalar& c = y(k, 0);
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        const Scalar& m = mult_(i, j * dim_ + k);
        if (!m.is_zero()) r(i, j) += c * m;
      }
  }
  return r;
}

std::string Algebra::check() const {
  std::vector<Matrix> left(dim_);
  for (std::size_t i = 0; i < dim_; ++i) left[i] = left_mul(basis(i));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      // (b_i b_j) b_k = b_i (b_j b_k) for all k  <=>  L_{b_i b_j} = L_i L_j
      Matrix lhs = left_mul(left[i].col(j));
      if (lhs != left[i] * left[j]) {
        return "associativity fails for basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      }
    }
  }
  Matrix lu = left_mul(unit_), ru = right_mul(unit_);
  if (!lu.is_identity()) return "unit fails on the left";
  if (!ru.is_identity()) return "unit fails on the right";
  return {};
}

namespace {

using u128 = unsigned __int128;

// Tr(M^e) modulo `mod` for an integer matrix with entries in [0, mod).
std::uint64_t trace_power(std::vector<std::uint64_t> m, std::size_t n, std::uint64_t e, std::uint64_t mod) {
  auto mul = [&](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t x = a[i * n + k];
        if (!x) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!b[k * n + j]) continue;
          c[i * n + j] = static_cast<std::uint64_t>((c[i * n + j] + static_cast<u128>(x) * b[k * n + j]) % mod);
        }
      }
    return c;
  };
  std::vector<std::uint64_t> r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % mod;
  while (e) {
    if (e & 1) r = mul(r, m);
    e >>= 1;
    if (e) m = mul(m, m);
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + r[i * n + i]) % mod;
  return t;
}

// Radical over F_p with p <= dim: I_{-1} = A and
// I_i = { a in I_{i-1} : g_i(ab) = 0 for all b }, g_i(m) = Tr(m~^(p^i)) / p^i mod p,
// where m~ lifts m entrywise to [0, p). The radical is I_l with l = floor(log_p n).
Subspace radical_small_char(const Algebra& a, const std::vector<Matrix>& left) {
  Field f = a.field();
  std::size_t n = a.dim();
  std::uint64_t p = f->p;
  std::size_t levels = 0;
  for (std::uint64_t q = p; q <= n; q *= p) ++levels;
  Matrix current = Matrix::identity(f, n);
  std::uint64_t pi = 1;  // p^i
  for (std::size_t i = 0; i <= levels; ++i) {
    std::uint64_t mod = pi * p;
    std::size_t d = current.cols();
    if (d == 0) break;
    std::vector<Matrix> lc(d);
    for (std::size_t k = 0; k < d; ++k) lc[k] = a.left_mul(current.col(k));
    Matrix g(f, n, d);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        Matrix prod = lc[k] * left[j];
        std::vector<std::uint64_t> raw(n * n);
        for (std::size_t r = 0; r < n * n; ++r) raw[r] = prod.data()[r].residue();
        std::uint64_t t = trace_power(raw, n, pi, mod);
        if (t % pi != 0) {
          throw Error(ErrorKind::InvalidStructure, "generalized trace not divisible by p^i");
        }
        g(j, k) = Scalar::from_int(f, static_cast<long long>((t / pi) % p));
      }
    }
    Subspace k = kernel(g);
    current = current * k.basis();
    pi *= p;
  }
  return Subspace::span(current);
}

}  // namespace

Subspace radical(const Algebra& a) {
  Field f = a.field();
  std::size_t n = a.dim();
  if (n == 0) return Subspace(f, 0);
  std::vector<Matrix> left(n);
  for (std::size_t i = 0; i < n; ++i) left[i] = a.left_mul(a.basis(i));
  std::uint64_t ch = characteristic(f);
  Subspace j;
  if (ch == 0 || ch > n) {
    Matrix gram(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = r; s < n; ++s) {
        Scalar t = Scalar::zero(f);
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v) {
            const Scalar& x = left[r](u, v);
            if (x.is_zero()) continue;
            const Scalar& y = left[s](v, u);
            if (!y.is_zero()) t += x * y;
          }
        gram(r, s) = t;
        gram(s, r) = t;
      }
    j = kernel(gram);
  } else if (f->kind == FieldKind::Prime) {
    j = radical_small_char(a, left);
  } else {
    throw Error(ErrorKind::CharTooSmall, "radical over " + field_name(f) + " needs characteristic above " +
                                             std::to_string(n));
  }
  // The result must be a nilpotent two-sided ideal.
  for (std::size_t c = 0; c < j.dim(); ++c) {
    Matrix x = j.basis().col(c);
    for (std::size_t i = 0; i < n; ++i) {
      if (!j.contains(left[i] * x) || !j.contains(a.right_mul(a.basis(i)) * x)) {
        throw Error(ErrorKind::InvalidStructure, "computed radical is not an ideal");
      }
    }
  }
  Subspace power = j;
  for (std::size_t step = 0; power.dim() > 0; ++step) {
    if (step > n) throw Error(ErrorKind::InvalidStructure, "computed radical is not nilpotent");
    Matrix gens(f, n, 0);
    for (std::size_t c = 0; c < power.dim(); ++c) {
      Matrix lx = a.left_mul(power.basis().col(c));
      gens = hcat(gens, lx * j.basis());
    }
    power = image(gens);
  }
  return j;
}

Algebra quotient_algebra(const Algebra& a, const Cokernel& q) {
  Field f = a.field();
  std::size_t n = a.dim(), d = q.dim;
  Matrix mult(f, d, d * d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      Matrix prod = a.mult().col(q.complement[s] * n + q.complement[t]);
      Matrix img = q.projection * prod;
      for (std::size_t i = 0; i < d; ++i) mult(i, s * d + t) = img(i, 0);
    }
  return Algebra(f, mult, q.projection * a.unit());
}

Poly minimal_polynomial(const Algebra& a, const Matrix& x, const Matrix& e) {
  Field f = a.field();
  Matrix powers = e;
  Matrix cur = e;
  Matrix lx = a.right_mul(x);
  for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
    cur = lx * cur;
    auto sol = try_solve(powers, cur);
    if (sol) {
      Poly p(k + 1, Scalar::zero(f));
      for (std::size_t i = 0; i < k; ++i) p[i] = -(*sol)(i, 0);
      p[k] = Scalar::one(f);
      return p;
    }
    powers = hcat(powers, cur);
  }
  throw Error(ErrorKind::InvalidStructure, "minimal polynomial degree exceeds the dimension");
}

Matrix evaluate(const Algebra& a, const Poly& p, const Matrix& x, const Matrix& e) {
  Matrix r(a.field(), a.dim(), 1);
  Matrix rx = a.right_mul(x);
  for (std::size_t i = p.size(); i-- > 0;) {
    r = rx * r;
    if (!p[i].is_zero()) r = r + p[i] * e;
  }
  return r;
}

namespace {

// Returns a proper idempotent f of the corner eBe with 0 != f != e, if x
// has at least two distinct eigenvalues one of which lies in the field.
std::optional<Matrix> spectral_idempotent(const Algebra& b, const Matrix& x, const Matrix& e) {
  Poly mu = minimal_polynomial(b, x, e);
  if (poly_degree(mu) <= 1) return std::nullopt;
  for (const Scalar& lambda : poly_roots(mu)) {
    Poly lin = poly_linear(lambda);
    Poly power = {Scalar::one(b.field())};
    Poly rest = mu;
    for (;;) {
      Poly q, r;
      poly_divmod(rest, lin, q, r);
      if (!r.empty()) break;
      rest = q;
      power = poly_mul(power, lin);
    }
    if (poly_degree(rest) == 0) continue;
    Poly s, t;
    poly_xgcd(power, rest, s, t);
    Matrix f = evaluate(b, poly_mul(t, rest), x, e);
    if (f.is_zero() || f == e) continue;
    return f;
  }
  return std::nullopt;
}

void split_corner(const Algebra& b, const Matrix& e, Rng& rng, Splitting& out) {
  Matrix corner_map = b.left_mul(e) * b.right_mul(e);
  Subspace corner = image(corner_map);
  if (corner.dim() <= 1) {
    out.idempotents.push_back(e);
    return;
  }
  std::vector<Matrix> candidates;
  const Matrix& basis = corner.basis();
  for (std::size_t i = 0; i < basis.cols(); ++i) candidates.push_back(basis.col(i));
  for (std::size_t i = 0; i < basis.cols(); ++i)
    for (std::size_t j = i + 1; j < basis.cols(); ++j) candidates.push_back(basis.col(i) + basis.col(j));
  for (int r = 0; r < 32; ++r) candidates.push_back(rng.combination(basis, 7));
  for (const Matrix& x : candidates) {
    auto f = spectral_idempotent(b, x, e);
    if (!f) continue;
    split_corner(b, *f, rng, out);
    split_corner(b, e - *f, rng, out);
    return;
  }
  out.unsplit.push_back(e);
  out.unsplit_dims.push_back(corner.dim());
}

}  // namespace

Splitting split_semisimple(const Algebra& b, Rng& rng) {
  Splitting out;
  if (b.dim() == 0) return out;
  split_corner(b, b.unit(), rng, out);
  std::size_t m = out.idempotents.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Matrix> left(m), right(m);
  for (std::size_t i = 0; i < m; ++i) {
    left[i] = b.left_mul(out.idempotents[i]);
    right[i] = b.right_mul(out.idempotents[i]);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!(left[i] * right[j]).is_zero()) parent[find(j)] = find(i);
  out.block.assign(m, 0);
  std::vector<std::size_t> label(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t r = find(i);
    if (label[r] == m) label[r] = out.blocks++;
    out.block[i] = label[r];
  }
  return out;
}

std::vector<Matrix> lift_idempotents(const Algebra& a, const Cokernel& q, const std::vector<Matrix>& idempotents) {
  std::vector<Matrix> out;
  if (idempotents.empty()) return out;
  Matrix used(a.field(), a.dim(), 1);
  for (std::size_t i = 0; i + 1 < idempotents.size(); ++i) {
    Matrix u = a.unit() - used;
    Matrix x = q.section * idempotents[i];
    Matrix e = a.product(a.product(u, x), u);
    int steps = 0;
    while (a.product(e, e) != e) {
      Matrix e2 = a.product(e, e);
      Matrix e3 = a.product(e2, e);
      e = Scalar::from_int(a.field(), 3) * e2 - Scalar::from_int(a.field(), 2) * e3;
      if (++steps > 64) throw Error(ErrorKind::InvalidStructure, "idempotent lifting did not converge");
    }
    out.push_back(e);
    used = used + e;
  }
  out.push_back(a.unit() - used);
  return out;
}

}  // namespace nkwb
