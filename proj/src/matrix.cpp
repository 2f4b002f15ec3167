#include "nkwb/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace nkwb {

namespace {

void require_field(const Matrix& a, const Matrix& b, const char* what) {
  if (a.field() != b.field()) {
    throw Error(ErrorKind::FieldMismatch, std::string(what) + ": " + field_name(a.field()) + " vs " +
                                              field_name(b.field()));
  }
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t r = a + b;
  return r >= p ? r - p : r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Reduced row echelon over F_p on a raw residue array.
std::vector<std::size_t> rref_prime(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                                    std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t k = 0;
  for (std::size_t j = 0; j < cols && k < rows; ++j) {
    std::size_t piv = rows;
    for (std::size_t i = k; i < rows; ++i) {
      if (a[i * cols + j] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != k) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a[piv * cols + c], a[k * cols + c]);
    }
    std::uint64_t inv = invmod(a[k * cols + j], p);
    std::uint64_t* rk = &a[k * cols];
    for (std::size_t c = j; c < cols; ++c) rk[c] = mulmod(rk[c], inv, p);
    std::vector<std::size_t> nz;
    for (std::size_t c = j; c < cols; ++c)
      if (rk[c] != 0) nz.push_back(c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k) continue;
      std::uint64_t* ri = &a[i * cols];
      std::uint64_t f = ri[j];
      if (f == 0) continue;
      std::uint64_t nf = p - f;
      for (std::size_t c : nz) ri[c] = addmod(ri[c], mulmod(nf, rk[c], p), p);
    }
    pivots.push_back(j);
    ++k;
  }
  return pivots;
}

// Fraction-free forward elimination (Bareiss) on an integer matrix, followed
// by back substitution over Q to reach the reduced form.
std::vector<std::size_t> rref_rational(std::vector<mpq_class>& out, const Matrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m(i, c).rational();
      if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m(i, c).rational();
      if (q != 0) a[i][c] = q.get_num() * (l / q.get_den());
    }
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t k = 0;
  mpz_class t1, t2;
  for (std::size_t j = 0; j < cols && k < rows; ++j) {
    std::size_t piv = rows;
    for (std::size_t i = k; i < rows; ++i) {
      if (a[i][j] != 0) {
        if (piv == rows || abs(a[i][j]) < abs(a[piv][j])) piv = i;
        if (abs(a[i][j]) == 1) break;
      }
    }
    if (piv == rows) continue;
    std::swap(a[piv], a[k]);
    const mpz_class p = a[k][j];
    std::vector<std::size_t> nz;
    for (std::size_t c = j + 1; c < cols; ++c)
      if (a[k][c] != 0) nz.push_back(c);
    bool same = (p == prev);
    for (std::size_t r = k + 1; r < rows; ++r) {
      auto& row = a[r];
      if (row[j] == 0) {
        if (same) continue;
        for (std::size_t c = j + 1; c < cols; ++c) {
          if (row[c] == 0) continue;
          row[c] *= p;
          mpz_divexact(row[c].get_mpz_t(), row[c].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      const mpz_class f = row[j];
      if (same) {
        // (p*x - f*y)/prev = x - f*y/prev when p == prev
        for (std::size_t c : nz) {
          t1 = f * a[k][c];
          if (prev != 1) mpz_divexact(t1.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
          row[c] -= t1;
        }
      } else {
        for (std::size_t c = j + 1; c < cols; ++c) {
          if (row[c] != 0) row[c] *= p;
        }
        for (std::size_t c : nz) {
          t1 = f * a[k][c];
          row[c] -= t1;
        }
        for (std::size_t c = j + 1; c < cols; ++c) {
          if (row[c] != 0) mpz_divexact(row[c].get_mpz_t(), row[c].get_mpz_t(), prev.get_mpz_t());
        }
      }
      row[j] = 0;
    }
    pivots.push_back(j);
    prev = p;
    ++k;
  }
  out.assign(rows * cols, mpq_class(0));
  std::size_t r = pivots.size();
  std::vector<std::vector<mpq_class>> q(r, std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class& pv = a[i][pivots[i]];
    for (std::size_t c = 0; c < cols; ++c) {
      if (a[i][c] == 0) continue;
      q[i][c] = mpq_class(a[i][c], pv);
      q[i][c].canonicalize();
    }
  }
  for (std::size_t i = r; i-- > 0;) {
    std::vector<std::size_t> nz;
    for (std::size_t c = pivots[i]; c < cols; ++c)
      if (q[i][c] != 0) nz.push_back(c);
    for (std::size_t u = 0; u < i; ++u) {
      if (q[u][pivots[i]] == 0) continue;
      mpq_class f = q[u][pivots[i]];
      for (std::size_t c : nz) q[u][c] -= f * q[i][c];
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < cols; ++c) out[i * cols + c] = q[i][c];
  return pivots;
}

std::vector<std::size_t> rref_generic(Matrix& a) {
  std::size_t rows = a.rows(), cols = a.cols();
  Field f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t k = 0;
  for (std::size_t j = 0; j < cols && k < rows; ++j) {
    std::size_t piv = rows;
    for (std::size_t i = k; i < rows; ++i) {
      if (!a(i, j).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != k)
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(piv, c), a(k, c));
    Scalar inv = a(k, j).inv();
    for (std::size_t c = j; c < cols; ++c) a(k, c) = a(k, c) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k || a(i, j).is_zero()) continue;
      Scalar fct = a(i, j);
      for (std::size_t c = j; c < cols; ++c) {
        if (a(k, c).is_zero()) continue;
        a(i, c) = a(i, c) - fct * a(k, c);
      }
    }
    pivots.push_back(j);
    ++k;
  }
  (void)f;
  return pivots;
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(f, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (long long v : row) m(i, j++) = Scalar::from_int(f, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::column(Field f, const std::vector<Scalar>& entries) {
  Matrix m(f, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

Matrix Matrix::row(Field f, const std::vector<Scalar>& entries) {
  Matrix m(f, 1, entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(0, i) = entries[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::col(std::size_t c) const {
  Matrix m(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) m(i, 0) = (*this)(i, c);
  return m;
}

std::vector<Scalar> Matrix::col_vector(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Matrix Matrix::cols_subset(const std::vector<std::size_t>& idx) const {
  Matrix m(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

Matrix Matrix::rows_subset(const std::vector<std::size_t>& idx) const {
  Matrix m(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix m(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

Scalar Matrix::trace() const {
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::pow(unsigned long e) const {
  Matrix r = identity(field_, rows_);
  Matrix b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string Matrix::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).str();
    out << "]";
  }
  out << "]";
  return out.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_field(a, b, "matrix product");
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "product of " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                                  "x" + std::to_string(b.cols()));
  }
  Field f = a.field();
  std::size_t n = a.rows(), m = a.cols(), l = b.cols();
  Matrix c(f, n, l);
  if (f->kind == FieldKind::Prime) {
    std::uint64_t p = f->p;
    std::vector<std::uint64_t> bb(m * l), acc(l);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < l; ++j) bb[k * l + j] = b(k, j).residue();
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      bool any = false;
      for (std::size_t k = 0; k < m; ++k) {
        std::uint64_t x = a(i, k).residue();
        if (x == 0) continue;
        any = true;
        const std::uint64_t* br = &bb[k * l];
        for (std::size_t j = 0; j < l; ++j)
          if (br[j]) acc[j] = addmod(acc[j], mulmod(x, br[j], p), p);
      }
      if (!any) continue;
      for (std::size_t j = 0; j < l; ++j)
        if (acc[j]) c(i, j) = Scalar::from_int(f, static_cast<long long>(acc[j]));
    }
    return c;
  }
  if (f->kind == FieldKind::Rational) {
    std::vector<mpq_class> acc(l);
    std::vector<char> bz(m * l);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < l; ++j) bz[k * l + j] = b(k, j).is_zero();
    for (std::size_t i = 0; i < n; ++i) {
      bool any = false;
      for (std::size_t k = 0; k < m; ++k) {
        const mpq_class& x = a(i, k).rational();
        if (x == 0) continue;
        if (!any) {
          for (auto& v : acc) v = 0;
          any = true;
        }
        for (std::size_t j = 0; j < l; ++j)
          if (!bz[k * l + j]) acc[j] += x * b(k, j).rational();
      }
      if (!any) continue;
      for (std::size_t j = 0; j < l; ++j)
        if (acc[j] != 0) c(i, j) = Scalar::from_rational(f, acc[j]);
    }
    return c;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < l; ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += x * b(k, j);
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_field(a, b, "matrix sum");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix sum shapes");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!b(i, j).is_zero()) c(i, j) += b(i, j);
  return c;
}

Matrix operator-(const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) c(i, j) = -a(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_field(a, b, "matrix difference");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "matrix difference shapes");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!b(i, j).is_zero()) c(i, j) -= b(i, j);
  return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix c = a;
  if (s.field() != a.field()) throw Error(ErrorKind::FieldMismatch, "scalar times matrix");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) c(i, j) = s * a(i, j);
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.rows() * a.cols() == 0) return true;
  if (a.field() != b.field()) return false;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    if (a.data()[i] != b.data()[i]) return false;
  return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_field(a, b, "kron");
  Field f = a.field();
  Matrix c(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b(k, l).is_zero()) continue;
          c(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    }
  return c;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  require_field(a, b, "hcat");
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hcat row counts differ");
  Matrix c(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
  require_field(a, b, "vcat");
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vcat column counts differ");
  Matrix c(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

Matrix swap_tensor(Field f, std::size_t dv, std::size_t dw) {
  Matrix m(f, dv * dw, dv * dw);
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j) m(j * dv + i, i * dw + j) = Scalar::one(f);
  return m;
}

Rref rref(const Matrix& a) {
  Field f = a.field();
  Rref out;
  if (a.rows() == 0 || a.cols() == 0) {
    out.reduced = a;
    return out;
  }
  if (f->kind == FieldKind::Prime) {
    std::vector<std::uint64_t> raw(a.rows() * a.cols());
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = a.data()[i].residue();
    out.pivots = rref_prime(raw, a.rows(), a.cols(), f->p);
    out.reduced = Matrix(f, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (raw[i * a.cols() + j]) out.reduced(i, j) = Scalar::from_int(f, static_cast<long long>(raw[i * a.cols() + j]));
    return out;
  }
  if (f->kind == FieldKind::Rational) {
    std::vector<mpq_class> raw;
    out.pivots = rref_rational(raw, a);
    out.reduced = Matrix(f, a.rows(), a.cols());
    for (std::size_t i = 0; i < out.pivots.size(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (raw[i * a.cols() + j] != 0) out.reduced(i, j) = Scalar::from_rational(f, raw[i * a.cols() + j]);
    return out;
  }
  out.reduced = a;
  out.pivots = rref_generic(out.reduced);
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Subspace::Subspace(Field f, std::size_t ambient) : ambient_(ambient), basis_(f, ambient, 0) {}

Subspace Subspace::span(const Matrix& columns) {
  Subspace s(columns.field(), columns.rows());
  if (columns.cols() == 0 || columns.rows() == 0) return s;
  Rref r = rref(columns.transpose());
  std::size_t k = r.pivots.size();
  Matrix b(columns.field(), columns.rows(), k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < columns.rows(); ++i) b(i, c) = r.reduced(c, i);
  s.basis_ = b;
  return s;
}

bool Subspace::contains(const Matrix& v) const {
  if (v.rows() != ambient_) return false;
  if (v.cols() == 0) return true;
  if (dim() == 0) return v.is_zero();
  return rank(hcat(basis_, v)) == dim();
}

bool Subspace::contains(const Subspace& other) const { return contains(other.basis()); }

Subspace kernel(const Matrix& a) {
  Field f = a.field();
  std::size_t n = a.cols();
  if (a.rows() == 0) return Subspace::span(Matrix::identity(f, n));
  Rref r = rref(a);
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : r.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix basis(f, n, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = Scalar::one(f);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      const Scalar& x = r.reduced(i, free[k]);
      if (!x.is_zero()) basis(r.pivots[i], k) = -x;
    }
  }
  return Subspace::span(basis);
}

Subspace image(const Matrix& a) { return Subspace::span(a); }

Subspace sum(const Subspace& a, const Subspace& b) {
  return Subspace::span(hcat(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.basis().field(), a.ambient());
  // x = A u = B w  <=>  [A | -B] (u; w) = 0
  Matrix m = hcat(a.basis(), -b.basis());
  Subspace k = kernel(m);
  Matrix u = k.basis().block(0, 0, a.dim(), k.dim());
  return Subspace::span(a.basis() * u);
}

Cokernel quotient(const Subspace& s) {
  Field f = s.basis().field();
  std::size_t n = s.ambient();
  Cokernel out;
  // Basis columns are in reduced column echelon form: pivot rows are the
  // first nonzero entries and equal 1, other basis vectors vanish there.
  std::vector<std::size_t> pivot_rows;
  for (std::size_t c = 0; c < s.dim(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!s.basis()(i, c).is_zero()) {
        pivot_rows.push_back(i);
        break;
      }
    }
  }
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : pivot_rows) is_pivot[p] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) out.complement.push_back(i);
  out.dim = out.complement.size();
  out.projection = Matrix(f, out.dim, n);
  out.section = Matrix(f, n, out.dim);
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t k = 0; k < out.dim; ++k) {
    pos[out.complement[k]] = k;
    out.projection(k, out.complement[k]) = Scalar::one(f);
    out.section(out.complement[k], k) = Scalar::one(f);
  }
  for (std::size_t c = 0; c < pivot_rows.size(); ++c) {
    for (std::size_t k = 0; k < out.dim; ++k) {
      const Scalar& x = s.basis()(out.complement[k], c);
      if (!x.is_zero()) out.projection(k, pivot_rows[c]) = -x;
    }
  }
  return out;
}

Cokernel cokernel(const Matrix& a) { return quotient(image(a)); }

std::optional<Matrix> try_solve(const Matrix& a, const Matrix& b) {
  require_field(a, b, "solve");
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: row counts differ");
  Field f = a.field();
  Matrix x(f, a.cols(), b.cols());
  if (a.rows() == 0 || b.cols() == 0) return x;
  Rref r = rref(hcat(a, b));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, a.cols() + j);
  }
  return x;
}

Solution rref_solve(const Matrix& a, const Matrix& b) {
  auto x = try_solve(a, b);
  if (!x) {
    // Locate the first row that is inconsistent with the rows before it.
    Field f = a.field();
    Matrix aug = hcat(a, b);
    std::size_t lo = 1, hi = a.rows();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      std::vector<std::size_t> idx(mid);
      for (std::size_t i = 0; i < mid; ++i) idx[i] = i;
      Matrix sub = aug.rows_subset(idx);
      if (try_solve(sub.block(0, 0, mid, a.cols()), sub.block(0, a.cols(), mid, b.cols()))) lo = mid + 1;
      else hi = mid;
    }
    (void)f;
    throw Error(ErrorKind::NoSolution, "system is inconsistent at row " + std::to_string(lo), {}, lo);
  }
  return Solution{*x, kernel(a)};
}

Matrix coordinates(const Matrix& basis, const Matrix& v) {
  auto x = try_solve(basis, v);
  if (!x) throw Error(ErrorKind::InvalidArgument, "vector not in the span of the given basis");
  return *x;
}

std::optional<Matrix> try_inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  std::size_t n = a.rows();
  if (n == 0) return a;
  Rref r = rref(hcat(a, Matrix::identity(a.field(), n)));
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  return r.reduced.block(0, n, n, n);
}

Matrix inverse(const Matrix& a) {
  auto inv = try_inverse(a);
  if (!inv) throw Error(ErrorKind::DivisionByZero, "matrix is singular");
  return *inv;
}

Scalar det(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  Field f = a.field();
  std::size_t n = a.rows();
  Matrix m = a;
  Scalar d = Scalar::one(f);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t piv = n;
    for (std::size_t i = j; i < n; ++i)
      if (!m(i, j).is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) return Scalar::zero(f);
    if (piv != j) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(j, c));
      d = -d;
    }
    d *= m(j, j);
    Scalar inv = m(j, j).inv();
    for (std::size_t i = j + 1; i < n; ++i) {
      if (m(i, j).is_zero()) continue;
      Scalar fct = m(i, j) * inv;
      for (std::size_t c = j; c < n; ++c) m(i, c) -= fct * m(j, c);
    }
  }
  return d;
}

}  // namespace nkwb
