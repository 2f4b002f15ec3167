#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "nkwb/field.hpp"

namespace nkwb {

/// Dense row-major matrix over an exact field. A linear map V -> W is stored
/// as a dim(W) x dim(V) matrix whose columns are images of basis vectors.
/// Tensor bases are lexicographic with the left factor varying slowest:
/// e_i (x) f_j has index i * dim(F) + j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);
  static Matrix column(Field f, const std::vector<Scalar>& entries);
  static Matrix row(Field f, const std::vector<Scalar>& entries);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }

  Matrix transpose() const;
  Matrix col(std::size_t c) const;
  std::vector<Scalar> col_vector(std::size_t c) const;
  Matrix cols_subset(const std::vector<std::size_t>& idx) const;
  Matrix rows_subset(const std::vector<std::size_t>& idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_zero() const;
  bool is_identity() const;
  Scalar trace() const;
  Matrix pow(unsigned long e) const;

  std::string str() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Scalar& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field field_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product, left factor index slowest.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
/// Permutation V (x) W -> W (x) V.
Matrix swap_tensor(Field f, std::size_t dv, std::size_t dw);

struct Rref {
  Matrix reduced;                   // reduced row echelon form (all rows kept)
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Bareiss elimination over Q, plain elimination over F_p and extensions.
Rref rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Subspace of k^n held by a basis in reduced column echelon form, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient);                 // zero subspace
  static Subspace span(const Matrix& columns);            // any spanning set
  Field field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  bool contains(const Matrix& v) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

Subspace kernel(const Matrix& a);
Subspace image(const Matrix& a);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Quotient k^rows / image(A). The complement is spanned by the standard
/// vectors at `complement`, `section` is that inclusion, and projection
/// satisfies projection * section = I and ker(projection) = image(A).
struct Cokernel {
  Matrix projection;
  Matrix section;
  std::size_t dim = 0;
  std::vector<std::size_t> complement;
};
Cokernel cokernel(const Matrix& a);
/// Quotient of k^n by a subspace.
Cokernel quotient(const Subspace& s);

struct Solution {
  Matrix solution;
  Subspace nullspace;
};
/// Solves A X = B. Throws NoSolution whose index is the first (1-based) row
/// of the system that cannot be satisfied together with the earlier rows.
Solution rref_solve(const Matrix& a, const Matrix& b);
/// A X = B, nullopt when inconsistent; free variables set to zero.
std::optional<Matrix> try_solve(const Matrix& a, const Matrix& b);
/// Coordinates of the columns of v in the (independent) columns of basis.
Matrix coordinates(const Matrix& basis, const Matrix& v);

std::optional<Matrix> try_inverse(const Matrix& a);
Matrix inverse(const Matrix& a);
Scalar det(const Matrix& a);

}  // namespace nkwb
