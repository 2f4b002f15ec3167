#pragma once

#include <string>
#include <vector>

#include "nkwb/matrix.hpp"
#include "nkwb/poly.hpp"
#include "nkwb/random.hpp"

namespace nkwb {

/// Finite-dimensional associative algebra by structure constants. Elements
/// are column vectors; `mult` is the dim x dim^2 matrix of x (x) y -> xy.
class Algebra {
 public:
  Algebra() = default;
  Algebra(Field f, Matrix mult, Matrix unit);

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Matrix& mult() const { return mult_; }
  const Matrix& unit() const { return unit_; }

  Matrix basis(std::size_t i) const;
  Matrix product(const Matrix& x, const Matrix& y) const;
  /// Matrix of y -> x y.
  Matrix left_mul(const Matrix& x) const;
  /// Matrix of x -> x y.
  Matrix right_mul(const Matrix& y) const;

  /// Empty when associative and unital, otherwise a description of the failure.
  std::string check() const;

 private:
  Field field_ = nullptr;
  std::size_t dim_ = 0;
  Matrix mult_;
  Matrix unit_;
};

/// Jacobson radical. Uses the trace form in characteristic 0 or p > dim and
/// the generalized trace functionals of Ronyai over small prime fields.
/// Throws CharTooSmall for extension fields of characteristic p <= dim.
Subspace radical(const Algebra& a);

/// Quotient of `a` by the two-sided ideal whose cokernel data is `q`.
Algebra quotient_algebra(const Algebra& a, const Cokernel& q);

/// Minimal polynomial of x inside the corner eAe, where e is idempotent and x = exe.
Poly minimal_polynomial(const Algebra& a, const Matrix& x, const Matrix& e);
/// p(x) evaluated in the corner with unit e.
Matrix evaluate(const Algebra& a, const Poly& p, const Matrix& x, const Matrix& e);

struct Splitting {
  std::vector<Matrix> idempotents;       // orthogonal primitive idempotents
  std::vector<std::size_t> block;        // simple component of each idempotent
  std::size_t blocks = 0;
  std::vector<Matrix> unsplit;           // corners eBe no element could split
  std::vector<std::size_t> unsplit_dims;
};

/// Decomposes the unit of a semisimple algebra into orthogonal primitive
/// idempotents by spectral idempotents of corner elements.
Splitting split_semisimple(const Algebra& b, Rng& rng);

/// Lifts orthogonal idempotents of A/I summing to 1 (I nilpotent, quotient
/// data `q`) to orthogonal idempotents of A summing to 1.
std::vector<Matrix> lift_idempotents(const Algebra& a, const Cokernel& q, const std::vector<Matrix>& idempotents);

}  // namespace nkwb
