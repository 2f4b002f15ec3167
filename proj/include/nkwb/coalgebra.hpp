#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nkwb/algebra.hpp"
#include "nkwb/matrix.hpp"

namespace nkwb {

struct CoalgebraCache;

/// Finite-dimensional coalgebra by structure constants:
///   Delta(b_i) = sum_{j,k} Delta[i][j][k] b_j (x) b_k,
/// stored as the n^2 x n matrix comul with comul(j*n+k, i) = Delta[i][j][k],
/// and the counit as a 1 x n row.
///
/// Functionals on C are n x 1 columns in the dual basis. Conventions:
///   (f * g)(c) = f(c_1) g(c_2)      convolution
///   f -> c     = c_1 f(c_2)         left hit action (left_hit)
///   c <- f     = f(c_1) c_2         right hit action (right_hit)
/// so f -> (g -> c) = (f*g) -> c and (c <- f) <- g = c <- (f*g).
class Coalgebra {
 public:
  Coalgebra(Field f, std::vector<std::string> labels, Matrix comul, Matrix counit);

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& comul() const { return comul_; }
  const Matrix& counit() const { return counit_; }
  Scalar delta(std::size_t i, std::size_t j, std::size_t k) const { return comul_(j * dim_ + k, i); }

  Matrix basis(std::size_t i) const;        // b_i as a column
  Matrix dual_basis(std::size_t i) const;   // delta_i as a column
  Matrix counit_functional() const;         // epsilon as a column

  /// Dual algebra C* with the convolution product and unit epsilon.
  const Algebra& dual_algebra() const;
  Matrix convolve(const Matrix& f, const Matrix& g) const;
  /// Matrix of c -> f -> c.
  Matrix left_hit(const Matrix& f) const;
  /// Matrix of c -> c <- f.
  Matrix right_hit(const Matrix& f) const;
  const Matrix& left_hit_basis(std::size_t k) const;
  const Matrix& right_hit_basis(std::size_t k) const;

  bool same_structure(const Coalgebra& other) const;

  CoalgebraCache& cache() const { return *cache_; }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  Matrix comul_;
  Matrix counit_;
  std::shared_ptr<CoalgebraCache> cache_;
};

using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

CoalgebraPtr make_coalgebra(Field f, std::vector<std::string> labels, Matrix comul, Matrix counit);
/// Builds a coalgebra from (i, j, k, coefficient) entries of Delta.
struct ComulEntry {
  std::size_t i, j, k;
  Scalar value;
};
CoalgebraPtr make_coalgebra(Field f, std::vector<std::string> labels, const std::vector<ComulEntry>& comul,
                            const std::vector<Scalar>& counit);

bool same_coalgebra(const CoalgebraPtr& a, const CoalgebraPtr& b);

struct AxiomCheck {
  std::string name;
  bool ok = true;
  std::string witness;
};

struct CoalgebraReport {
  AxiomCheck coassociativity{"coassociativity", true, {}};
  AxiomCheck counit{"counit", true, {}};
  bool ok() const { return coassociativity.ok && counit.ok; }
};

CoalgebraReport check_coalgebra(const Coalgebra& c);

/// Opposite coalgebra: Delta^cop[i][j][k] = Delta[i][k][j].
CoalgebraPtr cop(const CoalgebraPtr& c);

struct Quiver {
  struct Arrow {
    std::string label;
    std::size_t source, target;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
};

/// Coalgebra on vertices and arrows: Delta(v) = v (x) v, eps(v) = 1,
/// Delta(a) = s(a) (x) a + a (x) t(a), eps(a) = 0. Vertices come first.
CoalgebraPtr quiver_coalgebra(Field f, const Quiver& q);

/// Structure of the dual algebra: radical, semisimple quotient split into
/// primitive idempotents, and those idempotents lifted back to C*.
struct DualDecomposition {
  Subspace radical;
  Cokernel quotient;
  Algebra semisimple;
  Splitting splitting;
  /// Lifted orthogonal idempotents summing to epsilon: first the lifts of
  /// splitting.idempotents, then the lifts of splitting.unsplit.
  std::vector<Matrix> idempotents;
};
/// Cached; the splitting search uses a fixed seed so results are reproducible.
const DualDecomposition& dual_decomposition(const Coalgebra& c);

/// Grouplike elements, computed as the characters of C*: every character
/// kills the radical and so comes from a one-dimensional simple block.
struct Grouplikes {
  std::vector<Matrix> elements;   // columns in C
  bool search_incomplete = false;  // some block of C*/J could not be split
};
Grouplikes grouplikes(const CoalgebraPtr& c);

/// Formats a vector of C (x) ... coordinates using basis labels.
std::string format_element(const Matrix& v, const std::vector<std::string>& labels, std::size_t factors = 1);

}  // namespace nkwb
