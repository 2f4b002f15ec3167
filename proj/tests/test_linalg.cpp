#include <gtest/gtest.h>

#include <random>

#include "nkwb/matrix.hpp"

using namespace nkwb;

namespace {

// Straightforward Gauss-Jordan over mpq, used as an independent rank oracle.
std::size_t oracle_rank(const Matrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).rational();
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
    std::size_t p = r;
    while (p < m.rows() && a[p][j] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][j] == 0) continue;
      mpq_class f = a[i][j] / a[r][j];
      for (std::size_t c = 0; c < m.cols(); ++c) a[i][c] -= f * a[r][c];
    }
    ++r;
  }
  return r;
}

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng, int density = 3) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % density == 0) m(i, j) = Scalar::from_int(f, static_cast<long long>(rng() % 11) - 5);
  return m;
}

// Random matrix of prescribed rank: product of r x k and k x c factors.
Matrix low_rank(Field f, std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng) {
  return random_matrix(f, r, k, rng, 1) * random_matrix(f, k, c, rng, 1);
}

}  // namespace

TEST(Linalg, SolveIdentity) {
  Field q = rationals();
  auto s = rref_solve(Matrix::identity(q, 2), Matrix::identity(q, 2));
  EXPECT_EQ(s.solution, Matrix::identity(q, 2));
  EXPECT_EQ(s.nullspace.dim(), 0u);
}

TEST(Linalg, NullspaceOfAllOnes) {
  Field q = rationals();
  Matrix a = Matrix::from_ints(q, {{1, 1}, {1, 1}});
  auto s = rref_solve(a, Matrix(q, 2, 1));
  ASSERT_EQ(s.nullspace.dim(), 1u);
  EXPECT_EQ(s.nullspace.basis(), Matrix::from_ints(q, {{1}, {-1}}));
}

TEST(Linalg, InconsistentRowReported) {
  Field q = rationals();
  try {
    rref_solve(Matrix::from_ints(q, {{1}, {0}}), Matrix::from_ints(q, {{0}, {1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSolution);
    EXPECT_EQ(e.index(), 2u);
  }
}

TEST(Linalg, KernelImageCokernelExamples) {
  Field q = rationals();
  EXPECT_EQ(kernel(Matrix(q, 2, 2)).dim(), 2u);
  EXPECT_EQ(cokernel(Matrix::identity(q, 3)).dim, 0u);
  EXPECT_EQ(cokernel(Matrix::from_ints(q, {{1, 1}, {1, 1}})).dim, 1u);
}

TEST(Linalg, KronExamples) {
  Field q = rationals();
  EXPECT_EQ(kron(Matrix::identity(q, 2), Matrix::identity(q, 3)), Matrix::identity(q, 6));
  Matrix b = Matrix::from_ints(q, {{1, 2}, {3, 4}});
  EXPECT_EQ(kron(Matrix::from_ints(q, {{2}}), b), Scalar::from_int(q, 2) * b);
  try {
    (void)kron(b, Matrix::identity(prime_field(5), 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
}

TEST(Linalg, KronMixedProductAndAssociativity) {
  std::mt19937_64 rng(11);
  for (Field f : {rationals(), prime_field(13)}) {
    for (int t = 0; t < 20; ++t) {
      Matrix a = random_matrix(f, 2, 2, rng, 1), b = random_matrix(f, 2, 2, rng, 1);
      Matrix c = random_matrix(f, 2, 2, rng, 1), d = random_matrix(f, 2, 2, rng, 1);
      EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
      Matrix e = random_matrix(f, 2, 3, rng);
      EXPECT_EQ(kron(kron(a, b), e), kron(a, kron(b, e)));
    }
  }
}

TEST(Linalg, KronActsOnTensorBasis) {
  Field q = rationals();
  Matrix a = Matrix::from_ints(q, {{1, 2}, {3, 4}});
  Matrix b = Matrix::from_ints(q, {{0, 1, 5}, {2, 0, 1}});
  // (A (x) B)(e_i (x) f_j) = A e_i (x) B f_j, basis index i*3+j.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Matrix v(q, 6, 1);
      v(i * 3 + j, 0) = Scalar::one(q);
      EXPECT_EQ(kron(a, b) * v, kron(a.col(i), b.col(j)));
    }
}

TEST(Linalg, RankAgreesWithOracle) {
  std::mt19937_64 rng(5);
  Field q = rationals();
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9, k = rng() % 6;
    Matrix a = (t % 2) ? random_matrix(q, r, c, rng, 1 + t % 4) : low_rank(q, r, c, k, rng);
    EXPECT_EQ(rank(a), oracle_rank(a)) << a.str();
  }
}

TEST(Linalg, RankNullityAndCokernel) {
  std::mt19937_64 rng(3);
  for (Field f : {rationals(), prime_field(7), prime_field(1000000007ULL)}) {
    for (int t = 0; t < 40; ++t) {
      std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
      Matrix a = low_rank(f, r, c, rng() % 5, rng);
      Subspace k = kernel(a), im = image(a);
      EXPECT_EQ(k.dim() + im.dim(), c);
      EXPECT_TRUE((a * k.basis()).is_zero());
      Cokernel ck = cokernel(a);
      EXPECT_EQ(ck.dim + im.dim(), r);
      EXPECT_TRUE((ck.projection * a).is_zero());
      EXPECT_TRUE((ck.projection * ck.section).is_identity());
      EXPECT_EQ(rank(ck.projection), ck.dim);
    }
  }
}

TEST(Linalg, SubspaceRepresentationIsCanonical) {
  std::mt19937_64 rng(9);
  Field q = rationals();
  for (int t = 0; t < 20; ++t) {
    Matrix a = low_rank(q, 6, 4, 3, rng);
    Matrix mix = random_matrix(q, 4, 4, rng, 1);
    if (rank(mix) < 4) continue;
    EXPECT_EQ(image(a), image(a * mix));
  }
}

TEST(Linalg, IntersectionAndSum) {
  Field q = rationals();
  Subspace xy = image(Matrix::from_ints(q, {{1, 0}, {0, 1}, {0, 0}}));
  Subspace yz = image(Matrix::from_ints(q, {{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(intersect(xy, yz), image(Matrix::from_ints(q, {{0}, {1}, {0}})));
  EXPECT_EQ(sum(xy, yz).dim(), 3u);
}

TEST(Linalg, InverseAndDeterminant) {
  std::mt19937_64 rng(21);
  for (Field f : {rationals(), prime_field(13)}) {
    for (int t = 0; t < 20; ++t) {
      Matrix a = random_matrix(f, 4, 4, rng, 1);
      auto inv = try_inverse(a);
      EXPECT_EQ(inv.has_value(), !det(a).is_zero());
      if (inv) EXPECT_TRUE((a * *inv).is_identity());
    }
  }
  Field q = rationals();
  EXPECT_EQ(det(Matrix::from_ints(q, {{1, 2}, {3, 4}})), Scalar::from_int(q, -2));
}

TEST(Linalg, BareissWithNonUnitPivots) {
  Field q = rationals();
  Matrix a = Matrix::from_ints(q, {{2, 4, 6, 1}, {4, 6, 8, 3}, {6, 8, 12, 5}, {2, 2, 2, 2}});
  EXPECT_EQ(rank(a), oracle_rank(a));
  Subspace k = kernel(a);
  EXPECT_TRUE((a * k.basis()).is_zero());
  Matrix b = Matrix::from_rows(q, {{parse_scalar(q, "1/2"), parse_scalar(q, "2/3")},
                                   {parse_scalar(q, "3/4"), Scalar::one(q)}});
  EXPECT_EQ(rank(b), 1u);
}
