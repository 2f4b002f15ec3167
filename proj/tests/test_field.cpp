#include <gtest/gtest.h>

#include <random>

#include "nkwb/field.hpp"
#include "nkwb/poly.hpp"

using namespace nkwb;

namespace {

Field gaussian_rationals() {
  Field q = rationals();
  return extension(q, {Scalar::one(q), Scalar::zero(q), Scalar::one(q)}, "i");
}

Scalar random_scalar(Field f, std::mt19937_64& rng) {
  auto small = [&] { return static_cast<long long>(rng() % 19) - 9; };
  switch (f->kind) {
    case FieldKind::Rational: {
      long long den = static_cast<long long>(rng() % 7) + 1;
      return Scalar::from_rational(f, mpq_class(static_cast<long>(small()), static_cast<unsigned long>(den)));
    }
    case FieldKind::Prime: return Scalar::from_int(f, static_cast<long long>(rng() % f->p));
    case FieldKind::Extension: {
      std::vector<Scalar> c;
      for (std::size_t i = 0; i + 1 < f->minpoly.size(); ++i) c.push_back(random_scalar(f->base, rng));
      return Scalar::from_coeffs(f, c);
    }
  }
  return Scalar();
}

}  // namespace

TEST(Field, PrimeAddition) {
  Field f5 = prime_field(5);
  EXPECT_EQ(Scalar::from_int(f5, 3) + Scalar::from_int(f5, 4), Scalar::from_int(f5, 2));
}

TEST(Field, RationalProduct) {
  Field q = rationals();
  Scalar a = parse_scalar(q, "2/3"), b = parse_scalar(q, "9/4");
  EXPECT_EQ((a * b).str(), "3/2");
}

TEST(Field, GaussianGeneratorSquaresToMinusOne) {
  Field qi = gaussian_rationals();
  Scalar t = parse_scalar(qi, "i");
  EXPECT_EQ(t * t, Scalar::from_int(qi, -1));
}

TEST(Field, DivisionByZero) {
  Field q = rationals();
  try {
    (void)(Scalar::one(q) / Scalar::zero(q));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(Field, ReducibleMinpolyReportsFactor) {
  Field q = rationals();
  // t^2 - 1 = (t - 1)(t + 1)
  Field bad = extension(q, {Scalar::from_int(q, -1), Scalar::zero(q), Scalar::one(q)}, "t");
  Scalar x = parse_scalar(bad, "1+t");
  try {
    (void)x.inv();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDivisor);
    EXPECT_FALSE(e.detail().empty());
  }
}

TEST(Field, FieldMismatch) {
  try {
    (void)(Scalar::one(prime_field(5)) + Scalar::one(prime_field(7)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
}

TEST(Field, NotPrime) {
  try {
    (void)prime_field(15);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
}

TEST(Field, RootsOfUnity) {
  Field f13 = prime_field(13);
  EXPECT_EQ(root_of_unity(f13, 3), Scalar::from_int(f13, 3));
  EXPECT_EQ(root_of_unity(prime_field(5), 4), Scalar::from_int(prime_field(5), 2));
  EXPECT_EQ(root_of_unity(f13, 4), Scalar::from_int(f13, 5));
  try {
    (void)root_of_unity(prime_field(7), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSuchRoot);
  }
}

TEST(Field, RootOfUnityIsPrimitive) {
  for (std::uint64_t p : {5ULL, 7ULL, 13ULL, 31ULL, 97ULL}) {
    Field f = prime_field(p);
    for (std::uint64_t n = 2; n < p; ++n) {
      if ((p - 1) % n) continue;
      Scalar z = root_of_unity(f, n);
      EXPECT_TRUE(z.pow(static_cast<long long>(n)).is_one());
      for (std::uint64_t k = 1; k < n; ++k) EXPECT_FALSE(z.pow(static_cast<long long>(k)).is_one());
    }
  }
}

TEST(Field, CyclotomicExtensionGenerator) {
  Field q = rationals();
  auto c = cyclotomic(3);
  std::vector<Scalar> m;
  for (long long v : c) m.push_back(Scalar::from_int(q, v));
  Field q3 = extension(q, m, "w");
  Scalar w = root_of_unity(q3, 3);
  EXPECT_EQ(w, parse_scalar(q3, "w"));
  EXPECT_TRUE(w.pow(3).is_one());
  EXPECT_FALSE(w.is_one());
}

TEST(Field, CanonicalForms) {
  Field q = rationals();
  EXPECT_EQ(parse_scalar(q, "4/-6").str(), "-2/3");
  Field f7 = prime_field(7);
  EXPECT_EQ(Scalar::from_int(f7, -1).residue(), 6u);
  Field qi = gaussian_rationals();
  Scalar x = parse_scalar(qi, "1+2*i");
  EXPECT_EQ(parse_scalar(qi, x.str()), x);
}

class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, RandomTriples) {
  Field f = nullptr;
  switch (GetParam()) {
    case 0: f = rationals(); break;
    case 1: f = prime_field(13); break;
    case 2: f = prime_field(1000000007ULL); break;
    case 3: f = gaussian_rationals(); break;
    default: {
      Field f3 = prime_field(3);
      f = extension(f3, {Scalar::one(f3), Scalar::zero(f3), Scalar::one(f3)}, "i");
    }
  }
  std::mt19937_64 rng(7 + GetParam());
  for (int t = 0; t < 200; ++t) {
    Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Scalar::zero(f));
    if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one());
    EXPECT_EQ(parse_scalar(f, a.str()), a);
  }
}

INSTANTIATE_TEST_SUITE_P(AllKinds, FieldAxioms, ::testing::Range(0, 5));

TEST(Poly, RootsOverPrimeField) {
  Field f13 = prime_field(13);
  // t^3 - 1 over F_13 has roots 1, 3, 9
  Poly p = {Scalar::from_int(f13, -1), Scalar::zero(f13), Scalar::zero(f13), Scalar::one(f13)};
  auto r = poly_roots(p);
  ASSERT_EQ(r.size(), 3u);
  for (const auto& x : r) EXPECT_TRUE(poly_eval(p, x).is_zero());
}

TEST(Poly, RationalRoots) {
  Field q = rationals();
  // (t - 1/2)(t + 3)(t^2 + 1)
  Poly p = poly_mul(poly_mul(poly_linear(parse_scalar(q, "1/2")), poly_linear(Scalar::from_int(q, -3))),
                    {Scalar::one(q), Scalar::zero(q), Scalar::one(q)});
  auto r = poly_roots(p);
  ASSERT_EQ(r.size(), 2u);
  for (const auto& x : r) EXPECT_TRUE(poly_eval(p, x).is_zero());
}

TEST(Poly, RootsOverLargePrime) {
  Field f = prime_field(1000000007ULL);
  Poly p = poly_mul(poly_linear(Scalar::from_int(f, 123456)), poly_linear(Scalar::from_int(f, 98765)));
  p = poly_mul(p, {Scalar::from_int(f, 5), Scalar::zero(f), Scalar::one(f)});
  auto r = poly_roots(p);
  for (const auto& x : r) EXPECT_TRUE(poly_eval(p, x).is_zero());
  EXPECT_GE(r.size(), 2u);
}

TEST(Poly, Cyclotomic) {
  EXPECT_EQ(cyclotomic(4), (std::vector<long long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), (std::vector<long long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic(1), (std::vector<long long>{-1, 1}));
}
