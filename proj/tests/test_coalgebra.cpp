#include <gtest/gtest.h>

#include "nkwb/builtins.hpp"
#include "nkwb/coalgebra.hpp"

using namespace nkwb;

namespace {

Field Q() { return rationals(); }

CoalgebraPtr k2() { return builtin("k2").coalgebra; }

CoalgebraPtr grouplike_point(Field f) {
  return make_coalgebra(f, {"g"}, std::vector<ComulEntry>{{0, 0, 0, Scalar::one(f)}}, {Scalar::one(f)});
}

// Exhaustive grouplike search over a small prime field.
std::vector<Matrix> brute_grouplikes(const Coalgebra& c) {
  Field f = c.field();
  std::uint64_t p = field_order(f);
  std::size_t n = c.dim();
  std::vector<Matrix> out;
  std::vector<std::uint64_t> digits(n, 0);
  while (true) {
    Matrix v(f, n, 1);
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = Scalar::from_int(f, static_cast<long long>(digits[i]));
    if ((c.counit() * v)(0, 0).is_one() && c.comul() * v == kron(v, v)) out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++digits[i] == p) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST(Coalgebra, GrouplikePointPasses) {
  auto c = grouplike_point(Q());
  EXPECT_TRUE(check_coalgebra(*c).ok());
}

TEST(Coalgebra, QuiverK2) {
  auto c = k2();
  ASSERT_EQ(c->dim(), 3u);
  EXPECT_EQ(c->labels(), (std::vector<std::string>{"u", "v", "e"}));
  EXPECT_TRUE(check_coalgebra(*c).ok());
  Matrix de = c->comul().col(2);
  Matrix expect = kron(c->basis(0), c->basis(2)) + kron(c->basis(2), c->basis(1));
  EXPECT_EQ(de, expect);
  EXPECT_TRUE(c->counit()(0, 2).is_zero());
  EXPECT_TRUE(c->counit()(0, 0).is_one());
  EXPECT_TRUE(c->counit()(0, 1).is_one());
}

TEST(Coalgebra, BrokenCounitReportsWitness) {
  Field f = Q();
  auto good = k2();
  Matrix eps = good->counit();
  eps(0, 2) = Scalar::one(f);
  Coalgebra bad(f, good->labels(), good->comul(), eps);
  auto rep = check_coalgebra(bad);
  EXPECT_TRUE(rep.coassociativity.ok);
  EXPECT_FALSE(rep.counit.ok);
  EXPECT_NE(rep.counit.witness.find("at e"), std::string::npos) << rep.counit.witness;
}

TEST(Coalgebra, BrokenCoassociativity) {
  Field f = Q();
  Coalgebra bad(f, {"a", "b"}, Matrix::from_ints(f, {{1, 0}, {0, 0}, {0, 0}, {1, 1}}),
                Matrix::from_ints(f, {{1, 1}}));
  // Delta(a) = a (x) a + b (x) b is not coassociative.
  EXPECT_FALSE(check_coalgebra(bad).coassociativity.ok);
}

TEST(Coalgebra, SingleVertexAndStar) {
  Quiver q;
  q.vertices = {"v"};
  auto c = quiver_coalgebra(Q(), q);
  EXPECT_EQ(c->dim(), 1u);
  EXPECT_TRUE(same_coalgebra(c, make_coalgebra(Q(), {"v"}, std::vector<ComulEntry>{{0, 0, 0, Scalar::one(Q())}},
                                                {Scalar::one(Q())})));
  auto star = builtin("star:3").coalgebra;
  EXPECT_EQ(star->dim(), 9u);
  EXPECT_TRUE(check_coalgebra(*star).ok());
}

TEST(Coalgebra, QuiverValidation) {
  Quiver q;
  q.vertices = {"u", "v"};
  q.arrows = {{"u", 0, 1}};
  EXPECT_THROW(quiver_coalgebra(Q(), q), Error);
  q.arrows = {{"e", 0, 5}};
  EXPECT_THROW(quiver_coalgebra(Q(), q), Error);
}

TEST(Coalgebra, CopInvolutionAndSwap) {
  auto c = k2();
  auto cc = cop(c);
  EXPECT_TRUE(same_coalgebra(cop(cc), c));
  Matrix de = cc->comul().col(2);
  EXPECT_EQ(de, kron(c->basis(2), c->basis(0)) + kron(c->basis(1), c->basis(2)));
  auto g = grouplike_point(Q());
  EXPECT_TRUE(same_coalgebra(cop(g), g));
}

TEST(Coalgebra, DualAlgebraK2) {
  auto c = k2();
  Matrix u = c->dual_basis(0), e = c->dual_basis(2);
  EXPECT_TRUE(c->convolve(e, e).is_zero());
  EXPECT_EQ(c->convolve(u, e), e);
  EXPECT_EQ(c->dual_algebra().check(), "");
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(c->convolve(c->counit_functional(), c->dual_basis(i)), c->dual_basis(i));
}

TEST(Coalgebra, HitActionsK2) {
  auto c = k2();
  Matrix e = c->basis(2);
  EXPECT_EQ(c->right_hit(c->dual_basis(0)) * e, e);
  EXPECT_EQ(c->right_hit(c->dual_basis(2)) * e, c->basis(1));
  EXPECT_TRUE(c->right_hit(c->counit_functional()).is_identity());
  EXPECT_TRUE(c->left_hit(c->counit_functional()).is_identity());
  // f -> e = e_1 f(e_2): u (x) e and e (x) v
  EXPECT_EQ(c->left_hit(c->dual_basis(2)) * e, c->basis(0));
}

class BuiltinCoalgebras : public ::testing::TestWithParam<std::string> {};

TEST_P(BuiltinCoalgebras, DualOfCopIsOpposite) {
  auto c = builtin(GetParam()).coalgebra;
  ASSERT_TRUE(check_coalgebra(*c).ok());
  auto cc = cop(c);
  for (std::size_t i = 0; i < c->dim(); ++i)
    for (std::size_t j = 0; j < c->dim(); ++j) {
      Matrix f = c->dual_basis(i), g = c->dual_basis(j);
      EXPECT_EQ(cc->convolve(f, g), c->convolve(g, f));
    }
}

TEST_P(BuiltinCoalgebras, HitActionCompatibility) {
  auto c = builtin(GetParam()).coalgebra;
  std::size_t n = c->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix f = c->dual_basis(i), g = c->dual_basis(j);
      EXPECT_EQ(c->right_hit(g) * c->right_hit(f), c->right_hit(c->convolve(f, g)));
      EXPECT_EQ(c->left_hit(f) * c->left_hit(g), c->left_hit(c->convolve(f, g)));
      EXPECT_EQ(c->left_hit(f) * c->right_hit(g), c->right_hit(g) * c->left_hit(f));
    }
}

INSTANTIATE_TEST_SUITE_P(All, BuiltinCoalgebras,
                         ::testing::Values("k2", "star:2", "example0:2", "mat:2", "sweedler", "taft:3:7",
                                           "group:S3", "dualgroup:C3"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& ch : s)
                             if (!isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return s;
                         });

TEST(Grouplikes, QuiverVertices) {
  for (std::string name : {"k2", "star:3", "example0:2"}) {
    auto c = builtin(name).coalgebra;
    auto g = grouplikes(c);
    EXPECT_FALSE(g.search_incomplete);
    std::size_t nv = name == "k2" ? 2 : (name == "star:3" ? 5 : 3);
    ASSERT_EQ(g.elements.size(), nv) << name;
    for (std::size_t i = 0; i < nv; ++i) EXPECT_EQ(g.elements[i], c->basis(i));
  }
}

TEST(Grouplikes, PointAndSweedler) {
  auto g = grouplikes(grouplike_point(Q()));
  ASSERT_EQ(g.elements.size(), 1u);
  auto h = builtin("sweedler").coalgebra;
  auto gs = grouplikes(h);
  ASSERT_EQ(gs.elements.size(), 2u);
  EXPECT_EQ(gs.elements[0], h->basis(0));
  EXPECT_EQ(gs.elements[1], h->basis(1));
}

TEST(Grouplikes, MatchesExhaustiveSearchOverSmallFields) {
  struct Case {
    std::string name;
    std::uint64_t p;
  };
  for (const Case& cs : {Case{"sweedler", 5}, Case{"sweedler", 7}, Case{"k2", 5}, Case{"mat:2", 3},
                         Case{"dualgroup:C3", 7}, Case{"group:C3", 5}}) {
    auto c = builtin(cs.name, prime_field(cs.p)).coalgebra;
    auto brute = brute_grouplikes(*c);
    auto found = grouplikes(c).elements;
    EXPECT_EQ(found.size(), brute.size()) << cs.name << " over F" << cs.p;
    for (const auto& g : found) EXPECT_NE(std::find(brute.begin(), brute.end(), g), brute.end());
  }
}

TEST(Grouplikes, DualGroupHasCharacters) {
  // Grouplikes of k^G are the characters of G: three for C3 over F7 (cube roots exist), one over Q.
  EXPECT_EQ(grouplikes(builtin("dualgroup:C3", prime_field(7)).coalgebra).elements.size(), 3u);
  auto overq = grouplikes(builtin("dualgroup:C3").coalgebra);
  EXPECT_EQ(overq.elements.size(), 1u);
  EXPECT_TRUE(overq.search_incomplete);
  EXPECT_EQ(grouplikes(builtin("dualgroup:S3").coalgebra).elements.size(), 2u);
}

TEST(Grouplikes, ComatrixHasNone) {
  auto g = grouplikes(builtin("mat:2").coalgebra);
  EXPECT_TRUE(g.elements.empty());
  EXPECT_FALSE(g.search_incomplete);
}
