#include <gtest/gtest.h>

#include "nkwb/builtins.hpp"
#include "nkwb/nakayama.hpp"

using namespace nkwb;

namespace {

CoalgebraPtr named(const std::string& n) { return builtin(n).coalgebra; }

Comodule point(const CoalgebraPtr& c, std::size_t g) {
  Matrix rho(c->field(), c->dim(), 1);
  rho(g, 0) = Scalar::one(c->field());
  return Comodule(c, Side::Right, rho);
}

// dim Hom^C(C, M) by solving delta_M F = (F (x) id) Delta directly.
std::size_t oracle_hom_from_c(const Comodule& m) {
  const Coalgebra& c = *m.coalgebra();
  Field f = c.field();
  std::size_t n = c.dim(), dm = m.dim();
  Matrix id = Matrix::identity(f, n);
  Matrix eq(f, dm * n * n, dm * n);
  for (std::size_t b = 0; b < dm; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      Matrix e(f, dm, n);
      e(b, a) = Scalar::one(f);
      Matrix d = m.coaction() * e - kron(e, id) * c.comul();
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t s = 0; s < d.cols(); ++s) eq(r * n + s, b * n + a) = d(r, s);
    }
  return dm * n - rank(eq);
}

// dim C (x)_{C*} M = dim of left colinear maps C -> M^*.
std::size_t oracle_right_dim(const Comodule& m) {
  return hom_space(left_regular_comodule(m.coalgebra()), dual_comodule(m)).size();
}

bool iso(const Comodule& a, const Comodule& b) { return iso_comodules(a, b).isomorphic(); }

std::vector<Comodule> family(const CoalgebraPtr& c) {
  std::vector<Comodule> out;
  for (const auto& s : simple_comodules(c)) {
    out.push_back(s);
    out.push_back(injective_hull(s).target);
    out.push_back(projective_cover(s).source);
  }
  out.push_back(regular_comodule(c));
  return out;
}

}  // namespace

TEST(NakayamaLeft, HomFromCVanishesOnSource) {
  auto c = named("k2");
  EXPECT_EQ(nakayama_left(point(c, 0)).dim(), 0u);
}

TEST(NakayamaLeft, StarCenter) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto c = named("star:" + std::to_string(n));
    Comodule kw = point(c, 0);
    Comodule nl = nakayama_left(kw);
    EXPECT_EQ(nl.dim(), n);
    Comodule expect = point(c, 2);
    for (std::size_t i = 1; i < n; ++i) expect = direct_sum(expect, point(c, 2 + i));
    EXPECT_TRUE(iso(nl, expect));
  }
}

TEST(NakayamaLeft, InjectiveHullGoesToCover) {
  auto c = named("k2");
  auto s = simple_comodules(c);
  Comodule nl = nakayama_left(injective_hull(s[0]).target);
  EXPECT_EQ(nl.dim(), 1u);
  EXPECT_TRUE(iso(nl, projective_cover(s[0]).source));
}

TEST(NakayamaRight, K2Values) {
  auto c = named("k2");
  auto s = simple_comodules(c);
  Comodule a = nakayama_right(s[0]);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_TRUE(iso(a, injective_hull(s[0]).target));
  EXPECT_EQ(nakayama_right(s[1]).dim(), 0u);
  Comodule b = nakayama_right(projective_cover(s[1]).source);
  EXPECT_EQ(b.dim(), 1u);
  EXPECT_TRUE(iso(b, injective_hull(s[1]).target));
}

class NakayamaBuiltin : public ::testing::TestWithParam<std::string> {};

TEST_P(NakayamaBuiltin, DimensionsMatchOracles) {
  auto c = named(GetParam());
  for (const auto& m : family(c)) {
    EXPECT_EQ(nakayama_left(m).dim(), oracle_hom_from_c(m));
    EXPECT_EQ(nakayama_right(m).dim(), oracle_right_dim(m));
  }
}

TEST_P(NakayamaBuiltin, TriangleIdentities) {
  auto c = named(GetParam());
  for (const auto& m : family(c)) {
    auto rep = adjunction(m);
    EXPECT_TRUE(rep.ok()) << rep.right_triangle.witness << rep.left_triangle.witness;
  }
}

TEST_P(NakayamaBuiltin, SemiperfectIsomorphisms) {
  auto c = named(GetParam());
  for (const auto& s : simple_comodules(c)) {
    auto e = injective_hull(s).target;
    auto p = projective_cover(s).source;
    EXPECT_TRUE(iso(nakayama_left(e), p));
    EXPECT_TRUE(iso(nakayama_right(p), e));
  }
}

TEST_P(NakayamaBuiltin, BalancedSpaceMatchesModuleHoms) {
  auto c = named(GetParam());
  auto space = balanced_form_space(*c);
  auto homs = hom_space(left_regular_comodule(c), dual_comodule(regular_comodule(c)));
  EXPECT_EQ(space.size(), homs.size());
  for (const auto& b : space) EXPECT_TRUE(is_balanced(*c, b));
}

INSTANTIATE_TEST_SUITE_P(All, NakayamaBuiltin,
                         ::testing::Values("k2", "star:2", "example0:2", "mat:2", "sweedler", "taft:3:7",
                                           "group:S3", "dualgroup:S3"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& ch : s)
                             if (!isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return s;
                         });

TEST(Nakayama, ExactnessOnK2Sequence) {
  // 0 -> k_u -> E(k_u) -> k_v -> 0
  auto c = named("k2");
  auto s = simple_comodules(c);
  auto hull = injective_hull(s[0]);
  Matrix proj;
  Comodule q = quotient_comodule(hull.target, image(hull.matrix), &proj);
  ASSERT_EQ(q.dim(), 1u);
  auto la = nakayama_left_data(hull.source), lb = nakayama_left_data(hull.target), lc = nakayama_left_data(q);
  Matrix i = nakayama_left_map(la, lb, hull.matrix), p = nakayama_left_map(lb, lc, proj);
  // left exact: 0 -> N^l A -> N^l B -> N^l C exact
  EXPECT_EQ(rank(i), la.value.dim());
  EXPECT_EQ(lb.value.dim() - rank(p), rank(i));
  auto ra = nakayama_right_data(hull.source), rb = nakayama_right_data(hull.target), rc = nakayama_right_data(q);
  Matrix ri = nakayama_right_map(ra, rb, hull.matrix), rp = nakayama_right_map(rb, rc, proj);
  // right exact: N^r A -> N^r B -> N^r C -> 0 exact
  EXPECT_EQ(rank(rp), rc.value.dim());
  EXPECT_EQ(rb.value.dim() - rank(rp), rank(ri));
}

TEST(Pairing, K2HasNone) {
  auto r = frobenius_pairing(named("k2"));
  EXPECT_EQ(r.kind, PairingResult::Kind::NoneExists);
  EXPECT_FALSE(r.certificate.empty());
}

TEST(Pairing, ComatrixHasTraceForm) {
  auto c = named("mat:2");
  auto r = frobenius_pairing(c);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(is_balanced(*c, r.form));
  // beta(x_ij, x_kl) = delta_jk delta_il, pulled back from the trace form on M_2
  Matrix t(c->field(), 4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) t(i * 2 + j, j * 2 + i) = Scalar::one(c->field());
  EXPECT_TRUE(is_balanced(*c, t));
  auto nu = nakayama_automorphism(*c, t);
  EXPECT_TRUE(nu.ok());
  EXPECT_TRUE(nu.nu.is_identity());
}

TEST(Pairing, PointHasIdentityNu) {
  Field q = rationals();
  auto g = make_coalgebra(q, {"g"}, std::vector<ComulEntry>{{0, 0, 0, Scalar::one(q)}}, {Scalar::one(q)});
  auto nu = nakayama_automorphism(*g, Matrix::from_ints(q, {{1}}));
  EXPECT_TRUE(nu.ok());
  EXPECT_TRUE(nu.nu.is_identity());
  EXPECT_THROW(nakayama_automorphism(*g, Matrix::from_ints(q, {{0}})), Error);
}

TEST(Pairing, NuIndependentOfScaling) {
  auto c = named("sweedler");
  auto r = frobenius_pairing(c);
  ASSERT_TRUE(r.found());
  auto a = nakayama_automorphism(*c, r.form);
  auto b = nakayama_automorphism(*c, Scalar::from_int(c->field(), -3) * r.form);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.nu, b.nu);
}

TEST(Pairing, TwoFormsDifferByCoinner) {
  for (std::string name : {"sweedler", "mat:2", "taft:3:7", "dualgroup:S3"}) {
    auto c = named(name);
    auto space = balanced_form_space(*c);
    Rng rng(11);
    std::vector<Matrix> forms;
    for (int t = 0; t < 50 && forms.size() < 2; ++t) {
      Matrix b(c->field(), c->dim(), c->dim());
      for (const auto& s : space) b = b + rng.scalar(c->field(), 9) * s;
      if (!det(b).is_zero()) forms.push_back(b);
    }
    ASSERT_EQ(forms.size(), 2u) << name;
    Matrix nu1 = nakayama_automorphism(*c, forms[0]).nu, nu2 = nakayama_automorphism(*c, forms[1]).nu;
    auto r = coinner_test(c, nu1 * inverse(nu2));
    EXPECT_EQ(r.kind, CoinnerResult::Kind::Inner) << name << ": " << r.witness;
  }
}

TEST(Twist, IdentityAndNakayamaIso) {
  auto c = named("sweedler");
  auto r = frobenius_pairing(c);
  auto nu = nakayama_automorphism(*c, r.form);
  for (const auto& s : simple_comodules(c)) {
    EXPECT_EQ(twist_comodule(s, Matrix::identity(c->field(), c->dim())).coaction(), s.coaction());
    auto nr = nakayama_right_data(s);
    Matrix iso_map = nakayama_twist_iso(nr, s, r.form);
    Comodule tw = twist_comodule(s, nu.nu);
    EXPECT_TRUE(is_colinear(nr.value, tw, iso_map));
    EXPECT_TRUE(try_inverse(iso_map).has_value());
    EXPECT_TRUE(iso(nakayama_left(s), twist_comodule(s, inverse(nu.nu))));
  }
  Matrix bad = Matrix::identity(c->field(), c->dim());
  bad(0, 0) = Scalar::from_int(c->field(), 2);
  EXPECT_THROW(twist_comodule(simple_comodules(c)[0], bad), Error);
}

TEST(Coinner, IdentityIsInner) {
  for (std::string name : {"k2", "mat:2", "sweedler"}) {
    auto c = named(name);
    auto r = coinner_test(c, Matrix::identity(c->field(), c->dim()));
    ASSERT_EQ(r.kind, CoinnerResult::Kind::Inner) << name;
  }
}

TEST(Coinner, NontrivialPermutationOfGrouplikesIsNot) {
  // Swapping the two grouplikes of k{a, b} permutes the simples, so it is not coinner.
  Field q = rationals();
  auto c = make_coalgebra(q, {"a", "b"}, std::vector<ComulEntry>{{0, 0, 0, Scalar::one(q)}, {1, 1, 1, Scalar::one(q)}},
                          {Scalar::one(q), Scalar::one(q)});
  auto r = coinner_test(c, Matrix::from_ints(q, {{0, 1}, {1, 0}}));
  EXPECT_EQ(r.kind, CoinnerResult::Kind::NotCoinner);
}

TEST(Classify, K2SemiperfectOnly) {
  auto rep = classify(named("k2"));
  EXPECT_TRUE(rep.semiperfect.value);
  EXPECT_FALSE(rep.qcf.value);
  EXPECT_FALSE(rep.cofrobenius.value);
  EXPECT_FALSE(rep.symmetric.value);
  EXPECT_TRUE(rep.conclusive());
  EXPECT_TRUE(rep.consistent());
  EXPECT_THROW(nakayama_permutation(named("k2")), Error);
}

TEST(Classify, CosemisimpleAreSymmetric) {
  for (std::string name : {"mat:2", "group:S3", "dualgroup:S3"}) {
    auto rep = classify(named(name));
    EXPECT_TRUE(rep.cosemisimple) << name;
    EXPECT_TRUE(rep.symmetric.value) << name;
    EXPECT_TRUE(rep.consistent());
  }
}

TEST(Classify, TaftAreCoFrobenius) {
  for (std::string name : {"sweedler", "taft:3:7"}) {
    auto c = named(name);
    auto rep = classify(c);
    EXPECT_TRUE(rep.qcf.value);
    EXPECT_TRUE(rep.cofrobenius.value);
    EXPECT_TRUE(rep.conclusive());
    auto p = nakayama_permutation(c);
    EXPECT_TRUE(p.certified());
  }
}

TEST(Permutation, ComatrixIsIdentity) {
  auto p = nakayama_permutation(named("mat:2"));
  ASSERT_EQ(p.perm.size(), 1u);
  EXPECT_EQ(p.perm[0], 0u);
  EXPECT_TRUE(p.certified());
}
