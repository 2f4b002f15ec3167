#include <gtest/gtest.h>

#include "nkwb/builtins.hpp"
#include "nkwb/comodule.hpp"

using namespace nkwb;

namespace {

CoalgebraPtr k2() { return builtin("k2").coalgebra; }

// One-dimensional right comodule 1 -> 1 (x) g for a grouplike basis element g.
Comodule point(const CoalgebraPtr& c, std::size_t g) {
  Matrix rho(c->field(), c->dim(), 1);
  rho(g, 0) = Scalar::one(c->field());
  return Comodule(c, Side::Right, rho);
}

// Colinearity by the coaction identity delta_N f = (f (x) id) delta_M.
bool oracle_colinear(const Comodule& m, const Comodule& n, const Matrix& f) {
  Matrix id = Matrix::identity(m.field(), m.coalgebra()->dim());
  if (m.side() == Side::Right) return n.coaction() * f == kron(f, id) * m.coaction();
  return n.coaction() * f == kron(id, f) * m.coaction();
}

bool isomorphic(const Comodule& a, const Comodule& b) {
  auto r = iso_comodules(a, b);
  if (r.kind == IsoResult::Kind::Certificate) {
    EXPECT_TRUE(oracle_colinear(a, b, r.map));
    EXPECT_TRUE(try_inverse(r.map).has_value());
  }
  return r.isomorphic();
}

}  // namespace

TEST(Comodule, RegularAndDualAreComodules) {
  for (std::string name : {"k2", "star:2", "mat:2", "sweedler", "taft:3:7", "group:S3"}) {
    auto c = builtin(name).coalgebra;
    Comodule r = regular_comodule(c);
    EXPECT_TRUE(check_comodule(r).ok()) << name;
    EXPECT_TRUE(check_comodule(left_regular_comodule(c)).ok()) << name;
    Comodule d = dual_comodule(r);
    EXPECT_EQ(d.side(), Side::Left);
    EXPECT_TRUE(check_comodule(d).ok()) << name;
    Comodule dd = dual_comodule(d);
    EXPECT_EQ(dd.side(), Side::Right);
    EXPECT_EQ(dd.coaction(), r.coaction()) << name;
    EXPECT_TRUE(check_comodule(flip_side(r)).ok()) << name;
  }
}

TEST(Comodule, BrokenCoactionDetected) {
  auto c = k2();
  Matrix rho(c->field(), 3, 1);
  rho(2, 0) = Scalar::one(c->field());  // 1 -> 1 (x) e
  EXPECT_FALSE(check_comodule(Comodule(c, Side::Right, rho)).ok());
}

TEST(Comodule, SimplesOfK2) {
  auto c = k2();
  auto s = simple_comodules(c);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].coaction(), point(c, 0).coaction());
  EXPECT_EQ(s[1].coaction(), point(c, 1).coaction());
  EXPECT_EQ(simple_index(point(c, 1)), 1u);
}

TEST(Comodule, SimplesOfComatrixAndPoint) {
  auto m = builtin("mat:2").coalgebra;
  auto s = simple_comodules(m);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].dim(), 2u);
  EXPECT_TRUE(check_comodule(s[0]).ok());
  EXPECT_TRUE(socle(s[0]).dim() == 2u);
  auto g = make_coalgebra(rationals(), {"g"}, std::vector<ComulEntry>{{0, 0, 0, Scalar::one(rationals())}},
                          {Scalar::one(rationals())});
  auto sg = simple_comodules(g);
  ASSERT_EQ(sg.size(), 1u);
  EXPECT_TRUE(isomorphic(sg[0], regular_comodule(g)));
}

TEST(Comodule, SimplesOfTaftAndGroup) {
  EXPECT_EQ(simple_comodules(builtin("sweedler").coalgebra).size(), 2u);
  EXPECT_EQ(simple_comodules(builtin("taft:4:13").coalgebra).size(), 4u);
  // kG is pointed: one simple per group element.
  EXPECT_EQ(simple_comodules(builtin("group:S3").coalgebra).size(), 6u);
  // k^{S3} comodules are S3-representations: trivial, sign, two-dimensional.
  auto s = simple_comodules(builtin("dualgroup:S3").coalgebra);
  ASSERT_EQ(s.size(), 3u);
  std::size_t total = 0;
  for (const auto& x : s) total += x.dim() * x.dim();
  EXPECT_EQ(total, 6u);
}

TEST(Comodule, NonSplitBlockRaises) {
  // k^{C3} over Q: the two nontrivial characters are not defined over Q.
  try {
    simple_comodules(builtin("dualgroup:C3").coalgebra);
    FAIL() << "expected SplitnessError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SplitnessError);
  }
}

TEST(Comodule, HomSpacesK2) {
  auto c = k2();
  Comodule ku = point(c, 0), kv = point(c, 1), reg = regular_comodule(c);
  EXPECT_EQ(hom_space(ku, ku).size(), 1u);
  EXPECT_EQ(hom_space(ku, kv).size(), 0u);
  EXPECT_EQ(hom_space(reg, ku).size(), 0u);
  EXPECT_EQ(hom_space(reg, kv).size(), 2u);
  EXPECT_EQ(hom_space(kv, reg).size(), 1u);
  for (const auto& f : hom_space(reg, kv)) EXPECT_TRUE(oracle_colinear(reg, kv, f));
}

TEST(Comodule, HomMatchesOracleOnBuiltins) {
  for (std::string name : {"sweedler", "example0:2", "taft:3:7"}) {
    auto c = builtin(name).coalgebra;
    Comodule reg = regular_comodule(c);
    for (const auto& s : simple_comodules(c)) {
      for (const auto& f : hom_space(s, reg)) EXPECT_TRUE(oracle_colinear(s, reg, f));
      for (const auto& f : hom_space(reg, s)) EXPECT_TRUE(oracle_colinear(reg, s, f));
      EXPECT_EQ(hom_space(s, s).size(), 1u);
    }
  }
}

TEST(Comodule, CohomK2) {
  auto c = k2();
  Comodule ku = point(c, 0), kv = point(c, 1), reg = regular_comodule(c);
  EXPECT_EQ(cohom(ku, ku).dim, 1u);
  auto a = cohom(reg, kv);
  EXPECT_EQ(a.dim, 1u);
  EXPECT_EQ(a.tensor_dim, 1u);
  auto b = cohom(kv, reg);
  EXPECT_EQ(b.dim, 2u);
  EXPECT_EQ(b.tensor_dim, 2u);
}

TEST(Comodule, CohomPathsAgree) {
  for (std::string name : {"k2", "example0:2", "sweedler", "mat:2"}) {
    auto c = builtin(name).coalgebra;
    std::vector<Comodule> ms = simple_comodules(c);
    ms.push_back(regular_comodule(c));
    for (const auto& s : simple_comodules(c)) ms.push_back(injective_hull(s).target);
    for (const auto& x : ms)
      for (const auto& y : ms) {
        if (x.dim() > 6 || y.dim() > 6) continue;
        auto h = cohom(x, y);
        EXPECT_EQ(h.dim, h.tensor_dim) << name;
      }
  }
}

TEST(Comodule, DualOfPoint) {
  auto c = k2();
  Comodule d = dual_comodule(point(c, 0));
  EXPECT_EQ(d.side(), Side::Left);
  // delta(1) = u (x) 1, row index k*m + b = 0
  Matrix expect(c->field(), 3, 1);
  expect(0, 0) = Scalar::one(c->field());
  EXPECT_EQ(d.coaction(), expect);
}

TEST(Comodule, InjectiveHullsK2) {
  auto c = k2();
  auto s = simple_comodules(c);
  auto eu = injective_hull(s[0]);
  auto ev = injective_hull(s[1]);
  EXPECT_EQ(eu.target.dim(), 2u);
  EXPECT_EQ(ev.target.dim(), 1u);
  EXPECT_TRUE(oracle_colinear(eu.source, eu.target, eu.matrix));
  // E(k_u) sits in C as span{u, e}.
  Comodule reg = regular_comodule(c);
  Matrix span(c->field(), 3, 2);
  span(0, 0) = Scalar::one(c->field());
  span(2, 1) = Scalar::one(c->field());
  Comodule sub = subcomodule(reg, Subspace::span(span));
  EXPECT_TRUE(isomorphic(eu.target, sub));
  auto d = dual_comodule(eu.target);
  EXPECT_EQ(d.dim(), 2u);
  EXPECT_TRUE(check_comodule(d).ok());
}

TEST(Comodule, SocleAndTopK2) {
  auto c = k2();
  auto s = simple_comodules(c);
  Comodule e = injective_hull(s[0]).target;
  Comodule soc = subcomodule(e, socle(e));
  EXPECT_EQ(soc.dim(), 1u);
  EXPECT_TRUE(isomorphic(soc, s[0]));
  auto t = top(e);
  EXPECT_EQ(t.target.dim(), 1u);
  EXPECT_TRUE(isomorphic(t.target, s[1]));
  for (const auto& x : s) EXPECT_EQ(socle(x).dim(), x.dim());
}

TEST(Comodule, ProjectiveCoversK2) {
  auto c = k2();
  auto s = simple_comodules(c);
  auto pu = projective_cover(s[0]);
  auto pv = projective_cover(s[1]);
  EXPECT_EQ(pu.source.dim(), 1u);
  EXPECT_EQ(pv.source.dim(), 2u);
  EXPECT_TRUE(oracle_colinear(pv.source, pv.target, pv.matrix));
  EXPECT_EQ(rank(pv.matrix), 1u);
  EXPECT_TRUE(isomorphic(injective_hull(s[0]).target, pv.source));
}

TEST(Comodule, PrimitiveIdempotents) {
  for (std::string name : {"k2", "mat:2", "sweedler", "example0:3", "dualgroup:S3"}) {
    auto c = builtin(name).coalgebra;
    auto es = primitive_idempotents(c);
    Matrix sum(c->field(), c->dim(), 1);
    std::size_t total = 0;
    for (std::size_t i = 0; i < es.size(); ++i) {
      sum = sum + es[i];
      for (std::size_t j = 0; j < es.size(); ++j) {
        Matrix p = c->convolve(es[i], es[j]);
        if (i == j) EXPECT_EQ(p, es[i]) << name;
        else EXPECT_TRUE(p.is_zero()) << name;
      }
      total += rank(c->right_hit(es[i]));
    }
    EXPECT_EQ(sum, c->counit_functional()) << name;
    EXPECT_EQ(total, c->dim()) << name;
  }
  EXPECT_EQ(primitive_idempotents(k2()).size(), 2u);
  EXPECT_EQ(primitive_idempotents(builtin("mat:2").coalgebra).size(), 2u);
}

TEST(Comodule, HullsAndCoversEverywhere) {
  for (std::string name : {"k2", "star:2", "example0:2", "mat:2", "sweedler", "taft:3:7", "dualgroup:S3"}) {
    auto c = builtin(name).coalgebra;
    for (const auto& s : simple_comodules(c)) {
      auto e = injective_hull(s);
      EXPECT_TRUE(check_comodule(e.target).ok());
      Comodule soc = subcomodule(e.target, socle(e.target));
      EXPECT_TRUE(isomorphic(soc, s)) << name;
      auto p = projective_cover(s);
      EXPECT_TRUE(check_comodule(p.source).ok());
      EXPECT_TRUE(isomorphic(top(p.source).target, s)) << name;
      // Fitting: End(E(S)) is local, so non-invertible endomorphisms are nilpotent.
      for (const auto& f : hom_space(e.target, e.target)) {
        if (!try_inverse(f)) EXPECT_TRUE(f.pow(e.target.dim()).is_zero()) << name;
      }
    }
  }
}

TEST(Comodule, ComatrixHullEqualsCover) {
  auto c = builtin("mat:2").coalgebra;
  auto s = simple_comodules(c)[0];
  auto e = injective_hull(s).target;
  auto p = projective_cover(s).source;
  EXPECT_EQ(e.dim(), 2u);
  EXPECT_TRUE(isomorphic(e, p));
  EXPECT_TRUE(isomorphic(e, s));
}

TEST(Comodule, IsoResults) {
  auto c = k2();
  Comodule ku = point(c, 0), kv = point(c, 1);
  auto r = iso_comodules(ku, ku);
  ASSERT_EQ(r.kind, IsoResult::Kind::Certificate);
  EXPECT_EQ(r.map.rows(), 1u);
  auto n = iso_comodules(ku, kv);
  EXPECT_EQ(n.kind, IsoResult::Kind::NotIsomorphic);
  EXPECT_FALSE(n.witness.empty());
  auto d = iso_comodules(ku, regular_comodule(c));
  EXPECT_EQ(d.kind, IsoResult::Kind::NotIsomorphic);
}

TEST(Comodule, IsoFindsNonObviousIntertwiner) {
  // A random change of basis of E(S) is found again.
  auto c = builtin("taft:3:7").coalgebra;
  for (const auto& s : simple_comodules(c)) {
    Comodule e = injective_hull(s).target;
    std::size_t m = e.dim();
    Matrix p = Matrix::identity(c->field(), m);
    for (std::size_t i = 0; i + 1 < m; ++i) p(i, i + 1) = Scalar::from_int(c->field(), 3);
    Matrix pinv = inverse(p);
    Matrix rho = kron(p, Matrix::identity(c->field(), c->dim())) * e.coaction() * pinv;
    Comodule twisted(c, Side::Right, rho);
    ASSERT_TRUE(check_comodule(twisted).ok());
    EXPECT_TRUE(isomorphic(e, twisted));
  }
}

TEST(Comodule, DirectSumAndQuotient) {
  auto c = k2();
  auto s = simple_comodules(c);
  Comodule sum = direct_sum(s[0], s[1]);
  EXPECT_EQ(sum.dim(), 2u);
  EXPECT_TRUE(check_comodule(sum).ok());
  Comodule e = injective_hull(s[0]).target;
  Matrix proj;
  Comodule q = quotient_comodule(e, socle(e), &proj);
  EXPECT_TRUE(isomorphic(q, s[1]));
  EXPECT_TRUE(oracle_colinear(e, q, proj));
  EXPECT_FALSE(isomorphic(sum, e));
}

TEST(Comodule, NonInvariantSubspaceRejected) {
  auto c = k2();
  Comodule reg = regular_comodule(c);
  Matrix span(c->field(), 3, 1);
  span(2, 0) = Scalar::one(c->field());
  EXPECT_THROW(subcomodule(reg, Subspace::span(span)), Error);
}
