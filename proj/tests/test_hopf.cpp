#include <gtest/gtest.h>

#include "nkwb/builtins.hpp"
#include "nkwb/hopf.hpp"

using namespace nkwb;

namespace {

const std::vector<std::string> kHopf = {"sweedler", "taft:2:7", "taft:3:13", "taft:4:13",
                                         "group:S3", "dualgroup:S3", "group:C2", "dualgroup:C2"};

HopfPtr hopf(const std::string& name) { return builtin(name).hopf; }

std::string failures(const std::vector<AxiomCheck>& checks) {
  std::string out;
  for (const auto& c : checks)
    if (!c.ok) out += c.name + " [" + c.witness + "]; ";
  return out;
}

// Left cointegrals by brute force: for every basis h and every index t,
// sum_j Delta[h][t][j] lambda_j = lambda_h [t == unit index], with the unit 1
// located by scanning for the basis vector equal to the unit column.
Matrix oracle_cointegral(const HopfAlgebra& h) {
  Field f = h.field();
  std::size_t n = h.dim();
  Matrix eq(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t j = 0; j < n; ++j) {
        eq(i * n + t, j) += h.comul()(t * n + j, i);
        if (j == i) eq(i * n + t, j) -= h.unit()(t, 0);
      }
  Subspace k = kernel(eq);
  EXPECT_EQ(k.dim(), 1u);
  Matrix v = k.basis().col(0);
  std::size_t p = 0;
  while (v(p, 0).is_zero()) ++p;
  return v(p, 0).inv() * v;
}

Matrix functional(Field f, std::size_t n, std::size_t at) {
  Matrix v(f, n, 1);
  v(at, 0) = Scalar::one(f);
  return v;
}

}  // namespace

TEST(Hopf, AxiomsAndAntipodeOrders) {
  for (const auto& name : kHopf) {
    auto rep = check_hopf(*hopf(name));
    EXPECT_EQ(failures(rep.checks), "") << name;
  }
  auto h4 = check_hopf(*hopf("sweedler"));
  EXPECT_EQ(h4.order_s2, 2u);
  EXPECT_EQ(h4.order_s4, 1u);
  EXPECT_NE(check_hopf(*hopf("taft:3:13")).order_s4, 1u);
  EXPECT_NE(check_hopf(*hopf("taft:4:13")).order_s4, 1u);
  EXPECT_EQ(check_hopf(*hopf("group:S3")).order_s2, 1u);
}

TEST(Hopf, AntipodePowers) {
  auto h = hopf("taft:3:13");
  Matrix s = h->antipode();
  EXPECT_EQ(antipode_power(*h, 3), s * s * s);
  EXPECT_TRUE((antipode_power(*h, -2) * antipode_power(*h, 2)).is_identity());
  EXPECT_TRUE(antipode_power(*h, 0).is_identity());
}

TEST(Hopf, CointegralMatchesOracle) {
  for (const auto& name : kHopf) {
    auto h = hopf(name);
    EXPECT_EQ(cointegral_space(*h).size(), 1u) << name;
    EXPECT_EQ(cointegral(*h), oracle_cointegral(*h)) << name;
  }
  auto h4 = hopf("sweedler");
  EXPECT_EQ(cointegral(*h4), functional(h4->field(), 4, 3));  // (gx)*
  auto s3 = hopf("group:S3");
  EXPECT_EQ(cointegral(*s3), functional(s3->field(), 6, 0));  // delta_e
}

TEST(Hopf, ModularDataSweedler) {
  auto h = hopf("sweedler");
  ModularData m = modular_data(*h);
  EXPECT_EQ(failures(m.checks), "");
  EXPECT_EQ(m.g, h->basis(1));
  Field f = h->field();
  EXPECT_EQ(m.alpha(0, 0), Scalar::one(f));
  EXPECT_EQ(m.alpha(1, 0), Scalar::from_int(f, -1));
  EXPECT_TRUE(m.alpha(2, 0).is_zero());
  EXPECT_TRUE(m.alpha(3, 0).is_zero());
}

TEST(Hopf, ModularDataUnimodular) {
  for (const std::string name : {"group:S3", "dualgroup:S3", "dualgroup:C2"}) {
    auto h = hopf(name);
    ModularData m = modular_data(*h);
    EXPECT_EQ(failures(m.checks), "") << name;
    EXPECT_EQ(m.g, h->unit()) << name;
    EXPECT_EQ(m.alpha, h->counit().transpose()) << name;
  }
}

TEST(Hopf, TaftModularFunctionNontrivial) {
  auto h = hopf("taft:3:13");
  ModularData m = modular_data(*h);
  EXPECT_EQ(m.g, h->basis(1));
  EXPECT_NE(m.alpha(1, 0), Scalar::one(h->field()));
}

TEST(Hopf, RadfordOnAllBuiltins) {
  for (const auto& name : kHopf) {
    auto h = hopf(name);
    auto rep = radford_s4_check(*h, modular_data(*h));
    EXPECT_TRUE(rep.ok()) << name << ": " << (rep.residuals.empty() ? "" : rep.residuals[0]);
  }
  auto t = hopf("taft:4:13");
  EXPECT_FALSE(radford_s4_check(*t, modular_data(*t)).s4_is_identity);
}

TEST(Hopf, RadfordFailsForWrongModularFunction) {
  auto h = hopf("taft:3:13");
  ModularData m = modular_data(*h);
  m.alpha = h->counit().transpose();
  m.alpha_inv = m.alpha;
  EXPECT_FALSE(radford_s4_check(*h, m).ok());
}

TEST(Hopf, PairingNakayamaIsGS2) {
  for (const auto& name : kHopf) {
    auto h = hopf(name);
    auto p = frobenius_pairing_from_cointegral(*h, modular_data(*h));
    EXPECT_EQ(failures(p.checks), "") << name;
    EXPECT_EQ(p.nu, p.expected_nu) << name;
  }
  auto h = hopf("sweedler");
  auto p = frobenius_pairing_from_cointegral(*h, modular_data(*h));
  // nu(x) = -gx
  EXPECT_EQ(p.nu.col(2), Scalar::from_int(h->field(), -1) * h->basis(3));
  auto s3 = hopf("group:S3");
  EXPECT_TRUE(frobenius_pairing_from_cointegral(*s3, modular_data(*s3)).nu.is_identity());
}

TEST(Hopf, DualsAndRigidity) {
  auto h = hopf("sweedler");
  ModularData m = modular_data(*h);
  Comodule kg = grouplike_comodule(*h, m.g, "g");
  EXPECT_EQ(left_dual(*h, kg).coaction(), m.g);
  auto fam = builtin_comodule_family(*h);
  for (const auto& x : fam)
    for (const auto& y : fam) {
      auto rep = check_rigidity(*h, x, y);
      EXPECT_EQ(failures(rep.checks), "");
    }
  for (const auto& x : fam) {
    EXPECT_EQ(double_dual(*h, x).coaction(), antipode_twist(*h, x, 2).coaction());
    EXPECT_EQ(comodule_tensor(*h, comodule_unit(*h), x).coaction(), x.coaction());
  }
}

TEST(Hopf, ModularObject) {
  for (const auto& name : kHopf) {
    auto h = hopf(name);
    ModularData m = modular_data(*h);
    ModularObject g = modular_object(*h, m);
    EXPECT_EQ(failures(g.checks), "") << name;
    EXPECT_EQ(g.gc.dim(), 1u);
    EXPECT_EQ(g.unimodular, m.g == h->unit()) << name;
  }
  EXPECT_FALSE(modular_object(*hopf("sweedler"), modular_data(*hopf("sweedler"))).unimodular);
  EXPECT_TRUE(modular_object(*hopf("dualgroup:C2"), modular_data(*hopf("dualgroup:C2"))).unimodular);
}

TEST(Hopf, PsiMaps) {
  for (const std::string name : {"sweedler", "taft:2:7"}) {
    auto h = hopf(name);
    auto fam = builtin_comodule_family(*h);
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = 0; j < fam.size(); ++j) {
        if (fam[i].dim() * fam[j].dim() > 4) continue;
        auto p = psi_maps(*h, fam[i], fam[j]);
        EXPECT_EQ(failures(p.checks), "") << name << " " << i << "," << j;
      }
  }
}

TEST(Hopf, PsiWithUnitIsIdentity) {
  auto h = hopf("sweedler");
  auto fam = builtin_comodule_family(*h);
  auto p = psi_maps(*h, comodule_unit(*h), fam.back());
  EXPECT_TRUE(p.left.is_identity());
}

TEST(Hopf, NakayamaVersusDuals) {
  auto h = hopf("sweedler");
  ModularData m = modular_data(*h);
  ModularObject g = modular_object(*h, m);
  for (const auto& s : simple_comodules(h->coalgebra())) {
    auto rep = naka_vs_dual(*h, g, s, true);
    EXPECT_TRUE(rep.certified());
  }
}

TEST(Hopf, TaftTopOfInjectiveHullIsModularObject) {
  auto h = hopf("taft:3:13");
  ModularData m = modular_data(*h);
  ModularObject g = modular_object(*h, m);
  auto e1 = injective_hull(comodule_unit(*h)).target;
  EXPECT_TRUE(iso_comodules(top(e1).target, g.kg).isomorphic());
}

TEST(Hopf, RadfordIsomorphismThreeWays) {
  for (const std::string name : {"sweedler", "taft:2:7", "taft:3:13", "group:S3", "dualgroup:S3"}) {
    auto h = hopf(name);
    ModularData m = modular_data(*h);
    ModularObject g = modular_object(*h, m);
    for (const auto& x : builtin_comodule_family(*h)) {
      if (x.dim() > 6) continue;
      auto r = radford_isomorphism(*h, m, g, x);
      EXPECT_EQ(failures(r.checks), "") << name << " " << x.dim();
      EXPECT_EQ(r.explicit_form, r.psi_form);
      EXPECT_EQ(r.explicit_form, r.transported);
    }
  }
}

TEST(Hopf, RadfordIsoOnGrouplikeOfSweedler) {
  auto h = hopf("sweedler");
  ModularData m = modular_data(*h);
  ModularObject g = modular_object(*h, m);
  auto r = radford_isomorphism(*h, m, g, g.kg);
  EXPECT_EQ(r.r_prime(0, 0), Scalar::from_int(h->field(), -1));
  auto r1 = radford_isomorphism(*h, m, g, comodule_unit(*h));
  EXPECT_TRUE(r1.explicit_form.is_identity());
}

TEST(Hopf, RadfordMultiplicativity) {
  for (const std::string name : {"sweedler", "taft:3:13"}) {
    auto h = hopf(name);
    ModularData m = modular_data(*h);
    ModularObject g = modular_object(*h, m);
    auto fam = builtin_comodule_family(*h);
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = 0; j < fam.size(); ++j) {
        if (fam[i].dim() * fam[j].dim() > 6) continue;
        auto c = radford_multiplicativity(*h, m, g, fam[i], fam[j]);
        EXPECT_TRUE(c.ok) << name << " " << c.witness;
      }
  }
}

TEST(Hopf, CointegralIsYetterDrinfeld) {
  for (const auto& name : kHopf) {
    auto h = hopf(name);
    auto rep = yd_check(*h, cointegral_yd(*h, modular_data(*h)), 1, -1);
    EXPECT_EQ(failures(rep.checks), "") << name;
  }
}

TEST(Hopf, BrokenYetterDrinfeldDetected) {
  auto h = hopf("sweedler");
  ModularData m = modular_data(*h);
  YDModule v = cointegral_yd(*h, m);
  v.action[1] = Matrix::row(h->field(), {Scalar::one(h->field())});
  auto rep = yd_check(*h, v, 1, -1);
  EXPECT_FALSE(rep.ok());
  YDModule trivial_action = cointegral_yd(*h, m);
  for (std::size_t i = 0; i < h->dim(); ++i) trivial_action.action[i] = Matrix::row(h->field(), {h->counit()(0, i)});
  EXPECT_FALSE(yd_check(*h, trivial_action, 1, -1).ok());
}

TEST(Hopf, TrivialYetterDrinfeld) {
  auto h = hopf("sweedler");
  YDModule triv{comodule_unit(*h), {}};
  triv.coaction = Comodule(h->coalgebra(), Side::Left, h->unit(), {"1"});
  for (std::size_t i = 0; i < h->dim(); ++i) triv.action.push_back(Matrix::row(h->field(), {h->counit()(0, i)}));
  EXPECT_TRUE(yd_check(*h, triv, 0, 0).ok());
}

TEST(Hopf, HopfModuleEquivalence) {
  for (const auto& name : kHopf) {
    auto h = hopf(name);
    ModularData m = modular_data(*h);
    auto eq = hopf_module_equivalence(*h, cointegral_yd(*h, m), m);
    EXPECT_EQ(failures(eq.checks), "") << name;
    EXPECT_EQ(eq.theta.rows(), h->dim());
    EXPECT_EQ(eq.invariant_lambda, cointegral(*h));
  }
}

TEST(Hopf, TrivialRoundTripIsIdentity) {
  auto h = hopf("group:C2");
  ModularData m = modular_data(*h);
  auto eq = hopf_module_equivalence(*h, cointegral_yd(*h, m), m);
  EXPECT_TRUE(eq.unit.is_identity());
}
