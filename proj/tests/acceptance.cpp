// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nkwb/braided.hpp"
#include "nkwb/builtins.hpp"
#include "nkwb/nakayama.hpp"

using namespace nkwb;

namespace {

const std::vector<std::string> kCoalgebras = {"k2",       "star:1",    "star:2",    "star:3",    "mat:2",    "mat:3",
                                              "sweedler", "taft:2:7",  "taft:3:13", "taft:4:13", "group:S3", "dualgroup:S3"};
const std::vector<std::string> kHopf = {"sweedler", "taft:2:7", "taft:3:13", "taft:4:13", "group:S3", "dualgroup:S3"};

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string first_failure(const std::vector<AxiomCheck>& checks) {
  for (const auto& c : checks)
    if (!c.ok) return c.name + (c.witness.empty() ? "" : " (" + c.witness + ")");
  return {};
}

bool all_certified(const std::vector<Certified>& certs, std::string* bad) {
  for (const auto& c : certs)
    if (!c.result.isomorphic()) {
      *bad = c.claim + ": " + c.result.witness;
      return false;
    }
  return true;
}

Comodule point(const CoalgebraPtr& c, std::size_t g) {
  Matrix rho(c->field(), c->dim(), 1);
  rho(g, 0) = Scalar::one(c->field());
  return Comodule(c, Side::Right, rho);
}

std::size_t index_of(const Coalgebra& c, const std::string& label) {
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (c.labels()[i] == label) return i;
  return c.dim();
}

// Left cointegrals straight from h_1 lambda(h_2) = lambda(h) 1.
Matrix oracle_cointegral(const HopfAlgebra& h, std::size_t* dim) {
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
  *dim = k.dim();
  if (k.dim() != 1) return Matrix();
  Matrix v = k.basis().col(0);
  std::size_t p = 0;
  while (v(p, 0).is_zero()) ++p;
  return v(p, 0).inv() * v;
}

Verdict criterion1() {
  Verdict v;
  for (const auto& name : kCoalgebras) {
    auto b = builtin(name);
    auto rep = check_coalgebra(*b.coalgebra);
    v.require(rep.ok(), name + ": coalgebra axioms");
    if (b.hopf) {
      auto hr = check_hopf(*b.hopf);
      v.require(hr.ok(), name + ": " + first_failure(hr.checks));
    }
  }
  if (v.ok) v.detail = std::to_string(kCoalgebras.size()) + " builtins";
  return v;
}

Verdict criterion2() {
  Verdict v;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto c = builtin("star:" + std::to_string(n)).coalgebra;
    std::size_t d = nakayama_left(point(c, index_of(*c, "w"))).dim();
    v.require(d == n, "star:" + std::to_string(n) + " dim N^l(k_w) = " + std::to_string(d));
  }
  auto k2 = builtin("k2").coalgebra;
  std::size_t d = nakayama_left(point(k2, index_of(*k2, "u"))).dim();
  v.require(d == 0, "k2 dim N^l(k_u) = " + std::to_string(d));
  if (v.ok) v.detail = "dims 1, 2, 3 and 0";
  return v;
}

Verdict criterion3() {
  Verdict v;
  std::size_t count = 0;
  for (const auto& name : kCoalgebras) {
    auto c = builtin(name).coalgebra;
    std::vector<Comodule> family;
    for (const auto& s : simple_comodules(c)) {
      family.push_back(s);
      family.push_back(injective_hull(s).target);
      family.push_back(projective_cover(s).source);
    }
    family.push_back(regular_comodule(c));
    for (const auto& m : family) {
      auto a = adjunction(m);
      ++count;
      v.require(a.ok(), name + ": triangle identity fails on a comodule of dim " + std::to_string(m.dim()));
    }
  }
  if (v.ok) v.detail = std::to_string(count) + " comodules";
  return v;
}

Verdict criterion4() {
  Verdict v;
  std::size_t count = 0;
  for (const auto& name : kCoalgebras) {
    auto c = builtin(name).coalgebra;
    auto simples = simple_comodules(c);
    for (std::size_t i = 0; i < simples.size(); ++i) {
      Comodule e = injective_hull(simples[i]).target;
      Comodule p = projective_cover(simples[i]).source;
      auto r1 = iso_comodules(nakayama_left(e), p);
      auto r2 = iso_comodules(nakayama_right(p), e);
      v.require(r1.isomorphic() && is_colinear(nakayama_left(e), p, r1.map), name + ": N^l(E(S" + std::to_string(i) + ")) ≇ P");
      v.require(r2.isomorphic() && is_colinear(nakayama_right(p), e, r2.map), name + ": N^r(P(S" + std::to_string(i) + ")) ≇ E");
      count += 2;
    }
  }
  if (v.ok) v.detail = std::to_string(count) + " certificates";
  return v;
}

Verdict criterion5() {
  Verdict v;
  auto flags = [](const ClassificationReport& r) {
    return std::string(r.semiperfect.value ? "1" : "0") + (r.qcf.value ? "1" : "0") + (r.cofrobenius.value ? "1" : "0") +
           (r.symmetric.value ? "1" : "0");
  };
  auto k2 = classify(builtin("k2").coalgebra);
  v.require(flags(k2) == "1000", "k2 flags " + flags(k2));
  for (const std::string name : {"mat:2", "group:S3", "dualgroup:S3"}) {
    auto r = classify(builtin(name).coalgebra);
    v.require(flags(r) == "1111", name + " flags " + flags(r));
  }
  for (const std::string name : {"sweedler", "taft:2:7", "taft:3:13", "taft:4:13"}) {
    auto c = builtin(name).coalgebra;
    auto r = classify(c);
    v.require(r.cofrobenius.value && r.conclusive(), name + " not co-Frobenius");
    auto pr = frobenius_pairing(c);
    v.require(pr.found(), name + ": no pairing");
    if (!pr.found()) continue;
    auto nu = nakayama_automorphism(*c, pr.form);
    auto coinner = coinner_test(c, nu.nu);
    v.require(coinner.kind != CoinnerResult::Kind::Undecided, name + ": coinner test undecided");
    v.require(r.symmetric.value == (coinner.kind == CoinnerResult::Kind::Inner), name + ": symmetric flag differs from the coinner test");
    auto perm = nakayama_permutation(c);
    for (const auto& e : perm.entries) {
      std::string bad;
      v.require(all_certified(e.certificates, &bad), name + ": " + bad);
    }
  }
  if (v.ok) v.detail = "k2 semiperfect only; mat:2, group:S3, dualgroup:S3 symmetric; sweedler, taft co-Frobenius";
  return v;
}

Verdict criterion6() {
  Verdict v;
  for (const auto& name : kHopf) {
    auto h = builtin(name).hopf;
    auto space = cointegral_space(*h);
    std::size_t odim = 0;
    Matrix oracle = oracle_cointegral(*h, &odim);
    v.require(space.size() == 1 && odim == 1, name + ": cointegral dimension " + std::to_string(space.size()));
    if (space.size() == 1 && odim == 1) v.require(space[0] == oracle, name + ": solver and oracle disagree");
  }
  auto h4 = builtin("sweedler").hopf;
  Matrix gx(h4->field(), 4, 1);
  gx(index_of(*h4->coalgebra(), "gx"), 0) = Scalar::one(h4->field());
  v.require(cointegral(*h4) == gx, "sweedler λ ≠ (gx)*");
  if (v.ok) v.detail = "dim 1 on 6 Hopf builtins; sweedler λ = (gx)*";
  return v;
}

Verdict criterion7() {
  Verdict v;
  for (const auto& name : kHopf) {
    auto h = builtin(name).hopf;
    std::size_t n = h->dim();
    Field f = h->field();
    auto m = modular_data(*h);
    auto p = frobenius_pairing_from_cointegral(*h, m);
    Matrix s2 = h->antipode() * h->antipode();
    Matrix expected = h->left_mul(m.g) * s2;
    v.require(p.nu == expected, name + ": ν ≠ g S^2");
    // beta(x_1, y) x_2 = nu(y_1) beta(x, y_2) on all basis pairs
    const Matrix& d = h->comul();
    for (std::size_t x = 0; x < n && v.ok; ++x)
      for (std::size_t y = 0; y < n && v.ok; ++y) {
        Matrix lhs(f, n, 1), rhs(f, n, 1);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            if (!d(a * n + b, x).is_zero()) lhs = lhs + (d(a * n + b, x) * p.form(a, y)) * h->basis(b);
            if (!d(a * n + b, y).is_zero()) rhs = rhs + (d(a * n + b, y) * p.form(x, b)) * p.nu.col(a);
          }
        v.require(lhs == rhs, name + ": β(x_1, y) x_2 ≠ ν(y_1) β(x, y_2) at " + h->labels()[x] + ", " + h->labels()[y]);
      }
  }
  if (v.ok) v.detail = "ν = g S^2 and the pairing identity on 6 Hopf builtins";
  return v;
}

Verdict criterion8() {
  Verdict v;
  for (const auto& name : kHopf) {
    auto h = builtin(name).hopf;
    auto rep = radford_s4_check(*h, modular_data(*h));
    v.require(rep.ok(), name + ": " + (rep.residuals.empty() ? std::string() : rep.residuals[0]));
  }
  for (const std::string name : {"taft:3:13", "taft:4:13"}) {
    auto h = builtin(name).hopf;
    v.require(!h->antipode().pow(4).is_identity(), name + ": S^4 = id");
  }
  if (v.ok) v.detail = "all 6 Hopf builtins; S^4 ≠ id on taft:3:13 and taft:4:13";
  return v;
}

Verdict criterion9() {
  Verdict v;
  std::size_t singles = 0, pairs = 0;
  for (const auto& name : kHopf) {
    auto h = builtin(name).hopf;
    auto m = modular_data(*h);
    auto g = modular_object(*h, m);
    v.require(g.ok(), name + ": " + first_failure(g.checks));
    auto fam = builtin_comodule_family(*h);
    for (const auto& x : fam) {
      auto r = radford_isomorphism(*h, m, g, x);
      ++singles;
      v.require(r.explicit_form == r.psi_form && r.explicit_form == r.transported,
                name + ": r_X constructions differ on a comodule of dim " + std::to_string(x.dim()));
      v.require(r.ok(), name + ": " + first_failure(r.checks));
    }
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = 0; j < fam.size(); ++j) {
        if (fam[i].dim() * fam[j].dim() > 6) continue;
        auto c = radford_multiplicativity(*h, m, g, fam[i], fam[j]);
        ++pairs;
        v.require(c.ok, name + ": multiplicativity " + c.witness);
      }
  }
  if (v.ok) v.detail = std::to_string(singles) + " comodules, " + std::to_string(pairs) + " pairs";
  return v;
}

Verdict criterion10() {
  Verdict v;
  auto h = builtin("sweedler").hopf;
  auto m = modular_data(*h);
  auto g = modular_object(*h, m);
  Comodule k1 = comodule_unit(*h);
  Comodule kg = g.kg;
  for (long long t : {0, 1, 2}) {
    Matrix r = sweedler_rform(h->field(), Scalar::from_int(h->field(), t));
    auto axioms = check_rform(*h, r);
    v.require(first_failure(axioms).empty(), "t = " + std::to_string(t) + ": " + first_failure(axioms));
    auto d = braided_data(*h, m, r);
    v.require(d.alpha_from_r == m.alpha, "t = " + std::to_string(t) + ": α ≠ b * u^-1 * v");
    for (const auto& x : {k1, kg}) {
      auto br = braided_radford(*h, m, g, d, x);
      v.require(br.double_braiding.is_identity(), "t = " + std::to_string(t) + ": g_C not transparent");
      v.require(br.from_braiding == br.explicit_form, "t = " + std::to_string(t) + ": braided formula differs from r_X");
    }
  }
  if (v.ok) v.detail = "t = 0, 1, 2; X = k_1, k_g";
  return v;
}

Verdict criterion11() {
  Verdict v;
  auto h = builtin("dualgroup:S3").hopf;
  auto m = modular_data(*h);
  auto g = modular_object(*h, m);
  v.require(g.unimodular, "not unimodular");
  auto pi = projectives_are_injective(*h);
  v.require(first_failure(pi).empty(), first_failure(pi));
  std::size_t count = 0;
  for (const auto& s : simple_comodules(h->coalgebra())) {
    auto homs = hom_space(s, double_dual(*h, s));
    v.require(homs.size() == 1, "Hom(X, X^vv) has dimension " + std::to_string(homs.size()));
    if (homs.size() != 1) continue;
    auto a = semisimple_trace_check(*h, m, g, s, homs[0]);
    auto b = semisimple_trace_check(*h, m, g, s, Scalar::from_int(h->field(), 2) * homs[0]);
    v.require(a.ok() && b.ok(), "trace identity fails on a simple of dim " + std::to_string(s.dim()));
    v.require(a.r_tilde == b.r_tilde, "r~ depends on φ");
    ++count;
  }
  if (v.ok) v.detail = std::to_string(count) + " simples, φ and 2φ";
  return v;
}

Verdict criterion12() {
  Verdict v;
  for (const auto& name : kHopf) {
    auto h = builtin(name).hopf;
    auto m = modular_data(*h);
    YDModule kl = cointegral_yd(*h, m);
    auto yd = yd_check(*h, kl, 1, -1);
    v.require(yd.ok(), name + ": " + first_failure(yd.checks));
    auto eq = hopf_module_equivalence(*h, kl, m);
    v.require(eq.ok(), name + ": " + first_failure(eq.checks));
    v.require(try_inverse(eq.theta).has_value(), name + ": θ singular");
    // the independent path: lambda, g and alpha read off I(H*)
    std::size_t odim = 0;
    v.require(eq.invariant_lambda == oracle_cointegral(*h, &odim), name + ": I(H*) differs from the cointegral");
    v.require(eq.yd_g == m.g && eq.yd_alpha == m.alpha, name + ": YD modular data differs");
    ModularData derived = m;
    derived.g = eq.yd_g;
    derived.alpha = eq.yd_alpha;
    derived.alpha_inv = (eq.yd_alpha.transpose() * h->antipode()).transpose();
    v.require(radford_s4_check(*h, derived).ok(), name + ": S^4 formula fails with YD data");
  }
  if (v.ok) v.detail = "6 Hopf builtins; θ bijective; λ, g, α and S^4 agree";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"axioms of all builtins", criterion1},
      {"dim N^l(k_w) over star:N and k2", criterion2},
      {"adjunction triangle identities", criterion3},
      {"N^l(E(S)) ≅ P(S) and N^r(P(S)) ≅ E(S)", criterion4},
      {"classification and permutation certificates", criterion5},
      {"cointegral", criterion6},
      {"Nakayama automorphism g S^2", criterion7},
      {"Radford S^4", criterion8},
      {"modular object and Radford isomorphism", criterion9},
      {"braided Sweedler family", criterion10},
      {"cosemisimple trace identity", criterion11},
      {"Yetter-Drinfeld and Hopf module engine", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu  %s  %s: %s (%.2fs)\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                v.detail.c_str(), secs);
    std::fflush(stdout);
    if (!v.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
