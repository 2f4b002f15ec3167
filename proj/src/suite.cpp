#include "nkwb/suite.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "nkwb/braided.hpp"
#include "nkwb/nakayama.hpp"

namespace nkwb {

struct SuiteContext {
  const LoadedObject& obj;
  SuiteConfig cfg;
  std::mt19937_64 rng;
  std::optional<ClassificationReport> cls;
  std::optional<ModularData> md;
  std::optional<ModularObject> mo;
  std::optional<std::vector<Comodule>> family;

  SuiteContext(const LoadedObject& o, const SuiteConfig& c) : obj(o), cfg(c), rng(c.seed) {}

  const HopfAlgebra& hopf() const { return *obj.hopf; }
  const ClassificationReport& classification() {
    if (!cls) cls = classify(obj.coalgebra, cfg.seed);
    return *cls;
  }
  const ModularData& modular() {
    if (!md) md = modular_data(*obj.hopf);
    return *md;
  }
  const ModularObject& modular_obj() {
    if (!mo) mo = modular_object(*obj.hopf, modular());
    return *mo;
  }
  const std::vector<Comodule>& comodules() {
    if (!family) family = builtin_comodule_family(*obj.hopf);
    return *family;
  }
  bool full() const { return cfg.level == CheckLevel::Full; }

  // Members of the comodule family used for single-object identities.
  std::vector<std::size_t> singles() {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < comodules().size(); ++i)
      if (full() || comodules()[i].dim() <= 4) out.push_back(i);
    return out;
  }
  // Pairs for two-object identities: all small pairs at the full level,
  // a seeded sample of three at the fast level.
  std::vector<std::pair<std::size_t, std::size_t>> pairs(std::size_t max_product) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto& fam = comodules();
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = 0; j < fam.size(); ++j)
        if (fam[i].dim() * fam[j].dim() <= max_product) out.emplace_back(i, j);
    if (!full() && out.size() > 3) {
      std::shuffle(out.begin(), out.end(), rng);
      out.resize(3);
      std::sort(out.begin(), out.end());
    }
    return out;
  }
};

namespace {

std::string first_failure(const std::vector<AxiomCheck>& checks) {
  for (const auto& c : checks)
    if (!c.ok) return c.name + (c.witness.empty() ? "" : " (" + c.witness + ")");
  return {};
}

SuiteItem from_checks(const std::string& id, const std::vector<AxiomCheck>& checks, const std::string& ok_detail = {}) {
  std::string bad = first_failure(checks);
  if (!bad.empty()) return {id, ItemStatus::Fail, bad};
  return {id, ItemStatus::Pass, ok_detail.empty() ? std::to_string(checks.size()) + " checks" : ok_detail};
}

SuiteItem from_certificates(const std::string& id, const std::vector<Certified>& certs) {
  for (const auto& c : certs)
    if (c.result.kind == IsoResult::Kind::NotIsomorphic) return {id, ItemStatus::Fail, c.claim + ": " + c.result.witness};
  for (const auto& c : certs)
    if (c.result.kind == IsoResult::Kind::Undecided) return {id, ItemStatus::Inconclusive, c.claim + ": " + c.result.witness};
  return {id, ItemStatus::Pass, std::to_string(certs.size()) + " certificates"};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string flag_text(const ClassFlag& f) { return f.decided ? yes_no(f.value) : "undecided"; }

std::vector<Comodule> adjunction_family(const CoalgebraPtr& c, bool full) {
  std::vector<Comodule> out;
  for (const auto& s : simple_comodules(c)) {
    out.push_back(s);
    out.push_back(injective_hull(s).target);
    out.push_back(projective_cover(s).source);
  }
  if (full) {
    Matrix rho = c->comul();
    out.push_back(Comodule(c, Side::Right, rho));
  }
  return out;
}

std::vector<IdentityEntry> build_registry() {
  std::vector<IdentityEntry> r;
  r.push_back({"coalgebra-axioms", "Δ is coassociative and ε is a counit", false, [](SuiteContext& cx) {
                 auto rep = check_coalgebra(*cx.obj.coalgebra);
                 return std::vector<SuiteItem>{from_checks("coalgebra-axioms", {rep.coassociativity, rep.counit})};
               }});
  r.push_back({"classification", "semiperfect, QcF, co-Frobenius and symmetric flags with their implications", false,
               [](SuiteContext& cx) {
                 const auto& c = cx.classification();
                 std::vector<SuiteItem> out;
                 std::string flags = "semiperfect=" + flag_text(c.semiperfect) + " qcf=" + flag_text(c.qcf) +
                                     " cofrobenius=" + flag_text(c.cofrobenius) + " symmetric=" + flag_text(c.symmetric) +
                                     " cosemisimple=" + yes_no(c.cosemisimple);
                 out.push_back({"classification", ItemStatus::Info, flags});
                 if (!c.conclusive()) {
                   out.push_back({"classification", ItemStatus::Inconclusive, "some flag is undecided"});
                 } else if (!c.consistent()) {
                   out.push_back({"classification", ItemStatus::Fail, "flags violate symmetric => co-Frobenius => QcF => semiperfect"});
                 } else {
                   out.push_back({"classification", ItemStatus::Pass, "flags consistent"});
                 }
                 ExpectedClass e{};
                 if (expected_classification(cx.obj.name, e)) {
                   bool match = c.semiperfect.value == e.semiperfect && c.qcf.value == e.qcf &&
                                c.cofrobenius.value == e.cofrobenius && (e.symmetric < 0 || c.symmetric.value == (e.symmetric == 1));
                   out.push_back({"classification", match ? ItemStatus::Pass : ItemStatus::Fail,
                                  match ? "matches the known classification of " + cx.obj.name
                                        : "differs from the known classification of " + cx.obj.name});
                 }
                 out.push_back(from_certificates("classification", c.certificates));
                 return out;
               }});
  r.push_back({"nakayama-adjunction", "N^r ⊣ N^l: unit and counit colinear, both triangle identities", false,
               [](SuiteContext& cx) {
                 std::vector<AxiomCheck> checks;
                 for (const auto& m : adjunction_family(cx.obj.coalgebra, cx.full())) {
                   auto a = adjunction(m);
                   for (const auto& c : {a.unit_colinear, a.counit_colinear, a.right_triangle, a.left_triangle}) checks.push_back(c);
                 }
                 return std::vector<SuiteItem>{from_checks("nakayama-adjunction", checks)};
               }});
  r.push_back({"nakayama-semiperfect", "N^l(E(S)) ≅ P(S) and N^r(P(S)) ≅ E(S) for every simple S", false,
               [](SuiteContext& cx) {
                 std::vector<Certified> certs;
                 auto simples = simple_comodules(cx.obj.coalgebra);
                 for (std::size_t i = 0; i < simples.size(); ++i) {
                   Comodule e = injective_hull(simples[i]).target;
                   Comodule p = projective_cover(simples[i]).source;
                   std::string s = "S" + std::to_string(i);
                   certs.push_back({"N^l(E(" + s + ")) ≅ P(" + s + ")", iso_comodules(nakayama_left(e), p, cx.cfg.seed)});
                   certs.push_back({"N^r(P(" + s + ")) ≅ E(" + s + ")", iso_comodules(nakayama_right(p), e, cx.cfg.seed)});
                 }
                 return std::vector<SuiteItem>{from_certificates("nakayama-semiperfect", certs)};
               }});
  r.push_back({"nakayama-permutation", "for QcF coalgebras soc P(S) ≅ N^l(S) and top E(S) ≅ N^r(S)", false,
               [](SuiteContext& cx) {
                 if (!cx.classification().qcf.value)
                   return std::vector<SuiteItem>{{"nakayama-permutation", ItemStatus::Info, "not QcF; N^l does not permute the simples"}};
                 auto perm = nakayama_permutation(cx.obj.coalgebra, cx.cfg.seed);
                 std::vector<Certified> certs;
                 std::string p = "permutation";
                 for (const auto& e : perm.entries) {
                   p += " " + std::to_string(e.simple) + "->" + std::to_string(e.left_image);
                   certs.insert(certs.end(), e.certificates.begin(), e.certificates.end());
                 }
                 auto item = from_certificates("nakayama-permutation", certs);
                 if (item.status == ItemStatus::Pass) item.detail = p;
                 return std::vector<SuiteItem>{item};
               }});
  r.push_back({"frobenius-pairing", "a non-degenerate balanced pairing exists and β(y, x) = β(ν(x), y)", false,
               [](SuiteContext& cx) {
                 auto pr = frobenius_pairing(cx.obj.coalgebra, cx.cfg.seed);
                 if (!pr.found())
                   return std::vector<SuiteItem>{{"frobenius-pairing", ItemStatus::Info, "none exists: " + pr.certificate}};
                 auto nu = nakayama_automorphism(*cx.obj.coalgebra, pr.form);
                 return std::vector<SuiteItem>{from_checks("frobenius-pairing", nu.checks)};
               }});

  r.push_back({"hopf-axioms", "bialgebra and antipode axioms", true, [](SuiteContext& cx) {
                 auto rep = check_hopf(cx.hopf());
                 return std::vector<SuiteItem>{
                     from_checks("hopf-axioms", rep.checks,
                                 "order(S^2) = " + std::to_string(rep.order_s2) + ", order(S^4) = " + std::to_string(rep.order_s4))};
               }});
  r.push_back({"antipode-bijective", "the antipode is invertible", true, [](SuiteContext& cx) {
                 bool ok = try_inverse(cx.hopf().antipode()).has_value();
                 return std::vector<SuiteItem>{{"antipode-bijective", ok ? ItemStatus::Pass : ItemStatus::Fail, ok ? "S^-1 exists" : "S is singular"}};
               }});
  r.push_back({"cointegral-unique", "left cointegrals h_1 λ(h_2) = λ(h) 1 form a line", true, [](SuiteContext& cx) {
                 auto space = cointegral_space(cx.hopf());
                 if (space.size() != 1)
                   return std::vector<SuiteItem>{{"cointegral-unique", ItemStatus::Fail, "dimension " + std::to_string(space.size())}};
                 return std::vector<SuiteItem>{{"cointegral-unique", ItemStatus::Pass,
                                                "λ = " + format_element(space[0], cx.hopf().labels()) + " (first nonzero coordinate 1)"}};
               }});
  r.push_back({"distinguished-grouplike", "⟨λ, h_1⟩ h_2 = λ(h) g with g grouplike", true, [](SuiteContext& cx) {
                 const auto& m = cx.modular();
                 return std::vector<SuiteItem>{from_checks("distinguished-grouplike", {m.checks[0]},
                                                           "g = " + format_element(m.g, cx.hopf().labels()))};
               }});
  r.push_back({"modular-function", "h ⇀ λ = λ ↼ χ(h), α = ε χ and χ(h) = S^-2(α ⇀ h)", true, [](SuiteContext& cx) {
                 const auto& m = cx.modular();
                 return std::vector<SuiteItem>{from_checks("modular-function", m.checks)};
               }});
  r.push_back({"pairing-nakayama", "β(a, b) = λ(a S(b)) is a Frobenius pairing with ν(h) = g S^2(h)", true,
               [](SuiteContext& cx) {
                 auto p = frobenius_pairing_from_cointegral(cx.hopf(), cx.modular());
                 return std::vector<SuiteItem>{from_checks("pairing-nakayama", p.checks)};
               }});
  r.push_back({"radford-s4", "S^4(h) = g^-1 (α ⇀ h ↼ α^-1) g on every basis element", true, [](SuiteContext& cx) {
                 auto rep = radford_s4_check(cx.hopf(), cx.modular());
                 if (!rep.ok()) return std::vector<SuiteItem>{{"radford-s4", ItemStatus::Fail, rep.residuals[0]}};
                 return std::vector<SuiteItem>{{"radford-s4", ItemStatus::Pass, rep.s4_is_identity ? "S^4 = id" : "S^4 ≠ id"}};
               }});
  r.push_back({"unimodular", "g is the unit, so g_C = N^r(1) is trivial", true, [](SuiteContext& cx) {
                 bool u = cx.modular_obj().unimodular;
                 return std::vector<SuiteItem>{{"unimodular", ItemStatus::Info, u ? "yes" : "no (g_C = k_g)"}};
               }});
  r.push_back({"modular-object", "N^r(1) ≅ k_g through κ([h ⊗ 1]) = λ(h) g", true, [](SuiteContext& cx) {
                 return std::vector<SuiteItem>{from_checks("modular-object", cx.modular_obj().checks)};
               }});
  r.push_back({"rigidity", "evaluation and coevaluation are colinear and satisfy the triangle identities", true,
               [](SuiteContext& cx) {
                 std::vector<AxiomCheck> checks;
                 for (auto [i, j] : cx.pairs(4)) {
                   auto rep = check_rigidity(cx.hopf(), cx.comodules()[i], cx.comodules()[j]);
                   checks.insert(checks.end(), rep.checks.begin(), rep.checks.end());
                 }
                 return std::vector<SuiteItem>{from_checks("rigidity", checks)};
               }});
  r.push_back({"nakayama-duals", "g_C ⊗ X^vv ≅ N^r(X) ≅ ^vvX ⊗ g_C and E(S) ≅ P(g_C ⊗ S^vv)", true,
               [](SuiteContext& cx) {
                 std::vector<Certified> certs;
                 for (const auto& s : simple_comodules(cx.obj.coalgebra)) {
                   auto rep = naka_vs_dual(cx.hopf(), cx.modular_obj(), s, true, cx.cfg.seed);
                   certs.insert(certs.end(), rep.certificates.begin(), rep.certificates.end());
                 }
                 return std::vector<SuiteItem>{from_certificates("nakayama-duals", certs)};
               }});
  r.push_back({"psi-maps", "Ψ^l and Ψ^r are well defined, colinear and invertible", true, [](SuiteContext& cx) {
                 std::vector<AxiomCheck> checks;
                 for (auto [i, j] : cx.pairs(4)) {
                   auto p = psi_maps(cx.hopf(), cx.comodules()[i], cx.comodules()[j]);
                   checks.insert(checks.end(), p.checks.begin(), p.checks.end());
                 }
                 return std::vector<SuiteItem>{from_checks("psi-maps", checks)};
               }});
  r.push_back({"radford-iso", "r_X from the explicit formula, from Ψ and from r' through κ agree", true,
               [](SuiteContext& cx) {
                 std::vector<AxiomCheck> checks;
                 for (auto i : cx.singles()) {
                   auto ri = radford_isomorphism(cx.hopf(), cx.modular(), cx.modular_obj(), cx.comodules()[i]);
                   checks.insert(checks.end(), ri.checks.begin(), ri.checks.end());
                 }
                 return std::vector<SuiteItem>{from_checks("radford-iso", checks)};
               }});
  r.push_back({"radford-iso-multiplicative", "r_{X ⊗ Y} = (r_X ⊗ id)(id ⊗ r_Y)", true, [](SuiteContext& cx) {
                 std::vector<AxiomCheck> checks;
                 for (auto [i, j] : cx.pairs(6))
                   checks.push_back(radford_multiplicativity(cx.hopf(), cx.modular(), cx.modular_obj(), cx.comodules()[i],
                                                             cx.comodules()[j]));
                 return std::vector<SuiteItem>{from_checks("radford-iso-multiplicative", checks)};
               }});
  r.push_back({"yd-cointegral", "k λ with coaction g and action α is Yetter-Drinfeld for (a, b) = (1, -1)", true,
               [](SuiteContext& cx) {
                 auto rep = yd_check(cx.hopf(), cointegral_yd(cx.hopf(), cx.modular()), 1, -1);
                 return std::vector<SuiteItem>{from_checks("yd-cointegral", rep.checks)};
               }});
  r.push_back({"hopf-module-equivalence",
               "F(V) = V ⊗ H is a Hopf module, V ≅ I F(V), I(H*) = k λ and θ : F I(H*) -> H* is bijective", true,
               [](SuiteContext& cx) {
                 const auto& m = cx.modular();
                 auto eq = hopf_module_equivalence(cx.hopf(), cointegral_yd(cx.hopf(), m), m);
                 return std::vector<SuiteItem>{from_checks("hopf-module-equivalence", eq.checks)};
               }});
  r.push_back({"projective-injective", "P(S) is injective and E(S) is projective for every simple S", true,
               [](SuiteContext& cx) {
                 return std::vector<SuiteItem>{from_checks("projective-injective", projectives_are_injective(cx.hopf()))};
               }});
  r.push_back({"semisimple-trace", "for cosemisimple H, r~_X = tr(φ^-1)/tr(φ) φ^vv φ and tr(φ^-1 r~_X) = tr(φ^-1)", true,
               [](SuiteContext& cx) {
                 if (!cx.classification().cosemisimple)
                   return std::vector<SuiteItem>{{"semisimple-trace", ItemStatus::Info, "not cosemisimple"}};
                 std::vector<AxiomCheck> checks;
                 const auto& h = cx.hopf();
                 for (const auto& s : simple_comodules(cx.obj.coalgebra)) {
                   auto homs = hom_space(s, double_dual(h, s));
                   if (homs.size() != 1) {
                     checks.push_back({"Hom(X, X^vv) is one-dimensional", false, std::to_string(homs.size())});
                     continue;
                   }
                   for (long long c : {1, 2}) {
                     auto rep = semisimple_trace_check(h, cx.modular(), cx.modular_obj(), s, Scalar::from_int(h.field(), c) * homs[0]);
                     checks.insert(checks.end(), rep.checks.begin(), rep.checks.end());
                   }
                 }
                 return std::vector<SuiteItem>{from_checks("semisimple-trace", checks)};
               }});
  return r;
}

}  // namespace

const char* status_name(ItemStatus s) {
  switch (s) {
    case ItemStatus::Pass:
      return "PASS";
    case ItemStatus::Fail:
      return "FAIL";
    case ItemStatus::Inconclusive:
      return "INCONCLUSIVE";
    case ItemStatus::Info:
      return "INFO";
  }
  return "?";
}

const std::vector<IdentityEntry>& identity_registry() {
  static const std::vector<IdentityEntry> registry = build_registry();
  return registry;
}

int SuiteReport::exit_code() const {
  bool inconclusive = false;
  for (const auto& i : items) {
    if (i.status == ItemStatus::Fail) return 1;
    if (i.status == ItemStatus::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

SuiteReport run_verify_suite(const LoadedObject& obj, const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.object = obj.name;
  SuiteContext cx(obj, cfg);
  for (const auto& entry : identity_registry()) {
    if (entry.hopf_only && !obj.hopf) continue;
    try {
      auto items = entry.run(cx);
      rep.items.insert(rep.items.end(), items.begin(), items.end());
    } catch (const Error& e) {
      ItemStatus s = e.kind() == ErrorKind::DegenerateSearchInconclusive ? ItemStatus::Inconclusive : ItemStatus::Fail;
      rep.items.push_back({entry.id, s, e.what()});
    }
  }
  return rep;
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "object: " << r.object << "\n";
  for (const auto& i : r.items) {
    std::string st = status_name(i.status);
    out << st << std::string(14 - st.size(), ' ') << i.id << std::string(i.id.size() < 28 ? 28 - i.id.size() : 1, ' ')
        << i.detail << "\n";
  }
  return out.str();
}

json report_json(const SuiteReport& r) {
  json items = json::array();
  for (const auto& i : r.items) items.push_back({{"id", i.id}, {"status", status_name(i.status)}, {"detail", i.detail}});
  return {{"schema", kSchema}, {"command", "verify"}, {"object", r.object}, {"items", items}, {"exit", r.exit_code()}};
}

bool expected_classification(const std::string& name, ExpectedClass& out) {
  auto starts = [&](const char* p) { return name.rfind(p, 0) == 0; };
  if (name == "k2") out = {true, false, false, 0};
  else if (starts("mat:") || starts("group:") || starts("dualgroup:")) out = {true, true, true, 1};
  else if (name == "sweedler" || starts("taft:")) out = {true, true, true, -1};
  else return false;
  return true;
}

}  // namespace nkwb
