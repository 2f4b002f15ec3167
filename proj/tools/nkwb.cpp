#include <algorithm>
#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "nkwb/braided.hpp"
#include "nkwb/builtins.hpp"
#include "nkwb/io.hpp"
#include "nkwb/nakayama.hpp"
#include "nkwb/suite.hpp"

using namespace nkwb;

namespace {

struct Options {
  std::string field;
  std::uint64_t seed = 0;
  std::string level = "fast";
  std::string format = "text";
  std::string object;
  std::string functor = "l";
  std::string comodule;
  int simple = -1;
  std::string rform;
  std::string pivot;
};

struct Outcome {
  json body;
  int code = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Field field_of(const Options& o) { return o.field.empty() ? nullptr : parse_field_flag(o.field); }

LoadedObject load(const Options& o) {
  if (o.object.empty()) throw UsageError("missing object (builtin name or JSON file)");
  return load_object(o.object, field_of(o));
}

const HopfAlgebra& need_hopf(const LoadedObject& obj) {
  if (!obj.hopf) throw UsageError(obj.name + " carries no Hopf structure");
  return *obj.hopf;
}

json checks_json(const std::vector<AxiomCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    json j = {{"name", c.name}, {"ok", c.ok}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    out.push_back(j);
  }
  return out;
}

bool all_ok(const std::vector<AxiomCheck>& checks) {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

json column_json(const Matrix& v, const std::vector<std::string>& labels) {
  json out = json::object();
  for (std::size_t i = 0; i < v.rows(); ++i) out[labels[i]] = v(i, 0).str();
  return out;
}

json certificates_json(const std::vector<Certified>& certs, int& code) {
  json out = json::array();
  for (const auto& c : certs) {
    std::string status = c.result.isomorphic() ? "certified" : c.result.kind == IsoResult::Kind::NotIsomorphic ? "not isomorphic" : "undecided";
    if (c.result.kind == IsoResult::Kind::NotIsomorphic) code = 1;
    else if (c.result.kind == IsoResult::Kind::Undecided && code == 0) code = 3;
    json j = {{"claim", c.claim}, {"status", status}};
    if (!c.result.witness.empty()) j["witness"] = c.result.witness;
    out.push_back(j);
  }
  return out;
}

Outcome cmd_validate(const Options& o) {
  auto obj = load(o);
  Outcome out;
  auto rep = check_coalgebra(*obj.coalgebra);
  std::vector<AxiomCheck> checks = {rep.coassociativity, rep.counit};
  out.body["object"] = obj.name;
  out.body["dim"] = obj.coalgebra->dim();
  if (obj.hopf) {
    auto h = check_hopf(*obj.hopf);
    checks = h.checks;
    out.body["order_s2"] = h.order_s2;
    out.body["order_s4"] = h.order_s4;
  }
  out.body["checks"] = checks_json(checks);
  out.code = all_ok(checks) ? 0 : 1;
  return out;
}

json flag_json(const ClassFlag& f) {
  json j = {{"value", f.value}, {"decided", f.decided}};
  if (!f.evidence.empty()) j["evidence"] = f.evidence;
  return j;
}

Outcome cmd_classify(const Options& o) {
  auto obj = load(o);
  Outcome out;
  auto c = classify(obj.coalgebra, o.seed);
  out.body["object"] = obj.name;
  out.body["semiperfect"] = flag_json(c.semiperfect);
  out.body["qcf"] = flag_json(c.qcf);
  out.body["cofrobenius"] = flag_json(c.cofrobenius);
  out.body["symmetric"] = flag_json(c.symmetric);
  out.body["cosemisimple"] = c.cosemisimple;
  out.body["certificates"] = certificates_json(c.certificates, out.code);
  if (!c.notes.empty()) out.body["notes"] = c.notes;
  if (!c.consistent()) out.code = 1;
  else if (!c.conclusive() && out.code == 0) out.code = 3;
  return out;
}

Outcome cmd_nakayama(const Options& o) {
  Comodule m;
  std::string source;
  if (!o.comodule.empty()) {
    json j = read_json_file(o.comodule);
    m = comodule_from_json(j, std::filesystem::path(o.comodule).parent_path().string(), field_of(o));
    source = o.comodule;
  } else if (o.simple >= 0) {
    auto obj = load(o);
    auto simples = simple_comodules(obj.coalgebra);
    if (static_cast<std::size_t>(o.simple) >= simples.size())
      throw UsageError("--simple out of range (" + std::to_string(simples.size()) + " simples)");
    m = simples[o.simple];
    source = obj.name + " S" + std::to_string(o.simple);
  } else {
    throw UsageError("nakayama needs --comodule FILE or --simple INDEX");
  }
  if (o.functor != "l" && o.functor != "r") throw UsageError("--functor is l or r");
  Comodule n = o.functor == "l" ? nakayama_left(m) : nakayama_right(m);
  Outcome out;
  out.body["input"] = source;
  out.body["functor"] = "N^" + o.functor;
  out.body["dim"] = n.dim();
  json cj = comodule_to_json(n);
  out.body["basis"] = cj["basis"];
  out.body["coaction"] = cj["coaction"];
  return out;
}

Outcome cmd_pairing(const Options& o, bool with_nu) {
  auto obj = load(o);
  Outcome out;
  out.body["object"] = obj.name;
  auto pr = frobenius_pairing(obj.coalgebra, o.seed);
  out.body["exists"] = pr.found();
  out.body["space_dim"] = pr.space_dim;
  out.body["certificate"] = pr.certificate;
  if (!pr.found()) {
    out.code = with_nu ? 1 : 0;
    return out;
  }
  out.body["form"] = matrix_to_json(pr.form);
  if (with_nu) {
    auto nu = nakayama_automorphism(*obj.coalgebra, pr.form);
    out.body["nu"] = matrix_to_json(nu.nu);
    out.body["checks"] = checks_json(nu.checks);
    out.code = nu.ok() ? 0 : 1;
  }
  return out;
}

Outcome cmd_cointegral(const Options& o) {
  auto obj = load(o);
  const auto& h = need_hopf(obj);
  Outcome out;
  out.body["object"] = obj.name;
  auto space = cointegral_space(h);
  out.body["dim"] = space.size();
  out.body["normalization"] = "first nonzero coordinate is 1";
  if (space.size() == 1) out.body["lambda"] = column_json(space[0], h.labels());
  out.code = space.size() == 1 ? 0 : 1;
  return out;
}

Outcome cmd_modular(const Options& o) {
  auto obj = load(o);
  const auto& h = need_hopf(obj);
  auto m = modular_data(h);
  Outcome out;
  out.body["object"] = obj.name;
  out.body["lambda"] = column_json(m.lambda, h.labels());
  out.body["g"] = format_element(m.g, h.labels());
  out.body["alpha"] = column_json(m.alpha, h.labels());
  out.body["alpha_inv"] = column_json(m.alpha_inv, h.labels());
  out.body["chi"] = matrix_to_json(m.chi);
  auto p = frobenius_pairing_from_cointegral(h, m);
  out.body["pairing"] = matrix_to_json(p.form);
  out.body["nu"] = matrix_to_json(p.nu);
  std::vector<AxiomCheck> checks = m.checks;
  checks.insert(checks.end(), p.checks.begin(), p.checks.end());
  out.body["checks"] = checks_json(checks);
  out.code = all_ok(checks) ? 0 : 1;
  return out;
}

Outcome cmd_radford(const Options& o) {
  auto obj = load(o);
  const auto& h = need_hopf(obj);
  auto m = modular_data(h);
  auto rep = radford_s4_check(h, m);
  Outcome out;
  out.body["object"] = obj.name;
  out.body["identity"] = "S^4(h) = g^-1 (α ⇀ h ↼ α^-1) g";
  out.body["pass"] = rep.ok();
  out.body["s4_is_identity"] = rep.s4_is_identity;
  out.body["g"] = format_element(m.g, h.labels());
  out.body["alpha"] = column_json(m.alpha, h.labels());
  if (!rep.ok()) out.body["residuals"] = rep.residuals;
  out.code = rep.ok() ? 0 : 1;
  return out;
}

Matrix read_rform(const HopfAlgebra& h, const std::string& spec) {
  if (spec.rfind("sweedler:", 0) == 0) return sweedler_rform(h.field(), parse_scalar(h.field(), spec.substr(9)));
  json j = read_json_file(spec);
  if (j.is_object()) j = j.at("rform");
  return matrix_from_json(h.field(), j);
}

Outcome cmd_braided(const Options& o) {
  auto obj = load(o);
  const auto& h = need_hopf(obj);
  if (o.rform.empty()) throw UsageError("braided needs --rform FILE (or sweedler:T)");
  Matrix r = read_rform(h, o.rform);
  auto m = modular_data(h);
  auto g = modular_object(h, m);
  auto d = braided_data(h, m, r);
  Outcome out;
  out.body["object"] = obj.name;
  out.body["u"] = column_json(d.u, h.labels());
  out.body["v"] = column_json(d.v, h.labels());
  out.body["b"] = column_json(d.b, h.labels());
  std::vector<AxiomCheck> checks = d.checks;
  auto fam = builtin_comodule_family(h);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (o.level == "fast" && fam[i].dim() > 4) continue;
    auto br = braided_radford(h, m, g, d, fam[i]);
    for (auto c : br.checks) {
      c.name += " [X" + std::to_string(i) + "]";
      checks.push_back(c);
    }
  }
  out.body["checks"] = checks_json(checks);
  out.code = all_ok(checks) ? 0 : 1;
  return out;
}

Matrix read_pivot(const HopfAlgebra& h, const std::string& spec) {
  if (spec == "counit") return h.counit().transpose();
  json j = read_json_file(spec);
  if (j.is_object()) j = j.at("pivot");
  if (!j.is_array() || j.size() != h.dim()) throw Error(ErrorKind::ParseError, spec + ": pivot must list one value per basis element");
  Matrix p(h.field(), h.dim(), 1);
  for (std::size_t i = 0; i < h.dim(); ++i) p(i, 0) = scalar_from_json(h.field(), j[i]);
  return p;
}

Outcome cmd_spherical(const Options& o) {
  auto obj = load(o);
  const auto& h = need_hopf(obj);
  if (o.pivot.empty()) throw UsageError("spherical needs --pivot FILE (or counit)");
  Matrix p = read_pivot(h, o.pivot);
  auto m = modular_data(h);
  auto g = modular_object(h, m);
  std::optional<BraidedData> d;
  if (!o.rform.empty()) d = braided_data(h, m, read_rform(h, o.rform));
  auto rep = sphericity_check(h, m, g, p, builtin_comodule_family(h), d ? &*d : nullptr);
  Outcome out;
  out.body["object"] = obj.name;
  out.body["spherical"] = rep.spherical;
  out.body["pivotal"] = checks_json(rep.pivotal);
  out.body["diagram"] = checks_json(rep.diagram);
  if (d) {
    out.body["twist"] = checks_json(rep.twist);
    out.body["twist_ok"] = rep.twist_ok;
    out.body["agree"] = rep.twist_ok == rep.spherical;
    if (rep.twist_ok != rep.spherical) out.code = 1;
  }
  if (!rep.spherical) out.code = 1;
  return out;
}

Outcome cmd_builtin(const Options& o) {
  if (o.object.empty()) throw UsageError("builtin needs a name: " + [] {
    std::string s;
    for (const auto& n : builtin_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  BuiltinObject b = builtin(o.object, field_of(o));
  Outcome out;
  out.body = b.hopf ? hopf_to_json(*b.hopf) : coalgebra_to_json(*b.coalgebra);
  out.body["name"] = b.name;
  return out;
}

std::string render_text(const std::string& command, const json& body) {
  std::string s = "command: " + command + "\n";
  for (auto it = body.begin(); it != body.end(); ++it) {
    if (it.key() == "schema" || it.key() == "command") continue;
    const json& v = it.value();
    if (v.is_array() && !v.empty() && v[0].is_object()) {
      s += it.key() + ":\n";
      for (const auto& e : v) {
        std::string line = "  ";
        if (e.contains("ok")) line += e["ok"].get<bool>() ? "PASS  " : "FAIL  ";
        if (e.contains("status")) line += e["status"].get<std::string>() + "  ";
        line += e.contains("name") ? e["name"].get<std::string>() : e.contains("claim") ? e["claim"].get<std::string>() : e.dump();
        if (e.contains("witness")) line += "  [" + e["witness"].get<std::string>() + "]";
        s += line + "\n";
      }
    } else if (v.is_object() && v.contains("value") && v["value"].is_boolean()) {
      s += it.key() + ": " + (v["value"].get<bool>() ? "yes" : "no");
      if (v.contains("decided") && !v["decided"].get<bool>()) s += " (undecided)";
      if (v.contains("evidence")) s += "  [" + v["evidence"].get<std::string>() + "]";
      s += "\n";
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_string(); })) {
      s += it.key() + ":";
      for (const auto& e : v) s += " " + e.get<std::string>();
      s += "\n";
    } else {
      s += it.key() + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Nakayama functors, cointegrals and the Radford formula"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--field", o.field, "ground field: Q, F13, Fp:13 or field JSON")->capture_default_str();
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--check-level", o.level, "fast or full")->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  struct Cmd {
    const char* name;
    const char* help;
  };
  const std::vector<Cmd> cmds = {{"validate", "check the coalgebra and Hopf axioms"},
                                 {"classify", "semiperfect, QcF, co-Frobenius and symmetric flags"},
                                 {"nakayama", "apply N^l or N^r to a comodule"},
                                 {"pairing", "search for a Frobenius pairing"},
                                 {"nu", "Nakayama automorphism of the Frobenius pairing"},
                                 {"cointegral", "left cointegral of a Hopf algebra"},
                                 {"modular", "distinguished grouplike, modular function and χ"},
                                 {"radford", "check the S^4 formula"},
                                 {"braided", "R-form data and the braided Radford formula"},
                                 {"spherical", "sphericity of a pivotal character"},
                                 {"builtin", "emit a builtin object as JSON"},
                                 {"verify", "run the full identity suite"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("object", o.object, "builtin name, builtin:NAME or JSON file");
    subs[c.name] = sub;
  }
  subs["nakayama"]->add_option("--functor", o.functor, "l or r")->capture_default_str();
  subs["nakayama"]->add_option("--comodule", o.comodule, "comodule JSON file");
  subs["nakayama"]->add_option("--simple", o.simple, "index of a simple comodule of the object");
  subs["braided"]->add_option("--rform", o.rform, "R-form JSON file or sweedler:T");
  subs["spherical"]->add_option("--pivot", o.pivot, "pivot character JSON file or counit");
  subs["spherical"]->add_option("--rform", o.rform, "R-form for the twist check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  std::string command = app.get_subcommands().front()->get_name();

  try {
    Outcome out;
    if (command == "verify") {
      SuiteConfig cfg{o.seed, o.level == "full" ? CheckLevel::Full : CheckLevel::Fast};
      auto rep = run_verify_suite(load(o), cfg);
      if (o.format == "json") std::cout << report_json(rep).dump(2) << "\n";
      else std::cout << report_text(rep);
      return rep.exit_code();
    }
    if (command == "validate") out = cmd_validate(o);
    else if (command == "classify") out = cmd_classify(o);
    else if (command == "nakayama") out = cmd_nakayama(o);
    else if (command == "pairing") out = cmd_pairing(o, false);
    else if (command == "nu") out = cmd_pairing(o, true);
    else if (command == "cointegral") out = cmd_cointegral(o);
    else if (command == "modular") out = cmd_modular(o);
    else if (command == "radford") out = cmd_radford(o);
    else if (command == "braided") out = cmd_braided(o);
    else if (command == "spherical") out = cmd_spherical(o);
    else if (command == "builtin") {
      std::cout << cmd_builtin(o).body.dump(2) << "\n";
      return 0;
    }
    json body = {{"schema", kSchema}, {"command", command}};
    body.update(out.body);
    body["exit"] = out.code;
    if (o.format == "json") std::cout << body.dump(2) << "\n";
    else std::cout << render_text(command, body);
    return out.code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what();
    if (!e.detail().empty()) std::cerr << "\n  " << e.detail();
    std::cerr << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::InvalidArgument:
      case ErrorKind::UnknownBuiltin:
      case ErrorKind::InvalidField:
      case ErrorKind::NotPrime:
      case ErrorKind::DimensionMismatch:
        return 2;
      case ErrorKind::DegenerateSearchInconclusive:
        return 3;
      default:
        return 1;
    }
  }
}
