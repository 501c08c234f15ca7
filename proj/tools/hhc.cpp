#include "hhc/coderivation.hpp"
#include "hhc/errors.hpp"
#include "hhc/hochschild.hpp"
#include "hhc/koszul.hpp"
#include "hhc/render.hpp"
#include "hhc/resolutions.hpp"
#include "hhc/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using json = nlohmann::json;
using namespace hhc;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field = "Q";
  int window = 6;
  int max_n = 4;
  int trunc_int = 8;
  std::string preset;
  std::string algebra;
  std::string resolution;
  std::string out;
  std::string format = "json";
  int degree = 1;
  std::string class1;
  std::string class2;
  std::string cochain;
  int bar_window = 0;
};

// Resolution plus its diagonal family, whatever the preset.
struct Job {
  ComplexPtr P;
  AinftyStructure S;
  std::optional<KoszulComplex> K;
  std::string kind;
};

std::string dir_of(const std::string& path) {
  auto p = std::filesystem::path(path).parent_path();
  return p.empty() ? "." : p.string();
}

std::shared_ptr<const Algebra> load_algebra(const Options& o) {
  if (o.algebra.empty()) throw UsageError("--algebra is required for this preset");
  if (o.algebra.rfind("xn:", 0) == 0)
    return std::make_shared<const Algebra>(truncated_polynomial_algebra(Field::parse(o.field), std::stoi(o.algebra.substr(3))));
  return std::make_shared<const Algebra>(parse_algebra(read_file(o.algebra)));
}

int parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw UsageError("bad " + what + " '" + s + "'");
  return std::stoi(s);
}

Job load_job(const Options& o, bool need_structure = true) {
  Job j;
  Field F = Field::parse(o.field);
  std::string preset = o.preset;
  if (preset.empty() && !o.resolution.empty()) preset = "custom:" + o.resolution;
  if (preset.empty()) throw UsageError("--preset or --resolution is required");
  if (preset.rfind("xn:", 0) == 0) {
    Preset p = xn_resolution(F, parse_count(preset.substr(3), "preset"), o.window);
    j.P = p.P;
    j.S = std::move(p.S);
    j.kind = "xn";
  } else if (preset == "bar") {
    j.P = bar_resolution(load_algebra(o), o.window);
    j.S = bar_structure(j.P);
    j.kind = "bar";
  } else if (preset.rfind("koszul", 0) == 0) {
    std::string src = preset.size() > 7 ? preset.substr(7) : "k[x]/(x^2)";
    QuadraticData Q = std::filesystem::exists(src) ? parse_quadratic(read_file(src)) : quadratic_preset(src, F);
    j.K = koszul_resolution(Q, o.window, o.trunc_int);
    j.P = j.K->P;
    j.S = koszul_delta2(*j.K);
    j.kind = "koszul";
  } else if (preset.rfind("custom:", 0) == 0) {
    std::string path = preset.substr(7);
    j.P = custom_resolution(read_file(path), o.window, dir_of(path));
    if (need_structure) j.S = construct_delta(j.P, o.max_n);
    j.kind = "custom";
  } else {
    throw UsageError("unknown preset '" + preset + "'");
  }
  return j;
}

// "h<N>:<i>" names the i-th basis class of HH^N.
Map class_rep(const ComplexPtr& P, const std::string& spec) {
  auto colon = spec.find(':');
  if (spec.size() < 4 || spec[0] != 'h' || colon == std::string::npos) throw UsageError("bad class '" + spec + "', expected hN:i");
  int n = parse_count(spec.substr(1, colon - 1), "class degree");
  int i = parse_count(spec.substr(colon + 1), "class index");
  HHBasis B = hh_basis(P, n);
  if (i >= B.dim())
    throw UsageError("class '" + spec + "' out of range, HH^" + std::to_string(n) + " has dimension " + std::to_string(B.dim()));
  return B.reps[i];
}

Map input_cochain(const Job& j, const Options& o, const std::string& spec) {
  if (!o.cochain.empty()) return parse_map(j.P, read_file(o.cochain));
  if (spec.empty()) throw UsageError("--class1 or --cochain is required");
  return class_rep(j.P, spec);
}

json scalars(const std::vector<Scalar>& v) {
  json a = json::array();
  for (auto& c : v) a.push_back(c.str());
  return a;
}

json report_json(const Report& r) { return json{{"ok", r.ok}, {"failures", r.failures}}; }

json map_entry(const Map& f) {
  return json{{"map", json::parse(dump_map(f))}, {"text", render(f)}};
}

json tuple_json(const Tuple& t) {
  json comps = json::object();
  for (int n = 0; n <= t.max_n(); ++n) comps[std::to_string(n)] = map_entry(t[n]);
  return json{{"degree", t.degree()}, {"max_n", t.max_n()}, {"exact_tail", t.exact_tail()}, {"components", comps}};
}

// Coordinates of a cocycle's class in HH^n, for reporting products.
json class_json(const Map& f) {
  int n = f.degree() + 1;
  json r{{"hh_degree", n}};
  try {
    HHBasis B = hh_basis(f.complex_ptr(), n);
    r["coordinates"] = scalars(hh_coordinates(B, f));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::WindowExhausted) throw;
    r["coordinates"] = nullptr;
  }
  return r;
}

json run_algebra_validate(const Options& o) {
  auto A = load_algebra(o);
  json basis = json::array();
  for (int i = 0; i < A->dim(); ++i) basis.push_back(A->label(i));
  return json{{"ok", true}, {"field", A->field().name()}, {"dim", A->dim()}, {"basis", basis}};
}

json run_resolution(const Options& o, bool check) {
  Job j = load_job(o, false);
  if (check) {
    validate_complex(*j.P);
    return json{{"ok", true}, {"generators", j.P->num_generators()}, {"lo", j.P->lo()}};
  }
  return json::parse(dump_complex(*j.P));
}

json run_ainfty(const Options& o, bool check) {
  Job j = load_job(o, false);
  if (!check) {
    AinftyStructure S = construct_delta(j.P, o.max_n);
    json deltas = json::object();
    for (int n = 2; n <= S.max_n; ++n) deltas[std::to_string(n)] = map_entry(S.deltas[n]);
    return json{{"max_n", S.max_n}, {"exact_tail", S.exact_tail}, {"deltas", deltas}};
  }
  if (!j.S.P) j.S = construct_delta(j.P, o.max_n);
  int N = std::min(o.max_n, j.S.exact_tail ? o.max_n : j.S.max_n);
  Report a = check_ainfty(j.S, N);
  Report c = check_weak_counit(j.S);
  return json{{"ok", a.ok && c.ok}, {"through", N}, {"ainfty", report_json(a)}, {"counit", report_json(c)}};
}

json run_lift(const Options& o, bool koszul) {
  Job j = load_job(o);
  Map f = input_cochain(j, o, o.class1);
  Tuple a;
  if (koszul) {
    if (!j.K) throw UsageError("koszul lift needs a koszul preset");
    a = koszul_lift(*j.K, j.S, f, o.max_n);
  } else {
    a = lift_cocycle(j.S, f, o.max_n);
  }
  Report r = check_coderivation(j.S, a, o.max_n);
  json out{{"ok", r.ok}, {"defect", report_json(r)}, {"lift", tuple_json(a)}};
  if (koszul) out["pleq0"] = report_json(check_pleq0(a));
  return out;
}

json run_inner(const Options& o) {
  Job j = load_job(o);
  Map f = input_cochain(j, o, o.class1);
  InnerResult r = is_inner(j.S, lift_cocycle(j.S, f, o.max_n));
  json out{{"inner", r.yes}};
  if (r.yes)
    out["beta"] = tuple_json(r.beta);
  else
    out["witness"] = r.witness;
  return out;
}

json run_product(const Options& o, bool is_bracket) {
  Job j = load_job(o);
  if (o.class2.empty()) throw UsageError("--class2 is required");
  Map f = class_rep(j.P, o.class1.empty() ? throw UsageError("--class1 is required") : o.class1);
  Map g = class_rep(j.P, o.class2);
  Map r = is_bracket ? gb_bracket(j.S, f, g) : gb_cup(j.S, f, g);
  json out = map_entry(r);
  out["class"] = class_json(r);
  return out;
}

json run_hh(const Options& o) {
  Job j = load_job(o, false);
  HHBasis B = hh_basis(j.P, o.degree);
  json reps = json::array();
  for (auto& r : B.reps) reps.push_back(map_entry(r));
  return json{{"degree", o.degree}, {"dim", B.dim()}, {"representatives", reps}};
}

// Class of t relative to u: 1, -1, 0 when both vanish, null otherwise.
json relation(const Map& t, const Map& u) {
  bool plus = same_class(t, u);
  bool minus = same_class(t, u.scaled(-Scalar::one(t.complex().field())));
  if (plus && minus) return 0;
  if (plus) return 1;
  if (minus) return -1;
  return nullptr;
}

json run_oracle(const Options& o) {
  Job j = load_job(o);
  if (o.class1.empty() || o.class2.empty()) throw UsageError("--class1 and --class2 are required");
  Map f = class_rep(j.P, o.class1);
  Map g = class_rep(j.P, o.class2);
  int bw = o.bar_window ? o.bar_window : f.degree() + g.degree() + 4;
  ComplexPtr bar = bar_resolution(j.P->algebra_ptr(), bw);
  Map F = comparison_map(bar, j.P);
  Map tf = transport(f, F), tg = transport(g, F);
  json br = relation(transport(gb_bracket(j.S, f, g), F), bar_oracle_bracket(bar, tf, tg));
  json cu = relation(transport(gb_cup(j.S, f, g), F), bar_oracle_cup(bar, tf, tg));
  return json{{"bracket_sign", br}, {"cup_sign", cu}, {"bar_window", bw}};
}

void write_text(std::ostream& os, const json& j, const std::string& prefix) {
  bool rendered = j.contains("text");
  for (auto& [k, v] : j.items()) {
    std::string key = prefix + k;
    if (rendered && k == "map") continue;
    if (v.is_object() && v.contains("text")) {
      os << key << ":\n";
      write_text(os, v, key + ".");
    } else if (v.is_object() && !v.empty()) {
      write_text(os, v, key + ".");
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      for (std::size_t i = 0; i < v.size(); ++i) write_text(os, v[i], key + "." + std::to_string(i) + ".");
    } else if (k == "text") {
      os << v.get<std::string>();
    } else if (v.is_string()) {
      os << key << ": " << v.get<std::string>() << "\n";
    } else {
      os << key << ": " << v.dump() << "\n";
    }
  }
}

void emit(const json& j, const Options& o) {
  std::string text;
  if (o.format == "json") {
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    write_text(os, j, "");
    text = os.str();
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write '" + o.out + "'");
    f << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology via A-infinity coderivations"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--field", o.field, "Q or Fp:<p>");
    c->add_option("--window", o.window, "keep degrees 1 .. 1-N")->check(CLI::PositiveNumber);
    c->add_option("--max-n", o.max_n, "highest component")->check(CLI::PositiveNumber);
    c->add_option("--trunc-int", o.trunc_int, "internal truncation for Koszul algebras")->check(CLI::PositiveNumber);
    c->add_option("--preset", o.preset, "bar, xn:<n>, koszul[:<path|name>], custom:<path>");
    c->add_option("--algebra", o.algebra, "algebra JSON (or xn:<n>) for the bar preset");
    c->add_option("--resolution", o.resolution, "resolution JSON");
    c->add_option("--out", o.out, "write the report here");
    c->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  };
  auto classes = [&](CLI::App* c) {
    c->add_option("--class1", o.class1, "hN:i");
    c->add_option("--class2", o.class2, "hN:i");
    c->add_option("--cochain", o.cochain, "cochain JSON instead of --class1");
  };

  std::function<json()> action;
  auto bind = [&](CLI::App* c, std::function<json()> fn) { c->callback([&action, fn] { action = fn; }); };

  auto* alg = app.add_subcommand("algebra", "algebra descriptors");
  alg->require_subcommand(1);
  auto* av = alg->add_subcommand("validate", "check associativity, unit and grading");
  common(av);
  bind(av, [&] { return run_algebra_validate(o); });

  auto* res = app.add_subcommand("resolution", "bimodule resolutions");
  res->require_subcommand(1);
  auto* rb = res->add_subcommand("build", "emit the complex");
  auto* rc = res->add_subcommand("check", "validate d^2, augmentation and exactness");
  common(rb);
  common(rc);
  bind(rb, [&] { return run_resolution(o, false); });
  bind(rc, [&] { return run_resolution(o, true); });

  auto* ai = app.add_subcommand("ainfty", "diagonal families");
  ai->require_subcommand(1);
  auto* ac = ai->add_subcommand("construct", "build delta_2 .. delta_n");
  auto* ak = ai->add_subcommand("check", "A-infinity relations and weak counit");
  common(ac);
  common(ak);
  bind(ac, [&] { return run_ainfty(o, false); });
  bind(ak, [&] { return run_ainfty(o, true); });

  auto* li = app.add_subcommand("lift", "lift a cocycle to a coderivation");
  common(li);
  classes(li);
  bind(li, [&] { return run_lift(o, false); });

  auto* in = app.add_subcommand("inner", "decide whether the lift of a cocycle is inner");
  common(in);
  classes(in);
  bind(in, [&] { return run_inner(o); });

  auto* br = app.add_subcommand("bracket", "Gerstenhaber bracket of two classes");
  common(br);
  classes(br);
  bind(br, [&] { return run_product(o, true); });

  auto* cu = app.add_subcommand("cup", "cup product of two classes");
  common(cu);
  classes(cu);
  bind(cu, [&] { return run_product(o, false); });

  auto* hh = app.add_subcommand("hh", "basis of HH^n");
  common(hh);
  hh->add_option("--degree", o.degree)->check(CLI::NonNegativeNumber);
  bind(hh, [&] { return run_hh(o); });

  auto* orc = app.add_subcommand("oracle", "bar complex comparisons");
  orc->require_subcommand(1);
  auto* oc = orc->add_subcommand("compare", "bracket and cup against the classical formulas");
  common(oc);
  classes(oc);
  oc->add_option("--bar-window", o.bar_window, "window of the bar complex");
  bind(oc, [&] { return run_oracle(o); });

  auto* ko = app.add_subcommand("koszul", "Koszul resolutions");
  ko->require_subcommand(1);
  auto* kl = ko->add_subcommand("lift", "closed-form lift with P_{<=0} containment");
  common(kl);
  classes(kl);
  bind(kl, [&] { return run_lift(o, true); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    emit(action(), o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    json err{{"error", kind_name(e.kind())}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
