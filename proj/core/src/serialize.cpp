#include "hhc/serialize.hpp"

#include "hhc/errors.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace hhc {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Field parse_field(const json& j) {
  if (j.is_string()) return Field::parse(j.get<std::string>());
  if (j.is_object() && j.contains("Fp")) return Field::prime(j.at("Fp").get<std::int64_t>());
  throw Error(ErrorKind::ParseError, "bad field");
}

json dump_field(const Field& f) {
  if (f.is_rational()) return "Q";
  return json{{"Fp", f.characteristic()}};
}

Scalar parse_scalar(const Field& f, const json& j) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar(f, j.get<long long>());
  throw Error(ErrorKind::ParseError, "bad coefficient " + j.dump());
}

int basis_ref(const Algebra& A, const json& j) {
  if (j.is_number_integer()) {
    int i = j.get<int>();
    if (i < 0 || i >= A.dim()) throw Error(ErrorKind::ParseError, "basis index out of range");
    return i;
  }
  if (j.is_string()) return A.index_of(j.get<std::string>());
  throw Error(ErrorKind::ParseError, "bad basis reference " + j.dump());
}

int generator_ref(const Complex& P, const json& j) {
  if (!j.is_string()) throw Error(ErrorKind::ParseError, "generator references are labels");
  int g = P.find(j.get<std::string>());
  if (g < 0) throw Error(ErrorKind::ParseError, "unknown generator '" + j.get<std::string>() + "'");
  return g;
}

json dump_tensor(const Complex& P, const Tensor& x) {
  const Algebra& A = P.algebra();
  json terms = json::array();
  for (auto& t : x.terms()) {
    json row = json::array({t.c.str()});
    for (std::size_t i = 0; i < t.key.size(); ++i)
      row.push_back(i % 2 ? P.gen(t.key[i]).label : A.label(t.key[i]));
    terms.push_back(row);
  }
  return terms;
}

json map_json(const Map& f) {
  json values = json::object();
  const Complex& P = f.complex();
  for (int g = 0; g < P.num_generators(); ++g)
    if (f.certified(g) && !f.at(g).is_zero()) values[P.gen(g).label] = dump_tensor(f.target(), f.at(g));
  return json{{"arity", f.arity()}, {"degree", f.degree()}, {"lo", f.lo()}, {"values", values}};
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Algebra parse_algebra(const std::string& text) {
  json j = parse_json(text);
  try {
    AlgebraDescriptor d;
    d.field = parse_field(j.at("field"));
    d.basis = j.at("basis").get<std::vector<std::string>>();
    d.unit = j.at("unit").get<std::string>();
    auto index = [&](const json& r) {
      if (r.is_number_integer()) return r.get<int>();
      auto it = std::find(d.basis.begin(), d.basis.end(), r.get<std::string>());
      if (it == d.basis.end()) throw Error(ErrorKind::ParseError, "unknown basis label " + r.dump());
      return static_cast<int>(it - d.basis.begin());
    };
    for (auto& m : j.at("mul")) {
      AlgebraDescriptor::Product p;
      p.i = index(m.at(0));
      p.j = index(m.at(1));
      for (auto& t : m.at(2)) p.value.push_back({index(t.at(0)), parse_scalar(d.field, t.at(1))});
      d.mul.push_back(std::move(p));
    }
    if (j.contains("grading")) d.grading = j.at("grading").get<std::vector<int>>();
    if (j.contains("truncation")) d.truncation = j.at("truncation").get<int>();
    return make_algebra(d);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string dump_algebra(const Algebra& A) {
  AlgebraDescriptor d = A.descriptor();
  json mul = json::array();
  for (auto& p : d.mul) {
    json v = json::array();
    for (auto& [k, c] : p.value) v.push_back(json::array({k, c.str()}));
    mul.push_back(json::array({p.i, p.j, v}));
  }
  json j{{"field", dump_field(d.field)}, {"basis", d.basis}, {"unit", d.unit}, {"mul", mul}};
  if (d.grading) j["grading"] = *d.grading;
  if (d.truncation) j["truncation"] = *d.truncation;
  return j.dump(2);
}

ComplexPtr parse_complex(const std::string& text, int N, const std::string& base_dir) {
  json j = parse_json(text);
  try {
    std::shared_ptr<const Algebra> A;
    const json& aj = j.at("algebra");
    if (aj.is_string()) {
      std::filesystem::path p(aj.get<std::string>());
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      A = std::make_shared<const Algebra>(parse_algebra(read_file(p.string())));
    } else {
      A = std::make_shared<const Algebra>(parse_algebra(aj.dump()));
    }
    auto P = std::make_shared<Complex>(A);
    P->name = j.value("name", "custom");
    std::map<std::string, int> internal;
    if (j.contains("internal")) internal = j.at("internal").get<std::map<std::string, int>>();
    std::vector<std::pair<int, std::vector<std::string>>> levels;
    for (auto& [deg, labels] : j.at("generators").items()) levels.push_back({std::stoi(deg), labels});
    std::sort(levels.begin(), levels.end(), [](auto& a, auto& b) { return a.first > b.first; });
    for (auto& [deg, labels] : levels) {
      if (deg < 1 - N) continue;
      for (auto& lab : labels) P->add_generator(lab, deg, internal.count(lab) ? internal[lab] : 0);
    }
    P->set_lo(1 - N);
    const Field& F = A->field();
    if (j.contains("differential"))
      for (auto& [lab, terms] : j.at("differential").items()) {
        int g = P->find(lab);
        if (g < 0) continue;
        Tensor d(1);
        for (auto& t : terms) d.push(Key{basis_ref(*A, t.at(1)), generator_ref(*P, t.at(2)), basis_ref(*A, t.at(3))}, parse_scalar(F, t.at(0)));
        P->set_d(g, std::move(d));
      }
    if (j.contains("augmentation"))
      for (auto& [lab, terms] : j.at("augmentation").items()) {
        int g = P->find(lab);
        if (g < 0) throw Error(ErrorKind::ParseError, "unknown generator '" + lab + "'");
        Tensor m(0);
        for (auto& t : terms) m.push(Key{basis_ref(*A, t.at(1))}, parse_scalar(F, t.at(0)));
        P->set_mu(g, std::move(m));
      }
    return P;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string dump_complex(const Complex& P) {
  const Algebra& A = P.algebra();
  json gens = json::object(), internal = json::object(), diff = json::object(), aug = json::object();
  for (int g = 0; g < P.num_generators(); ++g) {
    const Generator& G = P.gen(g);
    gens[std::to_string(G.degree)].push_back(G.label);
    if (G.internal) internal[G.label] = G.internal;
    if (!P.d(g).is_zero()) {
      json terms = json::array();
      for (auto& t : P.d(g).terms())
        terms.push_back(json::array({t.c.str(), A.label(t.key[0]), P.gen(t.key[1]).label, A.label(t.key[2])}));
      diff[G.label] = terms;
    }
    if (!P.mu(g).is_zero()) {
      json terms = json::array();
      for (auto& t : P.mu(g).terms()) terms.push_back(json::array({t.c.str(), A.label(t.key[0])}));
      aug[G.label] = terms;
    }
  }
  json j{{"name", P.name}, {"algebra", parse_json(dump_algebra(A))}, {"generators", gens}, {"differential", diff},
         {"augmentation", aug}};
  if (!internal.empty()) j["internal"] = internal;
  return j.dump(2);
}

std::string dump_map(const Map& f) { return map_json(f).dump(2); }

Map parse_map(const ComplexPtr& P, const std::string& text) {
  json j = parse_json(text);
  try {
    const Algebra& A = P->algebra();
    Map f(P, j.at("arity").get<int>(), j.at("degree").get<int>());
    if (j.contains("lo")) f.restrict_lo(j.at("lo").get<int>());
    for (auto& [lab, terms] : j.at("values").items()) {
      Tensor v(f.arity());
      for (auto& t : terms) {
        Key k;
        for (std::size_t i = 1; i < t.size(); ++i) k.push_back(i % 2 ? basis_ref(A, t.at(i)) : generator_ref(*P, t.at(i)));
        v.push(std::move(k), parse_scalar(P->field(), t.at(0)));
      }
      f.set(generator_ref(*P, lab), std::move(v));
    }
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string dump_structure(const AinftyStructure& S) {
  json deltas = json::object();
  for (int n = 2; n <= S.max_n; ++n) deltas[std::to_string(n)] = map_json(S.deltas[n]);
  json j{{"complex", S.P->name}, {"max_n", S.max_n}, {"exact_tail", S.exact_tail}, {"deltas", deltas}};
  return j.dump(2);
}

QuadraticData parse_quadratic(const std::string& text) {
  json j = parse_json(text);
  try {
    QuadraticData Q;
    Q.field = j.contains("field") ? parse_field(j.at("field")) : Field::rationals();
    Q.generators = j.at("generators").get<std::vector<std::string>>();
    int dim = static_cast<int>(Q.generators.size());
    auto index = [&](const json& r) {
      if (r.is_number_integer()) return r.get<int>();
      auto it = std::find(Q.generators.begin(), Q.generators.end(), r.get<std::string>());
      if (it == Q.generators.end()) throw Error(ErrorKind::ParseError, "unknown generator " + r.dump());
      return static_cast<int>(it - Q.generators.begin());
    };
    for (auto& rel : j.at("relations")) {
      SparseVec v;
      for (auto& t : rel) {
        if (t.size() != 3) throw Error(ErrorKind::RelationNotQuadratic, "relation term " + t.dump() + " is not quadratic");
        int a = index(t.at(1)), b = index(t.at(2));
        if (a < 0 || a >= dim || b < 0 || b >= dim) throw Error(ErrorKind::ParseError, "generator index out of range");
        v.push_back({a * dim + b, parse_scalar(Q.field, t.at(0))});
      }
      normalize_sparse(v);
      Q.relations.push_back(std::move(v));
    }
    return Q;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace hhc
