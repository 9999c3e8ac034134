#include "splicekit_cli/json_io.hpp"

#include <stdexcept>

namespace splicekit::cli {

json rational_json(const BigRational& x) { return to_string(x); }

BigRational rational_from(const json& j) {
  if (j.is_number_integer()) return BigRational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

json bigint_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

BigInt bigint_from(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

namespace {

json rationals(const std::vector<BigRational>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(rational_json(x));
  return a;
}

std::vector<BigRational> rationals_from(const json& j) {
  std::vector<BigRational> out;
  for (const auto& e : j) out.push_back(rational_from(e));
  return out;
}

Locus locus_from(const std::string& s) {
  if (s == "generic") return Locus::Generic;
  if (s == "special") return Locus::Special;
  if (s == "unknown") return Locus::Unknown;
  throw std::invalid_argument("unknown locus: " + s);
}

}  // namespace

std::string to_string(FamilyCase c) {
  switch (c) {
    case FamilyCase::Case1: return "case1";
    case FamilyCase::Case2: return "case2";
    case FamilyCase::None: return "none";
  }
  return "none";
}

FamilyCase family_case_from(const std::string& s) {
  if (s == "case1") return FamilyCase::Case1;
  if (s == "case2") return FamilyCase::Case2;
  if (s == "none") return FamilyCase::None;
  throw std::invalid_argument("unknown case: " + s);
}

json to_json(const SimpleTypeParams& x) {
  json j;
  j["family"] = to_string(x.family);
  if (x.family != Family::F3) j["pqparams"] = {x.P, x.Q, x.p, x.q};
  j["a"] = x.a;
  return j;
}

SimpleTypeParams params_from(const json& j) {
  SimpleTypeParams x;
  x.family = family_from_string(j.at("family").get<std::string>());
  if (j.contains("pqparams")) {
    const auto& pq = j.at("pqparams");
    if (pq.size() != 4) throw std::invalid_argument("pqparams needs four entries");
    x.P = pq[0].get<std::int64_t>();
    x.Q = pq[1].get<std::int64_t>();
    x.p = pq[2].get<std::int64_t>();
    x.q = pq[3].get<std::int64_t>();
  }
  x.a = j.value("a", std::vector<std::int64_t>{});
  return x;
}

json to_json(const FamilyInstance& inst) {
  json j = to_json(inst.params);
  j["alphas"] = rationals(inst.alphas);
  j["betas"] = rationals(inst.betas);
  j["h"] = rationals(inst.hcoeffs);
  return j;
}

FamilyInstance instance_from(const json& j) {
  FamilyInstance inst;
  inst.params = params_from(j);
  if (j.contains("alphas")) inst.alphas = rationals_from(j.at("alphas"));
  if (j.contains("betas")) inst.betas = rationals_from(j.at("betas"));
  if (j.contains("h")) inst.hcoeffs = rationals_from(j.at("h"));
  return inst;
}

json to_json(const DerivedInvariants& d) {
  json j;
  j["a_total"] = d.A;
  j["b_weight"] = d.B;
  j["c_weight"] = d.C;
  j["b"] = d.b;
  j["k"] = d.k;
  j["degree"] = d.degree;
  j["delta"] = d.delta;
  j["moduli_dimension"] = d.moduli_dimension;
  j["case"] = to_string(d.which);
  return j;
}

DerivedInvariants invariants_from(const json& j) {
  DerivedInvariants d;
  d.A = j.at("a_total").get<std::int64_t>();
  d.B = j.at("b_weight").get<std::int64_t>();
  d.C = j.at("c_weight").get<std::int64_t>();
  d.b = j.at("b").get<std::vector<std::int64_t>>();
  d.k = j.at("k").get<std::int64_t>();
  d.degree = j.at("degree").get<std::int64_t>();
  d.delta = j.at("delta").get<int>();
  d.moduli_dimension = j.at("moduli_dimension").get<std::int64_t>();
  d.which = family_case_from(j.at("case").get<std::string>());
  return d;
}

namespace {

std::string form_str(NormalFormDescriptor::Form f) {
  switch (f) {
    case NormalFormDescriptor::Form::f1: return "f1";
    case NormalFormDescriptor::Form::f2: return "f2";
    case NormalFormDescriptor::Form::f3: return "f3";
  }
  return "f1";
}

}  // namespace

json to_json(const NormalFormDescriptor& n) {
  json j;
  j["form"] = form_str(n.form);
  j["case"] = to_string(n.which);
  j["variables_exchanged"] = n.variables_exchanged;
  j["q1"] = n.q1;
  j["p1"] = n.p1;
  j["q"] = n.q;
  j["p"] = n.p;
  j["k"] = n.k;
  j["h_degree_bound"] = n.h_degree_bound;
  j["inner_shape"] = n.inner_shape;
  return j;
}

NormalFormDescriptor normal_form_from(const json& j) {
  NormalFormDescriptor n;
  const auto f = j.at("form").get<std::string>();
  n.form = f == "f1" ? NormalFormDescriptor::Form::f1
           : f == "f2" ? NormalFormDescriptor::Form::f2
           : f == "f3" ? NormalFormDescriptor::Form::f3
                       : throw std::invalid_argument("unknown form: " + f);
  n.which = family_case_from(j.at("case").get<std::string>());
  n.variables_exchanged = j.at("variables_exchanged").get<bool>();
  n.q1 = j.at("q1").get<std::int64_t>();
  n.p1 = j.at("p1").get<std::int64_t>();
  n.q = j.at("q").get<std::int64_t>();
  n.p = j.at("p").get<std::int64_t>();
  n.k = j.at("k").get<std::int64_t>();
  n.h_degree_bound = j.at("h_degree_bound").get<std::int64_t>();
  n.inner_shape = j.at("inner_shape").get<std::string>();
  return n;
}

json to_json(const PlumbingGraph& g) {
  json vs = json::array(), es = json::array();
  for (int id : g.ids()) {
    const auto& v = g.vertex(id);
    vs.push_back({{"id", v.id}, {"weight", v.weight}, {"arrows", v.arrows}, {"role", to_string(v.role)}, {"index", v.index}});
  }
  for (const auto& [u, v] : g.edges()) es.push_back({u, v});
  return {{"vertices", vs}, {"edges", es}};
}

PlumbingGraph plumbing_from(const json& j) {
  PlumbingGraph g;
  for (const auto& v : j.at("vertices"))
    g.insert_vertex({v.at("id").get<int>(), v.at("weight").get<std::int64_t>(), v.at("arrows").get<int>(),
                     role_from_string(v.at("role").get<std::string>()), v.at("index").get<int>()});
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

namespace {

SpliceKind kind_from(const std::string& s) {
  if (s == "node") return SpliceKind::Node;
  if (s == "leaf") return SpliceKind::Leaf;
  if (s == "arrow") return SpliceKind::Arrow;
  if (s == "marked") return SpliceKind::Marked;
  throw std::invalid_argument("unknown splice vertex kind: " + s);
}

json opt_weight(const std::optional<BigInt>& w) { return w ? bigint_json(*w) : json(nullptr); }

std::optional<BigInt> opt_weight_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return bigint_from(j);
}

}  // namespace

json to_json(const SpliceDiagram& d) {
  json vs = json::array(), es = json::array();
  for (const auto& v : d.vertices())
    vs.push_back({{"id", v.id}, {"kind", to_string(v.kind)}, {"role", to_string(v.role)}, {"index", v.index},
                  {"source", v.source}});
  for (const auto& e : d.edges()) es.push_back({{"u", e.u}, {"v", e.v}, {"wu", opt_weight(e.wu)}, {"wv", opt_weight(e.wv)}});
  return {{"vertices", vs}, {"edges", es}};
}

SpliceDiagram splice_from(const json& j) {
  SpliceDiagram d;
  int expect = 0;
  for (const auto& v : j.at("vertices")) {
    if (v.at("id").get<int>() != expect++) throw std::invalid_argument("splice vertex ids must be 0..n-1 in order");
    d.add_vertex(kind_from(v.at("kind").get<std::string>()), role_from_string(v.at("role").get<std::string>()),
                 v.at("index").get<int>(), v.value("source", -1));
  }
  for (const auto& e : j.at("edges"))
    d.add_edge(e.at("u").get<int>(), e.at("v").get<int>(), opt_weight_from(e.at("wu")), opt_weight_from(e.at("wv")));
  return d;
}

json to_json(const FamilyPolys& p) { return {{"s", p.s.str()}, {"f", p.f.str()}, {"g", p.g.str()}}; }

FamilyPolys polys_from(const json& j) {
  return {MultiPoly::parse(j.at("s").get<std::string>()), MultiPoly::parse(j.at("f").get<std::string>()),
          MultiPoly::parse(j.at("g").get<std::string>())};
}

json to_json(const IrregularValues& iv) {
  json j;
  j["applicable"] = iv.applicable;
  j["values"] = rationals(iv.values);
  j["extra"] = iv.extra ? rational_json(*iv.extra) : json(nullptr);
  j["non_generic"] = iv.non_generic;
  j["notes"] = iv.notes;
  return j;
}

IrregularValues irregular_from(const json& j) {
  IrregularValues iv;
  iv.applicable = j.at("applicable").get<bool>();
  iv.values = rationals_from(j.at("values"));
  if (!j.at("extra").is_null()) iv.extra = rational_from(j.at("extra"));
  iv.non_generic = j.at("non_generic").get<bool>();
  iv.notes = j.at("notes").get<std::vector<std::string>>();
  return iv;
}

json to_json(const FibreTopology& f) {
  json comps = json::array();
  for (const auto& c : f.components) comps.push_back({{"type", "C"}, {"punctures", c.punctures}});
  json j;
  j["index"] = f.index;
  j["value_tag"] = f.value_tag;
  j["value"] = f.value ? rational_json(*f.value) : json(nullptr);
  j["components"] = comps;
  j["gluing"] = to_string(f.gluing);
  j["reduced"] = f.reduced;
  j["locus"] = to_string(f.locus);
  j["topology"] = f.str();
  j["warnings"] = f.warnings;
  return j;
}

FibreTopology fibre_from(const json& j) {
  FibreTopology f;
  f.index = j.at("index").get<int>();
  f.value_tag = j.at("value_tag").get<std::string>();
  if (!j.at("value").is_null()) f.value = rational_from(j.at("value"));
  for (const auto& c : j.at("components")) f.components.push_back({c.at("punctures").get<std::int64_t>()});
  const auto g = j.at("gluing").get<std::string>();
  if (g == "all_disjoint")
    f.gluing = Gluing::AllDisjoint;
  else if (g == "normal_crossing")
    f.gluing = Gluing::NormalCrossing;
  else
    throw std::invalid_argument("unknown gluing: " + g);
  f.reduced = j.at("reduced").get<bool>();
  f.locus = locus_from(j.at("locus").get<std::string>());
  f.warnings = j.at("warnings").get<std::vector<std::string>>();
  return f;
}

json to_json(const BraidWord& w) { return w.letters; }

BraidWord braid_from(const json& j, int strands) { return {strands, j.get<std::vector<int>>()}; }

json to_json(const PropertyResult& r) {
  return {{"property", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}};
}

PropertyResult property_from(const json& j) {
  PropertyResult r;
  r.name = j.at("property").get<std::string>();
  const auto s = j.at("status").get<std::string>();
  r.status = s == "pass" ? CheckStatus::Pass : s == "fail" ? CheckStatus::Fail : CheckStatus::NotApplicable;
  r.detail = j.at("detail").get<std::string>();
  return r;
}

}  // namespace splicekit::cli
