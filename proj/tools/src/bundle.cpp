#include "splicekit_cli/bundle.hpp"

#include <atomic>
#include <map>
#include <thread>

namespace splicekit::cli {

namespace {

bool same(const FamilyInstance& a, const FamilyInstance& b) {
  return a.params == b.params && a.alphas == b.alphas && a.betas == b.betas && a.hcoeffs == b.hcoeffs;
}

bool same(const DerivedInvariants& a, const DerivedInvariants& b) {
  return a.A == b.A && a.B == b.B && a.C == b.C && a.b == b.b && a.k == b.k && a.degree == b.degree &&
         a.delta == b.delta && a.moduli_dimension == b.moduli_dimension && a.which == b.which;
}

bool same(const NormalFormDescriptor& a, const NormalFormDescriptor& b) {
  return a.form == b.form && a.which == b.which && a.variables_exchanged == b.variables_exchanged && a.q1 == b.q1 &&
         a.p1 == b.p1 && a.q == b.q && a.p == b.p && a.k == b.k && a.h_degree_bound == b.h_degree_bound &&
         a.inner_shape == b.inner_shape;
}

bool same(const SpliceDiagram& a, const SpliceDiagram& b) {
  if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size()) return false;
  for (std::size_t i = 0; i < a.vertices().size(); ++i) {
    const auto &x = a.vertices()[i], &y = b.vertices()[i];
    if (x.id != y.id || x.kind != y.kind || x.role != y.role || x.index != y.index || x.source != y.source) return false;
  }
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    const auto &x = a.edges()[i], &y = b.edges()[i];
    if (x.u != y.u || x.v != y.v || x.wu != y.wu || x.wv != y.wv) return false;
  }
  return true;
}

bool same(const IrregularValues& a, const IrregularValues& b) {
  return a.applicable == b.applicable && a.values == b.values && a.extra == b.extra &&
         a.non_generic == b.non_generic && a.notes == b.notes;
}

bool same(const FamilyPolys& a, const FamilyPolys& b) { return a.s == b.s && a.f == b.f && a.g == b.g; }

PropertyResult result(std::string name, CheckStatus s, std::string detail = {}) {
  return {std::move(name), s, std::move(detail)};
}

}  // namespace

bool operator==(const Bundle& a, const Bundle& b) {
  return same(a.instance, b.instance) && same(a.invariants, b.invariants) && same(a.normal_form, b.normal_form) &&
         a.plumbing == b.plumbing && same(a.splice, b.splice) && same(a.polys, b.polys) &&
         same(a.irregular, b.irregular) && a.fibres == b.fibres && a.local_monodromies == b.local_monodromies &&
         a.h_infinity == b.h_infinity && a.report == b.report;
}

json to_json(const Bundle& b) {
  json j;
  j["instance"] = to_json(b.instance);
  j["invariants"] = to_json(b.invariants);
  j["normal_form"] = to_json(b.normal_form);
  j["plumbing"] = to_json(b.plumbing);
  j["splice"] = to_json(b.splice);
  j["polynomials"] = to_json(b.polys);
  j["irregular_values"] = to_json(b.irregular);
  json fibres = json::array();
  for (const auto& f : b.fibres) fibres.push_back(to_json(f));
  j["fibres"] = fibres;
  json local = json::array();
  for (const auto& h : b.local_monodromies) local.push_back(to_json(h));
  j["monodromy"] = {{"strands", b.instance.params.r() + 1},
                    {"local", local},
                    {"h_infinity", b.h_infinity ? to_json(*b.h_infinity) : json(nullptr)}};
  json report = json::array();
  for (const auto& r : b.report) report.push_back(to_json(r));
  j["report"] = report;
  return j;
}

Bundle bundle_from(const json& j) {
  Bundle b;
  b.instance = instance_from(j.at("instance"));
  b.invariants = invariants_from(j.at("invariants"));
  b.normal_form = normal_form_from(j.at("normal_form"));
  b.plumbing = plumbing_from(j.at("plumbing"));
  b.splice = splice_from(j.at("splice"));
  b.polys = polys_from(j.at("polynomials"));
  b.irregular = irregular_from(j.at("irregular_values"));
  for (const auto& f : j.at("fibres")) b.fibres.push_back(fibre_from(f));
  const auto& m = j.at("monodromy");
  const int strands = m.at("strands").get<int>();
  for (const auto& h : m.at("local")) b.local_monodromies.push_back(braid_from(h, strands));
  if (!m.at("h_infinity").is_null()) b.h_infinity = braid_from(m.at("h_infinity"), strands);
  for (const auto& r : j.at("report")) b.report.push_back(property_from(r));
  return b;
}

Bundle assemble(const FamilyInstance& inst) {
  const auto errs = validate_instance(inst);
  if (!errs.empty()) throw std::invalid_argument(errs.front());
  Bundle b;
  const auto& x = inst.params;
  b.instance = inst;
  b.invariants = derive_invariants(x);
  b.normal_form = normal_form(x);
  b.plumbing = build_plumbing(x);
  b.splice = build_splice(x);
  b.polys = build_family(inst);
  b.irregular = irregular_values(inst);
  if (x.family == Family::F1) {
    b.fibres = classify_irregular_fibres(inst, Locus::Generic);
    b.local_monodromies = local_monodromies(x.r());
    b.h_infinity = h_infinity(x.r());
  }
  return b;
}

std::vector<PropertyResult> verify_bundle(const Bundle& b, const CheckOptions& opt) {
  std::vector<PropertyResult> out;
  const auto& inst = b.instance;
  const auto& x = inst.params;
  const auto errs = validate_instance(inst);
  if (!errs.empty()) {
    out.push_back(result("params_valid", CheckStatus::Fail, errs.front()));
    return out;
  }
  out.push_back(result("params_valid", CheckStatus::Pass));

  auto inv = check_invariants(x, b.invariants, b.plumbing);
  if (inv.status == CheckStatus::Pass && !same(b.invariants, derive_invariants(x)))
    inv = result(inv.name, CheckStatus::Fail, "stored invariants differ from recomputation");
  out.push_back(inv);

  auto nf = check_normal_form(x);
  if (nf.status == CheckStatus::Pass && !same(b.normal_form, normal_form(x)))
    nf = result(nf.name, CheckStatus::Fail, "stored descriptor differs from recomputation");
  out.push_back(nf);

  out.push_back(check_morrow(b.plumbing));
  out.push_back(check_unimodular(b.plumbing));
  out.push_back(check_cf_identity(x));
  out.push_back(check_zero_total_linking(x, b.plumbing, b.splice));
  out.push_back(check_linking_oracle(b.plumbing, b.splice));
  out.push_back(check_edge_determinants(b.splice));
  out.push_back(check_side_landing(x));
  if (opt.realization) out.push_back(check_realization(x, b.plumbing));

  if (opt.polynomials) {
    const bool polys_ok = same(b.polys, build_family(inst));
    out.push_back(result("polynomials", polys_ok ? CheckStatus::Pass : CheckStatus::Fail,
                         polys_ok ? "" : "stored s, f, g differ from the family formulas"));
    out.push_back(check_degree(inst, b.polys));
    out.push_back(check_fibre_inverse(inst, b.polys, opt));
    out.push_back(check_rescaling(inst, opt));
  }

  if (x.family == Family::F3) {
    out.push_back(result("irregular_values", CheckStatus::NotApplicable, "isotrivial family"));
  } else {
    const bool ok = same(b.irregular, irregular_values(inst));
    out.push_back(result("irregular_values", ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? "" : "stored values differ"));
  }

  auto suz = check_suzuki(x);
  if (suz.status == CheckStatus::Pass && b.fibres != classify_irregular_fibres(inst, Locus::Generic))
    suz = result(suz.name, CheckStatus::Fail, "stored fibres differ from the classification");
  out.push_back(suz);

  auto mono = check_monodromy(x);
  if (mono.status == CheckStatus::Pass) {
    if (b.local_monodromies != local_monodromies(x.r()) || b.h_infinity != h_infinity(x.r()))
      mono = result(mono.name, CheckStatus::Fail, "stored braid words differ");
    else if (!braids_equal(product_of_locals(x.r()), *b.h_infinity))
      mono = result(mono.name, CheckStatus::Fail, "stored h_infinity is not h_r...h_1");
  }
  out.push_back(mono);
  return out;
}

std::vector<PropertyResult> verify_fixture(const std::string& name) {
  // Degrees from expanding the defining products by hand.
  static const std::map<std::string, std::int64_t> expected{{"russell", 21}, {"punctured_line_k1", 4}};
  const auto all = fixtures();
  const auto it = all.find(name);
  if (it == all.end()) throw std::invalid_argument("unknown fixture: " + name);
  std::vector<PropertyResult> out;
  const auto d = it->second.total_degree();
  const auto want = expected.at(name);
  out.push_back(result("degree", d && *d == want ? CheckStatus::Pass : CheckStatus::Fail,
                       "deg f = " + (d ? std::to_string(*d) : std::string("zero")) + ", want " + std::to_string(want)));
  if (name == "russell") {
    const auto v = it->second.eval(0, 0);
    out.push_back(result("evaluation", v == 0 ? CheckStatus::Pass : CheckStatus::Fail, "f(0,0) = " + to_string(v)));
  }
  for (const char* p : {"morrow_reduction", "unimodular", "zero_total_linking", "linking_oracle", "edge_determinants",
                        "fibre_inverse", "rescaling", "suzuki", "monodromy"})
    out.push_back(result(p, CheckStatus::NotApplicable, "fixture carries no classification data"));
  return out;
}

SweepReport run_sweep(const SweepOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  const Family order[] = {Family::F1, Family::F2, Family::F3};
  std::vector<FamilyInstance> insts;
  for (std::size_t i = 0; i < opt.count; ++i) {
    const Family fam = opt.family ? *opt.family : order[i % 3];
    insts.push_back(sample_instance(sample_params(fam, opt.bounds, rng), rng));
  }

  std::vector<std::vector<PropertyResult>> results(insts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < insts.size();) {
      CheckOptions co;
      co.seed = opt.seed + i;
      co.samples = opt.samples;
      results[i] = verify_instance(insts[i], co);
    }
  };
  unsigned n = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(insts.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  SweepReport rep;
  json instances = json::array();
  json summary = json::object();
  for (std::size_t i = 0; i < insts.size(); ++i) {
    json rs = json::array();
    for (const auto& r : results[i]) {
      rs.push_back(to_json(r));
      auto& s = summary[r.name];
      if (s.is_null()) s = {{"pass", 0}, {"fail", 0}, {"not_applicable", 0}};
      s[to_string(r.status)] = s[to_string(r.status)].get<int>() + 1;
      if (r.status == CheckStatus::Fail) rep.passed = false;
    }
    instances.push_back({{"index", i}, {"instance", to_json(insts[i])}, {"results", rs}});
  }
  rep.body["seed"] = opt.seed;
  rep.body["count"] = opt.count;
  rep.body["bounds"] = {{"max_pqpq", opt.bounds.max_pqpq}, {"max_r", opt.bounds.max_r}, {"max_a", opt.bounds.max_a}};
  rep.body["family"] = opt.family ? to_string(*opt.family) : "all";
  rep.body["summary"] = summary;
  rep.body["all_passed"] = rep.passed;
  rep.body["instances"] = instances;
  return rep;
}

}  // namespace splicekit::cli
