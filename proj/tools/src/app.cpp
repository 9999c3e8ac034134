#include "splicekit_cli/app.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "splicekit_cli/bundle.hpp"
#include "splicekit_cli/dot.hpp"

namespace splicekit::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  std::string family = "f1";
  std::vector<std::int64_t> pq;
  std::vector<std::int64_t> a;
  std::vector<std::string> alphas, betas, h;
  bool have_alphas = false, have_betas = false, have_h = false;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::string out;
  std::string in;
};

std::string read_all(std::istream& is) { return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()}; }

json read_json(const std::string& path, std::istream& stdin_stream) {
  std::string text;
  if (path == "-") {
    text = read_all(stdin_stream);
  } else {
    std::ifstream f(path);
    if (!f) throw IoError("cannot read " + path);
    text = read_all(f);
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

// Writes all of text or nothing.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  const std::string tmp = path + ".partial";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw IoError("cannot write " + path);
    f << text;
    if (!f.flush()) {
      std::filesystem::remove(tmp);
      throw IoError("cannot write " + path);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("cannot write " + path + ": " + ec.message());
  }
}

std::vector<BigRational> parse_list(const std::vector<std::string>& xs) {
  std::vector<BigRational> out;
  for (const auto& s : xs) out.push_back(parse_rational(s));
  return out;
}

SimpleTypeParams params_of(const Inputs& in) {
  SimpleTypeParams x;
  x.family = family_from_string(in.family);
  if (x.family != Family::F3) {
    if (in.pq.size() != 4) throw std::invalid_argument("--pqparams needs P,Q,p,q");
    x.P = in.pq[0];
    x.Q = in.pq[1];
    x.p = in.pq[2];
    x.q = in.pq[3];
  }
  x.a = in.a;
  return x;
}

FamilyInstance instance_of(const Inputs& in, std::istream& stdin_stream) {
  FamilyInstance inst;
  if (!in.in.empty()) return instance_from(read_json(in.in, stdin_stream));
  inst.params = params_of(in);
  const auto errs = validate(inst.params);
  if (!errs.empty()) throw std::invalid_argument(errs.front());
  // Unspecified coefficients come from the seeded sampler.
  std::mt19937_64 rng(in.seed);
  const auto sampled = sample_instance(inst.params, rng);
  inst.alphas = in.have_alphas ? parse_list(in.alphas) : sampled.alphas;
  inst.betas = in.have_betas ? parse_list(in.betas) : sampled.betas;
  inst.hcoeffs = in.have_h ? parse_list(in.h) : sampled.hcoeffs;
  const auto ierrs = validate_instance(inst);
  if (!ierrs.empty()) throw std::invalid_argument(ierrs.front());
  return inst;
}

json results_json(const std::vector<PropertyResult>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(to_json(r));
  return a;
}

void add_instance_options(CLI::App* c, Inputs& in) {
  c->add_option("--family", in.family, "f1, f2 or f3")->check(CLI::IsMember({"f1", "f2", "f3", "F1", "F2", "F3"}));
  c->add_option("--pqparams", in.pq, "P,Q,p,q")->delimiter(',');
  c->add_option("--a", in.a, "a_1,...,a_{r-1}")->delimiter(',');
  c->add_option("--alphas", in.alphas, "alpha_0,...,alpha_{k-1}")->delimiter(',');
  c->add_option("--betas", in.betas, "beta_1,...,beta_{r-1}")->delimiter(',');
  c->add_option("--h", in.h, "coefficients of h, lowest degree first")->delimiter(',');
  c->add_option("--seed", in.seed, "seed for unspecified coefficients and sweeps");
  c->add_option("--out", in.out, "output file (stdout by default)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& stdin_stream, std::ostream& out, std::ostream& err) {
  CLI::App app{"splicekit: compactification divisors, splice diagrams, polynomial families and monodromy"};
  app.set_help_flag("--help", "print help");  // -h would clash with --h
  app.require_subcommand(1);
  Inputs in;

  auto* gen = app.add_subcommand("generate", "build and verify a bundle");
  add_instance_options(gen, in);
  gen->add_option("--in", in.in, "request JSON file, or - for stdin");

  auto* ver = app.add_subcommand("verify", "verify an instance, a bundle, a fixture or a seeded sweep");
  add_instance_options(ver, in);
  std::string bundle_path, fixture;
  SweepOptions sweep;
  bool family_given = false;
  ver->add_option("--in", bundle_path, "bundle or request JSON file, or - for stdin");
  ver->add_option("--fixture", fixture, "named polynomial fixture");
  ver->add_option("--count", in.count, "number of sweep instances");
  ver->add_option("--max-pqpq", sweep.bounds.max_pqpq, "sweep bound on P, Q, p, q");
  ver->add_option("--max-r", sweep.bounds.max_r, "sweep bound on r");
  ver->add_option("--max-a", sweep.bounds.max_a, "sweep bound on a_i");
  ver->add_option("--threads", sweep.threads, "worker threads (0: all cores)");
  ver->add_option("--samples", sweep.samples, "fibre-inverse samples per instance");

  auto* dot = app.add_subcommand("export-dot", "Graphviz text of a bundle section");
  add_instance_options(dot, in);
  std::string section;
  dot->add_option("--in", bundle_path, "bundle JSON file, or - for stdin");
  dot->add_option("--section", section, "plumbing or splice")->required();

  auto* nf = app.add_subcommand("normal-form", "normal-form descriptor");
  add_instance_options(nf, in);

  auto* mono = app.add_subcommand("monodromy", "local monodromies and the monodromy at infinity");
  add_instance_options(mono, in);
  int r_opt = 0, maxlen = 0;
  mono->add_option("--r", r_opt, "number of (1,0) curves; taken from --a when omitted");
  mono->add_option("--maxlen", maxlen, "also probe free generation up to this word length");

  auto* fib = app.add_subcommand("fibres", "irregular fibre topology");
  add_instance_options(fib, in);
  std::string locus = "generic";
  fib->add_option("--locus", locus, "generic or special")->check(CLI::IsMember({"generic", "special"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  for (auto* c : {gen, ver, dot, nf, mono, fib}) {
    in.have_alphas = in.have_alphas || c->count("--alphas") > 0;
    in.have_betas = in.have_betas || c->count("--betas") > 0;
    in.have_h = in.have_h || c->count("--h") > 0;
    family_given = family_given || c->count("--family") > 0;
  }

  try {
    if (gen->parsed()) {
      Bundle b = assemble(instance_of(in, stdin_stream));
      b.report = verify_bundle(b);
      if (!all_passed(b.report)) {
        err << results_json(b.report).dump(2) << "\n";
        return kInvariantFailure;
      }
      emit(to_json(b).dump(2) + "\n", in.out, out);
      return kOk;
    }
    if (ver->parsed()) {
      json rep;
      bool ok = true;
      if (!fixture.empty()) {
        const auto rs = verify_fixture(fixture);
        ok = all_passed(rs);
        rep = {{"mode", "fixture"}, {"fixture", fixture}, {"results", results_json(rs)}};
      } else if (in.count > 0) {
        sweep.count = in.count;
        sweep.seed = in.seed;
        if (family_given) sweep.family = family_from_string(in.family);
        auto s = run_sweep(sweep);
        ok = s.passed;
        rep = std::move(s.body);
        rep["mode"] = "sweep";
      } else if (!bundle_path.empty()) {
        const json j = read_json(bundle_path, stdin_stream);
        std::vector<PropertyResult> rs;
        if (j.contains("plumbing")) {
          rs = verify_bundle(bundle_from(j));
          rep["mode"] = "bundle";
        } else {
          rs = verify_instance(instance_from(j));
          rep["mode"] = "instance";
        }
        ok = all_passed(rs);
        rep["results"] = results_json(rs);
      } else {
        const auto rs = verify_instance(instance_of(in, stdin_stream));
        ok = all_passed(rs);
        rep = {{"mode", "instance"}, {"results", results_json(rs)}};
      }
      rep["all_passed"] = ok;
      emit(rep.dump(2) + "\n", in.out, out);
      return ok ? kOk : kInvariantFailure;
    }
    if (dot->parsed()) {
      if (section != "plumbing" && section != "splice")
        throw std::invalid_argument("unknown section '" + section + "' (plumbing or splice)");
      PlumbingGraph g;
      SpliceDiagram d;
      if (!bundle_path.empty()) {
        const json j = read_json(bundle_path, stdin_stream);
        if (section == "plumbing")
          g = plumbing_from(j.at("plumbing"));
        else
          d = splice_from(j.at("splice"));
      } else {
        const auto x = params_of(in);
        const auto errs = validate(x);
        if (!errs.empty()) throw std::invalid_argument(errs.front());
        g = build_plumbing(x);
        d = build_splice(x);
      }
      emit(section == "plumbing" ? plumbing_dot(g) : splice_dot(d), in.out, out);
      return kOk;
    }
    if (nf->parsed()) {
      const auto x = params_of(in);
      const auto n = normal_form(x);
      const auto c = check_normal_form(n);
      json j = to_json(n);
      j["check"] = {{"ok", c.ok}, {"boundary", c.boundary}, {"notes", c.notes}};
      emit(j.dump(2) + "\n", in.out, out);
      return c.ok ? kOk : kInvariantFailure;
    }
    if (mono->parsed()) {
      const int r = r_opt > 0 ? r_opt : static_cast<int>(in.a.size()) + 1;
      json local = json::array();
      bool pure = true;
      for (const auto& h : local_monodromies(r)) {
        local.push_back(to_json(h));
        pure = pure && is_pure(h);
      }
      const bool equal = braids_equal(product_of_locals(r), h_infinity(r));
      json j = {{"r", r},
                {"strands", r + 1},
                {"local", local},
                {"h_infinity", to_json(h_infinity(r))},
                {"product", to_json(product_of_locals(r))},
                {"product_equals_h_infinity", equal},
                {"all_pure", pure}};
      bool ok = equal && pure;
      if (maxlen > 0) {
        const auto fp = free_probe_report(r, maxlen);
        j["free_probe"] = {{"maxlen", maxlen}, {"free", fp.free}, {"words_checked", fp.words_checked},
                           {"witness", fp.witness}};
        ok = ok && fp.free;
      }
      emit(j.dump(2) + "\n", in.out, out);
      return ok ? kOk : kInvariantFailure;
    }
    if (fib->parsed()) {
      const Locus l = locus == "special" ? Locus::Special : Locus::Generic;
      std::vector<FibreTopology> fs;
      if (in.have_betas || in.have_alphas) {
        fs = classify_irregular_fibres(instance_of(in, stdin_stream), l);
      } else {
        const auto x = params_of(in);
        const auto errs = validate(x);
        if (!errs.empty()) throw std::invalid_argument(errs.front());
        fs = classify_irregular_fibres(x, l);
      }
      const auto x = params_of(in);
      json arr = json::array();
      for (const auto& f : fs) arr.push_back(to_json(f));
      const bool suz = suzuki_check(x, l), eul = euler_check(x, l);
      json j = {{"locus", locus}, {"fibres", arr}, {"suzuki", suz}, {"euler_characteristic", eul}};
      emit(j.dump(2) + "\n", in.out, out);
      return suz && eul ? kOk : kInvariantFailure;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace splicekit::cli
