// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "splicekit/family.hpp"
#include "splicekit/fibres.hpp"
#include "splicekit/monodromy.hpp"
#include "splicekit/realize.hpp"
#include "splicekit/splice.hpp"
#include "splicekit/sweep.hpp"
#include "splicekit/verify.hpp"

using namespace splicekit;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kSweep = 200;
const SimpleTypeParams kWorked{Family::F1, 1, 1, 1, 2, {2}};

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few failure messages.
struct Tally {
  std::size_t checked = 0, failed = 0;
  std::ostringstream first;

  void expect(bool cond, const std::string& what) {
    ++checked;
    if (cond) return;
    if (failed++ < 3) first << (failed > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failed == 0) return {true, summary + ", " + std::to_string(checked) + " checks"};
    return {false, std::to_string(failed) + "/" + std::to_string(checked) + " failed: " + first.str()};
  }
};

std::string describe(const SimpleTypeParams& x) {
  std::ostringstream os;
  os << to_string(x.family) << "(" << x.P << "," << x.Q << "," << x.p << "," << x.q << ") a=[";
  for (std::size_t i = 0; i < x.a.size(); ++i) os << (i ? "," : "") << x.a[i];
  os << "]";
  return os.str();
}

std::vector<SimpleTypeParams> sweep(Family f) { return sample_params(f, kSweep, kSeed + static_cast<int>(f)); }

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    o.ok = false;
    o.detail += " (time limit " + std::to_string(static_cast<int>(limit_s)) + " s exceeded)";
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d %s [%.2f s] %s\n", o.ok ? "PASS" : "FAIL", n, title.c_str(), secs, o.detail.c_str());
  std::fflush(stdout);
}

Outcome formula_reproduction() {
  Tally t;
  auto params = sweep(Family::F1);
  params.insert(params.begin(), kWorked);
  std::mt19937_64 rng(kSeed);
  for (const auto& x : params) {
    const auto d = derive_invariants(x);
    const std::int64_t A = std::accumulate(x.a.begin(), x.a.end(), std::int64_t{0});
    t.expect(d.A == A, describe(x) + " A");
    t.expect(d.B == A * x.Q + x.P - x.Q, describe(x) + " B");
    t.expect(d.C == A * x.q + x.p - x.q, describe(x) + " C");
    for (std::size_t i = 0; i < x.a.size(); ++i) t.expect(d.b[i] == x.q * x.Q * x.a[i] + 1, describe(x) + " b_i");
    // the same numbers as splice weights of the divisor
    t.expect(check_invariants(x, d, build_plumbing(x)).status == CheckStatus::Pass, describe(x) + " weights");
    const auto f = build_family(sample_instance(x, rng)).f;
    t.expect(f.total_degree() == A * (x.Q + x.q) + x.P + x.p, describe(x) + " degree");
  }
  const auto w = derive_invariants(kWorked);
  t.expect(w.A == 2 && w.B == 2 && w.C == 3 && w.b == std::vector<std::int64_t>{5} && w.degree == 8, "worked instance");
  return t.outcome(std::to_string(params.size()) + " F1 parameter sets");
}

Outcome blow_down_theorem() {
  Tally t;
  for (Family f : {Family::F1, Family::F2, Family::F3})
    for (const auto& x : sweep(f)) {
      const PlumbingGraph g = build_plumbing(x);
      const auto red = reduce_to_morrow(g);
      t.expect(red.ok() && replay(g.without_arrows(), *red.trace), describe(x) + " reduction: " + red.reason);
      t.expect(abs(det(intersection_matrix(g))) == 1, describe(x) + " det");
    }
  return t.outcome("600 graphs");
}

Outcome cf_identity() {
  Tally t;
  for (const auto& x : sweep(Family::F1)) {
    const std::int64_t A = std::accumulate(x.a.begin(), x.a.end(), std::int64_t{0});
    const std::vector<BigRational> cs{make_rational(x.q, x.p), BigRational(1 - A), BigRational(0),
                                      BigRational(A - 1) + make_rational(x.P, x.Q)};
    t.expect(cf_eval(cs) == ProjRational(make_rational(1, x.P * x.p)), describe(x));
  }
  return t.outcome("F1 sweep");
}

Outcome zero_total_linking() {
  Tally t;
  std::size_t literal_exceptions = 0;
  for (const auto& x : sweep(Family::F1)) {
    const PlumbingGraph g = build_plumbing(x);
    const auto m = fiber_multiplicities(g);
    for (int v : g.ids()) {
      const Vertex& vx = g.vertex(v);
      t.expect(m.at(v).get_den() == 1, describe(x) + " non-integral m");
      const bool zero_expected = vx.arrows > 0 || vx.role == Role::Chain || vx.role == Role::Tail;
      const bool negative_expected = vx.role == Role::LInfty || vx.role == Role::E;
      t.expect((m.at(v) == 0) == zero_expected, describe(x) + " zero set at " + to_string(vx.role));
      t.expect((m.at(v) < 0) == negative_expected, describe(x) + " negative set at " + to_string(vx.role));
      if (m.at(v) == 0 && vx.arrows == 0) ++literal_exceptions;
    }
    t.expect(check_zero_total_linking(x, g, build_splice(x)).status == CheckStatus::Pass, describe(x) + " splice");
  }
  return t.outcome("F1 sweep, zero set = arrowed + chain/tail vertices (" + std::to_string(literal_exceptions) +
                   " unarrowed chain/tail zeros)");
}

Outcome linking_oracle() {
  Tally t;
  for (Family f : {Family::F1, Family::F2, Family::F3})
    for (const auto& x : sweep(f)) {
      const auto r = check_linking_oracle(build_plumbing(x), build_splice(x));
      t.expect(r.status == CheckStatus::Pass, describe(x) + " " + r.detail);
    }
  return t.outcome("arrow pairs by role, three families");
}

Outcome edge_determinants() {
  Tally t;
  for (Family f : {Family::F1, Family::F2})
    for (const auto& x : sweep(f)) {
      const SpliceDiagram d = build_splice(x);
      const int R = *d.find(Role::LInfty), U = *d.find(Role::OneZero, x.r());
      t.expect(edge_determinant(d, R, U) == 1, describe(x) + " Pq-pQ edge");
      for (int i = 1; i < x.r(); ++i)
        t.expect(edge_determinant(d, R, *d.find(Role::OneZero, i)) == 1, describe(x) + " arm edge");
    }
  return t.outcome("F1 and F2 diagrams");
}

Outcome fibre_inverse() {
  Tally t;
  std::mt19937_64 rng(kSeed);
  std::size_t samples = 0, degenerate = 0;
  const Family order[] = {Family::F1, Family::F2, Family::F3};
  for (int n = 0; n < 50; ++n) {
    const FamilyInstance inst = sample_instance(sample_params(order[n % 3], SweepBounds{}, rng), rng);
    const FamilyPolys polys = build_family(inst);
    int good = 0;
    for (int attempt = 0; attempt < 2000 && good < 50; ++attempt) {
      const auto r = fiber_inverse_sample(inst, polys, small_rational(rng), small_rational(rng));
      if (r.status == SampleStatus::Degenerate) {
        ++degenerate;
        continue;
      }
      t.expect(r.status == SampleStatus::Reconstructed, describe(inst.params) + " " + r.note);
      good += r.status == SampleStatus::Reconstructed;
    }
    t.expect(good >= 50, describe(inst.params) + " only " + std::to_string(good) + " samples");
    samples += static_cast<std::size_t>(good);
  }
  return t.outcome("50 instances, " + std::to_string(samples) + " reconstructions, " + std::to_string(degenerate) +
                   " degenerate draws");
}

Outcome rescaling() {
  Tally t;
  std::mt19937_64 rng(kSeed + 1);
  for (int n = 0; n < 50; ++n) {
    const FamilyInstance inst = sample_instance(sample_params(n % 2 ? Family::F2 : Family::F1, SweepBounds{}, rng), rng);
    for (const BigRational& l : {BigRational(-1), BigRational(2), make_rational(3, 2)})
      t.expect(rescale_check(inst, l), describe(inst.params) + " lambda=" + to_string(l));
  }
  return t.outcome("50 instances, lambda in {-1, 2, 3/2}");
}

Outcome suzuki() {
  Tally t;
  for (const auto& x : sweep(Family::F1))
    for (Locus l : {Locus::Generic, Locus::Special}) {
      const auto fs = classify_irregular_fibres(x, l);
      int sum = 0;
      for (const auto& f : fs) sum += static_cast<int>(f.components.size()) - 1;
      t.expect(sum == derive_invariants(x).delta - 1, describe(x) + " " + to_string(l));
      t.expect(suzuki_check(x, l), describe(x) + " suzuki_check");
    }
  return t.outcome("F1 sweep, generic and special loci");
}

Outcome monodromy() {
  Tally t;
  for (int r = 1; r <= 8; ++r) {
    t.expect(braids_equal(product_of_locals(r), h_infinity(r)), "h_inf identity r=" + std::to_string(r));
    for (const auto& h : local_monodromies(r)) t.expect(is_pure(h), "purity " + h.str());
  }
  std::uint64_t words = 0;
  for (int r = 2; r <= 4; ++r)
    for (int len = 1; len <= 6; ++len) {
      const auto rep = free_probe_report(r, len);
      t.expect(rep.free, "free_probe r=" + std::to_string(r) + " len=" + std::to_string(len));
      if (len == 6) words += rep.words_checked;
    }
  return t.outcome("r = 1..8, " + std::to_string(words) + " reduced words at length 6");
}

Outcome fixtures_and_sides() {
  Tally t;
  const MultiPoly r = russell_polynomial();
  t.expect(r.total_degree() == 21, "russell degree");
  // expanded form against the product form at sample points
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 20; ++i) {
    const BigRational x = small_rational(rng), y = small_rational(rng);
    const BigRational s = x * y + 1;
    const BigRational want = (y * y * s * s * s * s + y * (s + x * y) * s + 1) * (y * s * s * s * s * s + 2 * x * y * s * s + x);
    t.expect(r.eval(x, y) == want, "russell evaluation");
  }
  for (const auto& x : sweep(Family::F1)) {
    const auto re = realize(x);
    const bool left = case_of(x) == FamilyCase::Case2;
    t.expect(re.side == (left ? ChainSide::Left : ChainSide::Right), describe(x) + " side");
    t.expect(re.k == k_of(x), describe(x) + " k");
    t.expect(re.on_horizontal == (left ? x.q == 1 : x.P == 1), describe(x) + " landing");
  }
  for (const auto& x : sweep(Family::F2))
    t.expect(check_side_landing(x).status != CheckStatus::Fail, describe(x) + " F2 side");
  return t.outcome("russell degree 21, side/landing on F1 and F2 sweeps");
}

Outcome negative_controls() {
  Tally t;
  PlumbingGraph g;
  for (std::int64_t w : {-2, -1, -2}) g.add_vertex(w);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  t.expect(det(intersection_matrix(g)) == 0, "chain det");
  t.expect(!is_morrow(g).has_value(), "chain is_morrow");
  t.expect(!reduce_to_morrow(g).ok(), "chain reduction");
  t.expect(check_morrow(g).status == CheckStatus::Fail, "check_morrow");
  t.expect(check_unimodular(g).status == CheckStatus::Fail, "check_unimodular");
  t.expect(!validate({Family::F1, 1, 1, 2, 1, {2}}).empty(), "Pq-pQ = -1");
  t.expect(!validate({Family::F2, 2, 1, 1, 2, {1}}).empty(), "Pq-pQ = 3");
  bool threw = false;
  try {
    build_plumbing({Family::F1, 1, 1, 2, 1, {2}});
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  t.expect(threw, "build_plumbing accepted invalid params");
  return t.outcome("rejections");
}

}  // namespace

int main() {
  criterion(1, "formula reproduction", 30, formula_reproduction);
  criterion(2, "blow-down to Morrow, |det| = 1", 60, blow_down_theorem);
  criterion(3, "continued-fraction identity", 0, cf_identity);
  criterion(4, "zero total linking", 0, zero_total_linking);
  criterion(5, "linking oracle", 0, linking_oracle);
  criterion(6, "edge determinants", 0, edge_determinants);
  criterion(7, "fibre-inverse sampling", 60, fibre_inverse);
  criterion(8, "rescaling identity", 0, rescaling);
  criterion(9, "Suzuki identity", 0, suzuki);
  criterion(10, "monodromy", 120, monodromy);
  criterion(11, "fixtures and side/landing rules", 0, fixtures_and_sides);
  criterion(12, "negative controls", 0, negative_controls);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
