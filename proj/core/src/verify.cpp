#include "splicekit/verify.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "splicekit/fibres.hpp"
#include "splicekit/monodromy.hpp"
#include "splicekit/realize.hpp"
#include "splicekit/sweep.hpp"

namespace splicekit {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not_applicable";
  }
  return "fail";
}

namespace {

PropertyResult pass(std::string name, std::string detail = {}) {
  return {std::move(name), CheckStatus::Pass, std::move(detail)};
}
PropertyResult fail(std::string name, std::string detail) { return {std::move(name), CheckStatus::Fail, std::move(detail)}; }
PropertyResult na(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::NotApplicable, std::move(detail)};
}

// Runs body, turning exceptions into failures.
template <class F>
PropertyResult guarded(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return fail(name, e.what());
  }
}

std::string label(Role role, int index) {
  return to_string(role) + (role == Role::OneZero ? "(" + std::to_string(index) + ")" : "");
}

}  // namespace

PropertyResult check_morrow(const PlumbingGraph& g) {
  return guarded("morrow_reduction", [&] {
    const auto out = reduce_to_morrow(g);
    if (!out.ok()) return fail("morrow_reduction", out.reason);
    if (!replay(g, *out.trace)) return fail("morrow_reduction", "trace does not replay");
    return pass("morrow_reduction", out.trace->form.str() + " after " + std::to_string(out.trace->steps.size()) + " blow-downs");
  });
}

PropertyResult check_unimodular(const PlumbingGraph& g) {
  return guarded("unimodular", [&] {
    const BigInt d = det(intersection_matrix(g));
    if (abs(d) != 1) return fail("unimodular", "det = " + to_string(d));
    return pass("unimodular", "det = " + to_string(d));
  });
}

PropertyResult check_cf_identity(const SimpleTypeParams& x) {
  if (x.family != Family::F1) return na("cf_identity", "identity concerns the non-isotrivial chains");
  return guarded("cf_identity", [&] {
    const auto A = std::accumulate(x.a.begin(), x.a.end(), std::int64_t{0});
    const auto v = cf_eval(std::vector<BigRational>{make_rational(x.q, x.p), BigRational(1 - A), BigRational(0),
                                                    make_rational(A - 1) + make_rational(x.P, x.Q)});
    const BigRational want = make_rational(1, x.P * x.p);
    if (v.is_infinite() || v.value() != want) return fail("cf_identity", "got " + v.str() + ", want " + to_string(want));
    return pass("cf_identity", to_string(want));
  });
}

PropertyResult check_zero_total_linking(const SimpleTypeParams& x, const PlumbingGraph& g, const SpliceDiagram& d) {
  const std::string name = "zero_total_linking";
  return guarded(name, [&] {
    const auto m = fiber_multiplicities(g);
    for (const auto& [id, mv] : m) {
      const auto& v = g.vertex(id);
      // Chains and tails hang beyond a horizontal curve, so f is finite there.
      const bool expect_zero = v.arrows > 0 || v.role == Role::Chain || v.role == Role::Tail;
      const bool expect_negative = v.role == Role::LInfty || v.role == Role::E;
      // the sign pattern is only claimed for F1
      const bool sign_ok = x.family != Family::F1 || expect_negative == (mv < 0);
      if (expect_zero != (mv == 0) || !sign_ok)
        return fail(name, "vertex " + std::to_string(id) + " (" + to_string(v.role) + ", " + std::to_string(v.arrows) +
                              " arrows) has m = " + to_string(mv));
    }
    // An arrow drawn on a node of another role (the (1,0)_0 arrow at E)
    // stands for a smoothed curve vertex, so it is checked on the extracted
    // diagram only.
    std::size_t direct = 0;
    for (int a : d.arrows()) {
      const auto& av = d.vertex(a);
      const auto& cv = d.vertex(d.carrier(a));
      if (cv.role != av.role || cv.index != av.index) continue;
      const BigInt t = total_linking(d, a);
      if (t != 0) return fail(name, "diagram total linking " + to_string(t) + " at " + label(av.role, av.index));
      ++direct;
    }
    const auto ex = splice_from_plumbing(g);
    for (int a : ex.arrows()) {
      const BigInt t = total_linking(ex, a);
      if (t != 0)
        return fail(name, "extracted total linking " + to_string(t) + " at " + label(ex.vertex(a).role, ex.vertex(a).index));
    }
    return pass(name, std::to_string(direct) + " direct arrows, " + std::to_string(ex.arrows().size()) + " extracted");
  });
}

PropertyResult check_linking_oracle(const PlumbingGraph& g, const SpliceDiagram& d) {
  const std::string name = "linking_oracle";
  return guarded(name, [&] {
    const auto L = arrow_linking_matrix(g);
    const BigInt sign = det(intersection_matrix(g)) * (g.vertex_count() % 2 == 0 ? 1 : -1);  // det(-A)
    if (abs(sign) != 1) return fail(name, "det(-A) = " + to_string(sign));
    std::vector<int> splice_arrow;
    for (const auto& ref : L.arrows) {
      int found = -1;
      for (int a : d.arrows()) {
        const auto& v = d.vertex(a);
        if (v.role == ref.role && v.index == ref.index) {
          if (found >= 0) return fail(name, "duplicate splice arrow " + label(ref.role, ref.index));
          found = a;
        }
      }
      if (found < 0) return fail(name, "no splice arrow for " + label(ref.role, ref.index));
      splice_arrow.push_back(found);
    }
    if (splice_arrow.size() != d.arrows().size()) return fail(name, "arrow counts differ");
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < splice_arrow.size(); ++i)
      for (std::size_t j = i + 1; j < splice_arrow.size(); ++j) {
        const BigRational want = BigRational(sign) * L.matrix[i][j];
        const BigInt got = splice_linking(d, splice_arrow[i], splice_arrow[j]);
        if (BigRational(got) != want)
          return fail(name, label(L.arrows[i].role, L.arrows[i].index) + " x " +
                                label(L.arrows[j].role, L.arrows[j].index) + ": splice " + to_string(got) +
                                ", plumbing " + to_string(want));
        ++pairs;
      }
    return pass(name, std::to_string(pairs) + " pairs");
  });
}

PropertyResult check_edge_determinants(const SpliceDiagram& d) {
  const std::string name = "edge_determinants";
  return guarded(name, [&] {
    const auto R = d.find(Role::LInfty);
    if (!R) return na(name, "l_infty is not a node");
    std::size_t n = 0;
    for (const auto& v : d.vertices()) {
      if (v.kind != SpliceKind::Node || v.role != Role::OneZero || v.index < 1) continue;
      if (!d.edge_between(*R, v.id)) continue;
      const BigInt e = edge_determinant(d, *R, v.id);
      if (e != 1) return fail(name, "edge to " + label(v.role, v.index) + " has determinant " + to_string(e));
      ++n;
    }
    if (n == 0) return na(name, "no node edges at l_infty");
    return pass(name, std::to_string(n) + " edges");
  });
}

PropertyResult check_side_landing(const SimpleTypeParams& x) {
  const std::string name = "side_landing";
  if (x.family == Family::F3) return na(name, "no separating chain");
  return guarded(name, [&] {
    const auto re = realize(x);
    const ChainSide want = case_of(x) == FamilyCase::Case2 ? ChainSide::Left : ChainSide::Right;
    if (re.side != want) return fail(name, "non-separating side disagrees with the case");
    if (re.k != k_of(x)) return fail(name, "non-separating length " + std::to_string(re.k));
    // The left end is the (1,1) curve for F1 but a vertical curve for F2.
    const bool want_h = want == ChainSide::Left ? x.family == Family::F1 && x.q == 1 : x.P == 1;
    if (re.on_horizontal != want_h) return fail(name, "landing on a horizontal curve disagrees with q = 1 / P = 1");
    return pass(name, std::string(want == ChainSide::Left ? "left" : "right") + (want_h ? ", on horizontal" : ""));
  });
}

PropertyResult check_realization(const SimpleTypeParams& x, const PlumbingGraph& g) {
  const std::string name = "realization";
  return guarded(name, [&] {
    const auto re = realize(x);
    if (!re.graph.is_tree()) return fail(name, "realized divisor is not a tree");
    if (canonical_form(re.graph) != canonical_form(g)) return fail(name, "blow-up divisor differs from the chain assembly");
    // b_2 of P1xP1 blown up m times is m + 2, and D carries all of it
    if (g.vertex_count() != static_cast<std::size_t>(re.blowups) + 2)
      return fail(name, std::to_string(g.vertex_count()) + " curves after " + std::to_string(re.blowups) + " blow-ups");
    return pass(name, std::to_string(re.blowups) + " blow-ups, " + std::to_string(re.cutting) + " cutting curves");
  });
}

PropertyResult check_normal_form(const SimpleTypeParams& x) {
  const std::string name = "normal_form";
  return guarded(name, [&] {
    const auto c = check_normal_form(normal_form(x));
    std::string notes;
    for (const auto& n : c.notes) notes += (notes.empty() ? "" : "; ") + n;
    if (!c.ok) return fail(name, notes);
    return pass(name, c.boundary ? "boundary: " + notes : notes);
  });
}

PropertyResult check_invariants(const SimpleTypeParams& x, const DerivedInvariants& claimed, const PlumbingGraph& g) {
  const std::string name = "derived_invariants";
  return guarded(name, [&] {
    const auto A = std::accumulate(x.a.begin(), x.a.end(), std::int64_t{0});
    if (claimed.A != A) return fail(name, "A");
    if (x.family == Family::F3) {
      if (claimed.degree != A + 1) return fail(name, "degree");
      return pass(name);
    }
    if (claimed.B != A * x.Q + x.P - x.Q) return fail(name, "B");
    if (claimed.C != A * x.q + x.p - x.q) return fail(name, "C");
    if (claimed.degree != A * (x.Q + x.q) + x.P + x.p) return fail(name, "degree");
    if (claimed.b.size() != x.a.size()) return fail(name, "b length");
    for (std::size_t i = 0; i < x.a.size(); ++i)
      if (claimed.b[i] != x.q * x.Q * x.a[i] + 1) return fail(name, "b_" + std::to_string(i + 1));
    if (x.family != Family::F1) return pass(name);
    // The same numbers as splice weights read off the divisor.
    const auto d = splice_from_plumbing(g);
    const auto R = d.find(Role::LInfty), E = d.find(Role::E), D = d.find(Role::OneOne);
    const auto U = d.find(Role::OneZero, x.r());
    if (!R || !E || !D || !U) return fail(name, "diagram lacks a named node");
    auto w = [&](int v, int toward) {
      const auto path = d.path(v, toward);
      return d.weight(v, path.at(1));
    };
    if (w(*E, *D) != claimed.B) return fail(name, "B differs from the diagram weight " + to_string(w(*E, *D)));
    if (w(*E, *R) != -claimed.C) return fail(name, "C differs from the diagram weight " + to_string(w(*E, *R)));
    if (w(*R, *E) != -x.Q || w(*R, *U) != x.q || w(*U, *R) != -x.P) return fail(name, "P, Q, q weights at l_infty");
    for (int i = 1; i < x.r(); ++i) {
      const auto N = d.find(Role::OneZero, i);
      if (!N) return fail(name, "diagram lacks one_zero(" + std::to_string(i) + ")");
      if (w(*N, *R) != -claimed.b[static_cast<std::size_t>(i - 1)])
        return fail(name, "b_" + std::to_string(i) + " differs from the diagram weight");
    }
    return pass(name, "closed forms agree with diagram weights");
  });
}

PropertyResult check_degree(const FamilyInstance& inst, const FamilyPolys& polys) {
  const auto d = polys.f.total_degree();
  const auto want = predicted_degree(inst.params);
  if (!d) return fail("degree", "f is zero");
  if (*d != want) return fail("degree", "deg f = " + std::to_string(*d) + ", want " + std::to_string(want));
  return pass("degree", std::to_string(want));
}

PropertyResult check_fibre_inverse(const FamilyInstance& inst, const FamilyPolys& polys, const CheckOptions& opt) {
  const std::string name = "fibre_inverse";
  return guarded(name, [&] {
    std::mt19937_64 rng(opt.seed);
    int good = 0, degenerate = 0;
    for (int t = 0; t < opt.max_sample_attempts && good < opt.samples; ++t) {
      const BigRational px = small_rational(rng), py = small_rational(rng);
      const auto r = fiber_inverse_sample(inst, polys, px, py);
      if (r.status == SampleStatus::Degenerate) {
        ++degenerate;
        continue;
      }
      if (r.status == SampleStatus::Mismatch)
        return fail(name, "(" + to_string(px) + ", " + to_string(py) + ") reconstructs as (" + to_string(r.x) + ", " +
                              to_string(r.y) + ")");
      ++good;
    }
    const std::string detail = std::to_string(good) + " reconstructed, " + std::to_string(degenerate) + " degenerate";
    if (good < opt.samples) return fail(name, "too few non-degenerate samples: " + detail);
    return pass(name, detail);
  });
}

PropertyResult check_rescaling(const FamilyInstance& inst, const CheckOptions& opt) {
  const std::string name = "rescaling";
  if (inst.params.family == Family::F3) return na(name, "no rescaling action");
  return guarded(name, [&] {
    for (const auto& l : opt.lambdas)
      if (!rescale_check(inst, l)) return fail(name, "lambda = " + to_string(l));
    return pass(name, std::to_string(opt.lambdas.size()) + " values of lambda");
  });
}

PropertyResult check_suzuki(const SimpleTypeParams& x) {
  const std::string name = "suzuki";
  if (x.family != Family::F1) return na(name, "fibres are classified for the non-isotrivial family only");
  return guarded(name, [&] {
    for (auto locus : {Locus::Generic, Locus::Special}) {
      if (!suzuki_check(x, locus)) return fail(name, "component count on the " + to_string(locus) + " locus");
      if (!euler_check(x, locus)) return fail(name, "Euler characteristic on the " + to_string(locus) + " locus");
    }
    return pass(name, "generic and special loci");
  });
}

PropertyResult check_monodromy(const SimpleTypeParams& x) {
  const std::string name = "monodromy";
  if (x.family != Family::F1) return na(name, "isotrivial family");
  return guarded(name, [&] {
    const int r = x.r();
    for (const auto& h : local_monodromies(r))
      if (!is_pure(h)) return fail(name, "local monodromy " + h.str() + " is not pure");
    if (!braids_equal(product_of_locals(r), h_infinity(r))) return fail(name, "h_r...h_1 differs from h_infinity");
    return pass(name, "h_infinity = " + h_infinity(r).str());
  });
}

std::vector<PropertyResult> verify_instance(const FamilyInstance& inst, const CheckOptions& opt) {
  std::vector<PropertyResult> out;
  const auto errs = validate_instance(inst);
  if (!errs.empty()) {
    out.push_back(fail("params_valid", errs.front()));
    return out;
  }
  out.push_back(pass("params_valid"));
  const auto& x = inst.params;
  const auto g = build_plumbing(x);
  const auto d = build_splice(x);
  out.push_back(check_invariants(x, derive_invariants(x), g));
  out.push_back(check_normal_form(x));
  out.push_back(check_morrow(g));
  out.push_back(check_unimodular(g));
  out.push_back(check_cf_identity(x));
  out.push_back(check_zero_total_linking(x, g, d));
  out.push_back(check_linking_oracle(g, d));
  out.push_back(check_edge_determinants(d));
  out.push_back(check_side_landing(x));
  if (opt.realization) out.push_back(check_realization(x, g));
  if (opt.polynomials) {
    const auto polys = build_family(inst);
    out.push_back(check_degree(inst, polys));
    out.push_back(check_fibre_inverse(inst, polys, opt));
    out.push_back(check_rescaling(inst, opt));
  }
  out.push_back(check_suzuki(x));
  out.push_back(check_monodromy(x));
  return out;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results)
    if (r.status == CheckStatus::Fail) return false;
  return true;
}

}  // namespace splicekit
