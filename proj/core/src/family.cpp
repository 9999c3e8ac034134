#include "splicekit/family.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace splicekit {

namespace {

std::int64_t sum_a(const SimpleTypeParams& x) { return std::accumulate(x.a.begin(), x.a.end(), std::int64_t{0}); }

// Exponents of the working coordinate X and of s in g = X^eg s^ng and
// w = X^ew s^nw; in Case 2 the working coordinates are (y, x).
struct Shape {
  bool swapped = false;
  std::int64_t k = 0;
  std::int64_t eg = 0, ng = 0, ew = 0, nw = 0;
};

Shape shape_of(const SimpleTypeParams& x) {
  Shape sh;
  sh.k = k_of(x);
  if (case_of(x) == FamilyCase::Case1) {
    sh.eg = x.q - x.Q * sh.k;
    sh.ng = x.Q;
    sh.ew = x.p - x.P * sh.k;
    sh.nw = x.P;
  } else {
    sh.swapped = true;
    sh.eg = x.Q - x.q * sh.k;
    sh.ng = x.q;
    sh.ew = x.P - x.p * sh.k;
    sh.nw = x.p;
  }
  return sh;
}

// prod (beta_i - t)^{a_i}
UniPoly arm_product(const SimpleTypeParams& x, const std::vector<BigRational>& betas) {
  UniPoly u{BigRational(1)};
  for (std::size_t i = 0; i < betas.size(); ++i)
    u = uni_mul(u, uni_pow(UniPoly{betas[i], BigRational(-1)}, static_cast<std::uint64_t>(x.a[i])));
  return u;
}

BigRational arm_product_at(const SimpleTypeParams& x, const std::vector<BigRational>& betas, const BigRational& t) {
  BigRational v = 1;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const BigRational d = betas[i] - t;
    for (std::int64_t e = 0; e < x.a[i]; ++e) v *= d;
  }
  return v;
}

// Expands sum c X^a s^n with s = alpha(X) + X^k Y.
class SExpander {
 public:
  SExpander(const std::vector<BigRational>& alphas, std::int64_t k) : k_(k) {
    alpha_ = UniPoly(alphas.begin(), alphas.end());
    while (!alpha_.empty() && alpha_.back() == 0) alpha_.pop_back();
    powers_.push_back(UniPoly{BigRational(1)});
  }

  void add(const BigRational& c, std::int64_t a, std::int64_t n, MultiPoly& out) {
    if (c == 0) return;
    while (static_cast<std::int64_t>(powers_.size()) <= n) powers_.push_back(uni_mul(powers_.back(), alpha_));
    BigInt binom;
    for (std::int64_t m = 0; m <= n; ++m) {
      const UniPoly& ap = powers_[static_cast<std::size_t>(n - m)];
      if (ap.empty()) continue;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
      const BigRational cm = c * BigRational(binom);
      const auto xshift = static_cast<std::uint32_t>(a + k_ * m);
      for (std::size_t d = 0; d < ap.size(); ++d)
        if (ap[d] != 0) out.add_term(cm * ap[d], xshift + static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(m));
    }
  }

  MultiPoly s() const {
    MultiPoly out;
    for (std::size_t d = 0; d < alpha_.size(); ++d) out.add_term(alpha_[d], static_cast<std::uint32_t>(d), 0);
    out.add_term(1, static_cast<std::uint32_t>(k_), 1);
    return out;
  }

 private:
  std::int64_t k_;
  UniPoly alpha_;
  std::vector<UniPoly> powers_;
};

}  // namespace

std::vector<std::string> validate_instance(const FamilyInstance& inst) {
  auto errs = validate(inst.params);
  if (!errs.empty()) return errs;
  const auto& x = inst.params;
  const auto r1 = static_cast<std::size_t>(x.r() - 1);
  if (inst.betas.size() != r1)
    errs.push_back("expected " + std::to_string(r1) + " betas, got " + std::to_string(inst.betas.size()));
  std::set<BigRational> seen;
  for (const auto& b : inst.betas) {
    if (b == 0) errs.push_back("betas must be nonzero");
    if (!seen.insert(b).second) errs.push_back("betas must be distinct");
  }
  if (x.family == Family::F3) {
    if (!inst.alphas.empty()) errs.push_back("F3 takes no alphas");
    const auto A = sum_a(x);
    for (std::size_t i = 0; i < inst.hcoeffs.size(); ++i)
      if (inst.hcoeffs[i] != 0 && static_cast<std::int64_t>(i) >= A)
        errs.push_back("deg h must be < A = " + std::to_string(A));
  } else {
    const auto k = static_cast<std::size_t>(k_of(x));
    if (inst.alphas.size() != k)
      errs.push_back("expected k = " + std::to_string(k) + " alphas, got " + std::to_string(inst.alphas.size()));
    if (!inst.hcoeffs.empty()) errs.push_back("h applies to F3 only");
  }
  return errs;
}

FamilyPolys build_family(const FamilyInstance& inst) {
  const auto errs = validate_instance(inst);
  if (!errs.empty()) throw std::invalid_argument(errs.front());
  const auto& x = inst.params;
  FamilyPolys out;
  if (x.family == Family::F3) {
    UniPoly u{BigRational(1)};
    for (std::size_t i = 0; i < inst.betas.size(); ++i)
      u = uni_mul(u, uni_pow(UniPoly{-inst.betas[i], BigRational(1)}, static_cast<std::uint64_t>(x.a[i])));
    for (std::size_t d = 0; d < u.size(); ++d) out.f.add_term(u[d], static_cast<std::uint32_t>(d), 1);
    for (std::size_t d = 0; d < inst.hcoeffs.size(); ++d) out.f.add_term(inst.hcoeffs[d], static_cast<std::uint32_t>(d), 0);
    out.g = MultiPoly::x();
    return out;
  }
  const Shape sh = shape_of(x);
  SExpander ex(inst.alphas, sh.k);
  if (x.family == Family::F1) ex.add(1, sh.eg, sh.ng, out.f);
  const UniPoly u = arm_product(x, inst.betas);
  for (std::size_t j = 0; j < u.size(); ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    ex.add(u[j], sh.ew + sh.eg * jj, sh.nw + sh.ng * jj, out.f);
  }
  ex.add(1, sh.eg, sh.ng, out.g);
  out.s = ex.s();
  if (sh.swapped) {
    out.f = out.f.swapped();
    out.g = out.g.swapped();
    out.s = out.s.swapped();
  }
  return out;
}

std::int64_t predicted_degree(const SimpleTypeParams& x) {
  const auto A = sum_a(x);
  if (x.family == Family::F3) return A + 1;
  return A * (x.Q + x.q) + x.P + x.p;
}

bool degree_check(const FamilyInstance& inst, const FamilyPolys& polys) {
  const auto d = polys.f.total_degree();
  return d && *d == predicted_degree(inst.params);
}

bool degree_check(const FamilyInstance& inst) { return degree_check(inst, build_family(inst)); }

namespace {

BigRational int_pow(const BigRational& b, std::int64_t e) {
  const BigRational base = e < 0 ? BigRational(1 / b) : b;
  const auto n = static_cast<unsigned long>(e < 0 ? -e : e);
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), n);
  r.canonicalize();
  return r;
}

std::optional<BigRational> signed_pow(const BigRational& b, std::int64_t e) {
  if (e < 0 && b == 0) return std::nullopt;
  return int_pow(b, e);
}

}  // namespace

SampleResult fiber_inverse_sample(const FamilyInstance& inst, const FamilyPolys& polys, const BigRational& px,
                                  const BigRational& py) {
  const auto& x = inst.params;
  SampleResult res;
  const BigRational t = polys.f.eval(px, py);
  const BigRational u = polys.g.eval(px, py);
  if (x.family == Family::F3) {
    BigRational prod = 1;
    for (std::size_t i = 0; i < inst.betas.size(); ++i)
      for (std::int64_t e = 0; e < x.a[i]; ++e) prod *= u - inst.betas[i];
    if (prod == 0) {
      res.note = "g lands on some beta_i";
      return res;
    }
    BigRational h = uni_eval(UniPoly(inst.hcoeffs.begin(), inst.hcoeffs.end()), u);
    res.x = u;
    res.y = (t - h) / prod;
  } else {
    const Shape sh = shape_of(x);
    const BigRational denom = arm_product_at(x, inst.betas, u);
    if (denom == 0) {
      res.note = "g lands on some beta_i";
      return res;
    }
    const BigRational w = (x.family == Family::F1 ? t - u : t) / denom;
    const std::int64_t d = sh.eg * sh.nw - sh.ng * sh.ew;  // +-1
    const auto X1 = signed_pow(u, d * sh.nw), X2 = signed_pow(w, -d * sh.ng);
    const auto S1 = signed_pow(u, -d * sh.ew), S2 = signed_pow(w, d * sh.eg);
    if (!X1 || !X2 || !S1 || !S2) {
      res.note = "zero raised to a negative power";
      return res;
    }
    const BigRational X = *X1 * *X2, s = *S1 * *S2;
    if (X == 0) {
      res.note = "reconstructed coordinate vanishes";
      return res;
    }
    BigRational lower = uni_eval(UniPoly(inst.alphas.begin(), inst.alphas.end()), X);
    BigRational Xk = 1;
    for (std::int64_t i = 0; i < sh.k; ++i) Xk *= X;
    const BigRational Y = (s - lower) / Xk;
    res.x = sh.swapped ? Y : X;
    res.y = sh.swapped ? X : Y;
  }
  res.status = (res.x == px && res.y == py) ? SampleStatus::Reconstructed : SampleStatus::Mismatch;
  return res;
}

bool fiber_inverse_check(const FamilyInstance& inst, const BigRational& x, const BigRational& y) {
  const auto polys = build_family(inst);
  const auto r = fiber_inverse_sample(inst, polys, x, y);
  if (r.status == SampleStatus::Degenerate) throw std::domain_error("degenerate sample: " + r.note);
  return r.status == SampleStatus::Reconstructed;
}

IrregularValues irregular_values(const FamilyInstance& inst) {
  const auto errs = validate_instance(inst);
  if (!errs.empty()) throw std::invalid_argument(errs.front());
  const auto& x = inst.params;
  IrregularValues iv;
  if (x.family != Family::F1) {
    iv.applicable = false;
    iv.notes.push_back("irregular values are tabulated for the non-isotrivial family only");
    return iv;
  }
  auto push = [&](const BigRational& v) {
    if (std::find(iv.values.begin(), iv.values.end(), v) != iv.values.end()) {
      iv.non_generic = true;
      iv.notes.push_back("coincident irregular value " + to_string(v));
      return;
    }
    iv.values.push_back(v);
  };
  push(0);
  for (const auto& b : inst.betas) push(b);
  if (x.P == 1) {
    // f(0, y) is the constant alpha_0 prod beta_i^{a_i}
    BigRational v = inst.alphas.at(0);
    for (std::size_t i = 0; i < inst.betas.size(); ++i)
      for (std::int64_t e = 0; e < x.a[i]; ++e) v *= inst.betas[i];
    iv.extra = v;
    push(v);
  } else if (x.q == 1) {
    iv.extra = inst.alphas.at(0);
    push(inst.alphas.at(0));
  }
  if (!inst.alphas.empty() && inst.alphas[0] == 0) {
    iv.non_generic = true;
    iv.notes.push_back("alpha_0 = 0");
  }
  return iv;
}

std::vector<std::int64_t> rescale_exponents(const SimpleTypeParams& x) {
  const auto d = derive_invariants(x);
  std::vector<std::int64_t> e;
  if (x.family == Family::F3) return e;
  const Shape sh = shape_of(x);
  for (std::int64_t j = 0; j < d.k; ++j) {
    if (!sh.swapped) {
      e.push_back(j * d.B + sh.ew + sh.eg * (d.A - 1));
    } else {
      e.push_back((d.k - j) * d.C - d.B);
    }
  }
  return e;
}

std::vector<std::int64_t> rescale_exponents_literal(const SimpleTypeParams& x) {
  const auto d = derive_invariants(x);
  std::vector<std::int64_t> e;
  for (std::int64_t j = 0; j < d.k; ++j) e.push_back(j * d.B + d.A - 1);
  return e;
}

FamilyInstance rescaled_instance(const FamilyInstance& inst, const BigRational& lambda,
                                 const std::vector<std::int64_t>& exponents) {
  if (lambda == 0) throw std::invalid_argument("lambda must be nonzero");
  FamilyInstance out = inst;
  for (auto& b : out.betas) b /= lambda;
  for (std::size_t j = 0; j < out.alphas.size(); ++j) out.alphas[j] *= int_pow(lambda, exponents.at(j));
  return out;
}

bool rescale_check(const FamilyInstance& inst, const BigRational& lambda, const std::vector<std::int64_t>& exponents) {
  if (inst.params.family == Family::F3) throw std::invalid_argument("rescaling applies to F1 and F2");
  const auto d = derive_invariants(inst.params);
  if (lambda == 0) throw std::invalid_argument("lambda must be nonzero");
  const auto f = build_family(inst).f;
  const auto g = build_family(rescaled_instance(inst, lambda, exponents)).f;
  if (f.size() != g.size()) return false;
  // term by term: the coefficient of x^i y^j picks up lambda^{Bi - Cj - 1}
  std::map<std::int64_t, BigRational> powers;
  auto it = g.terms().begin();
  for (const auto& [e, c] : f.terms()) {
    if (it->first != e) return false;
    const std::int64_t n = d.B * e.first - d.C * e.second - 1;
    auto pw = powers.find(n);
    if (pw == powers.end()) pw = powers.emplace(n, int_pow(lambda, n)).first;
    if (c * pw->second != it->second) return false;
    ++it;
  }
  return true;
}

bool rescale_check(const FamilyInstance& inst, const BigRational& lambda) {
  return rescale_check(inst, lambda, rescale_exponents(inst.params));
}

MultiPoly add_horizontal(const MultiPoly& f, const std::vector<BigRational>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("add_horizontal needs k >= 1");
  MultiPoly s;
  for (std::size_t j = 0; j < coeffs.size(); ++j) s.add_term(coeffs[j], static_cast<std::uint32_t>(j), 0);
  s.add_term(1, static_cast<std::uint32_t>(coeffs.size()), 1);
  return substitute(f, MultiPoly::x(), s);
}

MultiPoly russell_polynomial() {
  const MultiPoly x = MultiPoly::x(), y = MultiPoly::y();
  const MultiPoly s = x * y + MultiPoly(1);
  const MultiPoly first = y.pow(2) * s.pow(4) + y * (s + x * y) * s + MultiPoly(1);
  const MultiPoly second = y * s.pow(5) + MultiPoly(2) * x * y * s.pow(2) + x;
  return first * second;
}

MultiPoly punctured_line_family(const std::vector<BigRational>& coeffs) {
  return add_horizontal(MultiPoly::x() + MultiPoly::y().pow(2), coeffs);
}

std::map<std::string, MultiPoly> fixtures() {
  return {{"russell", russell_polynomial()}, {"punctured_line_k1", punctured_line_family({BigRational(1)})}};
}

}  // namespace splicekit
