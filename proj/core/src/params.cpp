#include "splicekit/params.hpp"

#include <numeric>
#include <stdexcept>

namespace splicekit {

std::string to_string(Family f) {
  switch (f) {
    case Family::F1: return "f1";
    case Family::F2: return "f2";
    case Family::F3: return "f3";
  }
  return "f1";
}

Family family_from_string(const std::string& s) {
  if (s == "f1" || s == "F1") return Family::F1;
  if (s == "f2" || s == "F2") return Family::F2;
  if (s == "f3" || s == "F3") return Family::F3;
  throw std::invalid_argument("unknown family: " + s);
}

std::vector<std::string> validate(const SimpleTypeParams& x) {
  std::vector<std::string> errs;
  if (x.family != Family::F3) {
    const bool positive = x.P > 0 && x.Q > 0 && x.p > 0 && x.q > 0;
    if (!positive) errs.push_back("P, Q, p, q must be positive");
    if (positive && x.P * x.q - x.p * x.Q != 1)
      errs.push_back("Pq-pQ = " + std::to_string(x.P * x.q - x.p * x.Q) + " != 1");
  }
  if (x.family == Family::F1 && x.r() < 2) errs.push_back("r >= 2 required (a must be nonempty)");
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] < 1) errs.push_back("a_" + std::to_string(i + 1) + " must be >= 1");
  return errs;
}

std::int64_t k_of(const SimpleTypeParams& x) {
  if (x.family == Family::F3) return 0;
  return std::max(x.Q / x.q, x.p / x.P);
}

FamilyCase case_of(const SimpleTypeParams& x) {
  if (x.family == Family::F3) return FamilyCase::None;
  const std::int64_t k = k_of(x);
  const bool c1 = x.p / x.P == k;
  const bool c2 = x.Q / x.q == k;
  if (c1 && c2) throw std::logic_error("both cases apply");
  return c1 ? FamilyCase::Case1 : FamilyCase::Case2;
}

DerivedInvariants derive_invariants(const SimpleTypeParams& x) {
  const auto errs = validate(x);
  if (!errs.empty()) throw std::invalid_argument(errs.front());
  DerivedInvariants d;
  d.A = std::accumulate(x.a.begin(), x.a.end(), std::int64_t{0});
  const int r = x.r();
  if (x.family == Family::F3) {
    d.degree = d.A + 1;
    d.delta = r;
    return d;
  }
  d.B = d.A * x.Q + x.P - x.Q;
  d.C = d.A * x.q + x.p - x.q;
  for (auto ai : x.a) d.b.push_back(x.q * x.Q * ai + 1);
  d.k = k_of(x);
  d.degree = d.A * (x.Q + x.q) + x.P + x.p;
  d.delta = x.family == Family::F1 ? r + 2 : r + 1;
  d.moduli_dimension = r + d.k - 2;
  d.which = case_of(x);
  return d;
}

NormalFormDescriptor normal_form(const SimpleTypeParams& x) {
  const auto errs = validate(x);
  if (!errs.empty()) throw std::invalid_argument(errs.front());
  NormalFormDescriptor n;
  if (x.family == Family::F3) {
    n.form = NormalFormDescriptor::Form::f3;
    n.h_degree_bound = std::accumulate(x.a.begin(), x.a.end(), std::int64_t{0});
    n.inner_shape = "y*prod(x-beta_i)^a_i + h(x)";
    return n;
  }
  n.form = x.family == Family::F1 ? NormalFormDescriptor::Form::f1 : NormalFormDescriptor::Form::f2;
  n.k = k_of(x);
  n.which = case_of(x);
  if (n.which == FamilyCase::Case1) {
    n.q1 = x.q - x.Q * n.k;
    n.p1 = x.p - x.P * n.k;
    n.q = x.Q;
    n.p = x.P;
  } else {
    n.variables_exchanged = true;
    n.q1 = x.Q - x.q * n.k;
    n.p1 = x.P - x.p * n.k;
    n.q = x.q;
    n.p = x.p;
  }
  n.inner_shape = "s = y*x^" + std::to_string(n.k) + " + (terms of degree < " + std::to_string(n.k) + " in x)";
  return n;
}

NormalFormCheck check_normal_form(const NormalFormDescriptor& n) {
  NormalFormCheck c;
  if (n.form == NormalFormDescriptor::Form::f3) return c;
  auto fail = [&](std::string msg) {
    c.ok = false;
    c.notes.push_back(std::move(msg));
  };
  if (n.q1 < 0 || n.q1 > n.q) fail("q1 out of range");
  if (n.p1 < 0 || n.p1 > n.p) fail("p1 out of range");
  const auto d = n.p * n.q1 - n.p1 * n.q;
  if (d != 1 && d != -1) fail("exponent determinant " + std::to_string(d) + " is not +-1");
  if (n.k < 1) fail("k must be positive");
  if (c.ok && (n.q1 == n.q || n.p1 == n.p)) {
    c.boundary = true;
    c.notes.push_back(n.q1 == n.q ? "q1 = q" : "p1 = p");
  }
  return c;
}

}  // namespace splicekit
