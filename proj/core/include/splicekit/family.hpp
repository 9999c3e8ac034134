#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splicekit/params.hpp"
#include "splicekit/poly.hpp"

namespace splicekit {

struct FamilyInstance {
  SimpleTypeParams params;
  std::vector<BigRational> alphas;  // alpha_0..alpha_{k-1}
  std::vector<BigRational> betas;   // beta_1..beta_{r-1}
  std::vector<BigRational> hcoeffs; // h(x), lowest degree first; F3 only
};

// Empty when the instance is valid; includes validate(params).
std::vector<std::string> validate_instance(const FamilyInstance& inst);

struct FamilyPolys {
  MultiPoly s, f, g;
};

FamilyPolys build_family(const FamilyInstance& inst);

// Degree predicted by the closed forms: A(Q+q)+P+p, or A+1 for F3.
std::int64_t predicted_degree(const SimpleTypeParams& params);
bool degree_check(const FamilyInstance& inst);
bool degree_check(const FamilyInstance& inst, const FamilyPolys& polys);

enum class SampleStatus { Reconstructed, Mismatch, Degenerate };

struct SampleResult {
  SampleStatus status = SampleStatus::Degenerate;
  BigRational x, y;  // reconstruction, when not degenerate
  std::string note;
};

// Rebuilds the point from (t, u) = (f, g) through the inverse exponent matrix.
SampleResult fiber_inverse_sample(const FamilyInstance& inst, const FamilyPolys& polys, const BigRational& x,
                                  const BigRational& y);
bool fiber_inverse_check(const FamilyInstance& inst, const BigRational& x, const BigRational& y);

struct IrregularValues {
  bool applicable = true;
  std::vector<BigRational> values;  // distinct, in rule order
  std::optional<BigRational> extra;
  bool non_generic = false;
  std::vector<std::string> notes;
};

IrregularValues irregular_values(const FamilyInstance& inst);

// alpha_j scaling exponents making f_lambda a member of the family.
std::vector<std::int64_t> rescale_exponents(const SimpleTypeParams& params);
// The exponents j*B + A - 1 in their literal closed form.
std::vector<std::int64_t> rescale_exponents_literal(const SimpleTypeParams& params);

FamilyInstance rescaled_instance(const FamilyInstance& inst, const BigRational& lambda,
                                 const std::vector<std::int64_t>& exponents);
// lambda^{-1} f(lambda^B x, lambda^{-C} y) against the rescaled instance.
bool rescale_check(const FamilyInstance& inst, const BigRational& lambda);
bool rescale_check(const FamilyInstance& inst, const BigRational& lambda, const std::vector<std::int64_t>& exponents);

// f(x, a_0 + a_1 x + ... + a_{k-1} x^{k-1} + x^k y) with k = coeffs.size().
MultiPoly add_horizontal(const MultiPoly& f, const std::vector<BigRational>& coeffs);

MultiPoly russell_polynomial();
// x + (a_0 + ... + a_{k-1} x^{k-1} + x^k y)^2
MultiPoly punctured_line_family(const std::vector<BigRational>& coeffs);
std::map<std::string, MultiPoly> fixtures();

}  // namespace splicekit
