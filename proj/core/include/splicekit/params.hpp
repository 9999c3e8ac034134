#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace splicekit {

// F1 non-isotrivial; F2 isotrivial with a vertical curve; F3 isotrivial without.
enum class Family { F1, F2, F3 };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct SimpleTypeParams {
  Family family = Family::F1;
  std::int64_t P = 0, Q = 0, p = 0, q = 0;  // unused by F3
  std::vector<std::int64_t> a;              // a_1..a_{r-1}

  int r() const { return static_cast<int>(a.size()) + 1; }
  bool operator==(const SimpleTypeParams&) const = default;
};

// Empty when params are valid; one message per violated constraint.
std::vector<std::string> validate(const SimpleTypeParams& params);

// Case 1: k <= p/P < k+1. Case 2: k <= Q/q < k+1.
enum class FamilyCase { Case1, Case2, None };

struct DerivedInvariants {
  std::int64_t A = 0, B = 0, C = 0;
  std::vector<std::int64_t> b;
  std::int64_t k = 0;
  std::int64_t degree = 0;
  int delta = 0;
  std::int64_t moduli_dimension = 0;  // r+k-2; metadata only
  FamilyCase which = FamilyCase::None;
};

DerivedInvariants derive_invariants(const SimpleTypeParams& params);

std::int64_t k_of(const SimpleTypeParams& params);
FamilyCase case_of(const SimpleTypeParams& params);

struct NormalFormDescriptor {
  enum class Form { f1, f2, f3 };
  Form form = Form::f1;
  FamilyCase which = FamilyCase::None;
  bool variables_exchanged = false;
  std::int64_t q1 = 0, p1 = 0, q = 0, p = 0;
  std::int64_t k = 0;
  std::int64_t h_degree_bound = 0;  // f3: deg h < A
  std::string inner_shape;
};

NormalFormDescriptor normal_form(const SimpleTypeParams& params);

// 0 <= q1 <= q, 0 <= p1 <= p and |p q1 - p1 q| = 1; boundary is set when
// q1 = q or p1 = p, which the renaming produces for some valid inputs.
struct NormalFormCheck {
  bool ok = true;
  bool boundary = false;
  std::vector<std::string> notes;
};

NormalFormCheck check_normal_form(const NormalFormDescriptor& n);

}  // namespace splicekit
