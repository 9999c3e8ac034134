#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splicekit/family.hpp"
#include "splicekit/params.hpp"

namespace splicekit {

// C(n): the affine line with n punctures; C* is C(1).
struct FibreComponent {
  std::int64_t punctures = 0;
  bool operator==(const FibreComponent&) const = default;
};

enum class Gluing { AllDisjoint, NormalCrossing };
enum class Locus { Generic, Special, Unknown };

std::string to_string(Gluing g);
std::string to_string(Locus l);

// With NormalCrossing the last two components meet in one point and the
// rest stay disjoint.
struct FibreTopology {
  int index = 0;            // 1..r+1
  std::string value_tag;    // "beta_i", "zero" or "extra"
  std::optional<BigRational> value;
  std::vector<FibreComponent> components;
  Gluing gluing = Gluing::AllDisjoint;
  bool reduced = true;
  Locus locus = Locus::Generic;
  std::vector<std::string> warnings;

  std::string str() const;
  std::int64_t euler_characteristic() const;
  bool operator==(const FibreTopology&) const = default;
};

// The pair (a, k) with {P/Q, q/p} = {1/a, (ak+1)/k}; only when P = 1 or q = 1.
std::optional<std::pair<std::int64_t, std::int64_t>> extra_fibre_pair(const SimpleTypeParams& params);

std::vector<FibreTopology> classify_irregular_fibres(const SimpleTypeParams& params, Locus locus = Locus::Generic);
// Same, with values attached from irregular_values.
std::vector<FibreTopology> classify_irregular_fibres(const FamilyInstance& inst, Locus locus = Locus::Generic);

// sum (components - 1) == delta - 1 with delta = r + 2.
bool suzuki_check(const SimpleTypeParams& params, Locus locus = Locus::Generic);
// 1 = chi(C(r+1)) (1 - #fibres) + sum chi(fibre).
bool euler_check(const SimpleTypeParams& params, Locus locus = Locus::Generic);

}  // namespace splicekit
