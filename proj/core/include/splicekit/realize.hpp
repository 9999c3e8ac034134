#pragma once

#include <string>
#include <vector>

#include "splicekit/params.hpp"
#include "splicekit/plumbing.hpp"

namespace splicekit {

// Side of the separating chain that receives the non-separating sequence:
// Left is the (Q,-q) branch, Right the (p,-P) branch.
enum class ChainSide { Left, Right, None };

struct Realization {
  PlumbingGraph graph;  // divisor once the cutting curves are discarded
  int blowups = 0;
  int cutting = 0;
  ChainSide side = ChainSide::None;
  std::int64_t k = 0;
  bool on_horizontal = false;  // non-separating blow-ups started on a horizontal curve
  std::vector<Site> sites;
};

// Choices of the separating sequence, one letter per blow-up after the first:
// 'L' when the target exceeds the current mediant, 'R' otherwise.
std::string stern_brocot_path(const BigRational& v);

// Builds the divisor by explicit blow-ups of the initial line configuration.
Realization realize(const SimpleTypeParams& params);

// Isomorphism-invariant text form of a weighted tree with arrows.
std::string canonical_form(const PlumbingGraph& g);

}  // namespace splicekit
