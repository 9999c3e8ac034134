#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splicekit/family.hpp"
#include "splicekit/plumbing.hpp"
#include "splicekit/splice.hpp"

namespace splicekit {

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string to_string(CheckStatus s);

struct PropertyResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;

  bool operator==(const PropertyResult&) const = default;
};

struct CheckOptions {
  int samples = 50;             // non-degenerate fibre-inverse samples required
  int max_sample_attempts = 2000;
  std::uint64_t seed = 0;
  std::vector<BigRational> lambdas{BigRational(-1), BigRational(2), BigRational(3, 2)};
  bool polynomials = true;      // degree, fibre inverse and rescaling
  bool realization = true;
};

// Graph-level properties, each taking the representation it inspects so that
// externally supplied (possibly edited) data can be checked.
PropertyResult check_morrow(const PlumbingGraph& g);
PropertyResult check_unimodular(const PlumbingGraph& g);
PropertyResult check_cf_identity(const SimpleTypeParams& params);
PropertyResult check_zero_total_linking(const SimpleTypeParams& params, const PlumbingGraph& g,
                                        const SpliceDiagram& d);
PropertyResult check_linking_oracle(const PlumbingGraph& g, const SpliceDiagram& d);
PropertyResult check_edge_determinants(const SpliceDiagram& d);
PropertyResult check_side_landing(const SimpleTypeParams& params);
PropertyResult check_realization(const SimpleTypeParams& params, const PlumbingGraph& g);
PropertyResult check_normal_form(const SimpleTypeParams& params);
// Closed forms, and for F1 the diagram weights read off g.
PropertyResult check_invariants(const SimpleTypeParams& params, const DerivedInvariants& claimed,
                                const PlumbingGraph& g);

PropertyResult check_degree(const FamilyInstance& inst, const FamilyPolys& polys);
PropertyResult check_fibre_inverse(const FamilyInstance& inst, const FamilyPolys& polys, const CheckOptions& opt);
PropertyResult check_rescaling(const FamilyInstance& inst, const CheckOptions& opt);
PropertyResult check_suzuki(const SimpleTypeParams& params);
PropertyResult check_monodromy(const SimpleTypeParams& params);

// Every property on freshly built representations, in a fixed order.
std::vector<PropertyResult> verify_instance(const FamilyInstance& inst, const CheckOptions& opt = {});

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace splicekit
