#pragma once

#include <nlohmann/json.hpp>

#include "splicekit/family.hpp"
#include "splicekit/fibres.hpp"
#include "splicekit/monodromy.hpp"
#include "splicekit/params.hpp"
#include "splicekit/plumbing.hpp"
#include "splicekit/splice.hpp"
#include "splicekit/verify.hpp"

namespace splicekit::cli {

using json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings; plain integers are accepted on input.
json rational_json(const BigRational& x);
BigRational rational_from(const json& j);
// Machine integers when they fit, decimal strings otherwise.
json bigint_json(const BigInt& x);
BigInt bigint_from(const json& j);

json to_json(const SimpleTypeParams& x);
SimpleTypeParams params_from(const json& j);

json to_json(const FamilyInstance& inst);
FamilyInstance instance_from(const json& j);

json to_json(const DerivedInvariants& d);
DerivedInvariants invariants_from(const json& j);

json to_json(const NormalFormDescriptor& n);
NormalFormDescriptor normal_form_from(const json& j);

json to_json(const PlumbingGraph& g);
PlumbingGraph plumbing_from(const json& j);

json to_json(const SpliceDiagram& d);
SpliceDiagram splice_from(const json& j);

json to_json(const FamilyPolys& p);
FamilyPolys polys_from(const json& j);

json to_json(const IrregularValues& iv);
IrregularValues irregular_from(const json& j);

json to_json(const FibreTopology& f);
FibreTopology fibre_from(const json& j);

json to_json(const BraidWord& w);
BraidWord braid_from(const json& j, int strands);

json to_json(const PropertyResult& r);
PropertyResult property_from(const json& j);

using splicekit::to_string;
std::string to_string(FamilyCase c);
FamilyCase family_case_from(const std::string& s);

}  // namespace splicekit::cli
