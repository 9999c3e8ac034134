#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splicekit/sweep.hpp"
#include "splicekit_cli/json_io.hpp"

namespace splicekit::cli {

// Every representation of one instance together with its verification report.
struct Bundle {
  FamilyInstance instance;
  DerivedInvariants invariants;
  NormalFormDescriptor normal_form;
  PlumbingGraph plumbing;
  SpliceDiagram splice;
  FamilyPolys polys;
  IrregularValues irregular;
  std::vector<FibreTopology> fibres;           // F1 only
  std::vector<BraidWord> local_monodromies;    // F1 only
  std::optional<BraidWord> h_infinity;
  std::vector<PropertyResult> report;
};

json to_json(const Bundle& b);
Bundle bundle_from(const json& j);
bool operator==(const Bundle& a, const Bundle& b);

// Builds every representation without verifying.
Bundle assemble(const FamilyInstance& inst);

// Checks the representations stored in b, recomputing only what they are
// compared against.
std::vector<PropertyResult> verify_bundle(const Bundle& b, const CheckOptions& opt = {});

// Fixture checks for named polynomials outside the classification.
std::vector<PropertyResult> verify_fixture(const std::string& name);

struct SweepOptions {
  std::size_t count = 200;
  std::uint64_t seed = 42;
  SweepBounds bounds;
  std::optional<Family> family;  // all three in turn when unset
  unsigned threads = 0;          // 0: hardware concurrency
  int samples = 50;
};

struct SweepReport {
  json body;
  bool passed = true;
};

// Report order follows the instance index whatever the thread schedule.
SweepReport run_sweep(const SweepOptions& opt);

}  // namespace splicekit::cli
