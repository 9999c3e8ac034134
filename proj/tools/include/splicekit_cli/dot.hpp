#pragma once

#include <string>

#include "splicekit/plumbing.hpp"
#include "splicekit/splice.hpp"

namespace splicekit::cli {

// Nodes "v<id>" labelled "id:weight" in id order; each arrowhead becomes an
// edge to an unlabelled terminal "t<id>_<slot>".
std::string plumbing_dot(const PlumbingGraph& g);

// Edges labelled "near/far" from the u end; Marked vertices filled.
std::string splice_dot(const SpliceDiagram& d);

}  // namespace splicekit::cli
