#include "splicekit_cli/dot.hpp"

#include <sstream>

namespace splicekit::cli {

std::string plumbing_dot(const PlumbingGraph& g) {
  std::ostringstream os;
  os << "graph plumbing {\n  node [shape=circle];\n";
  for (int id : g.ids()) {
    const auto& v = g.vertex(id);
    os << "  v" << id << " [label=\"" << id << ":" << v.weight << "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
  for (int id : g.ids())
    for (int s = 0; s < g.vertex(id).arrows; ++s) {
      os << "  t" << id << "_" << s << " [shape=point, style=invis];\n";
      os << "  v" << id << " -- t" << id << "_" << s << " [dir=forward, arrowhead=normal];\n";
    }
  os << "}\n";
  return os.str();
}

namespace {

std::string w(const std::optional<BigInt>& x) { return x ? x->get_str() : ""; }

}  // namespace

std::string splice_dot(const SpliceDiagram& d) {
  std::ostringstream os;
  os << "graph splice {\n  node [shape=circle, label=\"\"];\n";
  for (const auto& v : d.vertices()) {
    os << "  s" << v.id;
    switch (v.kind) {
      case SpliceKind::Node: os << " [shape=circle, width=0.15];\n"; break;
      case SpliceKind::Leaf: os << " [shape=point];\n"; break;
      case SpliceKind::Arrow: os << " [shape=point, style=invis];\n"; break;
      case SpliceKind::Marked: os << " [shape=circle, width=0.15, style=filled, fillcolor=black];\n"; break;
    }
  }
  for (const auto& e : d.edges()) {
    const bool arrow = d.vertex(e.v).kind == SpliceKind::Arrow;
    os << "  s" << e.u << " -- s" << e.v << " [";
    if (arrow) os << "dir=forward, arrowhead=normal, ";
    os << "label=\"" << w(e.wu) << "/" << w(e.wv) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace splicekit::cli
