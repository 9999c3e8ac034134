#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splicekit/arith.hpp"
#include "splicekit/params.hpp"
#include "splicekit/plumbing.hpp"

namespace splicekit {

enum class SpliceKind { Node, Leaf, Arrow, Marked };

std::string to_string(SpliceKind k);

struct SpliceVertex {
  int id = 0;
  SpliceKind kind = SpliceKind::Node;
  Role role = Role::Plain;
  int index = 0;
  int source = -1;  // plumbing vertex id, when extracted from a graph
};

struct SpliceEdge {
  int u = 0, v = 0;
  std::optional<BigInt> wu, wv;  // near weights at the u and v ends
};

class SpliceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SpliceDiagram {
 public:
  int add_vertex(SpliceKind kind, Role role = Role::Plain, int index = 0, int source = -1);
  // Arrow vertex hanging off v with near weight 1 at v.
  int add_arrow(int v, Role role, int index);
  void add_edge(int u, int v, std::optional<BigInt> wu, std::optional<BigInt> wv);

  const std::vector<SpliceVertex>& vertices() const { return verts_; }
  const std::vector<SpliceEdge>& edges() const { return edges_; }
  const SpliceVertex& vertex(int v) const;
  std::vector<int> neighbors(int v) const;
  std::size_t valency(int v) const { return incident_.at(static_cast<std::size_t>(v)).size(); }
  const std::vector<std::size_t>& incident(int v) const { return incident_.at(static_cast<std::size_t>(v)); }
  std::optional<std::size_t> edge_between(int u, int v) const;
  // Near weight at v on the edge toward w.
  BigInt weight(int v, int w) const;

  std::vector<int> arrows() const;
  std::vector<int> nodes() const;  // non-leaf, non-arrow vertices
  int carrier(int arrow) const;
  // First non-arrow vertex with this role and index.
  std::optional<int> find(Role role, int index = 0) const;
  std::vector<int> path(int from, int to) const;
  bool is_tree() const;

  // Removes valency-2 non-arrow vertices, joining their edges.
  SpliceDiagram smoothed() const;
  // Isomorphism-invariant text form of the weighted tree.
  std::string canonical() const;

 private:
  std::vector<SpliceVertex> verts_;
  std::vector<SpliceEdge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

// Reference splice diagram of the family with closed-form weights.
SpliceDiagram build_splice(const SimpleTypeParams& params);

// Divisor graph of the family, assembled from continued-fraction chains.
PlumbingGraph build_plumbing(const SimpleTypeParams& params);

// det(-A) of the branch through `toward` once `from` is removed.
BigInt branch_weight(const PlumbingGraph& g, int from, int toward);

// Requires |det A| = 1.
SpliceDiagram splice_from_plumbing(const PlumbingGraph& g);

BigInt edge_determinant(const SpliceDiagram& d, int v, int w);

BigInt splice_linking(const SpliceDiagram& d, int alpha, int beta);
// Sum over all arrows of the linking with the virtual component at v; an
// arrow vertex is represented by the vertex carrying it.
BigInt total_linking(const SpliceDiagram& d, int v);

}  // namespace splicekit
