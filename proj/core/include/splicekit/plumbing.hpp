#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "splicekit/arith.hpp"

namespace splicekit {

enum class Role { LInfty, E, OneOne, OneZero, Chain, Tail, Plain };

std::string to_string(Role r);
Role role_from_string(const std::string& s);

struct Vertex {
  int id = 0;
  std::int64_t weight = 0;
  int arrows = 0;
  Role role = Role::Plain;
  int index = 0;  // i of OneZero(i); position along a chain or tail otherwise

  bool operator==(const Vertex&) const = default;
};

class PlumbingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Weighted graph with arrowheads. Intermediate configurations may contain
// cycles; divisor graphs proper are trees (see is_tree).
class PlumbingGraph {
 public:
  int add_vertex(std::int64_t weight, int arrows = 0, Role role = Role::Plain, int index = 0);
  void insert_vertex(const Vertex& v);
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void remove_vertex(int v);

  bool has_vertex(int v) const { return verts_.count(v) != 0; }
  bool has_edge(int u, int v) const;
  const Vertex& vertex(int v) const;
  void set_weight(int v, std::int64_t w);
  void set_arrows(int v, int arrows);

  std::vector<int> ids() const;
  std::vector<int> neighbors(int v) const;
  std::size_t degree(int v) const;
  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  int total_arrows() const;
  int newest() const { return next_id_ - 1; }

  bool is_connected() const;
  bool is_tree() const;
  bool is_chain() const;
  // Vertex ids along a chain from one end; empty if not a chain.
  std::vector<int> chain_order() const;
  // Component of `start` once `removed` is deleted.
  std::vector<int> component(int start, int removed) const;
  PlumbingGraph induced(const std::vector<int>& keep) const;
  PlumbingGraph without_arrows() const;

  // Serialization of weights, arrows and edges keyed by id.
  std::string key() const;

  bool operator==(const PlumbingGraph& o) const;

 private:
  std::map<int, Vertex> verts_;
  std::map<int, std::set<int>> adj_;
  int next_id_ = 0;
};

struct Site {
  enum class Kind { Vertex, Edge, Point };
  Kind kind = Kind::Vertex;
  std::vector<int> ids;

  static Site at_vertex(int v) { return {Kind::Vertex, {v}}; }
  static Site at_edge(int u, int v) { return {Kind::Edge, {u, v}}; }
  // A point where the listed curves meet pairwise.
  static Site at_point(std::vector<int> vs) { return {Kind::Point, std::move(vs)}; }
};

// The created (-1) vertex is g.newest() of the result.
PlumbingGraph blow_up(const PlumbingGraph& g, const Site& site, Role role = Role::Plain, int index = 0);
PlumbingGraph blow_down(const PlumbingGraph& g, int v);

struct MorrowForm {
  enum class Kind { SinglePlusOne, ZeroL, Balanced };
  Kind kind = Kind::SinglePlusOne;
  std::int64_t l = 0;
  std::vector<std::int64_t> ls;  // l_1..l_m, l_1 adjacent to n
  std::int64_t n = 0;
  std::vector<std::int64_t> ts;  // t_1..t_k, t_1 adjacent to -n-1

  std::string str() const;
  bool operator==(const MorrowForm&) const = default;
};

// True when some sequence of blow-downs removes every vertex of the chain.
bool contracts_completely(const std::vector<std::int64_t>& chain);

std::optional<MorrowForm> is_morrow(const PlumbingGraph& g);
std::optional<MorrowForm> morrow_from_chain(const std::vector<std::int64_t>& weights);

struct ReductionStep {
  int vertex = 0;
  std::size_t valency = 0;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  MorrowForm form;
  PlumbingGraph final_graph;
};

struct ReductionOutcome {
  std::optional<ReductionTrace> trace;
  PlumbingGraph stuck;  // smallest configuration reached on failure
  std::string reason;

  bool ok() const { return trace.has_value(); }
};

// Depth-first search over blow-down orders. Arrowheads are dropped before
// reducing unless keep_arrowed is set, in which case arrowed vertices are
// never blown down.
ReductionOutcome reduce_to_morrow(const PlumbingGraph& g, bool keep_arrowed = false);

// Replays a trace from g; true when it ends at the recorded Morrow form.
bool replay(const PlumbingGraph& g, const ReductionTrace& trace);

// Rows and columns follow g.ids().
IntMatrix intersection_matrix(const PlumbingGraph& g);

// m = -A^{-1} a keyed by vertex id, with a_v the arrow count at v.
std::map<int, BigRational> fiber_multiplicities(const PlumbingGraph& g);

struct ArrowRef {
  int vertex = 0;
  int slot = 0;  // which arrowhead of the vertex
  Role role = Role::Plain;
  int index = 0;

  bool operator==(const ArrowRef&) const = default;
};

struct ArrowLinking {
  std::vector<ArrowRef> arrows;
  RatMatrix matrix;  // -(A^{-1})_{v,w}; diagonal entries use v = w
};

ArrowLinking arrow_linking_matrix(const PlumbingGraph& g);

}  // namespace splicekit
