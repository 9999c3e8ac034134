#include "splicekit/plumbing.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace splicekit {

std::string to_string(Role r) {
  switch (r) {
    case Role::LInfty: return "l_infty";
    case Role::E: return "e";
    case Role::OneOne: return "one_one";
    case Role::OneZero: return "one_zero";
    case Role::Chain: return "chain";
    case Role::Tail: return "tail";
    case Role::Plain: return "plain";
  }
  return "plain";
}

Role role_from_string(const std::string& s) {
  for (Role r : {Role::LInfty, Role::E, Role::OneOne, Role::OneZero, Role::Chain, Role::Tail, Role::Plain})
    if (to_string(r) == s) return r;
  throw PlumbingError("unknown role: " + s);
}

int PlumbingGraph::add_vertex(std::int64_t weight, int arrows, Role role, int index) {
  if (arrows < 0) throw PlumbingError("negative arrow count");
  const int id = next_id_++;
  verts_[id] = Vertex{id, weight, arrows, role, index};
  adj_[id];
  return id;
}

void PlumbingGraph::insert_vertex(const Vertex& v) {
  if (has_vertex(v.id)) throw PlumbingError("duplicate vertex id " + std::to_string(v.id));
  if (v.arrows < 0) throw PlumbingError("negative arrow count");
  verts_[v.id] = v;
  adj_[v.id];
  next_id_ = std::max(next_id_, v.id + 1);
}

void PlumbingGraph::add_edge(int u, int v) {
  if (!has_vertex(u) || !has_vertex(v)) throw PlumbingError("edge endpoint missing");
  if (u == v) throw PlumbingError("self-loop");
  if (has_edge(u, v)) throw PlumbingError("duplicate edge");
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void PlumbingGraph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) throw PlumbingError("no such edge");
  adj_[u].erase(v);
  adj_[v].erase(u);
}

void PlumbingGraph::remove_vertex(int v) {
  if (!has_vertex(v)) throw PlumbingError("no such vertex");
  for (int w : adj_[v]) adj_[w].erase(v);
  adj_.erase(v);
  verts_.erase(v);
}

bool PlumbingGraph::has_edge(int u, int v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

const Vertex& PlumbingGraph::vertex(int v) const {
  auto it = verts_.find(v);
  if (it == verts_.end()) throw PlumbingError("no such vertex " + std::to_string(v));
  return it->second;
}

void PlumbingGraph::set_weight(int v, std::int64_t w) {
  if (!has_vertex(v)) throw PlumbingError("no such vertex");
  verts_[v].weight = w;
}

void PlumbingGraph::set_arrows(int v, int arrows) {
  if (!has_vertex(v)) throw PlumbingError("no such vertex");
  if (arrows < 0) throw PlumbingError("negative arrow count");
  verts_[v].arrows = arrows;
}

std::vector<int> PlumbingGraph::ids() const {
  std::vector<int> out;
  out.reserve(verts_.size());
  for (const auto& [id, _] : verts_) out.push_back(id);
  return out;
}

std::vector<int> PlumbingGraph::neighbors(int v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw PlumbingError("no such vertex");
  return {it->second.begin(), it->second.end()};
}

std::size_t PlumbingGraph::degree(int v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw PlumbingError("no such vertex");
  return it->second.size();
}

std::size_t PlumbingGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [_, nb] : adj_) twice += nb.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> PlumbingGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [u, nb] : adj_)
    for (int v : nb)
      if (u < v) out.emplace_back(u, v);
  return out;
}

int PlumbingGraph::total_arrows() const {
  int s = 0;
  for (const auto& [_, v] : verts_) s += v.arrows;
  return s;
}

std::vector<int> PlumbingGraph::component(int start, int removed) const {
  std::vector<int> out;
  if (!has_vertex(start) || start == removed) return out;
  std::set<int> seen{start};
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (int w : adj_.at(u))
      if (w != removed && seen.insert(w).second) stack.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PlumbingGraph::is_connected() const {
  if (verts_.empty()) return true;
  return component(verts_.begin()->first, -1).size() == verts_.size();
}

bool PlumbingGraph::is_tree() const {
  if (verts_.empty()) return false;
  return is_connected() && edge_count() + 1 == verts_.size();
}

bool PlumbingGraph::is_chain() const {
  if (!is_tree()) return false;
  for (const auto& [_, nb] : adj_)
    if (nb.size() > 2) return false;
  return true;
}

std::vector<int> PlumbingGraph::chain_order() const {
  if (!is_chain()) return {};
  int start = verts_.begin()->first;
  for (const auto& [id, nb] : adj_)
    if (nb.size() <= 1) {
      start = id;
      break;
    }
  std::vector<int> out{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int w : adj_.at(cur))
      if (w != prev) next = w;
    if (next < 0) break;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
  return out;
}

PlumbingGraph PlumbingGraph::induced(const std::vector<int>& keep) const {
  PlumbingGraph h;
  std::set<int> k(keep.begin(), keep.end());
  for (int v : k) h.insert_vertex(vertex(v));
  for (auto [u, v] : edges())
    if (k.count(u) && k.count(v)) h.add_edge(u, v);
  h.next_id_ = std::max(h.next_id_, next_id_);
  return h;
}

PlumbingGraph PlumbingGraph::without_arrows() const {
  PlumbingGraph h = *this;
  for (auto& [_, v] : h.verts_) v.arrows = 0;
  return h;
}

std::string PlumbingGraph::key() const {
  std::ostringstream os;
  for (const auto& [id, v] : verts_) os << id << ':' << v.weight << ':' << v.arrows << ';';
  os << '|';
  for (auto [u, v] : edges()) os << u << '-' << v << ';';
  return os.str();
}

bool PlumbingGraph::operator==(const PlumbingGraph& o) const {
  return verts_ == o.verts_ && adj_ == o.adj_;
}

PlumbingGraph blow_up(const PlumbingGraph& g, const Site& site, Role role, int index) {
  PlumbingGraph h = g;
  for (int v : site.ids)
    if (!g.has_vertex(v)) throw PlumbingError("unknown blow-up site");
  switch (site.kind) {
    case Site::Kind::Vertex: {
      if (site.ids.size() != 1) throw PlumbingError("vertex site needs one vertex");
      const int v = site.ids[0];
      const int e = h.add_vertex(-1, 0, role, index);
      h.set_weight(v, g.vertex(v).weight - 1);
      h.add_edge(v, e);
      break;
    }
    case Site::Kind::Edge:
    case Site::Kind::Point: {
      const auto& vs = site.ids;
      if (vs.size() < 2) throw PlumbingError("intersection site needs two curves");
      if (site.kind == Site::Kind::Edge && vs.size() != 2) throw PlumbingError("edge site needs two vertices");
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          if (!g.has_edge(vs[i], vs[j])) throw PlumbingError("unknown blow-up site");
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) h.remove_edge(vs[i], vs[j]);
      const int e = h.add_vertex(-1, 0, role, index);
      for (int v : vs) {
        h.set_weight(v, g.vertex(v).weight - 1);
        h.add_edge(v, e);
      }
      break;
    }
  }
  return h;
}

PlumbingGraph blow_down(const PlumbingGraph& g, int v) {
  const Vertex& x = g.vertex(v);
  if (x.weight != -1) throw PlumbingError("blow-down needs weight -1");
  if (x.arrows != 0) throw PlumbingError("blow-down of an arrowed vertex");
  const auto nb = g.neighbors(v);
  if (nb.size() > 2) throw PlumbingError("blow-down needs valency <= 2");
  if (nb.size() == 2 && g.has_edge(nb[0], nb[1])) throw PlumbingError("blow-down would create a double point");
  PlumbingGraph h = g;
  h.remove_vertex(v);
  for (int w : nb) h.set_weight(w, g.vertex(w).weight + 1);
  if (nb.size() == 2) h.add_edge(nb[0], nb[1]);
  return h;
}

std::string MorrowForm::str() const {
  std::ostringstream os;
  auto list = [&](const std::vector<std::int64_t>& xs) {
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << ']';
  };
  switch (kind) {
    case Kind::SinglePlusOne: os << "single_plus_one"; break;
    case Kind::ZeroL: os << "zero_l(" << l << ")"; break;
    case Kind::Balanced:
      os << "balanced(ls=";
      list(ls);
      os << ",n=" << n << ",ts=";
      list(ts);
      os << ")";
      break;
  }
  return os.str();
}

namespace {

std::string chain_key(const std::vector<std::int64_t>& c) {
  std::string k;
  for (auto w : c) k += std::to_string(w) + ",";
  return k;
}

bool contracts(const std::vector<std::int64_t>& c, std::unordered_set<std::string>& failed) {
  if (c.empty()) return true;
  const std::string k = chain_key(c);
  if (failed.count(k)) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != -1) continue;
    std::vector<std::int64_t> next;
    next.reserve(c.size() - 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j == i) continue;
      next.push_back(c[j] + ((j + 1 == i || j == i + 1) ? 1 : 0));
    }
    if (contracts(next, failed)) return true;
  }
  failed.insert(k);
  return false;
}

}  // namespace

bool contracts_completely(const std::vector<std::int64_t>& chain) {
  std::unordered_set<std::string> failed;
  return contracts(chain, failed);
}

std::optional<MorrowForm> morrow_from_chain(const std::vector<std::int64_t>& w) {
  MorrowForm f;
  if (w.size() == 1) {
    if (w[0] != 1) return std::nullopt;
    f.kind = MorrowForm::Kind::SinglePlusOne;
    return f;
  }
  if (w.size() == 2) {
    if (w[0] != 0 && w[1] != 0) return std::nullopt;
    f.kind = MorrowForm::Kind::ZeroL;
    f.l = w[0] == 0 ? w[1] : w[0];
    return f;
  }
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (w[i] != 0 || w[i - 1] + w[i + 1] != -1) continue;
    // the central (n,0,-n-1) collapses to one (-1) vertex
    std::vector<std::int64_t> replaced(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i - 1));
    replaced.push_back(-1);
    replaced.insert(replaced.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
    // The replaced chain must be negative definite and unimodular, so it
    // contracts to nothing; a single (+1) would leave two positive
    // eigenvalues, which no compactification of C^2 has.
    if (!contracts_completely(replaced)) continue;
    f.kind = MorrowForm::Kind::Balanced;
    f.n = w[i - 1];
    f.ls.assign(w.rbegin() + static_cast<std::ptrdiff_t>(w.size() - i + 1), w.rend());
    f.ts.assign(w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
    return f;
  }
  return std::nullopt;
}

std::optional<MorrowForm> is_morrow(const PlumbingGraph& g) {
  const auto order = g.chain_order();
  if (order.empty()) return std::nullopt;
  std::vector<std::int64_t> w;
  w.reserve(order.size());
  for (int v : order) w.push_back(g.vertex(v).weight);
  if (auto f = morrow_from_chain(w)) return f;
  std::reverse(w.begin(), w.end());
  return morrow_from_chain(w);
}

namespace {

constexpr std::size_t kReductionBudget = 200000;

struct Reducer {
  std::unordered_set<std::string> failed;
  std::vector<ReductionStep> steps;
  std::optional<ReductionTrace> found;
  PlumbingGraph stuck;
  bool have_stuck = false;
  std::size_t visited = 0;

  // Blow-downs are tried before accepting a Morrow form, so the trace ends at
  // the smallest Morrow configuration along the first successful branch.
  bool dfs(const PlumbingGraph& g) {
    const std::string k = g.key();
    if (failed.count(k)) return false;
    if (++visited > kReductionBudget) return false;
    bool moved = false;
    for (int v : g.ids()) {
      const Vertex& x = g.vertex(v);
      if (x.weight != -1 || x.arrows != 0) continue;
      const auto nb = g.neighbors(v);
      if (nb.size() > 2) continue;
      moved = true;
      steps.push_back({v, nb.size()});
      if (dfs(blow_down(g, v))) return true;
      steps.pop_back();
    }
    if (auto f = is_morrow(g)) {
      found = ReductionTrace{steps, *f, g};
      return true;
    }
    if (!moved && (!have_stuck || g.vertex_count() < stuck.vertex_count())) {
      stuck = g;
      have_stuck = true;
    }
    failed.insert(k);
    return false;
  }
};

}  // namespace

ReductionOutcome reduce_to_morrow(const PlumbingGraph& g, bool keep_arrowed) {
  ReductionOutcome out;
  PlumbingGraph work = keep_arrowed ? g : g.without_arrows();
  if (!work.is_tree()) {
    out.stuck = work;
    out.reason = "graph is not a tree";
    return out;
  }
  Reducer r;
  if (r.dfs(work)) {
    out.trace = std::move(r.found);
    return out;
  }
  out.stuck = r.have_stuck ? r.stuck : work;
  std::ostringstream os;
  if (r.visited > kReductionBudget) {
    os << "search budget exhausted";
  } else {
    os << "no blow-down sequence reaches a Morrow configuration; stuck at " << out.stuck.vertex_count()
       << " vertices";
  }
  out.reason = os.str();
  return out;
}

bool replay(const PlumbingGraph& g, const ReductionTrace& trace) {
  PlumbingGraph h = g.without_arrows();
  for (const auto& s : trace.steps) {
    if (!h.has_vertex(s.vertex) || h.degree(s.vertex) != s.valency) return false;
    h = blow_down(h, s.vertex);
  }
  auto f = is_morrow(h);
  return f && *f == trace.form && h == trace.final_graph.without_arrows();
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
  const auto ids = g.ids();
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = i;
  IntMatrix m(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) m(i, i) = static_cast<long>(g.vertex(ids[i]).weight);
  for (auto [u, v] : g.edges()) {
    m(pos[u], pos[v]) = 1;
    m(pos[v], pos[u]) = 1;
  }
  return m;
}

std::map<int, BigRational> fiber_multiplicities(const PlumbingGraph& g) {
  const auto ids = g.ids();
  RatVector rhs;
  rhs.reserve(ids.size());
  for (int v : ids) rhs.emplace_back(-g.vertex(v).arrows);
  const RatVector m = solve(intersection_matrix(g), rhs);
  std::map<int, BigRational> out;
  for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = m[i];
  return out;
}

ArrowLinking arrow_linking_matrix(const PlumbingGraph& g) {
  const auto ids = g.ids();
  const RatMatrix inv = inverse(intersection_matrix(g));
  std::vector<std::size_t> rows;
  ArrowLinking out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Vertex& v = g.vertex(ids[i]);
    for (int s = 0; s < v.arrows; ++s) {
      out.arrows.push_back({v.id, s, v.role, v.index});
      rows.push_back(i);
    }
  }
  const std::size_t n = rows.size();
  out.matrix.assign(n, RatVector(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.matrix[a][b] = -inv[rows[a]][rows[b]];
  return out;
}

}  // namespace splicekit
