#include "splicekit/splice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace splicekit {

std::string to_string(SpliceKind k) {
  switch (k) {
    case SpliceKind::Node: return "node";
    case SpliceKind::Leaf: return "leaf";
    case SpliceKind::Arrow: return "arrow";
    case SpliceKind::Marked: return "marked";
  }
  return "node";
}

int SpliceDiagram::add_vertex(SpliceKind kind, Role role, int index, int source) {
  const int id = static_cast<int>(verts_.size());
  verts_.push_back({id, kind, role, index, source});
  incident_.emplace_back();
  return id;
}

int SpliceDiagram::add_arrow(int v, Role role, int index) {
  const int source = vertex(v).source;
  const int a = add_vertex(SpliceKind::Arrow, role, index, source);
  add_edge(v, a, BigInt(1), std::nullopt);
  return a;
}

void SpliceDiagram::add_edge(int u, int v, std::optional<BigInt> wu, std::optional<BigInt> wv) {
  if (u == v) throw SpliceError("self-loop");
  vertex(u);
  vertex(v);
  edges_.push_back({u, v, std::move(wu), std::move(wv)});
  incident_[static_cast<std::size_t>(u)].push_back(edges_.size() - 1);
  incident_[static_cast<std::size_t>(v)].push_back(edges_.size() - 1);
}

const SpliceVertex& SpliceDiagram::vertex(int v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= verts_.size()) throw SpliceError("no such splice vertex");
  return verts_[static_cast<std::size_t>(v)];
}

std::vector<int> SpliceDiagram::neighbors(int v) const {
  std::vector<int> out;
  for (auto e : incident(v)) out.push_back(edges_[e].u == v ? edges_[e].v : edges_[e].u);
  return out;
}

std::optional<std::size_t> SpliceDiagram::edge_between(int u, int v) const {
  for (auto e : incident(u))
    if ((edges_[e].u == u && edges_[e].v == v) || (edges_[e].v == u && edges_[e].u == v)) return e;
  return std::nullopt;
}

BigInt SpliceDiagram::weight(int v, int w) const {
  const auto e = edge_between(v, w);
  if (!e) throw SpliceError("vertices are not adjacent");
  const auto& edge = edges_[*e];
  const auto& wt = edge.u == v ? edge.wu : edge.wv;
  if (!wt) throw SpliceError("missing near weight");
  return *wt;
}

std::vector<int> SpliceDiagram::arrows() const {
  std::vector<int> out;
  for (const auto& v : verts_)
    if (v.kind == SpliceKind::Arrow) out.push_back(v.id);
  return out;
}

std::vector<int> SpliceDiagram::nodes() const {
  std::vector<int> out;
  for (const auto& v : verts_)
    if (v.kind == SpliceKind::Node || v.kind == SpliceKind::Marked) out.push_back(v.id);
  return out;
}

int SpliceDiagram::carrier(int arrow) const {
  if (vertex(arrow).kind != SpliceKind::Arrow) throw SpliceError("not an arrow");
  return neighbors(arrow).at(0);
}

std::optional<int> SpliceDiagram::find(Role role, int index) const {
  for (const auto& v : verts_)
    if (v.kind != SpliceKind::Arrow && v.kind != SpliceKind::Leaf && v.role == role && v.index == index)
      return v.id;
  return std::nullopt;
}

std::vector<int> SpliceDiagram::path(int from, int to) const {
  std::vector<int> parent(verts_.size(), -2);
  std::vector<int> queue{from};
  parent[static_cast<std::size_t>(from)] = -1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    if (u == to) break;
    for (int w : neighbors(u))
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
  }
  if (parent[static_cast<std::size_t>(to)] == -2) throw SpliceError("vertices are not connected");
  std::vector<int> out;
  for (int v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) out.push_back(v);
  std::reverse(out.begin(), out.end());
  return out;
}

bool SpliceDiagram::is_tree() const {
  if (verts_.empty() || edges_.size() + 1 != verts_.size()) return false;
  std::vector<bool> seen(verts_.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    ++count;
    for (int w : neighbors(u))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
  }
  return count == verts_.size();
}

SpliceDiagram SpliceDiagram::smoothed() const {
  std::vector<SpliceEdge> es = edges_;
  std::vector<bool> edge_alive(es.size(), true), alive(verts_.size(), true);
  std::vector<std::vector<std::size_t>> inc = incident_;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& v : verts_) {
      if (!alive[static_cast<std::size_t>(v.id)]) continue;
      if (v.kind != SpliceKind::Node && v.kind != SpliceKind::Marked) continue;
      auto& mine = inc[static_cast<std::size_t>(v.id)];
      if (mine.size() != 2) continue;
      const SpliceEdge e1 = es[mine[0]], e2 = es[mine[1]];
      const int a = e1.u == v.id ? e1.v : e1.u;
      const int b = e2.u == v.id ? e2.v : e2.u;
      const auto wa = e1.u == a ? e1.wu : e1.wv;
      const auto wb = e2.u == b ? e2.wu : e2.wv;
      for (auto idx : mine) {
        edge_alive[idx] = false;
        for (int end : {es[idx].u, es[idx].v}) {
          auto& l = inc[static_cast<std::size_t>(end)];
          if (end != v.id) l.erase(std::remove(l.begin(), l.end(), idx), l.end());
        }
      }
      mine.clear();
      alive[static_cast<std::size_t>(v.id)] = false;
      es.push_back({a, b, wa, wb});
      edge_alive.push_back(true);
      inc[static_cast<std::size_t>(a)].push_back(es.size() - 1);
      inc[static_cast<std::size_t>(b)].push_back(es.size() - 1);
      changed = true;
    }
  }
  SpliceDiagram out;
  std::vector<int> remap(verts_.size(), -1);
  for (const auto& v : verts_)
    if (alive[static_cast<std::size_t>(v.id)])
      remap[static_cast<std::size_t>(v.id)] = out.add_vertex(v.kind, v.role, v.index, v.source);
  for (std::size_t i = 0; i < es.size(); ++i)
    if (edge_alive[i])
      out.add_edge(remap[static_cast<std::size_t>(es[i].u)], remap[static_cast<std::size_t>(es[i].v)], es[i].wu,
                   es[i].wv);
  return out;
}

std::string SpliceDiagram::canonical() const {
  auto label = [](const std::optional<BigInt>& w) { return w ? w->get_str() : std::string("-"); };
  std::function<std::string(int, int)> rooted = [&](int v, int parent) {
    const auto& x = vertex(v);
    std::string head = x.kind == SpliceKind::Arrow ? "A" : x.kind == SpliceKind::Leaf ? "L" : "N";
    std::vector<std::string> kids;
    for (auto e : incident(v)) {
      const auto& edge = edges_[e];
      const int w = edge.u == v ? edge.v : edge.u;
      if (w == parent) continue;
      const auto& near = edge.u == v ? edge.wu : edge.wv;
      const auto& far = edge.u == v ? edge.wv : edge.wu;
      kids.push_back(label(near) + "/" + label(far) + rooted(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + head;
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (const auto& v : verts_) {
    if (v.kind == SpliceKind::Arrow) continue;
    std::string s = rooted(v.id, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

SpliceDiagram build_splice(const SimpleTypeParams& x) {
  const auto errs = validate(x);
  if (!errs.empty()) throw std::invalid_argument(errs.front());
  const DerivedInvariants d = derive_invariants(x);
  const int r = x.r();
  SpliceDiagram s;
  auto big = [](std::int64_t v) { return BigInt(static_cast<long>(v)); };
  auto leaf_off = [&](int v, std::int64_t w) {
    const int l = s.add_vertex(SpliceKind::Leaf);
    s.add_edge(v, l, big(w), std::nullopt);
  };
  auto arms = [&](int R, std::int64_t toward_center, const std::vector<std::int64_t>& toward_arm) {
    for (int i = 1; i < r; ++i) {
      const auto ai = x.a[static_cast<std::size_t>(i - 1)];
      const int n = s.add_vertex(SpliceKind::Node, Role::OneZero, i);
      s.add_edge(R, n, BigInt(1), big(toward_arm.empty() ? toward_center : toward_arm[static_cast<std::size_t>(i - 1)]));
      leaf_off(n, ai);
      s.add_arrow(n, Role::OneZero, i);
    }
  };

  if (x.family == Family::F3) {
    const int h0 = s.add_vertex(SpliceKind::Marked, Role::OneZero, 0);
    s.add_arrow(h0, Role::OneZero, 0);
    const bool central = r > 1;
    const int R = s.add_vertex(central ? SpliceKind::Node : SpliceKind::Leaf, Role::LInfty);
    // zero total linking at H_0 forces -A at the bullet
    s.add_edge(h0, R, big(-d.A), central ? std::optional<BigInt>(BigInt(0)) : std::nullopt);
    arms(R, -1, {});
    return s;
  }

  int toward_bullet = -1;
  std::int64_t weight_toward_bullet = 0;
  if (x.family == Family::F1) {
    const int L1 = s.add_vertex(SpliceKind::Node, Role::OneOne);
    leaf_off(L1, x.Q);
    s.add_arrow(L1, Role::OneOne, 0);
    const int L2 = s.add_vertex(SpliceKind::Node, Role::E);
    s.add_edge(L1, L2, big(-x.q), big(d.B));
    s.add_arrow(L2, Role::OneZero, 0);
    toward_bullet = L2;
    weight_toward_bullet = -d.C;
  } else {
    const int L2 = s.add_vertex(SpliceKind::Node, Role::OneZero, 0);
    leaf_off(L2, d.A * x.Q + x.P);
    s.add_arrow(L2, Role::OneZero, 0);
    toward_bullet = L2;
    weight_toward_bullet = -(d.A * x.q + x.p);
  }
  const int M = s.add_vertex(SpliceKind::Marked);
  s.add_edge(toward_bullet, M, big(weight_toward_bullet), BigInt(1));
  const int R = s.add_vertex(SpliceKind::Node, Role::LInfty);
  s.add_edge(M, R, BigInt(1), big(-x.Q));
  const int U = s.add_vertex(SpliceKind::Node, Role::OneZero, r);
  s.add_edge(R, U, big(x.q), big(-x.P));
  leaf_off(U, x.p);
  s.add_arrow(U, Role::OneZero, r);
  std::vector<std::int64_t> minus_b;
  for (auto b : d.b) minus_b.push_back(-b);
  arms(R, 0, minus_b);
  return s;
}

namespace {

void append_chain(PlumbingGraph& g, int attach, const HJExpansion& chain, Role first_role, int first_index,
                  int first_arrows) {
  int prev = attach;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    const int v = j == 0 ? g.add_vertex(-chain[j], first_arrows, first_role, first_index)
                         : g.add_vertex(-chain[j], 0, Role::Chain, static_cast<int>(j));
    g.add_edge(prev, v);
    prev = v;
  }
}

void append_arms(PlumbingGraph& g, int center, const std::vector<std::int64_t>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int idx = static_cast<int>(i + 1);
    int prev = g.add_vertex(-1, 1, Role::OneZero, idx);
    g.add_edge(center, prev);
    for (std::int64_t t = 0; t + 1 < a[i]; ++t) {
      const int v = g.add_vertex(-2, 0, Role::Tail, idx);
      g.add_edge(prev, v);
      prev = v;
    }
  }
}

}  // namespace

PlumbingGraph build_plumbing(const SimpleTypeParams& x) {
  const auto errs = validate(x);
  if (!errs.empty()) throw std::invalid_argument(errs.front());
  const DerivedInvariants d = derive_invariants(x);
  const int r = x.r();
  PlumbingGraph g;
  switch (x.family) {
    case Family::F1: {
      const int L = g.add_vertex(-1, 0, Role::LInfty);
      const int E = g.add_vertex(-1, 0, Role::E);
      g.add_edge(L, E);
      append_chain(g, E, hj_expand(make_rational(d.A - 1) + make_rational(x.P, x.Q)), Role::OneOne, 0, 1);
      append_chain(g, L, hj_expand(make_rational(x.q, x.p)), Role::OneZero, r, 1);
      const int h0 = g.add_vertex(-1, 1, Role::OneZero, 0);
      g.add_edge(E, h0);
      append_arms(g, L, x.a);
      break;
    }
    case Family::F2: {
      const int L = g.add_vertex(0, 0, Role::LInfty);
      const int h0 = g.add_vertex(0, 1, Role::OneZero, 0);
      g.add_edge(L, h0);
      append_chain(g, h0, hj_expand(make_rational(d.A) + make_rational(x.P, x.Q)), Role::Chain, 0, 0);
      append_chain(g, L, hj_expand(make_rational(x.q, x.p)), Role::OneZero, r, 1);
      append_arms(g, L, x.a);
      break;
    }
    case Family::F3: {
      const int L = g.add_vertex(0, 0, Role::LInfty);
      const int h0 = g.add_vertex(0, 1, Role::OneZero, 0);
      g.add_edge(L, h0);
      append_arms(g, L, x.a);
      break;
    }
  }
  return g;
}

BigInt branch_weight(const PlumbingGraph& g, int from, int toward) {
  if (!g.has_edge(from, toward)) throw SpliceError("branch_weight needs adjacent vertices");
  const auto comp = g.component(toward, from);
  IntMatrix m = intersection_matrix(g.induced(comp));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m(i, j) = -m(i, j);
  return det(m);
}

SpliceDiagram splice_from_plumbing(const PlumbingGraph& g) {
  if (!g.is_tree()) throw SpliceError("plumbing graph is not a tree");
  const BigInt dt = det(intersection_matrix(g));
  if (dt != 1 && dt != -1) throw SpliceError("intersection matrix determinant is not +-1");

  SpliceDiagram s;
  std::map<int, int> splice_of;
  auto is_leaf = [&](int v) { return g.degree(v) == 1 && g.vertex(v).arrows == 0; };
  for (int v : g.ids()) {
    const Vertex& x = g.vertex(v);
    const std::size_t deg = g.degree(v);
    const bool keep = deg + static_cast<std::size_t>(x.arrows) >= 3 || x.arrows > 0 || deg <= 1;
    if (!keep) continue;
    splice_of[v] = s.add_vertex(is_leaf(v) ? SpliceKind::Leaf : SpliceKind::Node, x.role, x.index, v);
  }
  for (const auto& [v, sv] : splice_of) {
    for (int first : g.neighbors(v)) {
      int prev = v, cur = first;
      while (!splice_of.count(cur)) {
        const auto nb = g.neighbors(cur);
        const int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      if (cur < v) continue;  // each splice edge once
      std::optional<BigInt> wv, wc;
      if (!is_leaf(v)) wv = branch_weight(g, v, first);
      if (!is_leaf(cur)) wc = branch_weight(g, cur, prev);
      s.add_edge(sv, splice_of[cur], wv, wc);
    }
  }
  for (const auto& [v, sv] : splice_of) {
    const Vertex& x = g.vertex(v);
    for (int i = 0; i < x.arrows; ++i) s.add_arrow(sv, x.role, x.index);
  }
  return s;
}

BigInt edge_determinant(const SpliceDiagram& d, int v, int w) {
  for (int x : {v, w}) {
    const auto k = d.vertex(x).kind;
    if (k != SpliceKind::Node && k != SpliceKind::Marked) throw SpliceError("edge endpoint is not a node");
  }
  if (!d.edge_between(v, w)) throw SpliceError("vertices are not adjacent");
  auto others = [&](int a, int b) {
    BigInt prod = 1;
    for (int n : d.neighbors(a))
      if (n != b) prod *= d.weight(a, n);
    return prod;
  };
  return others(v, w) * others(w, v) - d.weight(v, w) * d.weight(w, v);
}

namespace {

// Product of the near weights at n on edges leading to neither prev nor next.
BigInt off_path(const SpliceDiagram& d, int n, int prev, int next) {
  BigInt prod = 1;
  for (int m : d.neighbors(n))
    if (m != prev && m != next) prod *= d.weight(n, m);
  return prod;
}

}  // namespace

BigInt splice_linking(const SpliceDiagram& d, int alpha, int beta) {
  if (alpha == beta) throw SpliceError("arrows must be distinct");
  if (d.vertex(alpha).kind != SpliceKind::Arrow || d.vertex(beta).kind != SpliceKind::Arrow)
    throw SpliceError("linking is defined between arrows");
  const auto p = d.path(alpha, beta);
  BigInt prod = 1;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) prod *= off_path(d, p[i], p[i - 1], p[i + 1]);
  return prod;
}

BigInt total_linking(const SpliceDiagram& d, int v) {
  if (d.vertex(v).kind == SpliceKind::Arrow) v = d.carrier(v);
  BigInt total = 0;
  for (int beta : d.arrows()) {
    const auto p = d.path(v, beta);
    BigInt prod = 1;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) prod *= off_path(d, p[i], i ? p[i - 1] : -1, p[i + 1]);
    total += prod;
  }
  return total;
}

}  // namespace splicekit
