#include "splicekit/realize.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace splicekit {

std::string stern_brocot_path(const BigRational& v) {
  if (v <= 0) throw std::invalid_argument("stern_brocot_path needs a positive rational");
  BigInt ln = 0, ld = 1, hn = 1, hd = 0;
  std::string out;
  for (;;) {
    const BigInt mn = ln + hn, md = ld + hd;
    const BigRational m(mn, md);
    if (v == m) return out;
    if (v > m) {
      out += 'L';
      ln = mn;
      ld = md;
    } else {
      out += 'R';
      hn = mn;
      hd = md;
    }
  }
}

namespace {

struct Builder {
  PlumbingGraph g;
  Realization out;
  std::set<int> cut;

  int blow(const Site& s, Role role = Role::Plain, int index = 0) {
    g = blow_up(g, s, role, index);
    out.sites.push_back(s);
    ++out.blowups;
    return g.newest();
  }

  // a blow-ups at the point where `curve` meets `other`, always at the newest
  // exceptional curve; the last one is left behind as a cutting divisor.
  void arm(int curve, int other, std::int64_t a) {
    int last = curve;
    for (std::int64_t t = 0; t < a; ++t) last = blow(Site::at_edge(last, other));
    cut.insert(last);
  }

  // Separating sequence between left and right; returns the (l, r) curves
  // adjacent to the final exceptional curve, which is cut.
  std::pair<int, int> separate(int left, int right, const std::string& choices) {
    int e = blow(Site::at_edge(left, right));
    int l = left, r = right;
    for (char c : choices) {
      if (c == 'L') {
        const int n = blow(Site::at_edge(l, e));
        r = e;
        e = n;
      } else {
        const int n = blow(Site::at_edge(e, r));
        l = e;
        e = n;
      }
    }
    cut.insert(e);
    return {l, r};
  }

  // k blow-ups at general points, each on the previous exceptional curve.
  void nonseparating(int curve, std::int64_t k) {
    int cur = curve;
    for (std::int64_t i = 0; i < k; ++i) cur = blow(Site::at_vertex(cur));
    cut.insert(cur);
  }

  void finish_chain(const SimpleTypeParams& x, int left_curve, int right_curve, const std::set<int>& horizontal) {
    // Case 2 (non-separating on the left) exactly when P > p
    const bool left = x.P > x.p;
    const BigRational v = left ? make_rational(x.p, x.q) : make_rational(x.P, x.Q);
    out.side = left ? ChainSide::Left : ChainSide::Right;
    out.k = left ? x.Q / x.q : x.p / x.P;
    const auto [l, r] = separate(left_curve, right_curve, stern_brocot_path(v));
    const int end = left ? l : r;
    out.on_horizontal = horizontal.count(end) != 0;
    nonseparating(end, out.k);
  }

  Realization done() {
    for (int c : cut) g.remove_vertex(c);
    out.cutting = static_cast<int>(cut.size());
    out.graph = g;
    return out;
  }
};

}  // namespace

Realization realize(const SimpleTypeParams& x) {
  const auto errs = validate(x);
  if (!errs.empty()) throw std::invalid_argument(errs.front());
  const int r = x.r();
  Builder b;
  auto& g = b.g;
  switch (x.family) {
    case Family::F1: {
      // L_inf and the (1,0) lines are rulings of P1xP1; (1,1) is a diagonal
      // through the point L_inf meets (1,0)_0.
      const int L = g.add_vertex(0, 0, Role::LInfty);
      const int D = g.add_vertex(2, 1, Role::OneOne);
      std::vector<int> H;
      for (int i = 0; i <= r; ++i) H.push_back(g.add_vertex(0, 1, Role::OneZero, i));
      for (int i = 0; i <= r; ++i) g.add_edge(L, H[static_cast<std::size_t>(i)]);
      for (int i = 0; i <= r; ++i) g.add_edge(D, H[static_cast<std::size_t>(i)]);
      g.add_edge(L, D);
      b.blow(Site::at_point({L, D, H[0]}), Role::E);
      for (int i = 1; i < r; ++i) b.arm(H[static_cast<std::size_t>(i)], D, x.a[static_cast<std::size_t>(i - 1)]);
      std::set<int> horizontal(H.begin(), H.end());
      horizontal.insert(D);
      b.finish_chain(x, D, H[static_cast<std::size_t>(r)], horizontal);
      break;
    }
    case Family::F2: {
      // L_inf and V are fibres over infinity and over a finite value.
      const int L = g.add_vertex(0, 0, Role::LInfty);
      const int V = g.add_vertex(0, 0, Role::Chain, 0);
      std::vector<int> H;
      for (int i = 0; i <= r; ++i) H.push_back(g.add_vertex(0, 1, Role::OneZero, i));
      for (int h : H) {
        g.add_edge(L, h);
        g.add_edge(V, h);
      }
      for (int i = 1; i < r; ++i) b.arm(H[static_cast<std::size_t>(i)], V, x.a[static_cast<std::size_t>(i - 1)]);
      b.finish_chain(x, V, H[static_cast<std::size_t>(r)], std::set<int>(H.begin(), H.end()));
      break;
    }
    case Family::F3: {
      const int L = g.add_vertex(0, 0, Role::LInfty);
      std::vector<int> H;
      for (int i = 0; i < r; ++i) H.push_back(g.add_vertex(0, 1, Role::OneZero, i));
      for (int h : H) g.add_edge(L, h);
      for (int i = 1; i < r; ++i) b.nonseparating(H[static_cast<std::size_t>(i)], x.a[static_cast<std::size_t>(i - 1)]);
      break;
    }
  }
  return b.done();
}

std::string canonical_form(const PlumbingGraph& g) {
  if (!g.is_tree()) throw PlumbingError("canonical_form needs a tree");
  std::function<std::string(int, int)> rooted = [&](int v, int parent) {
    const Vertex& x = g.vertex(v);
    std::vector<std::string> kids;
    for (int w : g.neighbors(v))
      if (w != parent) kids.push_back(rooted(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(x.weight) + "^" + std::to_string(x.arrows);
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (int v : g.ids()) {
    std::string s = rooted(v, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace splicekit
