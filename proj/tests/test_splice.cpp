#include <gtest/gtest.h>

#include "splicekit/splice.hpp"
#include "splicekit/sweep.hpp"
#include "splicekit/verify.hpp"

using namespace splicekit;

namespace {

const SimpleTypeParams kWorked{Family::F1, 1, 1, 1, 2, {2}};
const SimpleTypeParams kSecond{Family::F1, 2, 1, 3, 2, {1}};

int by_role(const PlumbingGraph& g, Role role, int index = 0) {
  for (int v : g.ids())
    if (g.vertex(v).role == role && g.vertex(v).index == index) return v;
  return -1;
}

std::vector<int> neighbour_roles(const PlumbingGraph& g, int v) {
  std::vector<int> out;
  for (int w : g.neighbors(v)) out.push_back(static_cast<int>(g.vertex(w).role));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(kWorked).empty());
  const auto bad = validate({Family::F1, 1, 1, 2, 1, {2}});
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_NE(bad.front().find("-1"), std::string::npos);
  const auto short_r = validate({Family::F1, 1, 1, 1, 2, {}});
  ASSERT_FALSE(short_r.empty());
  EXPECT_NE(short_r.front().find("r >= 2"), std::string::npos);
}

TEST(Validate, ReportsEachViolation) {
  const auto errs = validate({Family::F1, 1, 1, 2, 1, {}});
  EXPECT_EQ(errs.size(), 2u);
  EXPECT_FALSE(validate({Family::F2, 1, 1, 1, 2, {0}}).empty());
  EXPECT_TRUE(validate({Family::F2, 1, 1, 1, 2, {}}).empty());
  EXPECT_TRUE(validate({Family::F3, 0, 0, 0, 0, {}}).empty());
}

TEST(DeriveInvariants, Examples) {
  auto d = derive_invariants(kWorked);
  EXPECT_EQ(d.A, 2);
  EXPECT_EQ(d.B, 2);
  EXPECT_EQ(d.C, 3);
  EXPECT_EQ(d.b, (std::vector<std::int64_t>{5}));
  EXPECT_EQ(d.k, 1);
  EXPECT_EQ(d.degree, 8);
  EXPECT_EQ(d.delta, 4);

  d = derive_invariants(kSecond);
  EXPECT_EQ(d.A, 1);
  EXPECT_EQ(d.B, 2);  // AQ + P - Q
  EXPECT_EQ(d.C, 3);
  EXPECT_EQ(d.b, (std::vector<std::int64_t>{3}));
  EXPECT_EQ(d.k, 1);
  EXPECT_EQ(d.degree, 8);

  d = derive_invariants({Family::F1, 1, 1, 1, 2, {1, 1, 1, 1}});
  EXPECT_EQ(d.A, 4);
  EXPECT_EQ(derive_invariants({Family::F2, 1, 1, 1, 2, {1}}).delta, 3);
  EXPECT_EQ(derive_invariants({Family::F3, 0, 0, 0, 0, {1, 2}}).delta, 3);
}

TEST(BuildSplice, WorkedWeights) {
  const SpliceDiagram d = build_splice(kWorked);
  ASSERT_TRUE(d.is_tree());
  const int L1 = *d.find(Role::OneOne), E = *d.find(Role::E), R = *d.find(Role::LInfty);
  const int U = *d.find(Role::OneZero, 2), N = *d.find(Role::OneZero, 1);
  EXPECT_EQ(d.weight(E, L1), 2);    // B
  EXPECT_EQ(d.weight(L1, E), -2);   // -q
  EXPECT_EQ(d.weight(U, R), -1);    // -P
  EXPECT_EQ(d.weight(R, U), 2);     // q
  EXPECT_EQ(d.weight(N, R), -5);    // -b_1
  EXPECT_EQ(d.weight(R, N), 1);
  EXPECT_EQ(d.arrows().size(), 4u);
  int marked = 0;
  for (const auto& v : d.vertices()) marked += v.kind == SpliceKind::Marked;
  EXPECT_EQ(marked, 1);
}

TEST(BuildSplice, F2Weights) {
  const SimpleTypeParams x{Family::F2, 2, 1, 3, 2, {1}};
  const SpliceDiagram d = build_splice(x);
  const int H0 = *d.find(Role::OneZero, 0), R = *d.find(Role::LInfty), N = *d.find(Role::OneZero, 1);
  std::vector<BigInt> at_h0;
  for (int w : d.neighbors(H0)) at_h0.push_back(d.weight(H0, w));
  std::sort(at_h0.begin(), at_h0.end());
  EXPECT_EQ(at_h0, (std::vector<BigInt>{-5, 1, 3}));
  EXPECT_EQ(d.weight(N, R), -3);
}

TEST(BuildSplice, F3Weights) {
  const SpliceDiagram d = build_splice({Family::F3, 0, 0, 0, 0, {2}});
  const int R = *d.find(Role::LInfty), N = *d.find(Role::OneZero, 1), H0 = *d.find(Role::OneZero, 0);
  EXPECT_EQ(d.weight(R, H0), 0);
  EXPECT_EQ(d.weight(R, N), 1);
  EXPECT_EQ(d.weight(N, R), -1);
  EXPECT_EQ(d.vertex(H0).kind, SpliceKind::Marked);
  BigInt leaf = 0;
  for (int w : d.neighbors(N))
    if (d.vertex(w).kind == SpliceKind::Leaf) leaf = d.weight(N, w);
  EXPECT_EQ(leaf, 2);
}

TEST(BuildPlumbing, WorkedGraph) {
  const PlumbingGraph g = build_plumbing(kWorked);
  ASSERT_EQ(g.vertex_count(), 7u);
  ASSERT_TRUE(g.is_tree());
  const int L = by_role(g, Role::LInfty), E = by_role(g, Role::E);
  const int D = by_role(g, Role::OneOne), H0 = by_role(g, Role::OneZero, 0);
  const int H1 = by_role(g, Role::OneZero, 1), Hr = by_role(g, Role::OneZero, 2);
  EXPECT_EQ(g.vertex(L).weight, -1);
  EXPECT_EQ(g.vertex(E).weight, -1);
  EXPECT_EQ(g.vertex(D).weight, -2);
  EXPECT_EQ(g.vertex(H0).weight, -1);
  EXPECT_EQ(g.vertex(H1).weight, -1);
  EXPECT_EQ(g.vertex(Hr).weight, -2);
  for (int v : {D, H0, H1, Hr}) EXPECT_EQ(g.vertex(v).arrows, 1);
  EXPECT_EQ(g.total_arrows(), 4);
  EXPECT_EQ(neighbour_roles(g, L), (std::vector<int>{static_cast<int>(Role::E), static_cast<int>(Role::OneZero),
                                                     static_cast<int>(Role::OneZero)}));
  EXPECT_TRUE(g.has_edge(E, D));
  EXPECT_TRUE(g.has_edge(E, H0));
  const int tail = by_role(g, Role::Tail, 1);
  ASSERT_GE(tail, 0);
  EXPECT_EQ(g.vertex(tail).weight, -2);
  EXPECT_TRUE(g.has_edge(H1, tail));
  EXPECT_EQ(abs(det(intersection_matrix(g))), 1);
}

TEST(BuildPlumbing, F3Graph) {
  const PlumbingGraph g = build_plumbing({Family::F3, 0, 0, 0, 0, {2}});
  ASSERT_EQ(g.vertex_count(), 4u);
  const int L = by_role(g, Role::LInfty);
  EXPECT_EQ(g.vertex(L).weight, 0);
  EXPECT_EQ(g.vertex(by_role(g, Role::OneZero, 0)).weight, 0);
  EXPECT_EQ(g.vertex(by_role(g, Role::OneZero, 1)).weight, -1);
  EXPECT_EQ(g.vertex(by_role(g, Role::Tail, 1)).weight, -2);
  EXPECT_TRUE(reduce_to_morrow(g).ok());
}

TEST(BuildPlumbing, VertexCountFormula) {
  for (const auto& x : sample_params(Family::F1, 100, 9)) {
    const auto d = derive_invariants(x);
    const auto left = hj_expand(BigRational(d.A - 1) + make_rational(x.P, x.Q)).size();
    const auto right = hj_expand(make_rational(x.q, x.p)).size();
    std::int64_t tails = 0;
    for (auto a : x.a) tails += a - 1;
    const auto expected = 5 + (left - 1) + (right - 1) + tails + (x.r() - 1);
    ASSERT_EQ(build_plumbing(x).vertex_count(), static_cast<std::size_t>(expected));
  }
}

TEST(SpliceFromPlumbing, HopfModel) {
  PlumbingGraph g;
  g.add_vertex(-1, 2);
  const SpliceDiagram d = splice_from_plumbing(g);
  ASSERT_EQ(d.nodes().size(), 1u);
  const auto arrows = d.arrows();
  ASSERT_EQ(arrows.size(), 2u);
  const int n = d.nodes().front();
  for (int a : arrows) EXPECT_EQ(d.weight(n, a), 1);
  EXPECT_EQ(splice_linking(d, arrows[0], arrows[1]), 1);
}

TEST(SpliceFromPlumbing, BranchWeight) {
  PlumbingGraph g;
  const int v = g.add_vertex(-2, 1);
  const int leaf = g.add_vertex(-2);
  g.add_edge(v, leaf);
  EXPECT_EQ(branch_weight(g, v, leaf), 2);
  // |det| = 3 here, outside the unimodular precondition
  EXPECT_THROW(splice_from_plumbing(g), SpliceError);
}

TEST(SpliceFromPlumbing, WorkedLinkingMatchesPlumbing) {
  const PlumbingGraph g = build_plumbing(kWorked);
  const SpliceDiagram d = splice_from_plumbing(g);
  EXPECT_EQ(check_linking_oracle(g, build_splice(kWorked)).status, CheckStatus::Pass);
  EXPECT_EQ(check_linking_oracle(g, d).status, CheckStatus::Pass);
  for (int a : d.arrows()) EXPECT_EQ(total_linking(d, a), 0);
}

TEST(EdgeDeterminant, ReferenceInstances) {
  for (const auto& x : sample_params(Family::F1, 100, 21)) {
    const SpliceDiagram d = build_splice(x);
    const int R = *d.find(Role::LInfty), U = *d.find(Role::OneZero, x.r());
    ASSERT_EQ(edge_determinant(d, R, U), x.P * x.q - x.p * x.Q);
    ASSERT_EQ(edge_determinant(d, R, U), 1);
    for (int i = 1; i < x.r(); ++i) ASSERT_EQ(edge_determinant(d, R, *d.find(Role::OneZero, i)), 1);
  }
}

TEST(EdgeDeterminant, DegenerateAndErrors) {
  SpliceDiagram d;
  const int u = d.add_vertex(SpliceKind::Node), v = d.add_vertex(SpliceKind::Node);
  d.add_edge(u, v, BigInt(2), BigInt(3));
  const int lu = d.add_vertex(SpliceKind::Leaf), lv = d.add_vertex(SpliceKind::Leaf);
  d.add_edge(u, lu, BigInt(3), std::nullopt);
  d.add_edge(v, lv, BigInt(2), std::nullopt);
  EXPECT_EQ(edge_determinant(d, u, v), 0);
  EXPECT_THROW(edge_determinant(d, u, lu), SpliceError);
}

TEST(SpliceLinking, OneOffPathWeight) {
  SpliceDiagram d;
  const int n = d.add_vertex(SpliceKind::Node);
  const int a = d.add_arrow(n, Role::Plain, 0), b = d.add_arrow(n, Role::Plain, 1);
  const int leaf = d.add_vertex(SpliceKind::Leaf);
  d.add_edge(n, leaf, BigInt(7), std::nullopt);
  EXPECT_EQ(splice_linking(d, a, b), 7);
  EXPECT_THROW(splice_linking(d, a, a), SpliceError);
}

TEST(SpliceLinking, HopfSplice) {
  SpliceDiagram d;
  const int n = d.add_vertex(SpliceKind::Node);
  const int a = d.add_arrow(n, Role::Plain, 0), b = d.add_arrow(n, Role::Plain, 1);
  EXPECT_EQ(splice_linking(d, a, b), 1);
}

TEST(NormalForm, Examples) {
  auto n = normal_form(kWorked);
  EXPECT_EQ(n.form, NormalFormDescriptor::Form::f1);
  EXPECT_EQ(n.which, FamilyCase::Case1);
  EXPECT_EQ(n.k, 1);
  EXPECT_EQ((std::array<std::int64_t, 4>{n.q1, n.p1, n.q, n.p}), (std::array<std::int64_t, 4>{1, 0, 1, 1}));
  EXPECT_EQ(n.p * n.q1 - n.p1 * n.q, 1);

  n = normal_form(kSecond);
  EXPECT_EQ(n.which, FamilyCase::Case1);
  EXPECT_EQ((std::array<std::int64_t, 4>{n.q1, n.p1, n.q, n.p}), (std::array<std::int64_t, 4>{1, 1, 1, 2}));

  n = normal_form({Family::F3, 0, 0, 0, 0, {2, 3}});
  EXPECT_EQ(n.form, NormalFormDescriptor::Form::f3);
  EXPECT_EQ(n.h_degree_bound, 5);
}

TEST(NormalForm, ExactlyOneCase) {
  for (const auto& x : sample_params(Family::F1, 200, 4)) {
    const std::int64_t k = k_of(x);
    const bool c1 = k * x.P <= x.p && x.p < (k + 1) * x.P;
    const bool c2 = k * x.q <= x.Q && x.Q < (k + 1) * x.q;
    ASSERT_NE(c1, c2);
    ASSERT_EQ(case_of(x), c1 ? FamilyCase::Case1 : FamilyCase::Case2);
    ASSERT_TRUE(check_normal_form(normal_form(x)).ok);
  }
}

TEST(SweepProperties, AllFamilies) {
  for (Family fam : {Family::F1, Family::F2, Family::F3}) {
    for (const auto& x : sample_params(fam, 60, 77)) {
      const PlumbingGraph g = build_plumbing(x);
      const SpliceDiagram d = build_splice(x);
      ASSERT_EQ(check_linking_oracle(g, d).status, CheckStatus::Pass) << to_string(fam);
      ASSERT_NE(check_zero_total_linking(x, g, d).status, CheckStatus::Fail) << to_string(fam);
      ASSERT_NE(check_edge_determinants(d).status, CheckStatus::Fail);
      ASSERT_NE(check_side_landing(x).status, CheckStatus::Fail);
      ASSERT_EQ(check_realization(x, g).status, CheckStatus::Pass);
    }
  }
}
