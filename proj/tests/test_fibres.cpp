#include <gtest/gtest.h>

#include "splicekit/fibres.hpp"
#include "splicekit/sweep.hpp"

using namespace splicekit;

namespace {

std::vector<std::int64_t> punctures(const FibreTopology& f) {
  std::vector<std::int64_t> out;
  for (const auto& c : f.components) out.push_back(c.punctures);
  return out;
}

int suzuki_sum(const std::vector<FibreTopology>& fs) {
  int s = 0;
  for (const auto& f : fs) s += static_cast<int>(f.components.size()) - 1;
  return s;
}

}  // namespace

TEST(Classify, GenericWithoutExtraFibre) {
  const auto fs = classify_irregular_fibres(SimpleTypeParams{Family::F1, 2, 1, 3, 2, {1}});
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].value_tag, "beta_1");
  EXPECT_EQ(punctures(fs[0]), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(fs[0].gluing, Gluing::NormalCrossing);
  EXPECT_TRUE(fs[0].reduced);
  EXPECT_EQ(fs[0].str(), "C* + C*");
  EXPECT_EQ(fs[1].value_tag, "zero");
  EXPECT_EQ(punctures(fs[1]), (std::vector<std::int64_t>{2, 1, 0}));
  EXPECT_TRUE(fs[1].reduced);  // Q = 1
  EXPECT_EQ(suzuki_sum(fs), 3);
}

TEST(Classify, NonReducedUnlessQOrPIsOne) {
  // (P,Q,p,q) = (3,2,4,3): Pq - pQ = 1, P and q not 1, Q and p not 1
  const auto fs = classify_irregular_fibres(SimpleTypeParams{Family::F1, 3, 2, 4, 3, {2}});
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_FALSE(fs[1].reduced);
  EXPECT_EQ(punctures(fs[0]), (std::vector<std::int64_t>{2, 1}));
  EXPECT_EQ(fs[0].gluing, Gluing::AllDisjoint);
  EXPECT_EQ(fs[1].str(), "C(2) u C* u C");
}

TEST(Classify, ExtraFibreWorked) {
  const SimpleTypeParams x{Family::F1, 1, 1, 1, 2, {2}};
  const auto ak = extra_fibre_pair(x);
  ASSERT_TRUE(ak);
  EXPECT_EQ(ak->first, 1);
  EXPECT_EQ(ak->second, 1);
  const auto fs = classify_irregular_fibres(x);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(punctures(fs[0]), (std::vector<std::int64_t>{2, 1}));
  EXPECT_EQ(fs[0].gluing, Gluing::AllDisjoint);
  EXPECT_EQ(punctures(fs[1]), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(fs[1].gluing, Gluing::NormalCrossing);
  EXPECT_EQ(fs[2].value_tag, "extra");
  EXPECT_EQ(punctures(fs[2]), (std::vector<std::int64_t>{2, 0}));
  EXPECT_EQ(fs[2].gluing, Gluing::NormalCrossing);
  for (const auto& f : fs) EXPECT_TRUE(f.reduced);
  EXPECT_EQ(suzuki_sum(fs), 3);
}

TEST(Classify, ValuesAttachedFromInstance) {
  FamilyInstance inst{{Family::F1, 1, 1, 1, 2, {2}}, {BigRational(1)}, {BigRational(3)}, {}};
  const auto fs = classify_irregular_fibres(inst);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(*fs[0].value, 3);
  EXPECT_EQ(*fs[1].value, 0);
  EXPECT_EQ(*fs[2].value, 9);
}

TEST(Classify, SpecialLocus) {
  const auto fs = classify_irregular_fibres(SimpleTypeParams{Family::F1, 3, 2, 4, 3, {1, 2}}, Locus::Special);
  const auto& last = fs.back();
  EXPECT_EQ(last.locus, Locus::Special);
  EXPECT_EQ(punctures(last), (std::vector<std::int64_t>{3, 0, 0}));
  EXPECT_EQ(last.str(), "C(3) u (C + C)");
  EXPECT_FALSE(last.reduced);
}

TEST(Classify, SpecialLocusUnknownForExtraFibreCase) {
  const auto fs = classify_irregular_fibres(SimpleTypeParams{Family::F1, 1, 1, 1, 2, {2}}, Locus::Special);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[1].locus, Locus::Unknown);
  EXPECT_FALSE(fs[1].warnings.empty());
}

TEST(Classify, ExtraFibreIffPOrQIsOne) {
  for (const auto& x : sample_params(Family::F1, 200, 5)) {
    const auto fs = classify_irregular_fibres(x);
    const bool extra = x.P == 1 || x.q == 1;
    ASSERT_EQ(fs.size(), static_cast<std::size_t>(x.r() + (extra ? 1 : 0)));
    ASSERT_EQ(extra_fibre_pair(x).has_value(), extra);
  }
}

TEST(Suzuki, Sweep) {
  for (const auto& x : sample_params(Family::F1, 300, 6)) {
    for (Locus l : {Locus::Generic, Locus::Special}) {
      ASSERT_TRUE(suzuki_check(x, l));
      ASSERT_TRUE(euler_check(x, l));
      ASSERT_EQ(suzuki_sum(classify_irregular_fibres(x, l)), x.r() + 1);
    }
  }
}

TEST(Suzuki, EulerCharacteristic) {
  FibreTopology f;
  f.components = {{2}, {1}};
  EXPECT_EQ(f.euler_characteristic(), -1);
  // the crossing point is counted once
  f.gluing = Gluing::NormalCrossing;
  EXPECT_EQ(f.euler_characteristic(), -2);
}
