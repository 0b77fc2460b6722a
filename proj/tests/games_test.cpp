#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "mdl/enumerate.hpp"
#include "mdl/errors.hpp"
#include "mdl/games.hpp"

namespace mdl {
namespace {

using test::fixture;

class FixtureModels : public ::testing::Test {
 protected:
  Interpretation mi = fixture("MI.json");
  Interpretation mj = fixture("MJ.json");

  Point pi(const char* w, const char* d) const { return {mi.world(w), mi.individual(d)}; }
  Point pj(const char* w, const char* d) const { return {mj.world(w), mj.individual(d)}; }

  std::vector<PointPair> relationR() const {
    std::ifstream in(std::string(MDL_FIXTURE_DIR) + "/R.json");
    std::stringstream ss;
    ss << in.rdbuf();
    return parseRelation(ss.str(), mi, mj);
  }
};

TEST_F(FixtureModels, AtomicAgreement) {
  EXPECT_TRUE(atomicAgreement(mi, pi("v1", "a"), mj, pj("w1", "a")));
  EXPECT_FALSE(atomicAgreement(mi, pi("v1", "a"), mi, pi("v1", "b")));
  EXPECT_TRUE(atomicAgreement(mi, pi("v2", "b"), mi, pi("v2", "b")));
}

TEST_F(FixtureModels, CheckBisimulation) {
  auto r = relationR();
  ASSERT_EQ(r.size(), 6u);
  EXPECT_FALSE(checkBisimulation(mi, mj, r));
  EXPECT_FALSE(checkBisimulation(mi, mj, std::vector<PointPair>{}));

  r.push_back({pi("v1", "a"), pj("w3", "b")});
  const auto v = checkBisimulation(mi, mj, r);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->clause, 1);
  EXPECT_EQ(v->pair, r.back());
}

TEST_F(FixtureModels, CheckBisimulationMissingSuccessor) {
  // dropping ((v2,b),(w2,b)) leaves the r-successor b of (v2,a) unmatched
  auto r = relationR();
  const PointPair drop{pi("v2", "b"), pj("w2", "b")};
  std::erase(r, drop);
  const auto v = checkBisimulation(mi, mj, r);
  ASSERT_TRUE(v);
  EXPECT_GE(v->clause, 2);
}

TEST_F(FixtureModels, Bisimilar) {
  EXPECT_TRUE(bisimilar(mi, pi("v1", "a"), mj, pj("w1", "a")));
  EXPECT_TRUE(bisimilar(mi, pi("v1", "a"), mi, pi("v1", "a")));
  EXPECT_FALSE(bisimilar(mi, pi("v1", "a"), mi, pi("v1", "b")));
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_TRUE(bisimilarN(mi, pi("v1", "a"), mj, pj("w1", "a"), n));
  EXPECT_FALSE(bisimilarN(mi, pi("v1", "a"), mi, pi("v1", "b"), 0));
  EXPECT_TRUE(bisimilarAltN(mi, pi("v1", "a"), mj, pj("w1", "a"), 1));
  EXPECT_TRUE(bisimilarAlt(mi, pi("v1", "a"), mj, pj("w1", "a")));
}

TEST_F(FixtureModels, GreatestRelationContainsR) {
  const auto gfp = bisimRelation(mi, mj);
  for (const auto& pair : relationR()) EXPECT_NE(std::find(gfp.begin(), gfp.end(), pair), gfp.end());
  EXPECT_FALSE(checkBisimulation(mi, mj, gfp));
}

TEST_F(FixtureModels, RelationJsonRoundTrip) {
  const auto r = relationR();
  EXPECT_EQ(parseRelation(relationToJson(r, mi, mj), mi, mj), r);
  EXPECT_THROW(parseRelation(R"([[["v9","a"],["w1","a"]]])", mi, mj), SemanticError);
}

TEST_F(FixtureModels, PartialIsomorphism) {
  const std::vector<std::size_t> a{0}, ab{0, 1}, aa{0, 0};
  EXPECT_TRUE(isPartialIsomorphism(mi, mi.world("v1"), a, mj, mj.world("w1"), a));
  EXPECT_FALSE(isPartialIsomorphism(mi, mi.world("v1"), ab, mj, mj.world("w1"), ab));
  EXPECT_FALSE(isPartialIsomorphism(mi, mi.world("v1"), aa, mj, mj.world("w1"), ab));
}

TEST_F(FixtureModels, EfGame) {
  const std::vector<std::size_t> a{0};
  const std::size_t v1 = mi.world("v1"), w1 = mj.world("w1");
  EXPECT_TRUE(efEquivalentN(mi, v1, a, mj, w1, a, 0));
  EXPECT_FALSE(efEquivalentN(mi, v1, a, mj, w1, a, 1));
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_TRUE(efEquivalentN(mi, v1, a, mi, v1, a, n));
  // strictly finer than bisimilarity
  EXPECT_TRUE(bisimilar(mi, pi("v1", "a"), mj, pj("w1", "a")));
}

TEST(EfGame, Caps) {
  Interpretation big(Signature({"A"}, {"r"}), {"w"}, {"a", "b", "c", "d", "e", "f", "g"});
  const std::vector<std::size_t> a{0};
  EXPECT_THROW(efEquivalentN(big, 0, a, big, 0, a, 1), CapExceeded);
  EfOptions forced;
  forced.force = true;
  EXPECT_TRUE(efEquivalentN(big, 0, a, big, 0, a, 1, forced));
}

// The greatest bisimulation is the limit of the depth-bounded relations.
TEST(Bisimulation, DepthLimit) {
  const auto models = enumerateModels(Signature({"A"}, {"r"}), 1, 2);
  for (std::size_t i = 0; i < models.size(); i += 7) {
    for (std::size_t j = 0; j < models.size(); j += 5) {
      const auto& m = models[i];
      const auto& n = models[j];
      for (std::size_t p = 0; p < m.pointCount(); ++p)
        for (std::size_t q = 0; q < n.pointCount(); ++q) {
          const Point x = m.point(p), y = n.point(q);
          ASSERT_EQ(bisimilar(m, x, n, y), bisimilarN(m, x, n, y, m.pointCount() * n.pointCount()));
        }
    }
  }
}

}  // namespace
}  // namespace mdl
