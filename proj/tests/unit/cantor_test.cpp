#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"
#include "whirl/cantor.hpp"

namespace whirl {
namespace {

using testing::t;

TEST(CantorIntervalsTest, Examples) {
  EXPECT_EQ(cantor_intervals(0), (std::vector<Interval>{{t(0, 0), t(1, 0)}}));
  EXPECT_EQ(cantor_intervals(1), (std::vector<Interval>{{t(0, 0), t(1, 1)}, {t(2, 1), t(1, 0)}}));
  EXPECT_EQ(cantor_intervals(2), (std::vector<Interval>{
                                     {t(0, 0), t(1, 2)}, {t(2, 2), t(1, 1)}, {t(2, 1), t(7, 2)}, {t(8, 2), t(1, 0)}}));
  EXPECT_EQ(cantor_intervals(5).size(), 32u);
  for (const auto& iv : cantor_intervals(5)) EXPECT_EQ(iv.hi.scaled_to(5) - iv.lo.scaled_to(5), 1);
}

TEST(CantorIntervalsTest, EndpointsAreLevelVerticesInTheCantorSet) {
  for (int n = 1; n <= 7; ++n) {
    std::set<TriadicRational> endpoints;
    for (const auto& iv : cantor_intervals(n)) {
      endpoints.insert(iv.lo);
      endpoints.insert(iv.hi);
    }
    std::set<TriadicRational> digits;
    for (const auto& x : level_vertices(n)) {
      if (in_cantor_set(x)) digits.insert(x);
    }
    EXPECT_EQ(endpoints, digits) << "n=" << n;
    EXPECT_EQ(endpoints.size(), std::size_t{1} << (n + 1));
  }
}

TEST(GStarTest, LevelOne) {
  const auto g = gstar(1);
  EXPECT_EQ(g.graph.vertices(), (std::vector<TriadicRational>{t(0, 0), t(1, 1), t(2, 1), t(1, 0)}));
  const auto e1 = level_edges(1);
  const std::set<WhirlEdge> expected(e1.begin(), e1.end());
  EXPECT_EQ(g.graph.edges(), std::vector<WhirlEdge>(expected.begin(), expected.end()));
  EXPECT_EQ(g.matching.edges(), (std::vector<WhirlEdge>{WhirlEdge(t(1, 1), t(2, 1))}));
}

TEST(GStarTest, CountsAndWhirlMembership) {
  const auto g2 = gstar(2);
  EXPECT_EQ(g2.graph.vertex_count(), 8u);
  EXPECT_EQ(g2.graph.edge_count(), 9u);
  EXPECT_EQ(g2.matching.size(), 3u);
  for (int n = 1; n <= 8; ++n) {
    const auto g = gstar(n);
    EXPECT_EQ(g.graph.vertex_count(), std::size_t{1} << (n + 1));
    EXPECT_EQ(g.matching.size(), (std::size_t{1} << n) - 1);
    for (const auto& e : g.graph.edges()) EXPECT_TRUE(is_whirl_edge(e));
    for (const auto& v : g.graph.vertices()) {
      const bool endpoint = v == TriadicRational::zero() || v == TriadicRational::one();
      EXPECT_EQ(g.matching.covers(v), !endpoint);
    }
    const auto minor = contract(g.graph, g.matching);
    EXPECT_EQ(minor.graph.vertex_count(), (std::size_t{1} << n) + 1);
    EXPECT_EQ(minor.graph.edge_count(), (std::size_t{1} << (n + 1)) - 2);
  }
}

TEST(AffineTest, PiMaps) {
  EXPECT_EQ(AffineMap::pi1()(TriadicRational::zero()), t(1, 1));
  EXPECT_EQ(AffineMap::pi1()(TriadicRational::one()), t(4, 2));
  EXPECT_EQ(AffineMap::pi2()(TriadicRational::one()), t(2, 1));
  const auto image = affine_image(level_edges(1), AffineMap::pi1());
  const std::set<WhirlEdge> got(image.begin(), image.end());
  const std::set<WhirlEdge> want{WhirlEdge(t(9, 3), t(11, 3)), WhirlEdge(t(10, 3), t(11, 3)),
                                 WhirlEdge(t(10, 3), t(12, 3))};
  EXPECT_EQ(got, want);
  for (const auto& e : image) EXPECT_EQ(edge_level(e), 3);
}

TEST(AffineTest, ShiftsLevelsByTwo) {
  const auto g = gstar(5);
  for (const auto& pi : {AffineMap::pi1(), AffineMap::pi2()}) {
    for (const auto& e : g.graph.edges()) EXPECT_EQ(edge_level(affine_image({e}, pi).front()), edge_level(e) + 2);
  }
}

TEST(AffineTest, RejectsNonTriadicImages) {
  const AffineMap half{Rational::make(1, 2), Rational::make(0, 1)};
  EXPECT_THROW(half(t(1, 1)), RangeError);
  const AffineMap out{Rational::make(1, 1), Rational::make(1, 1)};
  EXPECT_THROW(out(t(1, 1)), RangeError);
}

TEST(PhiTest, LevelOne) {
  const auto map = phi(1);
  EXPECT_EQ(map.size(), 3u);
  EXPECT_EQ(map.at(MinorVertex{{TriadicRational::zero()}}), Fraction::make(0, 1));
  EXPECT_EQ(map.at(MinorVertex{{t(1, 1), t(2, 1)}}), Fraction::make(1, 2));
  EXPECT_EQ(map.at(MinorVertex{{TriadicRational::one()}}), Fraction::make(1, 1));
}

TEST(PhiTest, OrderIsomorphismAndNesting) {
  auto previous = phi(1);
  for (int n = 2; n <= 8; ++n) {
    const auto current = phi(n);
    EXPECT_EQ(current.size(), (std::size_t{1} << n) + 1);
    EXPECT_TRUE(current.injective());
    EXPECT_TRUE(current.extends(previous)) << "n=" << n;
    // Order preserving: keys ascend, so images must ascend along blue_order,
    // which for the default seeds is ascending value.
    const Fraction* last = nullptr;
    for (const auto& [k, v] : current.pairs()) {
      if (last) {
        EXPECT_LT(*last, v);
      }
      last = &v;
    }
    previous = current;
  }
}

TEST(Theorem2Test, SmallLevels) {
  const auto a3 = theorem2_assembly(3);
  EXPECT_TRUE(a3.verified());
  EXPECT_EQ(a3.minor.graph.vertex_count(), 4u);
  EXPECT_EQ(a3.minor.graph.edge_count(), 5u);

  const auto a4 = theorem2_assembly(4);
  EXPECT_TRUE(a4.verified());
  EXPECT_EQ(a4.minor.graph.vertex_count(), 8u);
  EXPECT_EQ(a4.minor.graph.edge_count(), 13u);
  EXPECT_EQ(a4.assembly.edge_count(), 2u * 3u * ((1u << 2) - 1u) + 3u);

  EXPECT_THROW(theorem2_assembly(2), RangeError);
}

TEST(Theorem2Test, JoiningEdgesAreWhirlEdges) {
  EXPECT_EQ(edge_level(WhirlEdge(t(1, 1), t(5, 2))), 2);
  EXPECT_EQ(edge_level(WhirlEdge(t(4, 2), t(2, 1))), 2);
  EXPECT_EQ(edge_level(WhirlEdge(t(1, 1), t(2, 1))), 1);
}

}  // namespace
}  // namespace whirl
