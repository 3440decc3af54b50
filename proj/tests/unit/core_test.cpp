#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"
#include "whirl/checked.hpp"
#include "whirl/graph.hpp"
#include "whirl/whirl.hpp"

namespace whirl {
namespace {

using testing::Node;
using testing::t;

Graph<Node> make_graph(std::vector<int> vs, std::vector<std::pair<int, int>> es) {
  std::vector<Node> vertices;
  for (int v : vs) vertices.push_back({v});
  std::vector<Edge<Node>> edges;
  for (auto [a, b] : es) edges.emplace_back(Node{a}, Node{b});
  return Graph<Node>(vertices, edges);
}

TEST(TriadicTest, Canonicalizes) {
  const auto third = TriadicRational::make(3, 2);
  EXPECT_EQ(third.numerator(), 1);
  EXPECT_EQ(third.exponent(), 1);

  const auto zero = TriadicRational::make(0, 5);
  EXPECT_EQ(zero.numerator(), 0);
  EXPECT_EQ(zero.exponent(), 0);

  const auto seven_ninths = TriadicRational::make(7, 2);
  EXPECT_EQ(seven_ninths.numerator(), 7);
  EXPECT_EQ(seven_ninths.exponent(), 2);

  EXPECT_EQ(TriadicRational::make(9, 2), TriadicRational::one());
}

TEST(TriadicTest, RejectsOutOfRange) {
  EXPECT_THROW(TriadicRational::make(-1, 1), RangeError);
  EXPECT_THROW(TriadicRational::make(4, 1), RangeError);
  EXPECT_THROW(TriadicRational::make(0, -1), RangeError);
  EXPECT_THROW(TriadicRational::make(1, 40), RangeError);
}

TEST(TriadicTest, LabelsRoundTrip) {
  EXPECT_EQ(to_label(TriadicRational::zero()), "0/1");
  EXPECT_EQ(to_label(TriadicRational::one()), "1/1");
  EXPECT_EQ(to_label(t(5, 2)), "5/9");
  EXPECT_EQ(parse_triadic("3/9"), t(1, 1));
  EXPECT_THROW(parse_triadic("1/2"), ParseError);
  EXPECT_THROW(parse_triadic("x/3"), ParseError);
  EXPECT_THROW(parse_triadic("4/3"), ParseError);
}

TEST(TriadicTest, CanonicalFormIsIdempotent) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const int e = static_cast<int>(testing::draw(rng, 12));
    const auto k = static_cast<std::int64_t>(testing::draw(rng, static_cast<std::size_t>(checked::pow3(e) + 1)));
    const auto a = TriadicRational::make(k, e);
    EXPECT_EQ(TriadicRational::make(a.numerator(), a.exponent()), a);
  }
}

TEST(TriadicTest, OrderAgreesWithCrossMultiplication) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const int e1 = static_cast<int>(testing::draw(rng, 10));
    const int e2 = static_cast<int>(testing::draw(rng, 10));
    const auto k1 = static_cast<std::int64_t>(testing::draw(rng, static_cast<std::size_t>(checked::pow3(e1) + 1)));
    const auto k2 = static_cast<std::int64_t>(testing::draw(rng, static_cast<std::size_t>(checked::pow3(e2) + 1)));
    const auto a = TriadicRational::make(k1, e1);
    const auto b = TriadicRational::make(k2, e2);
    const auto lhs = k1 * checked::pow3(e2);
    const auto rhs = k2 * checked::pow3(e1);
    EXPECT_EQ(a < b, lhs < rhs);
    EXPECT_EQ(a == b, lhs == rhs);
  }
}

TEST(GraphTest, RejectsInvalidEdges) {
  EXPECT_THROW(make_graph({1, 2}, {{1, 1}}), GraphError);
  EXPECT_THROW(make_graph({1, 2}, {{1, 3}}), GraphError);
  EXPECT_THROW(make_graph({1, 2}, {{1, 2}, {2, 1}}), GraphError);
}

TEST(ContractTest, TriangleCollapsesParallelEdges) {
  const auto g = make_graph({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
  const auto c = contract(g, Matching<Node>({Edge<Node>(Node{1}, Node{2})}));
  EXPECT_EQ(c.graph.vertex_count(), 2u);
  EXPECT_EQ(c.graph.edge_count(), 1u);
  EXPECT_EQ(c.projection.at(Node{1}), c.projection.at(Node{2}));
}

TEST(ContractTest, CantorLevelOneGivesTwoEdgePath) {
  const WhirlGraph g = whirl_graph(LevelWindow::make(1, 1));
  const auto c = contract(g, Matching<TriadicRational>({WhirlEdge(t(1, 1), t(2, 1))}));
  const BranchSet<TriadicRational> zero{{TriadicRational::zero()}};
  const BranchSet<TriadicRational> middle{{t(1, 1), t(2, 1)}};
  const BranchSet<TriadicRational> one{{TriadicRational::one()}};
  EXPECT_EQ(c.graph.vertices(), (std::vector<BranchSet<TriadicRational>>{zero, middle, one}));
  EXPECT_EQ(c.graph.edge_count(), 2u);
  EXPECT_TRUE(c.graph.has_edge(zero, middle));
  EXPECT_TRUE(c.graph.has_edge(middle, one));
  EXPECT_EQ(to_label(middle), "{1/3,2/3}");
}

TEST(ContractTest, IgnoresMatchingEdgesOutsideGraph) {
  const auto g = make_graph({1, 2, 3}, {{1, 2}});
  const auto c = contract(g, Matching<Node>({Edge<Node>(Node{2}, Node{3})}));
  EXPECT_EQ(c.graph.vertex_count(), 3u);
}

TEST(ContractTest, RejectsDependentEdges) {
  EXPECT_THROW(Matching<Node>({Edge<Node>(Node{1}, Node{2}), Edge<Node>(Node{2}, Node{3})}), MatchingError);
}

TEST(ContractTest, VertexCountDropsByContractedEdges) {
  std::mt19937_64 rng(3);
  const WhirlGraph g = whirl_graph(LevelWindow::make(1, 3));
  const auto edges = g.edges();
  for (int trial = 0; trial < 50; ++trial) {
    std::set<TriadicRational> used;
    std::vector<WhirlEdge> chosen;
    for (int i = 0; i < 12; ++i) {
      const auto& e = edges[testing::draw(rng, edges.size())];
      if (used.contains(e.first) || used.contains(e.second)) continue;
      used.insert(e.first);
      used.insert(e.second);
      chosen.push_back(e);
    }
    // Include a pair that is not an edge; it must be ignored.
    if (!used.contains(t(1, 3)) && !used.contains(t(26, 27))) chosen.emplace_back(t(1, 3), t(26, 27));
    const Matching<TriadicRational> d(chosen);
    std::size_t in_graph = 0;
    for (const auto& e : d.edges()) in_graph += g.has_edge(e.first, e.second) ? 1 : 0;
    EXPECT_EQ(contract(g, d).graph.vertex_count(), g.vertex_count() - in_graph);
  }
}

TEST(VerifyIsoTest, IdentityAndCounts) {
  const auto g = make_graph({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}});
  VertexMap<Node, Node> id;
  for (const auto& v : g.vertices()) id.set(v, v);
  EXPECT_TRUE(verify_iso(id, g, g));

  const auto h = make_graph({1, 2, 3, 4}, {{1, 2}, {2, 3}});
  EXPECT_FALSE(verify_iso(id, g, h));
}

TEST(VerifyIsoTest, RejectsPartialOrForeignMaps) {
  const auto g = make_graph({1, 2}, {{1, 2}});
  VertexMap<Node, Node> partial;
  partial.set(Node{1}, Node{1});
  EXPECT_THROW(verify_iso(partial, g, g), MapError);
  VertexMap<Node, Node> foreign;
  foreign.set(Node{1}, Node{1});
  foreign.set(Node{2}, Node{9});
  EXPECT_THROW(verify_iso(foreign, g, g), MapError);
}

TEST(VerifyIsoTest, SymmetricUnderInverse) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(testing::draw(rng, 6));
    std::vector<int> vs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
    std::vector<std::pair<int, int>> es1, es2;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (testing::draw(rng, 2)) es1.emplace_back(a, b);
        if (testing::draw(rng, 2)) es2.emplace_back(a, b);
      }
    }
    const auto g = make_graph(vs, es1);
    // Half the time H is a relabelled copy of G, otherwise random.
    std::vector<int> perm = vs;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[testing::draw(rng, i)]);
    if (trial % 2 == 0) {
      es2.clear();
      for (auto [a, b] : es1) es2.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    }
    const auto h = make_graph(vs, es2);
    VertexMap<Node, Node> f;
    for (int i = 0; i < n; ++i) f.set(Node{i}, Node{perm[static_cast<std::size_t>(i)]});
    EXPECT_EQ(verify_iso(f, g, h), verify_iso(f.inverse(), h, g));
    if (trial % 2 == 0) {
      EXPECT_TRUE(verify_iso(f, g, h));
    }
  }
}

TEST(SeparationTest, ThetaOneProofSeparation) {
  const WhirlGraph g = whirl_graph(LevelWindow::make(1, 2));
  std::set<TriadicRational> a, b;
  for (const auto& x : g.vertices()) {
    if (!(TriadicRational::zero() < x && x < t(1, 1))) a.insert(x);
    if (x <= t(1, 1)) b.insert(x);
  }
  const auto check = is_separation(g, a, b);
  EXPECT_TRUE(check.is_separation);
  EXPECT_EQ(check.separator, (std::set<TriadicRational>{TriadicRational::zero(), t(1, 1)}));
}

TEST(SeparationTest, SmallCases) {
  const auto path = make_graph({1, 2, 3}, {{1, 2}, {2, 3}});
  auto check = is_separation(path, {Node{1}, Node{2}}, {Node{2}, Node{3}});
  EXPECT_TRUE(check.is_separation);
  EXPECT_EQ(check.separator, std::set<Node>{Node{2}});

  const auto edge = make_graph({1, 2}, {{1, 2}});
  EXPECT_FALSE(is_separation(edge, {Node{1}}, {Node{2}}).is_separation);
  EXPECT_THROW(is_separation(path, {Node{1}}, {Node{2}}), CoverageError);
}

TEST(SeparationTest, SymmetricInSides) {
  std::mt19937_64 rng(9);
  const WhirlGraph g = whirl_graph(LevelWindow::make(1, 2));
  for (int trial = 0; trial < 200; ++trial) {
    std::set<TriadicRational> a, b;
    for (const auto& x : g.vertices()) {
      switch (testing::draw(rng, 3)) {
        case 0: a.insert(x); break;
        case 1: b.insert(x); break;
        default: a.insert(x); b.insert(x);
      }
    }
    const auto ab = is_separation(g, a, b);
    const auto ba = is_separation(g, b, a);
    EXPECT_EQ(ab.is_separation, ba.is_separation);
    EXPECT_EQ(ab.separator, ba.separator);
  }
}

}  // namespace
}  // namespace whirl
