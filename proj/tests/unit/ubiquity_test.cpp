#include <gtest/gtest.h>

#include "test_support.hpp"
#include "whirl/ubiquity.hpp"

namespace whirl {
namespace {

using testing::t;

WhirlPath wpath(std::initializer_list<std::pair<std::int64_t, int>> xs) {
  std::vector<TriadicRational> out;
  for (auto [k, e] : xs) out.push_back(t(k, e));
  return WhirlPath(out);
}

// 0, 2/9, 1/9, 1/3, 1: one level-2 zigzag, then the level-1 edge {1/3, 1}.
WhirlPath short_zigzag() { return wpath({{0, 0}, {2, 2}, {1, 2}, {1, 1}, {1, 0}}); }

TEST(ContainmentLevelTest, Examples) {
  EXPECT_EQ(minimal_containment_level(hamilton_path(2)), 2);
  EXPECT_EQ(minimal_containment_level(hamilton_path(1)), 1);
  EXPECT_EQ(minimal_containment_level(short_zigzag()), 2);
  EXPECT_THROW(minimal_containment_level(wpath({{0, 0}, {1, 1}})), NotAnEdgeError);
  EXPECT_THROW(minimal_containment_level(wpath({{0, 0}})), PreconditionError);
}

TEST(ContainmentLevelTest, AgreesWithSubgraphSearch) {
  std::mt19937_64 rng(8);
  const auto host = whirl_graph(LevelWindow::make(1, 4));
  for (int trial = 0; trial < 100; ++trial) {
    const auto& vs = host.vertices();
    const auto u = vs[testing::draw(rng, vs.size())];
    const auto v = vs[testing::draw(rng, vs.size())];
    if (u == v) continue;
    const auto p = random_path(host, u, v, rng);
    ASSERT_TRUE(p.has_value());
    int least = 0;
    for (int m = 1; m <= 4 && least == 0; ++m) {
      if (is_path_in(*p, whirl_graph(LevelWindow::make(1, m)))) least = m;
    }
    EXPECT_EQ(minimal_containment_level(*p), least);
  }
}

TEST(ZigzagTest, Examples) {
  const auto w = zigzag_window(short_zigzag());
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->level, 2);
  EXPECT_EQ(w->block, 0);
  EXPECT_EQ(w->x, t(0, 0));
  EXPECT_EQ(w->y, t(1, 1));
  EXPECT_EQ(w->subpath, wpath({{0, 0}, {2, 2}, {1, 2}, {1, 1}}));
  EXPECT_FALSE(w->reversed);

  const auto h1 = zigzag_window(hamilton_path(1));
  ASSERT_TRUE(h1.has_value());
  EXPECT_EQ(h1->x, t(0, 0));
  EXPECT_EQ(h1->y, t(1, 0));
  EXPECT_EQ(h1->subpath, hamilton_path(1));

  const auto h2 = zigzag_window(hamilton_path(2));
  ASSERT_TRUE(h2.has_value());
  EXPECT_EQ(h2->level, 2);
  EXPECT_EQ(h2->x, t(0, 0));
  EXPECT_EQ(h2->y, t(1, 1));
}

TEST(ZigzagTest, ReversedAndMissing) {
  const auto back = zigzag_window(hamilton_path(2).reversed());
  ASSERT_TRUE(back.has_value());
  EXPECT_TRUE(back->reversed);
  EXPECT_EQ(back->x, t(2, 1));
  EXPECT_EQ(back->y, t(1, 0));
  // A lone level-2 edge cannot contain a zigzag.
  EXPECT_FALSE(zigzag_window(wpath({{0, 0}, {2, 2}})).has_value());
}

// The edge {1/3, 1} has level 1, so this P lies in no G_{>=N} with N > 1 and
// the precondition check rejects it. The conflicting pair is still there.
TEST(RefuteTest, ShortZigzagAgainstLevelThree) {
  EXPECT_THROW(refute_compatibility(short_zigzag(), hamilton_path(3)), PreconditionError);
  const auto c = find_order_conflict(short_zigzag(), hamilton_path(3));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->first, t(2, 2));
  EXPECT_EQ(c->second, t(1, 2));
}

TEST(RefuteTest, HamiltonPaths) {
  const auto r = refute_compatibility(hamilton_path(2), hamilton_path(3), 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->first, t(1, 2));
  EXPECT_EQ(r->second, t(2, 2));
  EXPECT_FALSE(order_compatible(hamilton_path(2), hamilton_path(3)));
}

TEST(RefuteTest, Preconditions) {
  EXPECT_THROW(refute_compatibility(hamilton_path(1), hamilton_path(2)), PreconditionError);
  EXPECT_THROW(refute_compatibility(hamilton_path(2), hamilton_path(2)), PreconditionError);
  EXPECT_THROW(refute_compatibility(hamilton_path(2), hamilton_path(3), 1), PreconditionError);
  EXPECT_THROW(refute_compatibility(hamilton_path(2).reversed(), hamilton_path(3).reversed()), PreconditionError);
  EXPECT_THROW(refute_compatibility(hamilton_path(2), short_zigzag()), PreconditionError);
}

TEST(BruteForceTest, Examples) {
  EXPECT_FALSE(exists_compatible_bruteforce(short_zigzag(), LevelWindow::make(3, 3)));
  EXPECT_TRUE(exists_compatible_bruteforce(hamilton_path(1), LevelWindow::make(1, 1)));
  EXPECT_FALSE(exists_compatible_bruteforce(hamilton_path(1), LevelWindow::make(2, 2)));
  // Overlapping levels may well contain a compatible path.
  EXPECT_TRUE(exists_compatible_bruteforce(short_zigzag(), LevelWindow::make(1, 2)));
}

TEST(BruteForceTest, BudgetIsNotSilent) {
  EXPECT_THROW(exists_compatible_bruteforce(hamilton_path(1), LevelWindow::make(1, 3), 5), BudgetExceeded);
}

TEST(EnumerateTest, CountsAndLengthBound) {
  const auto g = whirl_graph(LevelWindow::make(2, 3));
  std::size_t all = 0;
  const auto o = enumerate_paths(g, t(0, 0), t(1, 0), 10, kDefaultBudget, [&](const WhirlPath& p) {
    EXPECT_LE(p.edge_count(), 10u);
    EXPECT_TRUE(is_path_in(p, g));
    ++all;
    return true;
  });
  EXPECT_EQ(o.status, SearchStatus::kComplete);
  EXPECT_EQ(all, 7u);

  std::size_t seen = 0;
  const auto stopped = enumerate_paths(g, t(0, 0), t(1, 0), std::nullopt, kDefaultBudget, [&](const WhirlPath&) {
    return ++seen < 2;
  });
  EXPECT_EQ(stopped.status, SearchStatus::kStopped);
  EXPECT_EQ(seen, 2u);
}

TEST(SweepTest, SmallWindows) {
  const auto s22 = sweep_incompatibility(t(0, 0), t(1, 0), LevelWindow::make(2, 2), 10);
  EXPECT_EQ(s22.paths, 1u);
  EXPECT_TRUE(s22.ok());
  const auto lemma = sweep_lemma22(2, LevelWindow::make(2, 2), 10);
  EXPECT_EQ(lemma.pairs, 6u);
  EXPECT_TRUE(lemma.ok());
}

}  // namespace
}  // namespace whirl
