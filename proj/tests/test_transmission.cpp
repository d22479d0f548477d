#include <gtest/gtest.h>

#include <algorithm>
#include <queue>

#include "support/oracle.hpp"
#include "tistar/transmission.hpp"

using namespace tistar;

namespace {

std::vector<std::int64_t> sorted(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Vertices strictly closer to x than to y, via BFS from both ends.
std::int64_t closer_count(const TreeGraph& g, std::size_t x, std::size_t y) {
  auto bfs = [&](std::size_t s) {
    std::vector<std::int64_t> d(g.vertex_count(), -1);
    std::queue<std::size_t> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto v : g.neighbors(u))
        if (d[v] < 0) d[v] = d[u] + 1, q.push(v);
    }
    return d;
  };
  auto dx = bfs(x), dy = bfs(y);
  std::int64_t c = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) c += dx[v] < dy[v];
  return c;
}

}  // namespace

TEST(BfsTransmissions, StarOnFourVertices) {
  auto t = bfs_transmissions(build_starlike({{1, 1, 1}}));
  EXPECT_EQ(t.at({Side::A, 0, 0}), 3);
  for (std::int64_t i = 1; i <= 3; ++i) EXPECT_EQ(t.at({Side::A, i, 1}), 5);
}

TEST(BfsTransmissions, SmallSpiderMultiset) {
  auto t = bfs_transmissions(build_starlike({{1, 2, 3}}));
  EXPECT_EQ(sorted(t.values()), (std::vector<std::int64_t>{10, 11, 13, 14, 15, 18, 19}));
  EXPECT_EQ(sorted(t.values()), sorted(oracle::transmissions(oracle::starlike({1, 2, 3}))));
}

TEST(IsTiBruteforce, Examples) {
  EXPECT_TRUE(is_ti_bruteforce(build_starlike({{1, 2, 3}})).is_ti);

  auto star = is_ti_bruteforce(build_starlike({{1, 1, 1}}));
  ASSERT_FALSE(star.is_ti);
  EXPECT_EQ(star.witness->first, (VertexLabel{Side::A, 1, 1}));
  EXPECT_EQ(star.witness->second, (VertexLabel{Side::A, 2, 1}));
  EXPECT_EQ(star.witness->transmission, 5);

  auto s145 = is_ti_bruteforce(build_starlike({{1, 4, 5}}));
  ASSERT_FALSE(s145.is_ti);
  EXPECT_EQ(s145.witness->first, (VertexLabel{Side::A, 1, 1}));
  EXPECT_EQ(s145.witness->second, (VertexLabel{Side::A, 3, 3}));
  EXPECT_EQ(s145.witness->transmission, 35);
}

TEST(IsTiBruteforce, WitnessIsLexicographicallySmallestPair) {
  for (const auto& s : oracle::all_starlike(3, 12)) {
    auto g = build_starlike(s);
    auto t = bfs_transmissions(g);
    auto v = is_ti_bruteforce(t);
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = 0; i < t.size() && !best; ++i)
      for (std::size_t j = i + 1; j < t.size() && !best; ++j)
        if (t[i] == t[j]) best = {i, j};
    ASSERT_EQ(v.is_ti, !best.has_value());
    if (best) {
      EXPECT_EQ(g.index_of(v.witness->first), best->first);
      EXPECT_EQ(g.index_of(v.witness->second), best->second);
    }
  }
}

TEST(ClosedFormStarlike, Examples) {
  EXPECT_EQ(closed_form_offset_starlike({{7, 6, 3, 1}}, 4, 1), 16);
  EXPECT_EQ(closed_form_offset_starlike({{1, 4, 5}}, 3, 3), 9);
  EXPECT_EQ(closed_form_offset_starlike({{1, 4, 5}}, 2, 0), 0);
  EXPECT_THROW(closed_form_offset_starlike({{1, 4, 5}}, 4, 1), std::out_of_range);
  EXPECT_THROW(closed_form_offset_starlike({{1, 4, 5}}, 1, 2), std::out_of_range);
}

TEST(ClosedFormDouble, Examples) {
  DoubleStarlikeSpec h{1, {6, 5}, {2, 1}};
  auto off = closed_form_offsets_double(h);
  EXPECT_EQ(off.hub_delta, 8);
  EXPECT_EQ(off.b[0][1], 12);
  EXPECT_EQ(off.a[0][0], 0);
  EXPECT_EQ(off.spine[0], 0);
  EXPECT_EQ(closed_form_offset_double(h, {Side::B, 1, 1}), 12);
  EXPECT_THROW(closed_form_offset_double(h, {Side::B, 3, 1}), std::out_of_range);
}

TEST(ClosedFormStarlike, MatchesFloydWarshall) {
  for (int k = 3; k <= 5; ++k)
    for (const auto& s : oracle::all_starlike(k, 16)) {
      auto tree = oracle::from(s);
      auto tr = oracle::transmissions(tree);
      EXPECT_EQ(hub_transmission(s), tr[0]);
      for (std::size_t i = 0; i < s.branches.size(); ++i)
        for (std::int64_t j = 0; j <= s.branches[i]; ++j) {
          const auto b = static_cast<std::int64_t>(i + 1);
          EXPECT_EQ(closed_form_offset_starlike(s, b, j), tr[tree.id(Side::A, b, j)] - tr[0]);
          EXPECT_EQ(closed_form_transmission(s, {Side::A, b, j}), tr[tree.id(Side::A, b, j)]);
        }
    }
}

TEST(ClosedFormDouble, MatchesFloydWarshall) {
  for (const auto& raw : oracle::all_double(2, 3, 14, 5)) {
    const auto s = normalize_double_starlike(raw);
    auto tree = oracle::from(s);
    auto tr = oracle::transmissions(tree);
    auto off = closed_form_offsets_double(s);
    const int v00 = tree.id(Side::Spine, 0, 0);
    EXPECT_EQ(off.hub_delta, tr[tree.id(Side::Spine, 0, s.c)] - tr[v00]);
    for (std::int64_t y = 0; y <= s.c; ++y)
      EXPECT_EQ(off.spine[y], tr[tree.id(Side::Spine, 0, y)] - tr[v00]);
    for (std::size_t i = 0; i < s.a_branches.size(); ++i)
      for (std::int64_t j = 0; j <= s.a_branches[i]; ++j)
        EXPECT_EQ(off.a[i][j], tr[tree.id(Side::A, i + 1, j)] - tr[v00]);
    for (std::size_t i = 0; i < s.b_branches.size(); ++i)
      for (std::int64_t j = 0; j <= s.b_branches[i]; ++j)
        EXPECT_EQ(off.b[i][j], tr[tree.id(Side::B, i + 1, j)] - tr[tree.id(Side::B, i + 1, 0)]);
    EXPECT_EQ(hub_transmission(s), tr[v00]);
    auto raw_tree = oracle::from(raw);
    auto raw_tr = oracle::transmissions(raw_tree);
    const auto raw_graph = build_double_starlike(raw);
    for (const auto& l : raw_graph.labels())
      EXPECT_EQ(closed_form_transmission(raw, l), raw_tr[raw_tree.id(l)]);
  }
}

TEST(TransmissionProperty, NeighborDeltaLaw) {
  for (const auto& s : oracle::all_double(2, 2, 11, 3)) {
    auto g = build_double_starlike(s);
    auto t = bfs_transmissions(g);
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
      for (auto y : g.neighbors(x))
        EXPECT_EQ(t[y] - t[x], closer_count(g, x, y) - closer_count(g, y, x));
  }
}

TEST(TransmissionProperty, BranchesIncreaseBelowHalfOrder) {
  for (const auto& s : oracle::all_starlike(4, 16)) {
    auto t = bfs_transmissions(build_starlike(s));
    const auto n = order(s);
    for (std::size_t i = 0; i < s.branches.size(); ++i) {
      if (2 * s.branches[i] >= n) continue;
      const auto b = static_cast<std::int64_t>(i + 1);
      for (std::int64_t j = 1; j <= s.branches[i]; ++j)
        EXPECT_LT(t.at({Side::A, b, j - 1}), t.at({Side::A, b, j}));
    }
  }
}

TEST(TransmissionProperty, EvenTotalAndLowerBound) {
  for (const auto& s : oracle::all_starlike(3, 15)) {
    auto t = bfs_transmissions(build_starlike(s));
    const auto n = static_cast<std::int64_t>(t.size());
    EXPECT_EQ(t.total() % 2, 0);
    for (auto v : t.values()) EXPECT_GE(v, n - 1);
  }
}
