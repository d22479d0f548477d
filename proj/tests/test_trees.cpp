#include <gtest/gtest.h>

#include <algorithm>
#include <queue>

#include "support/oracle.hpp"
#include "tistar/transmission.hpp"
#include "tistar/trees.hpp"

using namespace tistar;

namespace {

std::vector<std::size_t> bfs_depth(const TreeGraph& g, std::size_t src) {
  std::vector<std::size_t> d(g.vertex_count(), SIZE_MAX);
  std::queue<std::size_t> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto v : g.neighbors(u))
      if (d[v] == SIZE_MAX) {
        d[v] = d[u] + 1;
        q.push(v);
      }
  }
  return d;
}

std::size_t count_degree_at_least(const TreeGraph& g, std::size_t deg) {
  std::size_t c = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) c += g.degree(v) >= deg;
  return c;
}

std::vector<std::int64_t> sorted_transmissions(const TreeGraph& g) {
  auto v = bfs_transmissions(g).values();
  std::sort(v.begin(), v.end());
  return v;
}

void expect_well_formed(const TreeGraph& g, std::int64_t n) {
  ASSERT_EQ(g.vertex_count(), static_cast<std::size_t>(n));
  EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(n - 1));
  auto d = bfs_depth(g, 0);
  EXPECT_TRUE(std::none_of(d.begin(), d.end(), [](auto x) { return x == SIZE_MAX; }));
  for (std::size_t v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.index_of(g.label(v)), v);
}

}  // namespace

TEST(Order, Starlike) {
  EXPECT_EQ(order(StarlikeSpec{{7, 6, 3, 1}}), 18);
  EXPECT_EQ(order(StarlikeSpec{{1, 1, 1}}), 4);
  EXPECT_EQ(order(StarlikeSpec{{1, 4, 5}}), 11);
}

TEST(Order, DoubleStarlike) {
  EXPECT_EQ(order(DoubleStarlikeSpec{1, {6, 5}, {2, 1}}), 16);
  EXPECT_EQ(order(DoubleStarlikeSpec{1, {1, 1}, {1, 1}}), 6);
  EXPECT_EQ(order(DoubleStarlikeSpec{4, {2, 1}, {2, 1}}), 11);
}

TEST(BuildStarlike, StarOnFourVertices) {
  auto g = build_starlike({{1, 1, 1}});
  expect_well_formed(g, 4);
  EXPECT_EQ(g.degree(0), 3u);
}

TEST(BuildStarlike, XTreeHasOneDegreeFourVertex) {
  auto g = build_starlike({{7, 6, 3, 1}});
  expect_well_formed(g, 18);
  std::size_t fours = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) fours += g.degree(v) == 4;
  EXPECT_EQ(fours, 1u);
  EXPECT_EQ(count_degree_at_least(g, 3), 1u);
}

TEST(BuildStarlike, LeafDistanceMatchesPosition) {
  auto g = build_starlike({{1, 2, 3}});
  expect_well_formed(g, 7);
  auto d = bfs_depth(g, g.index_of({Side::A, 0, 0}));
  EXPECT_EQ(d[g.index_of({Side::A, 3, 3})], 3u);
  EXPECT_EQ(g.degree(g.index_of({Side::A, 3, 3})), 1u);
}

TEST(BuildStarlike, RejectsInvalidSpecs) {
  EXPECT_THROW(build_starlike({{1, 1}}), InvalidSpec);
  EXPECT_THROW(build_starlike({{1, 0, 2}}), InvalidSpec);
}

TEST(BuildDoubleStarlike, HTreeHasTwoDegreeThreeVertices) {
  auto g = build_double_starlike({1, {6, 5}, {2, 1}});
  expect_well_formed(g, 16);
  std::size_t threes = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) threes += g.degree(v) == 3;
  EXPECT_EQ(threes, 2u);
}

TEST(BuildDoubleStarlike, HubsAtSpineDistance) {
  auto g = build_double_starlike({2, {1, 1}, {1, 1}});
  expect_well_formed(g, 7);
  auto d = bfs_depth(g, g.index_of({Side::Spine, 0, 0}));
  EXPECT_EQ(d[g.index_of({Side::Spine, 0, 2})], 2u);
  EXPECT_EQ(g.degree(g.index_of({Side::Spine, 0, 2})), 3u);
}

TEST(BuildDoubleStarlike, SwappingSidesGivesIsomorphicTree) {
  DoubleStarlikeSpec s{1, {2, 1}, {2, 1}};
  auto g = build_double_starlike(s);
  expect_well_formed(g, 8);
  auto h = build_double_starlike({1, s.b_branches, s.a_branches});
  EXPECT_EQ(sorted_transmissions(g), sorted_transmissions(h));
}

TEST(BuildDoubleStarlike, RejectsInvalidSpecs) {
  EXPECT_THROW(build_double_starlike({1, {1}, {1, 1}}), InvalidSpec);
  EXPECT_THROW(build_double_starlike({1, {1, 1}, {1}}), InvalidSpec);
  EXPECT_THROW(build_double_starlike({0, {1, 1}, {1, 1}}), InvalidSpec);
  EXPECT_THROW(build_double_starlike({1, {1, 0}, {1, 1}}), InvalidSpec);
}

TEST(Normalize, SwapsHeavierBSide) {
  auto n = normalize_double_starlike({1, {2, 1}, {6, 5}});
  EXPECT_EQ(n, (DoubleStarlikeSpec{1, {6, 5}, {2, 1}}));
}

TEST(Normalize, KeepsNormalizedAndTiedSpecs) {
  DoubleStarlikeSpec a{1, {6, 5}, {2, 1}};
  EXPECT_EQ(normalize_double_starlike(a), a);
  DoubleStarlikeSpec tie{3, {2, 2}, {2, 2}};
  EXPECT_EQ(normalize_double_starlike(tie), tie);
}

TEST(Normalize, IdempotentAndIsomorphic) {
  for (const auto& s : oracle::all_double(2, 3, 12, 3)) {
    auto n = normalize_double_starlike(s);
    EXPECT_EQ(normalize_double_starlike(n), n);
    EXPECT_GE(n.a_total(), n.b_total());
    EXPECT_EQ(sorted_transmissions(build_double_starlike(s)),
              sorted_transmissions(build_double_starlike(n)));
  }
}

TEST(TreeGraphProperty, StarlikeStructure) {
  for (int k = 3; k <= 5; ++k)
    for (const auto& s : oracle::all_starlike(k, 14)) {
      auto g = build_starlike(s);
      expect_well_formed(g, order(s));
      EXPECT_EQ(count_degree_at_least(g, 3), 1u);
      for (std::size_t i = 0; i < s.branches.size(); ++i)
        for (std::int64_t j = 0; j <= s.branches[i]; ++j) {
          VertexLabel l{Side::A, static_cast<std::int64_t>(i + 1), j};
          EXPECT_EQ(canonical_index(s, l), g.index_of(l));
        }
    }
}

TEST(TreeGraphProperty, DoubleStarlikeStructure) {
  for (const auto& s : oracle::all_double(2, 3, 13, 4)) {
    auto g = build_double_starlike(s);
    expect_well_formed(g, order(s));
    ASSERT_EQ(count_degree_at_least(g, 3), 2u);
    auto d = bfs_depth(g, g.index_of({Side::Spine, 0, 0}));
    EXPECT_EQ(d[g.index_of({Side::Spine, 0, s.c})], static_cast<std::size_t>(s.c));
    for (std::int64_t y = 0; y <= s.c; ++y) {
      VertexLabel l{Side::Spine, 0, y};
      EXPECT_EQ(canonical_index(s, l), g.index_of(l));
    }
    for (std::size_t i = 0; i < s.b_branches.size(); ++i)
      for (std::int64_t j = 0; j <= s.b_branches[i]; ++j) {
        VertexLabel l{Side::B, static_cast<std::int64_t>(i + 1), j};
        EXPECT_EQ(canonical_index(s, l), g.index_of(l));
      }
  }
}

TEST(TreeGraph, HubsComeFirst) {
  auto g = build_double_starlike({3, {2, 1}, {1, 1}});
  EXPECT_EQ(g.label(0), (VertexLabel{Side::Spine, 0, 0}));
  EXPECT_EQ(g.label(1), (VertexLabel{Side::Spine, 0, 3}));
  EXPECT_EQ(g.index_of({Side::A, 1, 0}), 0u);
  EXPECT_EQ(g.index_of({Side::B, 2, 0}), 1u);
  EXPECT_THROW(g.index_of({Side::A, 3, 1}), std::out_of_range);
  EXPECT_THROW(g.index_of({Side::B, 1, 2}), std::out_of_range);
}

TEST(SwapSides, MapsToSameVertexOfMirroredTree) {
  DoubleStarlikeSpec s{3, {4, 2}, {1, 1}};
  DoubleStarlikeSpec m{3, s.b_branches, s.a_branches};
  auto ts = bfs_transmissions(build_double_starlike(s));
  auto tm = bfs_transmissions(build_double_starlike(m));
  for (const auto& l : ts.graph().labels()) EXPECT_EQ(ts.at(l), tm.at(swap_sides(l, s.c)));
}

TEST(SpecText, ParseAndFormat) {
  auto p = parse_spec("S:7,6,3,1");
  ASSERT_EQ(p.kind, TreeKind::Starlike);
  EXPECT_EQ(p.starlike.branches, (std::vector<std::int64_t>{7, 6, 3, 1}));
  EXPECT_EQ(format_spec(p.starlike), "S:7,6,3,1");

  auto q = parse_spec(" DS: 1 ; 6, 5 ; 2,1 ");
  ASSERT_EQ(q.kind, TreeKind::DoubleStarlike);
  EXPECT_EQ(q.double_starlike, (DoubleStarlikeSpec{1, {6, 5}, {2, 1}}));
  EXPECT_EQ(format_spec(q.double_starlike), "DS:1;6,5;2,1");
}

TEST(SpecText, RejectsMalformed) {
  for (auto bad : {"", "S:", "S:1,,2", "X:1,2,3", "DS:1;2,1", "DS:a;1,1;1,1", "S:1,2,3x"})
    EXPECT_THROW(parse_spec(bad), std::invalid_argument) << bad;
}

TEST(Labels, Names) {
  EXPECT_EQ(to_string(VertexLabel{Side::A, 2, 3}), "v(2,3)");
  EXPECT_EQ(to_string(VertexLabel{Side::Spine, 0, 4}), "v(0,4)");
  EXPECT_EQ(to_string(VertexLabel{Side::B, 1, 1}), "u(1,1)");
  for (auto s : {Side::A, Side::Spine, Side::B}) EXPECT_EQ(side_from_string(to_string(s)), s);
}
