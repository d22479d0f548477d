#pragma once

// Test-side oracle: builds its own edge list for a starlike or double
// starlike tree and computes all-pairs distances with Floyd-Warshall.  It
// shares nothing with the library besides the spec structs and labels.

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "tistar/trees.hpp"

namespace oracle {

using tistar::Side;

struct Tree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  // (side, branch, position) -> vertex id; position-0 aliases included.
  std::map<std::tuple<int, std::int64_t, std::int64_t>, int> ids;

  int id(Side side, std::int64_t branch, std::int64_t pos) const {
    return ids.at({static_cast<int>(side), branch, pos});
  }
  int id(const tistar::VertexLabel& l) const { return id(l.side, l.branch, l.position); }
};

inline void add_path(Tree& t, int root, Side side, std::int64_t branch, std::int64_t len) {
  t.ids[{static_cast<int>(side), branch, 0}] = root;
  int prev = root;
  for (std::int64_t j = 1; j <= len; ++j) {
    int v = t.n++;
    t.edges.emplace_back(prev, v);
    t.ids[{static_cast<int>(side), branch, j}] = v;
    prev = v;
  }
}

inline Tree starlike(const std::vector<std::int64_t>& branches) {
  Tree t;
  t.n = 1;
  t.ids[{static_cast<int>(Side::A), 0, 0}] = 0;
  for (std::size_t i = 0; i < branches.size(); ++i)
    add_path(t, 0, Side::A, static_cast<std::int64_t>(i + 1), branches[i]);
  return t;
}

inline Tree double_starlike(std::int64_t c, const std::vector<std::int64_t>& a,
                            const std::vector<std::int64_t>& b) {
  Tree t;
  t.n = 1;
  t.ids[{static_cast<int>(Side::A), 0, 0}] = 0;
  add_path(t, 0, Side::Spine, 0, c);
  const int far = t.id(Side::Spine, 0, c);
  for (std::size_t i = 0; i < a.size(); ++i)
    add_path(t, 0, Side::A, static_cast<std::int64_t>(i + 1), a[i]);
  for (std::size_t i = 0; i < b.size(); ++i)
    add_path(t, far, Side::B, static_cast<std::int64_t>(i + 1), b[i]);
  return t;
}

inline Tree from(const tistar::StarlikeSpec& s) { return starlike(s.branches); }
inline Tree from(const tistar::DoubleStarlikeSpec& s) {
  return double_starlike(s.c, s.a_branches, s.b_branches);
}

inline std::vector<std::vector<std::int64_t>> distances(const Tree& t) {
  const std::int64_t inf = 1'000'000'000;
  std::vector<std::vector<std::int64_t>> d(t.n, std::vector<std::int64_t>(t.n, inf));
  for (int i = 0; i < t.n; ++i) d[i][i] = 0;
  for (auto [u, v] : t.edges) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < t.n; ++k)
    for (int i = 0; i < t.n; ++i)
      for (int j = 0; j < t.n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<std::int64_t> transmissions(const Tree& t) {
  auto d = distances(t);
  std::vector<std::int64_t> tr(t.n, 0);
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) tr[i] += d[i][j];
  return tr;
}

inline bool is_ti(const Tree& t) {
  auto tr = transmissions(t);
  std::sort(tr.begin(), tr.end());
  return std::adjacent_find(tr.begin(), tr.end()) == tr.end();
}

// All nondecreasing k-tuples of positive integers with the given sum.
inline void tuples(int k, std::int64_t total, std::int64_t min_part, std::vector<std::int64_t>& cur,
                   std::vector<std::vector<std::int64_t>>& out) {
  if (k == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (std::int64_t v = min_part; v * k <= total; ++v) {
    cur.push_back(v);
    tuples(k - 1, total - v, v, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::int64_t>> tuples(int k, std::int64_t total) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  tuples(k, total, 1, cur, out);
  return out;
}

// Every starlike spec with k branches and order <= max_n, each branch
// permutation included once (nondecreasing order).
inline std::vector<tistar::StarlikeSpec> all_starlike(int k, std::int64_t max_n) {
  std::vector<tistar::StarlikeSpec> out;
  for (std::int64_t n = k + 1; n <= max_n; ++n)
    for (auto& t : tuples(k, n - 1)) out.push_back({t});
  return out;
}

// Every double starlike spec with k A-branches, m B-branches, C <= max_c
// and order <= max_n, in both orientations.
inline std::vector<tistar::DoubleStarlikeSpec> all_double(int k, int m, std::int64_t max_n,
                                                          std::int64_t max_c) {
  std::vector<tistar::DoubleStarlikeSpec> out;
  for (std::int64_t c = 1; c <= max_c; ++c)
    for (std::int64_t sa = k; c + 1 + sa + m <= max_n; ++sa)
      for (std::int64_t sb = m; c + 1 + sa + sb <= max_n; ++sb)
        for (auto& a : tuples(k, sa))
          for (auto& b : tuples(m, sb)) out.push_back({c, a, b});
  return out;
}

}  // namespace oracle
