#pragma once

#include <cstdint>
#include <vector>

#include "tistar/trees.hpp"
#include "tistar/verdict.hpp"

namespace tistar {

// Tr(u) for every vertex, indexed by canonical vertex index.
class TransmissionTable {
 public:
  TransmissionTable() = default;
  TransmissionTable(const TreeGraph& graph, std::vector<std::int64_t> values);

  std::size_t size() const { return values_.size(); }
  std::int64_t operator[](std::size_t v) const { return values_.at(v); }
  std::int64_t at(const VertexLabel& label) const { return values_.at(graph_.index_of(label)); }
  const std::vector<std::int64_t>& values() const { return values_; }
  const TreeGraph& graph() const { return graph_; }
  std::int64_t total() const;

 private:
  TreeGraph graph_;
  std::vector<std::int64_t> values_;
};

// One BFS per vertex.
TransmissionTable bfs_transmissions(const TreeGraph& graph);

// TI iff all transmissions differ.  On failure the witness is the
// lexicographically smallest pair of canonical indices with equal
// transmission.
Verdict is_ti_bruteforce(const TreeGraph& graph);
Verdict is_ti_bruteforce(const TransmissionTable& table);

// Tr(v_{ij}) - Tr(v_{i0}) = j (n - 2A_i + j - 1).  `branch` is 1-based.
std::int64_t closed_form_offset_starlike(const StarlikeSpec& spec, std::int64_t branch,
                                         std::int64_t position);

struct DoubleOffsets {
  // a[i][j] = Tr(v_{i+1,j}) - Tr(v_{00}); b[i][j] = Tr(u_{i+1,j}) - Tr(u_{i+1,0});
  // spine[j] = Tr(v_{0j}) - Tr(v_{00}).
  std::vector<std::vector<std::int64_t>> a;
  std::vector<std::vector<std::int64_t>> b;
  std::vector<std::int64_t> spine;
  // Tr(v_{0C}) - Tr(v_{00}) = C (A_* - B_*).
  std::int64_t hub_delta = 0;
};

DoubleOffsets closed_form_offsets_double(const DoubleStarlikeSpec& spec);

std::int64_t closed_form_offset_double(const DoubleStarlikeSpec& spec, const VertexLabel& label);

// Exact transmissions without building a graph: hub sums of path lengths
// plus the offsets above.
std::int64_t hub_transmission(const StarlikeSpec& spec);
std::int64_t hub_transmission(const DoubleStarlikeSpec& spec);
std::int64_t closed_form_transmission(const StarlikeSpec& spec, const VertexLabel& label);
std::int64_t closed_form_transmission(const DoubleStarlikeSpec& spec, const VertexLabel& label);

}  // namespace tistar
