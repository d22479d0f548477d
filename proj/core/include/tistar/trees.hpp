#pragma once

// Starlike and double starlike tree descriptions and their explicit
// labeled graphs.
//
//   S(A_1, ..., A_k)          one hub with k pendent paths of the given lengths
//   DS(C; A_1..A_k; B_1..B_m) two hubs at distance C carrying the A- and
//                             B-paths respectively
//
// Vertex labels follow the usual v_{ij} / u_{ij} convention: v(i,j) is the
// vertex at distance j from the hub along A-branch i (1-based), u(i,j) the
// same along B-branch i, and v(0,j) the j-th vertex of the spine joining the
// two hubs.  Position 0 on any branch is the hub the branch hangs from.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tistar {

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct StarlikeSpec {
  std::vector<std::int64_t> branches;

  void validate() const;
  bool operator==(const StarlikeSpec&) const = default;
};

struct DoubleStarlikeSpec {
  std::int64_t c = 1;
  std::vector<std::int64_t> a_branches;
  std::vector<std::int64_t> b_branches;

  void validate() const;
  std::int64_t a_total() const;
  std::int64_t b_total() const;
  bool operator==(const DoubleStarlikeSpec&) const = default;
};

enum class Side : std::uint8_t { A, Spine, B };

struct VertexLabel {
  Side side = Side::A;
  std::int64_t branch = 0;
  std::int64_t position = 0;

  auto operator<=>(const VertexLabel&) const = default;
};

// "v(i,j)", "v(0,j)" or "u(i,j)".
std::string to_string(const VertexLabel& label);
std::string_view to_string(Side side);
Side side_from_string(std::string_view text);

std::int64_t order(const StarlikeSpec& spec);
std::int64_t order(const DoubleStarlikeSpec& spec);

enum class TreeKind : std::uint8_t { Starlike, DoubleStarlike };

// Explicit adjacency structure.  Canonical indices: hub(s) first (v(0,0),
// then v(0,C) for double starlike trees), then interior spine vertices
// v(0,1)..v(0,C-1), then A-branches in spec order, then B-branches, each
// branch listed by ascending position.
class TreeGraph {
 public:
  static TreeGraph starlike(const StarlikeSpec& spec);
  static TreeGraph double_starlike(const DoubleStarlikeSpec& spec);

  TreeKind kind() const { return kind_; }
  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  const std::vector<std::vector<std::size_t>>& adjacency() const { return adjacency_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

  // Canonical label of a vertex (position-0 aliases collapsed to the hub).
  const VertexLabel& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<VertexLabel>& labels() const { return labels_; }

  // Accepts any label, including position-0 aliases; throws std::out_of_range
  // for labels that do not name a vertex of this tree.
  std::size_t index_of(const VertexLabel& label) const;

 private:
  TreeKind kind_ = TreeKind::Starlike;
  std::int64_t spine_ = 0;
  std::vector<std::int64_t> a_lengths_, b_lengths_;
  std::vector<std::size_t> a_offsets_, b_offsets_;
  std::size_t spine_offset_ = 0;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<VertexLabel> labels_;

  std::size_t add_vertex(const VertexLabel& label);
  void add_edge(std::size_t u, std::size_t v);
};

inline TreeGraph build_starlike(const StarlikeSpec& spec) { return TreeGraph::starlike(spec); }
inline TreeGraph build_double_starlike(const DoubleStarlikeSpec& spec) {
  return TreeGraph::double_starlike(spec);
}

// Swaps the A and B sides when the B side carries more total length.  Ties
// keep the given orientation.
DoubleStarlikeSpec normalize_double_starlike(const DoubleStarlikeSpec& spec);

// Maps a label of `spec` to the same vertex in the tree with A and B swapped.
VertexLabel swap_sides(const VertexLabel& label, std::int64_t spine_length);

// Collapses position-0 aliases to the hub label.
VertexLabel canonical_label(const VertexLabel& label, TreeKind kind, std::int64_t spine_length);

// Text format: "S:A1,A2,...,Ak" and "DS:C;A1,...,Ak;B1,...,Bm".  Whitespace
// is ignored.
struct ParsedSpec {
  TreeKind kind;
  StarlikeSpec starlike;
  DoubleStarlikeSpec double_starlike;
};

ParsedSpec parse_spec(std::string_view text);
std::string format_spec(const StarlikeSpec& spec);
std::string format_spec(const DoubleStarlikeSpec& spec);

// Canonical index of a label without materializing the graph (same numbering
// as TreeGraph).
std::size_t canonical_index(const StarlikeSpec& spec, const VertexLabel& label);
std::size_t canonical_index(const DoubleStarlikeSpec& spec, const VertexLabel& label);

}  // namespace tistar
