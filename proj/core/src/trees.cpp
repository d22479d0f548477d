#include "tistar/trees.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "tistar/checked.hpp"

namespace tistar {

namespace {

std::int64_t total(const std::vector<std::int64_t>& v) {
  std::int64_t s = 0;
  for (auto x : v) s = checked::add(s, x);
  return s;
}

void require_positive(const std::vector<std::int64_t>& v, const char* what) {
  for (auto x : v)
    if (x < 1) throw InvalidSpec(std::string(what) + " lengths must be positive integers");
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    throw InvalidSpec("not a decimal integer: '" + std::string(s) + "'");
  return value;
}

std::vector<std::int64_t> parse_list(std::string_view s) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

void StarlikeSpec::validate() const {
  if (branches.size() < 3) throw InvalidSpec("starlike tree needs at least 3 branches");
  require_positive(branches, "branch");
}

void DoubleStarlikeSpec::validate() const {
  if (c < 1) throw InvalidSpec("hub distance C must be at least 1");
  if (a_branches.size() < 2 || b_branches.size() < 2)
    throw InvalidSpec("double starlike tree needs at least 2 branches on each hub");
  require_positive(a_branches, "A-branch");
  require_positive(b_branches, "B-branch");
}

std::int64_t DoubleStarlikeSpec::a_total() const { return total(a_branches); }
std::int64_t DoubleStarlikeSpec::b_total() const { return total(b_branches); }

std::int64_t order(const StarlikeSpec& spec) { return checked::add(1, total(spec.branches)); }

std::int64_t order(const DoubleStarlikeSpec& spec) {
  return checked::add(checked::add(spec.c, 1), checked::add(spec.a_total(), spec.b_total()));
}

std::string_view to_string(Side side) {
  switch (side) {
    case Side::A: return "A";
    case Side::Spine: return "spine";
    case Side::B: return "B";
  }
  return "?";
}

Side side_from_string(std::string_view text) {
  if (text == "A") return Side::A;
  if (text == "spine") return Side::Spine;
  if (text == "B") return Side::B;
  throw std::invalid_argument("unknown side: " + std::string(text));
}

std::string to_string(const VertexLabel& label) {
  const char* prefix = label.side == Side::B ? "u(" : "v(";
  std::int64_t branch = label.side == Side::Spine ? 0 : label.branch;
  return prefix + std::to_string(branch) + "," + std::to_string(label.position) + ")";
}

VertexLabel canonical_label(const VertexLabel& label, TreeKind kind, std::int64_t spine_length) {
  if (kind == TreeKind::Starlike) {
    if (label.position == 0) return {Side::A, 0, 0};
    return label;
  }
  if (label.position == 0 && label.side == Side::A) return {Side::Spine, 0, 0};
  if (label.position == 0 && label.side == Side::B) return {Side::Spine, 0, spine_length};
  if (label.side == Side::Spine) return {Side::Spine, 0, label.position};
  return label;
}

VertexLabel swap_sides(const VertexLabel& label, std::int64_t spine_length) {
  switch (label.side) {
    case Side::A: return {Side::B, label.branch, label.position};
    case Side::B: return {Side::A, label.branch, label.position};
    case Side::Spine: return {Side::Spine, 0, spine_length - label.position};
  }
  return label;
}

DoubleStarlikeSpec normalize_double_starlike(const DoubleStarlikeSpec& spec) {
  if (spec.b_total() > spec.a_total()) return {spec.c, spec.b_branches, spec.a_branches};
  return spec;
}

std::size_t TreeGraph::add_vertex(const VertexLabel& label) {
  adjacency_.emplace_back();
  labels_.push_back(label);
  return adjacency_.size() - 1;
}

void TreeGraph::add_edge(std::size_t u, std::size_t v) {
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

std::size_t TreeGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& n : adjacency_) twice += n.size();
  return twice / 2;
}

TreeGraph TreeGraph::starlike(const StarlikeSpec& spec) {
  spec.validate();
  TreeGraph g;
  g.kind_ = TreeKind::Starlike;
  g.a_lengths_ = spec.branches;
  std::size_t hub = g.add_vertex({Side::A, 0, 0});
  for (std::size_t i = 0; i < spec.branches.size(); ++i) {
    g.a_offsets_.push_back(g.vertex_count());
    std::size_t prev = hub;
    for (std::int64_t j = 1; j <= spec.branches[i]; ++j) {
      std::size_t v = g.add_vertex({Side::A, static_cast<std::int64_t>(i + 1), j});
      g.add_edge(prev, v);
      prev = v;
    }
  }
  return g;
}

TreeGraph TreeGraph::double_starlike(const DoubleStarlikeSpec& spec) {
  spec.validate();
  TreeGraph g;
  g.kind_ = TreeKind::DoubleStarlike;
  g.spine_ = spec.c;
  g.a_lengths_ = spec.a_branches;
  g.b_lengths_ = spec.b_branches;
  std::size_t hub_a = g.add_vertex({Side::Spine, 0, 0});
  std::size_t hub_b = g.add_vertex({Side::Spine, 0, spec.c});
  g.spine_offset_ = g.vertex_count();
  std::size_t prev = hub_a;
  for (std::int64_t j = 1; j < spec.c; ++j) {
    std::size_t v = g.add_vertex({Side::Spine, 0, j});
    g.add_edge(prev, v);
    prev = v;
  }
  g.add_edge(prev, hub_b);

  auto hang = [&g](std::size_t hub, Side side, const std::vector<std::int64_t>& lengths,
                   std::vector<std::size_t>& offsets) {
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      offsets.push_back(g.vertex_count());
      std::size_t p = hub;
      for (std::int64_t j = 1; j <= lengths[i]; ++j) {
        std::size_t v = g.add_vertex({side, static_cast<std::int64_t>(i + 1), j});
        g.add_edge(p, v);
        p = v;
      }
    }
  };
  hang(hub_a, Side::A, spec.a_branches, g.a_offsets_);
  hang(hub_b, Side::B, spec.b_branches, g.b_offsets_);
  return g;
}

std::size_t TreeGraph::index_of(const VertexLabel& raw) const {
  VertexLabel l = canonical_label(raw, kind_, spine_);
  auto on_branch = [&](const std::vector<std::int64_t>& lengths,
                       const std::vector<std::size_t>& offsets) -> std::size_t {
    if (l.branch < 1 || l.branch > static_cast<std::int64_t>(lengths.size()))
      throw std::out_of_range("branch index out of range in " + to_string(raw));
    auto i = static_cast<std::size_t>(l.branch - 1);
    if (l.position < 1 || l.position > lengths[i])
      throw std::out_of_range("position out of range in " + to_string(raw));
    return offsets[i] + static_cast<std::size_t>(l.position - 1);
  };

  if (kind_ == TreeKind::Starlike) {
    if (l.side != Side::A) throw std::out_of_range("starlike trees only have A-branches");
    if (l.position == 0) return 0;
    return on_branch(a_lengths_, a_offsets_);
  }
  switch (l.side) {
    case Side::Spine:
      if (l.position < 0 || l.position > spine_)
        throw std::out_of_range("spine position out of range in " + to_string(raw));
      if (l.position == 0) return 0;
      if (l.position == spine_) return 1;
      return spine_offset_ + static_cast<std::size_t>(l.position - 1);
    case Side::A: return on_branch(a_lengths_, a_offsets_);
    case Side::B: return on_branch(b_lengths_, b_offsets_);
  }
  throw std::out_of_range("bad label");
}

ParsedSpec parse_spec(std::string_view raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  std::string_view s = text;

  ParsedSpec out{};
  if (s.starts_with("DS:")) {
    s.remove_prefix(3);
    auto first = s.find(';');
    auto second = first == std::string_view::npos ? first : s.find(';', first + 1);
    if (second == std::string_view::npos || s.find(';', second + 1) != std::string_view::npos)
      throw InvalidSpec("expected DS:C;A1,...,Ak;B1,...,Bm");
    out.kind = TreeKind::DoubleStarlike;
    out.double_starlike.c = parse_int(s.substr(0, first));
    out.double_starlike.a_branches = parse_list(s.substr(first + 1, second - first - 1));
    out.double_starlike.b_branches = parse_list(s.substr(second + 1));
    out.double_starlike.validate();
  } else if (s.starts_with("S:")) {
    s.remove_prefix(2);
    out.kind = TreeKind::Starlike;
    out.starlike.branches = parse_list(s);
    out.starlike.validate();
  } else {
    throw InvalidSpec("spec must start with 'S:' or 'DS:'");
  }
  return out;
}

std::string format_spec(const StarlikeSpec& spec) { return "S:" + join(spec.branches); }

std::string format_spec(const DoubleStarlikeSpec& spec) {
  return "DS:" + std::to_string(spec.c) + ";" + join(spec.a_branches) + ";" + join(spec.b_branches);
}

}  // namespace tistar

namespace tistar {

namespace {

std::size_t branch_index(const std::vector<std::int64_t>& lengths, std::size_t base,
                         const VertexLabel& l) {
  if (l.branch < 1 || l.branch > static_cast<std::int64_t>(lengths.size()))
    throw std::out_of_range("branch index out of range in " + to_string(l));
  auto i = static_cast<std::size_t>(l.branch - 1);
  if (l.position < 1 || l.position > lengths[i])
    throw std::out_of_range("position out of range in " + to_string(l));
  std::size_t offset = base;
  for (std::size_t k = 0; k < i; ++k) offset += static_cast<std::size_t>(lengths[k]);
  return offset + static_cast<std::size_t>(l.position - 1);
}

}  // namespace

std::size_t canonical_index(const StarlikeSpec& spec, const VertexLabel& raw) {
  VertexLabel l = canonical_label(raw, TreeKind::Starlike, 0);
  if (l.side != Side::A) throw std::out_of_range("starlike trees only have A-branches");
  if (l.position == 0) return 0;
  return branch_index(spec.branches, 1, l);
}

std::size_t canonical_index(const DoubleStarlikeSpec& spec, const VertexLabel& raw) {
  VertexLabel l = canonical_label(raw, TreeKind::DoubleStarlike, spec.c);
  const auto spine_interior = static_cast<std::size_t>(spec.c - 1);
  switch (l.side) {
    case Side::Spine:
      if (l.position < 0 || l.position > spec.c) throw std::out_of_range("spine position out of range");
      if (l.position == 0) return 0;
      if (l.position == spec.c) return 1;
      return 1 + static_cast<std::size_t>(l.position);
    case Side::A: return branch_index(spec.a_branches, 2 + spine_interior, l);
    case Side::B:
      return branch_index(spec.b_branches,
                          2 + spine_interior + static_cast<std::size_t>(spec.a_total()), l);
  }
  throw std::out_of_range("bad label");
}

}  // namespace tistar
