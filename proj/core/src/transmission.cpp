#include "tistar/transmission.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "tistar/checked.hpp"

namespace tistar {

TransmissionTable::TransmissionTable(const TreeGraph& graph, std::vector<std::int64_t> values)
    : graph_(graph), values_(std::move(values)) {
  if (values_.size() != graph.vertex_count())
    throw std::invalid_argument("transmission table size does not match graph");
}

std::int64_t TransmissionTable::total() const {
  std::int64_t s = 0;
  for (auto v : values_) s = checked::add(s, v);
  return s;
}

TransmissionTable bfs_transmissions(const TreeGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::int64_t> values(n, 0);
  std::vector<std::int64_t> dist(n);
  std::vector<std::size_t> queue(n);
  for (std::size_t src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = src;
    std::int64_t sum = 0;
    while (head < tail) {
      std::size_t u = queue[head++];
      sum = checked::add(sum, dist[u]);
      for (std::size_t w : graph.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) throw std::invalid_argument("graph is not connected");
    values[src] = sum;
  }
  return TransmissionTable(graph, std::move(values));
}

Verdict is_ti_bruteforce(const TransmissionTable& table) {
  const auto& values = table.values();
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });

  bool found = false;
  std::pair<std::size_t, std::size_t> best{};
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    // Within a run of equal values the first two entries are the smallest
    // indices thanks to the stable sort.
    if (values[order[k]] != values[order[k + 1]]) continue;
    if (k > 0 && values[order[k - 1]] == values[order[k]]) continue;
    std::pair<std::size_t, std::size_t> candidate{order[k], order[k + 1]};
    if (!found || candidate < best) best = candidate;
    found = true;
  }
  if (!found) return Verdict::ti();
  const auto& g = table.graph();
  return Verdict::not_ti({ReasonKind::Collision},
                         {g.label(best.first), g.label(best.second), values[best.first]});
}

Verdict is_ti_bruteforce(const TreeGraph& graph) { return is_ti_bruteforce(bfs_transmissions(graph)); }

namespace {

// j (n - 2L + j - 1)
std::int64_t branch_offset(std::int64_t n, std::int64_t length, std::int64_t j) {
  return checked::mul(j, checked::add(checked::sub(n, checked::mul(2, length)), j - 1));
}

std::int64_t sum_to(std::int64_t m) { return checked::mul(m, m + 1) / 2; }

void check_position(std::int64_t length, std::int64_t position) {
  if (position < 0 || position > length) throw std::out_of_range("position out of range");
}

std::int64_t branch_length(const std::vector<std::int64_t>& lengths, std::int64_t branch) {
  if (branch < 1 || branch > static_cast<std::int64_t>(lengths.size()))
    throw std::out_of_range("branch index out of range");
  return lengths[static_cast<std::size_t>(branch - 1)];
}

}  // namespace

std::int64_t closed_form_offset_starlike(const StarlikeSpec& spec, std::int64_t branch,
                                         std::int64_t position) {
  spec.validate();
  std::int64_t length = branch_length(spec.branches, branch);
  check_position(length, position);
  return branch_offset(order(spec), length, position);
}

DoubleOffsets closed_form_offsets_double(const DoubleStarlikeSpec& spec) {
  spec.validate();
  const std::int64_t n = order(spec);
  const std::int64_t a_star = spec.a_total();
  DoubleOffsets out;
  for (auto len : spec.a_branches) {
    auto& row = out.a.emplace_back();
    for (std::int64_t j = 0; j <= len; ++j) row.push_back(branch_offset(n, len, j));
  }
  for (auto len : spec.b_branches) {
    auto& row = out.b.emplace_back();
    for (std::int64_t j = 0; j <= len; ++j) row.push_back(branch_offset(n, len, j));
  }
  // j (2(1 + A_*) - n + j - 1)
  const std::int64_t base = checked::sub(checked::mul(2, a_star + 1), n);
  for (std::int64_t j = 0; j <= spec.c; ++j)
    out.spine.push_back(checked::mul(j, checked::add(base, j - 1)));
  out.hub_delta = checked::mul(spec.c, checked::sub(a_star, spec.b_total()));
  return out;
}

std::int64_t closed_form_offset_double(const DoubleStarlikeSpec& spec, const VertexLabel& label) {
  spec.validate();
  const std::int64_t n = order(spec);
  switch (label.side) {
    case Side::A: {
      std::int64_t len = branch_length(spec.a_branches, label.branch);
      check_position(len, label.position);
      return branch_offset(n, len, label.position);
    }
    case Side::B: {
      std::int64_t len = branch_length(spec.b_branches, label.branch);
      check_position(len, label.position);
      return branch_offset(n, len, label.position);
    }
    case Side::Spine: {
      check_position(spec.c, label.position);
      const std::int64_t base = checked::sub(checked::mul(2, spec.a_total() + 1), n);
      return checked::mul(label.position, checked::add(base, label.position - 1));
    }
  }
  throw std::out_of_range("bad label");
}

std::int64_t hub_transmission(const StarlikeSpec& spec) {
  spec.validate();
  std::int64_t s = 0;
  for (auto len : spec.branches) s = checked::add(s, sum_to(len));
  return s;
}

std::int64_t hub_transmission(const DoubleStarlikeSpec& spec) {
  spec.validate();
  std::int64_t s = sum_to(spec.c);
  for (auto len : spec.a_branches) s = checked::add(s, sum_to(len));
  for (auto len : spec.b_branches)
    s = checked::add(s, checked::add(checked::mul(spec.c, len), sum_to(len)));
  return s;
}

std::int64_t closed_form_transmission(const StarlikeSpec& spec, const VertexLabel& label) {
  if (label.side != Side::A) throw std::out_of_range("starlike trees only have A-branches");
  std::int64_t hub = hub_transmission(spec);
  if (label.position == 0) return hub;
  return checked::add(hub, closed_form_offset_starlike(spec, label.branch, label.position));
}

std::int64_t closed_form_transmission(const DoubleStarlikeSpec& spec, const VertexLabel& label) {
  std::int64_t hub = hub_transmission(spec);
  std::int64_t offset = closed_form_offset_double(spec, label);
  if (label.side == Side::B) {
    hub = checked::add(hub, checked::mul(spec.c, checked::sub(spec.a_total(), spec.b_total())));
  }
  return checked::add(hub, offset);
}

}  // namespace tistar
