#include "tistar/characterize.hpp"

#include <algorithm>
#include <numeric>

#include "tistar/checked.hpp"
#include "tistar/transmission.hpp"

namespace tistar {

std::string_view to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::Alpha: return "alpha";
    case CaseKind::Beta: return "beta";
    case CaseKind::Gamma: return "gamma";
    case CaseKind::Delta: return "delta";
  }
  return "?";
}

std::string CaseTarget::id() const {
  std::string out(to_string(kind));
  out += "(" + std::to_string(i);
  if (kind != CaseKind::Gamma) out += "," + std::to_string(j);
  return out + ")";
}

namespace {

using checked::add;
using checked::mul;
using checked::sub;

// Branch indices (0-based) by descending length; ties keep spec order.
std::vector<std::size_t> descending(const std::vector<std::int64_t>& lengths) {
  std::vector<std::size_t> idx(lengths.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return lengths[a] > lengths[b]; });
  return idx;
}

std::int64_t one_based(std::size_t i) { return static_cast<std::int64_t>(i + 1); }

template <class Spec>
Witness make_witness(const Spec& spec, VertexLabel l1, VertexLabel l2) {
  if (canonical_index(spec, l2) < canonical_index(spec, l1)) std::swap(l1, l2);
  return {l1, l2, closed_form_transmission(spec, l1)};
}

CaseTarget pair_target(CaseKind kind, Side side, std::int64_t n,
                       const std::vector<std::int64_t>& lengths, std::size_t i, std::size_t j) {
  const std::int64_t ai = lengths[i], aj = lengths[j];
  CaseTarget t;
  t.kind = kind;
  t.i = one_based(i);
  t.j = one_based(j);
  t.value = mul(sub(sub(n - 1, ai), aj), sub(aj, ai));
  t.problem = {n - 2 * ai - 1, n - 2 * aj - 1, 0, ai, aj};
  t.x_side = side;
  t.y_side = side;
  return t;
}

void append_pairs(std::vector<CaseTarget>& out, CaseKind kind, Side side, std::int64_t n,
                  const std::vector<std::int64_t>& lengths) {
  auto order = descending(lengths);
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      out.push_back(pair_target(kind, side, n, lengths, order[a], order[b]));
}

std::pair<VertexLabel, VertexLabel> collision_labels(const CaseTarget& t, const DivisorWitness& w) {
  VertexLabel x{t.x_side, t.i, w.x};
  VertexLabel y = t.y_side == Side::Spine ? VertexLabel{Side::Spine, 0, w.y}
                                          : VertexLabel{t.y_side, t.j, w.y};
  return {x, y};
}

std::vector<Verdict> elementary_starlike(const StarlikeSpec& spec) {
  std::vector<Verdict> out;
  const auto& a = spec.branches;
  const std::int64_t n = order(spec);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] == a[j])
        out.push_back(Verdict::not_ti(
            {ReasonKind::EqualBranches, Side::A, one_based(i), one_based(j)},
            make_witness(spec, {Side::A, one_based(i), 1}, {Side::A, one_based(j), 1})));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (2 * a[i] >= n)
      out.push_back(Verdict::not_ti(
          {ReasonKind::LongBranch, Side::A, one_based(i)},
          make_witness(spec, {Side::A, 0, 0}, {Side::A, one_based(i), 2 * a[i] + 1 - n})));
  return out;
}

// Elementary conditions for a normalized double starlike tree.
std::vector<Verdict> elementary_double(const DoubleStarlikeSpec& spec) {
  std::vector<Verdict> out;
  const std::int64_t n = order(spec);
  auto equal_pairs = [&](const std::vector<std::int64_t>& lengths, Side side) {
    for (std::size_t i = 0; i < lengths.size(); ++i)
      for (std::size_t j = i + 1; j < lengths.size(); ++j)
        if (lengths[i] == lengths[j])
          out.push_back(Verdict::not_ti(
              {ReasonKind::EqualBranches, side, one_based(i), one_based(j)},
              make_witness(spec, {side, one_based(i), 1}, {side, one_based(j), 1})));
  };
  equal_pairs(spec.a_branches, Side::A);
  equal_pairs(spec.b_branches, Side::B);

  auto long_branches = [&](const std::vector<std::int64_t>& lengths, Side side, VertexLabel hub) {
    for (std::size_t i = 0; i < lengths.size(); ++i)
      if (2 * lengths[i] >= n)
        out.push_back(Verdict::not_ti(
            {ReasonKind::LongBranch, side, one_based(i)},
            make_witness(spec, hub, {side, one_based(i), 2 * lengths[i] + 1 - n})));
  };
  long_branches(spec.a_branches, Side::A, {Side::Spine, 0, 0});
  long_branches(spec.b_branches, Side::B, {Side::Spine, 0, spec.c});

  const std::int64_t a_star = spec.a_total();
  if (2 * (1 + a_star) <= n)
    out.push_back(Verdict::not_ti(
        {ReasonKind::SpineShort, Side::Spine},
        make_witness(spec, {Side::Spine, 0, 0}, {Side::Spine, 0, n + 1 - 2 * (1 + a_star)})));
  return out;
}

bool g_agreement(const CaseTarget& t, const std::vector<std::int64_t>& candidates) {
  for (auto p : candidates)
    if (divisor_conditions_hold(t.problem, p) != divisor_conditions_hold_g(t.problem, p))
      return false;
  return true;
}

Verdict map_back(const DoubleStarlikeSpec& original, const Verdict& v, bool swapped) {
  if (v.is_ti) return v;
  Verdict out = v;
  if (swapped) {
    if (out.reason && (out.reason->kind == ReasonKind::EqualBranches ||
                       out.reason->kind == ReasonKind::LongBranch))
      out.reason->side = out.reason->side == Side::A ? Side::B : Side::A;
    out.witness = make_witness(original, swap_sides(v.witness->first, original.c),
                               swap_sides(v.witness->second, original.c));
  } else {
    out.witness = make_witness(original, v.witness->first, v.witness->second);
  }
  return out;
}

template <class Spec>
Explanation explain_impl(const Spec& spec, std::vector<Verdict> failures,
                         std::vector<CaseTarget> targets) {
  Explanation ex;
  ex.elementary_failures = std::move(failures);
  if (!ex.elementary_failures.empty()) {
    ex.verdict = ex.elementary_failures.front();
    return ex;
  }
  ex.verdict = Verdict::ti();
  for (auto& t : targets) {
    CaseScan scan;
    scan.candidates = divisor_candidates(t.problem);
    scan.witness = solve_by_divisors(t.problem);
    scan.g_form_agrees = g_agreement(t, scan.candidates);
    if (scan.witness && ex.verdict.is_ti) {
      auto [x, y] = collision_labels(t, *scan.witness);
      ex.verdict = Verdict::not_ti({ReasonKind::Collision}, make_witness(spec, x, y));
    }
    scan.target = std::move(t);
    ex.cases.push_back(std::move(scan));
  }
  return ex;
}

}  // namespace

std::vector<CaseTarget> case_targets_starlike(const StarlikeSpec& spec) {
  spec.validate();
  std::vector<CaseTarget> out;
  append_pairs(out, CaseKind::Alpha, Side::A, order(spec), spec.branches);
  return out;
}

std::vector<CaseTarget> case_targets_double(const DoubleStarlikeSpec& raw) {
  raw.validate();
  const DoubleStarlikeSpec spec = normalize_double_starlike(raw);
  const std::int64_t n = order(spec);
  const std::int64_t a_star = spec.a_total(), b_star = spec.b_total();
  std::vector<CaseTarget> out;
  append_pairs(out, CaseKind::Alpha, Side::A, n, spec.a_branches);
  append_pairs(out, CaseKind::Beta, Side::B, n, spec.b_branches);

  const auto a_order = descending(spec.a_branches);
  const auto b_order = descending(spec.b_branches);
  for (auto i : a_order) {
    const std::int64_t ai = spec.a_branches[i];
    CaseTarget t;
    t.kind = CaseKind::Gamma;
    t.i = one_based(i);
    t.value = mul(sub(sub(n - 1, ai), a_star), sub(a_star, ai));
    t.problem = {n - 2 * ai - 1, 2 * a_star - n + 1, 0, ai, spec.c};
    t.x_side = Side::A;
    t.y_side = Side::Spine;
    out.push_back(t);
  }
  const std::int64_t shift = mul(spec.c, sub(a_star, b_star));
  for (auto i : a_order) {
    for (auto j : b_order) {
      const std::int64_t ai = spec.a_branches[i], bj = spec.b_branches[j];
      CaseTarget t;
      t.kind = CaseKind::Delta;
      t.i = one_based(i);
      t.j = one_based(j);
      t.value = add(mul(sub(sub(n - 1, ai), bj), sub(bj, ai)), shift);
      t.problem = {n - 2 * ai - 1, n - 2 * bj - 1, shift, ai, bj};
      t.x_side = Side::A;
      t.y_side = Side::B;
      out.push_back(t);
    }
  }
  return out;
}

Verdict check_starlike(const StarlikeSpec& spec) {
  spec.validate();
  auto failures = elementary_starlike(spec);
  if (!failures.empty()) return failures.front();
  for (const auto& t : case_targets_starlike(spec)) {
    if (auto w = solve_by_divisors(t.problem)) {
      auto [x, y] = collision_labels(t, *w);
      return Verdict::not_ti({ReasonKind::Collision}, make_witness(spec, x, y));
    }
  }
  return Verdict::ti();
}

Verdict check_double_starlike(const DoubleStarlikeSpec& raw) {
  raw.validate();
  const bool swapped = raw.b_total() > raw.a_total();
  const DoubleStarlikeSpec spec = normalize_double_starlike(raw);
  auto failures = elementary_double(spec);
  if (!failures.empty()) return map_back(raw, failures.front(), swapped);
  for (const auto& t : case_targets_double(spec)) {
    if (auto w = solve_by_divisors(t.problem)) {
      auto [x, y] = collision_labels(t, *w);
      return map_back(raw, Verdict::not_ti({ReasonKind::Collision}, make_witness(spec, x, y)),
                      swapped);
    }
  }
  return Verdict::ti();
}

Explanation explain_starlike(const StarlikeSpec& spec) {
  spec.validate();
  return explain_impl(spec, elementary_starlike(spec), case_targets_starlike(spec));
}

Explanation explain_double_starlike(const DoubleStarlikeSpec& raw) {
  raw.validate();
  const bool swapped = raw.b_total() > raw.a_total();
  const DoubleStarlikeSpec spec = normalize_double_starlike(raw);
  Explanation ex = explain_impl(spec, elementary_double(spec), case_targets_double(spec));
  ex.verdict = map_back(raw, ex.verdict, swapped);
  for (auto& f : ex.elementary_failures) f = map_back(raw, f, swapped);
  return ex;
}

bool alkl_predicate(std::int64_t a2) {
  if (a2 <= 1) throw std::invalid_argument("alkl_predicate requires a2 > 1");
  auto is_square = [](std::int64_t v) {
    std::int64_t r = isqrt_floor(v);
    return r * r == v;
  };
  return !is_square(checked::add(checked::mul(2, a2), 1)) &&
         !is_square(checked::add(checked::mul(2, a2), 2));
}

}  // namespace tistar
