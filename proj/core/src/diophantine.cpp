#include "tistar/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tistar/checked.hpp"

namespace tistar {

namespace {

__extension__ using i128 = __int128;

bool is_even(std::int64_t v) { return (v & 1) == 0; }

bool exceeds_root(std::int64_t p, std::int64_t value) {
  return p > 0 && static_cast<i128>(p) * p > static_cast<i128>(checked::abs(value));
}

}  // namespace

void BoxDioProblem::validate() const {
  if (c1 < 0 || c2 < 0) throw std::invalid_argument("c1 and c2 must be nonnegative");
  if (is_even(c1) != is_even(c2)) throw std::invalid_argument("c1 and c2 must have equal parity");
  if (c4 < 1 || c5 < 1) throw std::invalid_argument("box bounds c4 and c5 must be positive");
}

bool BoxDioProblem::satisfied_by(std::int64_t x, std::int64_t y) const {
  i128 lhs = static_cast<i128>(x) * x + static_cast<i128>(c1) * x -
             (static_cast<i128>(y) * y + static_cast<i128>(c2) * y);
  return lhs == c3;
}

std::int64_t c_star(const BoxDioProblem& problem) {
  if (is_even(problem.c1) != is_even(problem.c2))
    throw std::invalid_argument("c1 and c2 must have equal parity");
  std::int64_t prod = checked::mul(checked::sub(problem.c1, problem.c2),
                                   checked::add(problem.c1, problem.c2));
  return checked::add(problem.c3, prod / 4);
}

std::vector<std::int64_t> positive_divisors(std::int64_t value) {
  if (value == 0) throw std::invalid_argument("zero has infinitely many divisors");
  const std::int64_t m = checked::abs(value);
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d <= m / d; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool divisor_conditions_hold(const BoxDioProblem& problem, std::int64_t p) {
  const std::int64_t cs = c_star(problem);
  if (p <= 0 || cs % p != 0) return false;
  const std::int64_t q = cs / p;
  const std::int64_t sum = checked::add(p, q);
  const std::int64_t diff = checked::sub(p, q);
  if (sum < problem.c1 + 2 || sum > checked::add(problem.c1, checked::mul(2, problem.c4)))
    return false;
  if (diff < problem.c2 + 2 || diff > checked::add(problem.c2, checked::mul(2, problem.c5)))
    return false;
  return is_even(sum) == is_even(problem.c1);
}

bool divisor_conditions_hold_g(const BoxDioProblem& problem, std::int64_t p) {
  const std::int64_t cs = c_star(problem);
  if (p <= 0 || cs % p != 0) return false;
  const std::int64_t q = cs / p;
  if (is_even(checked::add(p, q)) != is_even(problem.c1)) return false;
  const std::int64_t sum_lo = problem.c1 + 2;
  const std::int64_t sum_hi = checked::add(problem.c1, checked::mul(2, problem.c4));
  const std::int64_t diff_lo = problem.c2 + 2;
  const std::int64_t diff_hi = checked::add(problem.c2, checked::mul(2, problem.c5));
  return compare_g(p, cs, sum_lo) != std::strong_ordering::less &&
         compare_g(p, cs, sum_hi) != std::strong_ordering::greater &&
         compare_g(p, -cs, diff_lo) != std::strong_ordering::less &&
         compare_g(p, -cs, diff_hi) != std::strong_ordering::greater;
}

std::vector<std::int64_t> divisor_candidates(const BoxDioProblem& problem) {
  problem.validate();
  const std::int64_t cs = c_star(problem);
  std::vector<std::int64_t> out;
  if (cs != 0) {
    for (auto d : positive_divisors(cs))
      if (exceeds_root(d, cs)) out.push_back(d);
    return out;
  }
  // Every p divides 0 with cofactor 0, so p itself must lie in both intervals.
  const std::int64_t lo = std::max(problem.c1, problem.c2) + 2;
  const std::int64_t hi = std::min(checked::add(problem.c1, checked::mul(2, problem.c4)),
                                   checked::add(problem.c2, checked::mul(2, problem.c5)));
  for (std::int64_t p = lo; p <= hi; ++p) out.push_back(p);
  return out;
}

std::optional<DivisorWitness> solve_by_divisors(const BoxDioProblem& problem) {
  problem.validate();
  const std::int64_t cs = c_star(problem);
  // All divisors are scanned so that the implied bound p > sqrt|C*| is
  // checked rather than assumed.
  const auto candidates = cs != 0 ? positive_divisors(cs) : divisor_candidates(problem);
  for (std::int64_t p : candidates) {
    if (!divisor_conditions_hold(problem, p)) continue;
    const std::int64_t q = cs / p;
    if (cs != 0 && !exceeds_root(p, cs))
      throw std::logic_error("divisor witness violates p > sqrt|C*|");
    // p = x + y + (c1 + c2)/2 and q = x - y + (c1 - c2)/2.
    const std::int64_t x2 = checked::sub(checked::add(p, q), problem.c1);
    const std::int64_t y2 = checked::sub(checked::sub(p, q), problem.c2);
    if (!is_even(x2) || !is_even(y2)) throw std::logic_error("divisor witness has odd recovery");
    DivisorWitness w{p, q, x2 / 2, y2 / 2};
    if (w.x < 1 || w.x > problem.c4 || w.y < 1 || w.y > problem.c5 ||
        !problem.satisfied_by(w.x, w.y))
      throw std::logic_error("divisor witness does not solve the equation");
    return w;
  }
  return std::nullopt;
}

std::optional<std::pair<std::int64_t, std::int64_t>> solve_bruteforce(const BoxDioProblem& problem,
                                                                       std::int64_t cap) {
  problem.validate();
  if (static_cast<i128>(problem.c4) * problem.c5 > cap)
    throw CapExceeded("box of size " + std::to_string(problem.c4) + "x" +
                      std::to_string(problem.c5) + " exceeds cap " + std::to_string(cap));
  for (std::int64_t x = 1; x <= problem.c4; ++x)
    for (std::int64_t y = 1; y <= problem.c5; ++y)
      if (problem.satisfied_by(x, y)) return std::pair{x, y};
  return std::nullopt;
}

bool in_linear_image(std::int64_t u, std::int64_t v, std::int64_t c1, std::int64_t c2,
                     std::int64_t c3, std::int64_t c4) {
  using checked::add;
  using checked::mul;
  using checked::sub;
  const std::int64_t s = add(u, v), d = sub(v, u);
  const std::int64_t s0 = add(c3, c4), d0 = sub(c4, c3);
  return s >= s0 + 2 && s <= add(s0, mul(2, c1)) && d >= d0 + 2 && d <= add(d0, mul(2, c2)) &&
         is_even(sub(s, s0));
}

GValue g_value(std::int64_t c1, double c2) {
  if (!(c2 > 0)) throw std::invalid_argument("g requires C2 > 0");
  const double disc = c2 * c2 - 4.0 * static_cast<double>(c1);
  if (disc < 0) return {false, -std::numeric_limits<double>::infinity()};
  return {true, 0.5 * (c2 + std::sqrt(disc))};
}

std::strong_ordering compare_g(std::int64_t x, std::int64_t c1, std::int64_t c2) {
  if (c2 <= 0) throw std::invalid_argument("compare_g requires C2 > 0");
  if (!exceeds_root(x, c1)) throw std::invalid_argument("compare_g requires x > sqrt|C1|");
  const i128 disc = static_cast<i128>(c2) * c2 - 4 * static_cast<i128>(c1);
  if (disc < 0) return std::strong_ordering::greater;
  // x <=> (c2 + sqrt(disc)) / 2  is  (2x - c2) <=> sqrt(disc).
  const i128 lhs = 2 * static_cast<i128>(x) - c2;
  if (lhs < 0) return std::strong_ordering::less;
  const i128 sq = lhs * lhs;
  if (sq < disc) return std::strong_ordering::less;
  if (sq > disc) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace tistar
