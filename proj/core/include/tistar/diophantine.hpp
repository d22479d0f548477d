#pragma once

// Box-constrained quadratic Diophantine equations
//
//   (x^2 + c1 x) - (y^2 + c2 y) = c3,   (x, y) in [c4] x [c5],
//
// decided through the divisors of C* = c3 + (c1 - c2)(c1 + c2) / 4, plus the
// threshold function g(C1, C2) = (C2 + sqrt(C2^2 - 4 C1)) / 2 used to phrase
// the divisor conditions as bounds on p.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tistar {

struct BoxDioProblem {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t c3 = 0;
  std::int64_t c4 = 1;
  std::int64_t c5 = 1;

  // Throws std::invalid_argument on parity or positivity violations.
  void validate() const;
  bool satisfied_by(std::int64_t x, std::int64_t y) const;
  bool operator==(const BoxDioProblem&) const = default;
};

struct DivisorWitness {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;

  bool operator==(const DivisorWitness&) const = default;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t c_star(const BoxDioProblem& problem);

// Positive divisors of |value| in ascending order; value must be nonzero.
std::vector<std::int64_t> positive_divisors(std::int64_t value);

// The three divisor conditions for a candidate p (p > 0, p | C*):
//   c1 + 2 <= p + C*/p <= c1 + 2 c4,
//   c2 + 2 <= p - C*/p <= c2 + 2 c5,
//   p + C*/p == c1 (mod 2).
bool divisor_conditions_hold(const BoxDioProblem& problem, std::int64_t p);

// Same conditions with the two interval tests expressed through g, via
// compare_g only.  Requires p > sqrt|C*|.
bool divisor_conditions_hold_g(const BoxDioProblem& problem, std::int64_t p);

// Candidates the divisor method inspects: divisors p > sqrt|C*| when
// C* != 0, otherwise the integer interval forced by the sum/difference bounds.
std::vector<std::int64_t> divisor_candidates(const BoxDioProblem& problem);

std::optional<DivisorWitness> solve_by_divisors(const BoxDioProblem& problem);

inline constexpr std::int64_t kDefaultBoxCap = 50'000'000;

std::optional<std::pair<std::int64_t, std::int64_t>> solve_bruteforce(
    const BoxDioProblem& problem, std::int64_t cap = kDefaultBoxCap);

// Membership test for the image of (x, y) -> (x - y + c3, x + y + c4) over
// [c1] x [c2]:
//   c3 + c4 + 2 <= u + v <= c3 + c4 + 2 c1,
//   c4 - c3 + 2 <= v - u <= c4 - c3 + 2 c2,
//   u + v == c3 + c4 (mod 2).
bool in_linear_image(std::int64_t u, std::int64_t v, std::int64_t c1, std::int64_t c2,
                     std::int64_t c3, std::int64_t c4);

struct GValue {
  bool finite = false;
  double value = 0.0;  // meaningful only when finite
};

GValue g_value(std::int64_t c1, double c2);

// Exact ordering of x against g(c1, c2).  Requires c2 > 0 and x > sqrt|c1|.
std::strong_ordering compare_g(std::int64_t x, std::int64_t c1, std::int64_t c2);

}  // namespace tistar
