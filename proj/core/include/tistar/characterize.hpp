#pragma once

// Exact TI decisions for starlike and double starlike trees.
//
// After the two elementary conditions (distinct branch lengths on each hub,
// every branch shorter than n/2, and 1 + A_* > n/2 for double starlike trees)
// the transmissions along each branch and along the spine are strictly
// increasing, so a tree is TI exactly when no two of these monotone runs
// collide.  Each pair of runs is a box Diophantine problem whose C* is one of
//
//   alpha_ij = (n - 1 - A_i - A_j)(A_j - A_i)          two A-branches
//   beta_ij  = (n - 1 - B_i - B_j)(B_j - B_i)          two B-branches
//   gamma_i  = (n - 1 - A_i - A_*)(A_* - A_i)          A-branch vs spine
//   delta_ij = (n - 1 - A_i - B_j)(B_j - A_i) + C (A_* - B_*)
//
// and is settled by divisor enumeration.

#include <cstdint>
#include <string>
#include <vector>

#include "tistar/diophantine.hpp"
#include "tistar/trees.hpp"
#include "tistar/verdict.hpp"

namespace tistar {

enum class CaseKind : std::uint8_t { Alpha, Beta, Gamma, Delta };

std::string_view to_string(CaseKind kind);

struct CaseTarget {
  CaseKind kind = CaseKind::Alpha;
  // 1-based branch indices in the (normalized) spec; `j` is 0 for gamma.
  // For alpha/beta, `i` names the longer branch.
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t value = 0;
  BoxDioProblem problem;
  // x walks branch (x_side, i); y walks (y_side, j) or the spine.
  Side x_side = Side::A;
  Side y_side = Side::A;

  // Integer bounds on p + value/p and p - value/p.
  std::int64_t sum_lo() const { return problem.c1 + 2; }
  std::int64_t sum_hi() const { return problem.c1 + 2 * problem.c4; }
  std::int64_t diff_lo() const { return problem.c2 + 2; }
  std::int64_t diff_hi() const { return problem.c2 + 2 * problem.c5; }

  std::string id() const;
};

std::vector<CaseTarget> case_targets_starlike(const StarlikeSpec& spec);
// Targets are generated for the normalized orientation.
std::vector<CaseTarget> case_targets_double(const DoubleStarlikeSpec& spec);

Verdict check_starlike(const StarlikeSpec& spec);
Verdict check_double_starlike(const DoubleStarlikeSpec& spec);

struct CaseScan {
  CaseTarget target;
  std::vector<std::int64_t> candidates;
  std::optional<DivisorWitness> witness;
  // Integer-interval and g-threshold forms gave the same answer for every
  // candidate.
  bool g_form_agrees = true;
};

struct Explanation {
  Verdict verdict;
  // Every failed elementary condition, in checking order.
  std::vector<Verdict> elementary_failures;
  // Populated only when the elementary conditions hold.
  std::vector<CaseScan> cases;
};

Explanation explain_starlike(const StarlikeSpec& spec);
Explanation explain_double_starlike(const DoubleStarlikeSpec& spec);

// Closed form for S(1, a2, a2 + 1): TI iff a2 avoids (k^2 - 1)/2 and
// (k^2 - 2)/2 for every k >= 3.  Requires a2 > 1.
bool alkl_predicate(std::int64_t a2);

}  // namespace tistar
