#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tistar/trees.hpp"

namespace tistar {

enum class ReasonKind : std::uint8_t { EqualBranches, LongBranch, SpineShort, Collision };

std::string_view to_string(ReasonKind kind);
ReasonKind reason_kind_from_string(std::string_view text);

// Why a tree fails to be TI.  Branch indices refer to the caller's spec
// (1-based); `first`/`second` are only meaningful for EqualBranches (the two
// equal branches) and LongBranch (`first` is the offending branch).
struct Reason {
  ReasonKind kind = ReasonKind::Collision;
  Side side = Side::A;
  std::int64_t first = 0;
  std::int64_t second = 0;

  bool operator==(const Reason&) const = default;
};

// Two distinct vertices with equal transmission, ordered by canonical index.
struct Witness {
  VertexLabel first;
  VertexLabel second;
  std::optional<std::int64_t> transmission;

  bool operator==(const Witness&) const = default;
};

struct Verdict {
  bool is_ti = true;
  std::optional<Reason> reason;
  std::optional<Witness> witness;

  static Verdict ti() { return {}; }
  static Verdict not_ti(Reason reason, Witness witness) { return {false, reason, witness}; }

  std::string describe() const;
  bool operator==(const Verdict&) const = default;
};

}  // namespace tistar
