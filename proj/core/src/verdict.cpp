#include "tistar/verdict.hpp"

#include <stdexcept>

namespace tistar {

std::string_view to_string(ReasonKind kind) {
  switch (kind) {
    case ReasonKind::EqualBranches: return "EqualBranches";
    case ReasonKind::LongBranch: return "LongBranch";
    case ReasonKind::SpineShort: return "SpineShort";
    case ReasonKind::Collision: return "Collision";
  }
  return "?";
}

ReasonKind reason_kind_from_string(std::string_view text) {
  for (auto k : {ReasonKind::EqualBranches, ReasonKind::LongBranch, ReasonKind::SpineShort,
                 ReasonKind::Collision})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown reason: " + std::string(text));
}

std::string Verdict::describe() const {
  if (is_ti) return "TI";
  std::string out = "not TI";
  if (reason) {
    out += ": ";
    out += to_string(reason->kind);
    switch (reason->kind) {
      case ReasonKind::EqualBranches:
        out += "(" + std::string(to_string(reason->side)) + ", " + std::to_string(reason->first) +
               ", " + std::to_string(reason->second) + ")";
        break;
      case ReasonKind::LongBranch:
        out += "(" + std::string(to_string(reason->side)) + ", " + std::to_string(reason->first) + ")";
        break;
      default: break;
    }
  }
  if (witness) {
    out += " witness " + to_string(witness->first) + " ~ " + to_string(witness->second);
    if (witness->transmission) out += " (Tr = " + std::to_string(*witness->transmission) + ")";
  }
  return out;
}

}  // namespace tistar
