#include "tistar/checked.hpp"

#include <cmath>

namespace tistar {

namespace {
__extension__ using i128 = __int128;
}  // namespace

std::int64_t isqrt_floor(std::int64_t v) {
  if (v < 0) throw std::domain_error("isqrt of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && static_cast<i128>(r) * r > v) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::int64_t isqrt_ceil(std::int64_t v) {
  std::int64_t r = isqrt_floor(v);
  return r * r == v ? r : r + 1;
}

}  // namespace tistar
