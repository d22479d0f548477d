#include "tistar/polynomial.hpp"

#include "tistar/checked.hpp"

namespace tistar {

using checked::add;
using checked::mul;
using checked::neg;
using checked::sub;

std::int64_t LinPoly::eval(std::int64_t t) const { return add(c0, mul(c1, t)); }

std::int64_t QuadPoly::eval(std::int64_t t) const {
  return add(c0, mul(t, add(c1, mul(c2, t))));
}

int QuadPoly::degree() const {
  if (c2 != 0) return 2;
  if (c1 != 0) return 1;
  if (c0 != 0) return 0;
  return -1;
}

LinPoly operator+(const LinPoly& a, const LinPoly& b) { return {add(a.c0, b.c0), add(a.c1, b.c1)}; }
LinPoly operator-(const LinPoly& a, const LinPoly& b) { return {sub(a.c0, b.c0), sub(a.c1, b.c1)}; }
LinPoly operator-(const LinPoly& a) { return {neg(a.c0), neg(a.c1)}; }
LinPoly operator*(std::int64_t k, const LinPoly& a) { return {mul(k, a.c0), mul(k, a.c1)}; }
LinPoly operator+(const LinPoly& a, std::int64_t k) { return {add(a.c0, k), a.c1}; }
LinPoly operator-(const LinPoly& a, std::int64_t k) { return {sub(a.c0, k), a.c1}; }

QuadPoly operator+(const QuadPoly& a, const QuadPoly& b) {
  return {add(a.c0, b.c0), add(a.c1, b.c1), add(a.c2, b.c2)};
}
QuadPoly operator-(const QuadPoly& a, const QuadPoly& b) {
  return {sub(a.c0, b.c0), sub(a.c1, b.c1), sub(a.c2, b.c2)};
}
QuadPoly operator-(const QuadPoly& a) { return {neg(a.c0), neg(a.c1), neg(a.c2)}; }
QuadPoly operator*(std::int64_t k, const QuadPoly& a) {
  return {mul(k, a.c0), mul(k, a.c1), mul(k, a.c2)};
}

QuadPoly lin_mul(const LinPoly& a, const LinPoly& b) {
  return {mul(a.c0, b.c0), add(mul(a.c0, b.c1), mul(a.c1, b.c0)), mul(a.c1, b.c1)};
}

QuadPoly square(const LinPoly& a) { return lin_mul(a, a); }

LinPoly shift(const LinPoly& a, std::int64_t s) { return {add(a.c0, mul(a.c1, s)), a.c1}; }

bool coeff_geq(const LinPoly& a, const LinPoly& b) { return a.c0 >= b.c0 && a.c1 >= b.c1; }
bool coeff_geq(const QuadPoly& a, const QuadPoly& b) {
  return a.c0 >= b.c0 && a.c1 >= b.c1 && a.c2 >= b.c2;
}
bool strictly_above(const LinPoly& a, const LinPoly& b) { return coeff_geq(a, b) && a.c0 > b.c0; }
bool strictly_above(const QuadPoly& a, const QuadPoly& b) { return coeff_geq(a, b) && a.c0 > b.c0; }

bool nonnegative_coeffs(const LinPoly& a) { return a.c0 >= 0 && a.c1 >= 0; }
bool nonnegative_coeffs(const QuadPoly& a) { return a.c0 >= 0 && a.c1 >= 0 && a.c2 >= 0; }

namespace {

std::string render(const std::int64_t* coeffs, int count) {
  std::string out;
  for (int k = count - 1; k >= 0; --k) {
    std::int64_t c = coeffs[k];
    if (c == 0) continue;
    unsigned long long m = c < 0 ? 0ULL - static_cast<unsigned long long>(c)
                                 : static_cast<unsigned long long>(c);
    std::string mag = std::to_string(m);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || m != 1) out += mag;
    if (k >= 1) out += "t";
    if (k == 2) out += "^2";
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const LinPoly& p) {
  const std::int64_t c[] = {p.c0, p.c1};
  return render(c, 2);
}

std::string to_string(const QuadPoly& p) {
  const std::int64_t c[] = {p.c0, p.c1, p.c2};
  return render(c, 3);
}

}  // namespace tistar
