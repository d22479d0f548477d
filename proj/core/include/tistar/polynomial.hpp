#pragma once

// Polynomials of degree <= 2 over Z in one variable t, with overflow-checked
// coefficient arithmetic.

#include <cstdint>
#include <string>

namespace tistar {

struct LinPoly {
  std::int64_t c0 = 0;
  std::int64_t c1 = 0;

  std::int64_t eval(std::int64_t t) const;
  bool operator==(const LinPoly&) const = default;
};

struct QuadPoly {
  std::int64_t c0 = 0;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;

  QuadPoly() = default;
  QuadPoly(std::int64_t a0, std::int64_t a1, std::int64_t a2) : c0(a0), c1(a1), c2(a2) {}
  explicit QuadPoly(const LinPoly& p) : c0(p.c0), c1(p.c1) {}

  std::int64_t eval(std::int64_t t) const;
  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
  LinPoly linear_part() const { return {c0, c1}; }
  bool operator==(const QuadPoly&) const = default;
};

LinPoly operator+(const LinPoly& a, const LinPoly& b);
LinPoly operator-(const LinPoly& a, const LinPoly& b);
LinPoly operator-(const LinPoly& a);
LinPoly operator*(std::int64_t k, const LinPoly& a);
LinPoly operator+(const LinPoly& a, std::int64_t k);
LinPoly operator-(const LinPoly& a, std::int64_t k);

QuadPoly operator+(const QuadPoly& a, const QuadPoly& b);
QuadPoly operator-(const QuadPoly& a, const QuadPoly& b);
QuadPoly operator-(const QuadPoly& a);
QuadPoly operator*(std::int64_t k, const QuadPoly& a);

QuadPoly lin_mul(const LinPoly& a, const LinPoly& b);
QuadPoly square(const LinPoly& a);

// a(t + s)
LinPoly shift(const LinPoly& a, std::int64_t s);

// Coefficientwise a >= b.
bool coeff_geq(const LinPoly& a, const LinPoly& b);
bool coeff_geq(const QuadPoly& a, const QuadPoly& b);
// Coefficientwise a >= b with a strict free term; implies a(t) > b(t) for
// every t >= 0.
bool strictly_above(const LinPoly& a, const LinPoly& b);
bool strictly_above(const QuadPoly& a, const QuadPoly& b);

bool nonnegative_coeffs(const LinPoly& a);
bool nonnegative_coeffs(const QuadPoly& a);

std::string to_string(const LinPoly& p);
std::string to_string(const QuadPoly& p);

}  // namespace tistar
