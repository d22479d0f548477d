#pragma once

// Symbolic certification that every member (t = 0, 1, 2, ...) of an
// even-order one-parameter family of starlike trees or H-trees is TI.
//
// Every collision case of the characterization reduces to: no positive
// divisor p of F(t) satisfies the four g-bounds plus the parity condition.
// Linear lower/upper approximations of the g-bounds are built first, then
// the case is discharged by an empty interval, by a bound on the quotient
// |F|/p (deg F <= 1), or by enumerating the finitely many linear forms
// p = l t + theta left between the bounds (deg F = 2).

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tistar/polynomial.hpp"
#include "tistar/trees.hpp"

namespace tistar {

// The method cannot certify; never a claim that a family is not TI.
class InapplicableError : public std::runtime_error {
 public:
  InapplicableError(std::string step, const std::string& detail);
  const std::string& step() const { return step_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string step_;
  std::string detail_;
};

// B with B(t)^2 < A(t) for all t >= 0; b1 even >= 0, b0 odd > 0.
LinPoly lower_sqrt_approx(const QuadPoly& a);
// B with B(t)^2 > A(t) for all t >= 0; b1 even >= 2, b0 odd > 0.
LinPoly upper_sqrt_approx(const QuadPoly& a);

// Bounds L(t) <= ceil(g(c1(t), c2(t))) and U(t) >= floor(g(c1(t), c2(t))).
// c2 needs an odd free term and an even slope; c2^2 - 4 c1 needs
// nonnegative coefficients.
LinPoly lower_g_approx(const QuadPoly& c1, const LinPoly& c2);
LinPoly upper_g_approx(const QuadPoly& c1, const LinPoly& c2);

struct GApprox {
  std::string role;  // "L1", "L2", "U1" or "U2"
  bool lower = true;
  QuadPoly c1;
  LinPoly c2;
  QuadPoly discriminant;
  LinPoly root;
  LinPoly bound;

  bool operator==(const GApprox&) const = default;
};

// F = t1 t2 + t3 t4 with bounds
//   g(F, g1) <= p <= g(F, g3),   g(-F, g2) <= p <= g(-F, g4).
struct CaseInputs {
  LinPoly t1, t2, t3, t4;
  LinPoly g1, g2, g3, g4;

  QuadPoly fundamental() const;
  bool operator==(const CaseInputs&) const = default;
};

struct EmptyInterval {
  bool operator==(const EmptyInterval&) const = default;
};

// Steps of the quotient ladder for deg F <= 1, in the order applied.
struct SmallQuotient {
  LinPoly magnitude;  // |F| as a polynomial with nonnegative coefficients
  std::vector<std::string> steps;

  bool operator==(const SmallQuotient&) const = default;
};

struct ManualCheck {
  std::int64_t t = 0;
  std::int64_t p = 0;
  std::int64_t f = 0;
  bool divides = false;

  bool operator==(const ManualCheck&) const = default;
};

// F = quotient * modulus + sign * remainder, remainder slope in [0, slope).
// For t >= threshold, 0 < |remainder(t)| < modulus(t) except possibly at
// `remainder_root`, which is then checked manually.
struct Residue {
  std::int64_t theta = 0;
  LinPoly modulus;
  LinPoly quotient;
  int sign = 1;
  LinPoly remainder;
  bool zero_remainder = false;
  std::int64_t threshold = 0;
  std::optional<std::int64_t> remainder_root;
  std::vector<ManualCheck> checks;

  bool operator==(const Residue&) const = default;
};

struct ResidueEnumeration {
  std::int64_t slope = 0;
  std::vector<Residue> residues;

  bool operator==(const ResidueEnumeration&) const = default;
};

using Discharge = std::variant<EmptyInterval, SmallQuotient, ResidueEnumeration>;

struct CaseCertificate {
  std::string case_id;
  CaseInputs inputs;
  QuadPoly fundamental;
  std::vector<GApprox> approximations;
  std::string lower_role;
  std::string upper_role;
  LinPoly lower;
  LinPoly upper;
  Discharge discharge;

  bool operator==(const CaseCertificate&) const = default;
};

inline constexpr std::int64_t kMaxResidues = 1'000'000;
inline constexpr std::int64_t kMaxManualT = 1'000'000;

// Throws InapplicableError (with the case id prefixed to the detail).
CaseCertificate certify_no_divisor(const CaseInputs& inputs, const std::string& case_id = "");
CaseCertificate certify_no_divisor(const LinPoly& t1, const LinPoly& t2, const LinPoly& t3,
                                   const LinPoly& t4, const LinPoly& g1, const LinPoly& g2,
                                   const LinPoly& g3, const LinPoly& g4);

class InvalidFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// S(a_1(t), ..., a_k(t)), k >= 3.
struct SFamilySpec {
  std::vector<LinPoly> branches;

  void validate() const;
  LinPoly order() const;
  bool operator==(const SFamilySpec&) const = default;
};

// H(C(t); A_1(t), A_2(t); B_1(t), B_2(t)).
struct HFamilySpec {
  LinPoly c;
  std::array<LinPoly, 2> a;
  std::array<LinPoly, 2> b;

  void validate() const;
  LinPoly order() const;
  LinPoly a_total() const { return a[0] + a[1]; }
  LinPoly b_total() const { return b[0] + b[1]; }
  bool operator==(const HFamilySpec&) const = default;
};

using FamilySpec = std::variant<SFamilySpec, HFamilySpec>;

StarlikeSpec instantiate(const SFamilySpec& fam, std::int64_t t);
DoubleStarlikeSpec instantiate(const HFamilySpec& fam, std::int64_t t);

struct SFamilyShift {
  SFamilySpec shifted;
  std::vector<StarlikeSpec> base;
};
struct HFamilyShift {
  HFamilySpec shifted;
  std::vector<DoubleStarlikeSpec> base;
};

// t -> t + s; `base` holds the members t = 0..s-1 that the shifted family
// no longer covers.
SFamilyShift shift_family(const SFamilySpec& fam, std::int64_t s);
HFamilyShift shift_family(const HFamilySpec& fam, std::int64_t s);

// Polynomial claims a certificate rests on: `lhs` has even coefficients
// (Even), or lhs >= rhs coefficientwise with a strict free term (Greater).
struct Attestation {
  enum class Kind : std::uint8_t { Even, Greater };
  Kind kind = Kind::Greater;
  std::string claim;
  LinPoly lhs;
  LinPoly rhs;

  bool holds() const;
  bool operator==(const Attestation&) const = default;
};

struct FamilyCertificate {
  FamilySpec family;
  std::vector<Attestation> attestations;
  std::vector<CaseCertificate> cases;

  bool operator==(const FamilyCertificate&) const = default;
};

struct Inapplicable {
  std::string case_id;
  std::string step;
  std::string detail;

  bool operator==(const Inapplicable&) const = default;
};

using CertifyOutcome = std::variant<FamilyCertificate, Inapplicable>;

// The case list every certificate for `fam` must discharge, in order.
std::vector<std::pair<std::string, CaseInputs>> required_cases(const SFamilySpec& fam);
std::vector<std::pair<std::string, CaseInputs>> required_cases(const HFamilySpec& fam);

CertifyOutcome certify_starlike_family(const SFamilySpec& fam);
CertifyOutcome certify_h_family(const HFamilySpec& fam);
CertifyOutcome certify_family(const FamilySpec& fam);

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Re-checks every arithmetic claim of a certificate without searching.
// Throws CertificateError naming the first claim that fails.
void verify_certificate(const FamilyCertificate& cert);

// Text format:
//   S | a1,b1 a2,b2 ... ak,bk
//   H | c0,c1 | a10,a11 a20,a21 | b10,b11 b20,b21
// where each pair x,y denotes x + y t.
FamilySpec parse_family_line(std::string_view line);
std::string format_family(const FamilySpec& fam);
std::string describe_family(const FamilySpec& fam);
// Skips blank lines and lines starting with '#'.
std::vector<FamilySpec> parse_family_file(std::istream& in);

}  // namespace tistar
