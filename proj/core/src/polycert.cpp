#include "tistar/polycert.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "tistar/checked.hpp"

namespace tistar {

using checked::add;
using checked::mul;
using checked::sub;

InapplicableError::InapplicableError(std::string step, const std::string& detail)
    : std::runtime_error(step + ": " + detail), step_(std::move(step)), detail_(detail) {}

namespace {

bool is_odd(std::int64_t v) { return mod_floor(v, 2) == 1; }
bool is_even(std::int64_t v) { return !is_odd(v); }

QuadPoly t_times(const LinPoly& p) { return {0, p.c0, p.c1}; }

}  // namespace

LinPoly lower_sqrt_approx(const QuadPoly& a) {
  if (!nonnegative_coeffs(a))
    throw InapplicableError("lower_sqrt", "negative coefficient in " + to_string(a));
  std::int64_t b1 = isqrt_floor(a.c2);
  if (is_odd(b1)) b1 -= 1;
  std::int64_t b0 = isqrt_floor(a.c0);
  if (b1 > 0) b0 = std::min(a.c1 / (2 * b1), b0);
  if (is_even(b0)) b0 -= 1;
  if (b0 < 1) throw InapplicableError("lower_sqrt", "no odd positive free term for " + to_string(a));
  LinPoly b{b0, b1};
  if (!coeff_geq(a, square(b)))
    throw InapplicableError("lower_sqrt", to_string(b) + " squared exceeds " + to_string(a));
  if (mul(b0, b0) >= a.c0) {
    b.c0 -= 2;
    if (b.c0 < 1)
      throw InapplicableError("lower_sqrt", "strict free term unattainable for " + to_string(a));
  }
  return b;
}

LinPoly upper_sqrt_approx(const QuadPoly& a) {
  if (!nonnegative_coeffs(a))
    throw InapplicableError("upper_sqrt", "negative coefficient in " + to_string(a));
  std::int64_t b1 = std::max<std::int64_t>(isqrt_ceil(a.c2), 2);
  if (is_odd(b1)) b1 += 1;
  std::int64_t b0 = std::max(div_ceil(a.c1, 2 * b1), isqrt_ceil(a.c0));
  if (is_even(b0)) b0 += 1;
  LinPoly b{b0, b1};
  if (!coeff_geq(square(b), a))
    throw std::logic_error("upper_sqrt_approx: square does not dominate " + to_string(a));
  if (mul(b0, b0) <= a.c0) b.c0 += 2;
  return b;
}

namespace {

QuadPoly g_discriminant(const QuadPoly& c1, const LinPoly& c2, const char* step) {
  if (!is_odd(c2.c0) || !is_even(c2.c1))
    throw InapplicableError(step, "g argument " + to_string(c2) + " needs odd free term, even slope");
  QuadPoly d = square(c2) - 4 * c1;
  if (!nonnegative_coeffs(d))
    throw InapplicableError(step, "discriminant " + to_string(d) + " has a negative coefficient");
  return d;
}

LinPoly halve(const LinPoly& p) {
  if (!is_even(p.c0) || !is_even(p.c1)) throw std::logic_error("halve: odd coefficient");
  return {p.c0 / 2, p.c1 / 2};
}

GApprox approx(const std::string& role, bool lower, const QuadPoly& c1, const LinPoly& c2) {
  GApprox g;
  g.role = role;
  g.lower = lower;
  g.c1 = c1;
  g.c2 = c2;
  g.discriminant = g_discriminant(c1, c2, lower ? "lower_g" : "upper_g");
  g.root = lower ? lower_sqrt_approx(g.discriminant) : upper_sqrt_approx(g.discriminant);
  g.bound = halve(c2 + g.root) + (lower ? 1 : -1);
  return g;
}

}  // namespace

LinPoly lower_g_approx(const QuadPoly& c1, const LinPoly& c2) {
  return approx("L", true, c1, c2).bound;
}

LinPoly upper_g_approx(const QuadPoly& c1, const LinPoly& c2) {
  return approx("U", false, c1, c2).bound;
}

QuadPoly CaseInputs::fundamental() const { return lin_mul(t1, t2) + lin_mul(t3, t4); }

namespace {

SmallQuotient quotient_ladder(const QuadPoly& f, const LinPoly& lo, const LinPoly& hi) {
  SmallQuotient sq;
  LinPoly a = f.linear_part();
  if (a.c0 < 0) a = -a;
  sq.magnitude = a;
  if (!nonnegative_coeffs(a) || a.c0 <= 0)
    throw InapplicableError("quotient_ladder", "|F| is not " + to_string(a) + " for every t");
  if (strictly_above(lo, a)) {
    sq.steps.push_back("lower_exceeds_magnitude");
    return sq;
  }
  if (!strictly_above(a, hi))
    throw InapplicableError("quotient_ladder", "quotient 1 not excluded: " + to_string(a) +
                                                   " vs upper " + to_string(hi));
  sq.steps.push_back("magnitude_exceeds_upper");
  if (strictly_above(2 * lo, a)) {
    sq.steps.push_back("half_below_lower");
    return sq;
  }
  if (mod_floor(a.c0, 4) != 0 || mod_floor(a.c1, 4) != 0)
    throw InapplicableError("quotient_ladder", "quotient 2 not excluded: " + to_string(a));
  sq.steps.push_back("divisible_by_four");
  if (strictly_above(3 * lo, a)) {
    sq.steps.push_back("third_below_lower");
    return sq;
  }
  if (mod_floor(a.c1, 3) != 0 || mod_floor(a.c0, 3) == 0)
    throw InapplicableError("quotient_ladder", "quotient 3 not excluded: " + to_string(a));
  sq.steps.push_back("not_divisible_by_three");
  if (!strictly_above(4 * lo, a))
    throw InapplicableError("quotient_ladder", "quotient >= 4 not excluded: " + to_string(a));
  sq.steps.push_back("quarter_below_lower");
  return sq;
}

// Least t >= 0 with a t + b > 0, for a > 0.
std::int64_t first_positive(std::int64_t a, std::int64_t b) {
  std::int64_t t = div_floor(-b, a) + 1;
  return std::max<std::int64_t>(t, 0);
}

ManualCheck manual_check(const QuadPoly& f, const LinPoly& p_form, std::int64_t t) {
  ManualCheck mc;
  mc.t = t;
  mc.p = p_form.eval(t);
  mc.f = f.eval(t);
  if (mc.p <= 0) return mc;
  mc.divides = mc.f % mc.p == 0;
  if (mc.divides && !is_even(mc.p - mc.f / mc.p))
    throw InapplicableError("residue_manual", "p = " + std::to_string(mc.p) + " divides F(" +
                                                  std::to_string(t) + ") with opposite parity");
  return mc;
}

Residue divide_residue(const QuadPoly& f, std::int64_t slope, std::int64_t theta) {
  Residue r;
  r.theta = theta;
  r.modulus = {theta, slope};
  const std::int64_t s1 = f.c2 < 0 ? -1 : 1;
  QuadPoly rem = s1 * f;
  const std::int64_t k1 = rem.c2 / slope;
  rem = rem - k1 * t_times(r.modulus);
  if (rem.c2 != 0) throw std::logic_error("divide_residue: leading term survived");
  LinPoly lin = rem.linear_part();
  const std::int64_t s2 = lin.c1 < 0 ? -1 : 1;
  lin = s2 * lin;
  const std::int64_t k0 = lin.c1 / slope;
  lin = lin - k0 * r.modulus;
  r.quotient = {mul(mul(s1, s2), k0), mul(s1, k1)};
  r.sign = static_cast<int>(s1 * s2);
  r.remainder = lin;
  if (lin_mul(r.quotient, r.modulus) + r.sign * QuadPoly(r.remainder) != f)
    throw std::logic_error("divide_residue: division identity failed");
  return r;
}

ResidueEnumeration residue_enumeration(const QuadPoly& f, const LinPoly& lo, const LinPoly& hi) {
  if (lo.c1 != hi.c1)
    throw InapplicableError("residue_bounds", "bound slopes differ: " + to_string(lo) + " vs " +
                                                  to_string(hi));
  const std::int64_t slope = lo.c1;
  if (slope <= 0) throw InapplicableError("residue_bounds", "nonpositive bound slope");
  if (f.c2 % slope != 0)
    throw InapplicableError("residue_bounds", "slope " + std::to_string(slope) +
                                                  " does not divide " + std::to_string(f.c2));
  if (sub(hi.c0, lo.c0) >= kMaxResidues)
    throw InapplicableError("residue_bounds", "too many residues");

  ResidueEnumeration out;
  out.slope = slope;
  for (std::int64_t theta = lo.c0; theta <= hi.c0; ++theta) {
    Residue r = divide_residue(f, slope, theta);
    const LinPoly& rem = r.remainder;
    if (rem.c0 == 0 && rem.c1 == 0) {
      r.zero_remainder = true;
      for (std::int64_t t : {0, 1})
        if (!is_even(r.modulus.eval(t) - r.quotient.eval(t)))
          throw InapplicableError("residue_parity", "exact divisor " + to_string(r.modulus) +
                                                        " has feasible parity");
      out.residues.push_back(std::move(r));
      continue;
    }
    r.threshold = std::max(first_positive(slope - rem.c1, theta - rem.c0),
                           first_positive(slope + rem.c1, add(theta, rem.c0)));
    if (r.threshold > kMaxManualT) throw InapplicableError("residue_threshold", "threshold too large");
    if (rem.c1 > 0 && rem.c0 <= 0 && (-rem.c0) % rem.c1 == 0 && -rem.c0 / rem.c1 >= r.threshold)
      r.remainder_root = -rem.c0 / rem.c1;
    for (std::int64_t t = 0; t < r.threshold; ++t) r.checks.push_back(manual_check(f, r.modulus, t));
    if (r.remainder_root) r.checks.push_back(manual_check(f, r.modulus, *r.remainder_root));
    out.residues.push_back(std::move(r));
  }
  return out;
}

Discharge discharge(const QuadPoly& f, const LinPoly& lo, const LinPoly& hi) {
  if (strictly_above(lo, hi)) return EmptyInterval{};
  if (f.c2 == 0) return quotient_ladder(f, lo, hi);
  return residue_enumeration(f, lo, hi);
}

}  // namespace

CaseCertificate certify_no_divisor(const CaseInputs& inputs, const std::string& case_id) {
  CaseCertificate cert;
  cert.case_id = case_id;
  cert.inputs = inputs;
  const QuadPoly f = inputs.fundamental();
  cert.fundamental = f;

  std::optional<InapplicableError> first_error;
  auto attempt = [&](const std::string& role, bool lower, const QuadPoly& c1,
                     const LinPoly& c2) -> std::optional<LinPoly> {
    try {
      cert.approximations.push_back(approx(role, lower, c1, c2));
      return cert.approximations.back().bound;
    } catch (const InapplicableError& e) {
      if (!first_error) first_error = e;
      return std::nullopt;
    }
  };
  const auto l1 = attempt("L1", true, f, inputs.g1);
  const auto l2 = attempt("L2", true, -f, inputs.g2);
  const auto u1 = attempt("U1", false, f, inputs.g3);
  const auto u2 = attempt("U2", false, -f, inputs.g4);

  auto fail = [&](const InapplicableError& e) -> InapplicableError {
    return {e.step(), (case_id.empty() ? "" : case_id + ": ") + e.detail()};
  };
  if ((!l1 && !l2) || (!u1 && !u2)) throw fail(*first_error);

  // Preferred pair first, then every other combination.
  std::string pref_l = !l2 ? "L1" : !l1 ? "L2"
                                        : (l2->c1 > l1->c1 || coeff_geq(*l2, *l1)) ? "L2" : "L1";
  std::string pref_u = !u2 ? "U1" : !u1 ? "U2"
                                        : (u2->c1 < u1->c1 || coeff_geq(*u1, *u2)) ? "U2" : "U1";
  std::vector<std::pair<std::string, std::string>> order{{pref_l, pref_u}};
  for (const char* l : {"L1", "L2"})
    for (const char* u : {"U1", "U2"})
      if (std::pair<std::string, std::string>{l, u} != order.front()) order.emplace_back(l, u);

  auto pick = [&](const std::string& role) -> std::optional<LinPoly> {
    if (role == "L1") return l1;
    if (role == "L2") return l2;
    if (role == "U1") return u1;
    return u2;
  };

  std::optional<InapplicableError> pair_error;
  for (const auto& [lr, ur] : order) {
    auto lo = pick(lr), hi = pick(ur);
    if (!lo || !hi) continue;
    try {
      cert.discharge = discharge(f, *lo, *hi);
      cert.lower_role = lr;
      cert.upper_role = ur;
      cert.lower = *lo;
      cert.upper = *hi;
      return cert;
    } catch (const InapplicableError& e) {
      if (!pair_error) pair_error = e;
    }
  }
  throw fail(*pair_error);
}

CaseCertificate certify_no_divisor(const LinPoly& t1, const LinPoly& t2, const LinPoly& t3,
                                   const LinPoly& t4, const LinPoly& g1, const LinPoly& g2,
                                   const LinPoly& g3, const LinPoly& g4) {
  return certify_no_divisor(CaseInputs{t1, t2, t3, t4, g1, g2, g3, g4});
}

namespace {

void require_form(const LinPoly& p, std::int64_t min_c0, const char* what) {
  if (p.c0 < min_c0 || p.c1 < 0)
    throw InvalidFamily(std::string(what) + " " + to_string(p) + " must have free term >= " +
                        std::to_string(min_c0) + " and nonnegative slope");
}

LinPoly half(const LinPoly& p) { return {p.c0 / 2, p.c1 / 2}; }

}  // namespace

void SFamilySpec::validate() const {
  if (branches.size() < 3) throw InvalidFamily("starlike family needs at least 3 branches");
  for (const auto& b : branches) require_form(b, 1, "branch");
}

LinPoly SFamilySpec::order() const {
  LinPoly n{1, 0};
  for (const auto& b : branches) n = n + b;
  return n;
}

void HFamilySpec::validate() const {
  require_form(c, 1, "spine");
  for (const auto& x : a) require_form(x, 1, "A-branch");
  for (const auto& x : b) require_form(x, 1, "B-branch");
}

LinPoly HFamilySpec::order() const { return c + 1 + a_total() + b_total(); }

StarlikeSpec instantiate(const SFamilySpec& fam, std::int64_t t) {
  StarlikeSpec s;
  for (const auto& b : fam.branches) s.branches.push_back(b.eval(t));
  return s;
}

DoubleStarlikeSpec instantiate(const HFamilySpec& fam, std::int64_t t) {
  return {fam.c.eval(t), {fam.a[0].eval(t), fam.a[1].eval(t)},
          {fam.b[0].eval(t), fam.b[1].eval(t)}};
}

SFamilyShift shift_family(const SFamilySpec& fam, std::int64_t s) {
  if (s < 0) throw std::invalid_argument("shift must be nonnegative");
  SFamilyShift out;
  for (const auto& b : fam.branches) out.shifted.branches.push_back(shift(b, s));
  for (std::int64_t t = 0; t < s; ++t) out.base.push_back(instantiate(fam, t));
  return out;
}

HFamilyShift shift_family(const HFamilySpec& fam, std::int64_t s) {
  if (s < 0) throw std::invalid_argument("shift must be nonnegative");
  HFamilyShift out;
  out.shifted.c = shift(fam.c, s);
  for (int i = 0; i < 2; ++i) {
    out.shifted.a[i] = shift(fam.a[i], s);
    out.shifted.b[i] = shift(fam.b[i], s);
  }
  for (std::int64_t t = 0; t < s; ++t) out.base.push_back(instantiate(fam, t));
  return out;
}

bool Attestation::holds() const {
  if (kind == Kind::Even) return is_even(lhs.c0) && is_even(lhs.c1);
  return strictly_above(lhs, rhs);
}

namespace {

std::string label(const char* name, std::size_t i) { return name + std::to_string(i + 1); }

std::vector<Attestation> attestations_for(const SFamilySpec& fam) {
  using K = Attestation::Kind;
  const LinPoly n = fam.order();
  std::vector<Attestation> out{{K::Even, "order even", n, {}}};
  const LinPoly h = half(n);
  const auto& a = fam.branches;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    out.push_back({K::Greater, label("A", i) + " > " + label("A", i + 1), a[i], a[i + 1]});
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back({K::Greater, "n/2 > " + label("A", i), h, a[i]});
  return out;
}

std::vector<Attestation> attestations_for(const HFamilySpec& fam) {
  using K = Attestation::Kind;
  const LinPoly n = fam.order();
  std::vector<Attestation> out{{K::Even, "order even", n, {}}};
  const LinPoly h = half(n);
  out.push_back({K::Greater, "A1 > A2", fam.a[0], fam.a[1]});
  out.push_back({K::Greater, "B1 > B2", fam.b[0], fam.b[1]});
  for (std::size_t i = 0; i < 2; ++i) {
    out.push_back({K::Greater, "n/2 > " + label("A", i), h, fam.a[i]});
    out.push_back({K::Greater, "n/2 > " + label("B", i), h, fam.b[i]});
  }
  out.push_back({K::Greater, "1 + A* > n/2", fam.a_total() + 1, h});
  return out;
}

CaseInputs pair_case(const LinPoly& n, const LinPoly& x, const LinPoly& y) {
  return {n - 1 - x - y, y - x, {}, {}, n + 1 - 2 * x, n + 1 - 2 * y, n - 1, n - 1};
}

template <class Fam>
CertifyOutcome certify_impl(const Fam& fam) {
  fam.validate();
  FamilyCertificate cert;
  cert.family = fam;
  for (auto& att : attestations_for(fam)) {
    if (!att.holds())
      return Inapplicable{"preconditions", "attestation", att.claim + " fails for " +
                                                             to_string(att.lhs) + " vs " +
                                                             to_string(att.rhs)};
    cert.attestations.push_back(std::move(att));
  }
  for (const auto& [id, inputs] : required_cases(fam)) {
    try {
      cert.cases.push_back(certify_no_divisor(inputs));
      cert.cases.back().case_id = id;
    } catch (const InapplicableError& e) {
      return Inapplicable{id, e.step(), e.detail()};
    }
  }
  return cert;
}

}  // namespace

std::vector<std::pair<std::string, CaseInputs>> required_cases(const SFamilySpec& fam) {
  const LinPoly n = fam.order();
  const auto& a = fam.branches;
  std::vector<std::pair<std::string, CaseInputs>> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      out.emplace_back("alpha(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                       pair_case(n, a[i], a[j]));
  return out;
}

std::vector<std::pair<std::string, CaseInputs>> required_cases(const HFamilySpec& fam) {
  const LinPoly n = fam.order();
  const LinPoly as = fam.a_total(), bs = fam.b_total();
  std::vector<std::pair<std::string, CaseInputs>> out;
  out.emplace_back("alpha(1,2)", pair_case(n, fam.a[0], fam.a[1]));
  out.emplace_back("beta(1,2)", pair_case(n, fam.b[0], fam.b[1]));
  for (std::size_t i = 0; i < 2; ++i) {
    const LinPoly& ai = fam.a[i];
    out.emplace_back("gamma(" + std::to_string(i + 1) + ")",
                     CaseInputs{n - 1 - ai - as, as - ai, {}, {}, n + 1 - 2 * ai,
                                2 * as - n + 3, n - 1, 2 * as + 2 * fam.c - n + 1});
  }
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const LinPoly &ai = fam.a[i], &bj = fam.b[j];
      out.emplace_back("delta(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                       CaseInputs{n - 1 - ai - bj, bj - ai, fam.c, as - bs, n + 1 - 2 * ai,
                                  n + 1 - 2 * bj, n - 1, n - 1});
    }
  return out;
}

CertifyOutcome certify_starlike_family(const SFamilySpec& fam) { return certify_impl(fam); }
CertifyOutcome certify_h_family(const HFamilySpec& fam) { return certify_impl(fam); }

CertifyOutcome certify_family(const FamilySpec& fam) {
  return std::visit([](const auto& f) { return certify_impl(f); }, fam);
}

namespace {

[[noreturn]] void reject(const std::string& where, const std::string& what) {
  throw CertificateError(where + ": " + what);
}

void verify_approximation(const std::string& where, const GApprox& g) {
  if (!is_odd(g.c2.c0) || !is_even(g.c2.c1)) reject(where, g.role + " argument parity");
  if (g.discriminant != square(g.c2) - 4 * g.c1) reject(where, g.role + " discriminant");
  if (!nonnegative_coeffs(g.discriminant)) reject(where, g.role + " discriminant sign");
  const LinPoly& b = g.root;
  if (!is_odd(b.c0) || b.c0 <= 0 || !is_even(b.c1)) reject(where, g.role + " root parity");
  if (g.lower) {
    if (b.c1 < 0 || !strictly_above(g.discriminant, square(b))) reject(where, g.role + " root square");
  } else {
    if (b.c1 < 2 || !strictly_above(square(b), g.discriminant)) reject(where, g.role + " root square");
  }
  const LinPoly sum = g.c2 + b;
  const LinPoly expect = LinPoly{sum.c0 / 2, sum.c1 / 2} + (g.lower ? 1 : -1);
  if (g.bound != expect) reject(where, g.role + " bound");
}

void verify_ladder(const std::string& where, const QuadPoly& f, const LinPoly& lo,
                   const LinPoly& hi, const SmallQuotient& sq) {
  if (f.c2 != 0) reject(where, "quotient ladder needs deg F <= 1");
  LinPoly a = f.linear_part();
  if (a.c0 < 0) a = -a;
  if (sq.magnitude != a || !nonnegative_coeffs(a) || a.c0 <= 0) reject(where, "|F|");
  if (sq.steps.empty()) reject(where, "empty ladder");
  if (strictly_above(lo, a)) return;
  if (!strictly_above(a, hi)) reject(where, "quotient 1");
  if (strictly_above(2 * lo, a)) return;
  if (a.c0 % 4 != 0 || a.c1 % 4 != 0) reject(where, "quotient 2");
  if (strictly_above(3 * lo, a)) return;
  if (a.c1 % 3 != 0 || a.c0 % 3 == 0) reject(where, "quotient 3");
  if (!strictly_above(4 * lo, a)) reject(where, "quotient >= 4");
}

void verify_check(const std::string& where, const QuadPoly& f, const LinPoly& p, std::int64_t t,
                  const ManualCheck& mc) {
  if (mc.t != t || mc.p != p.eval(t) || mc.f != f.eval(t)) reject(where, "manual check values");
  if (mc.p <= 0) return;
  if ((mc.f % mc.p == 0) != mc.divides) reject(where, "manual check divisibility");
  if (mc.divides && !is_even(mc.p - mc.f / mc.p)) reject(where, "manual check parity");
}

void verify_residues(const std::string& where, const QuadPoly& f, const LinPoly& lo,
                     const LinPoly& hi, const ResidueEnumeration& re) {
  const std::int64_t l = re.slope;
  if (l <= 0 || lo.c1 != l || hi.c1 != l) reject(where, "residue slope");
  if (re.residues.size() != static_cast<std::size_t>(std::max<std::int64_t>(hi.c0 - lo.c0 + 1, 0)))
    reject(where, "residue count");
  for (std::size_t k = 0; k < re.residues.size(); ++k) {
    const Residue& r = re.residues[k];
    const std::string at = where + " theta=" + std::to_string(r.theta);
    if (r.theta != lo.c0 + static_cast<std::int64_t>(k) || r.modulus != LinPoly{r.theta, l})
      reject(at, "modulus");
    if (r.sign != 1 && r.sign != -1) reject(at, "sign");
    if (lin_mul(r.quotient, r.modulus) + r.sign * QuadPoly(r.remainder) != f)
      reject(at, "division identity");
    const LinPoly& rem = r.remainder;
    if (rem.c1 < 0 || rem.c1 >= l) reject(at, "remainder slope");
    if (r.zero_remainder) {
      if (rem != LinPoly{}) reject(at, "zero remainder");
      for (std::int64_t t : {0, 1})
        if (!is_even(r.modulus.eval(t) - r.quotient.eval(t))) reject(at, "zero remainder parity");
      continue;
    }
    if (rem == LinPoly{}) reject(at, "remainder vanishes identically");
    const std::int64_t ts = r.threshold;
    if (ts < 0) reject(at, "threshold");
    // Both linear forms have positive slope, so positivity at ts persists.
    if ((l - rem.c1) * ts + (r.theta - rem.c0) <= 0 || (l + rem.c1) * ts + (r.theta + rem.c0) <= 0)
      reject(at, "threshold does not bound the remainder");
    std::optional<std::int64_t> root;
    if (rem.c1 > 0 && rem.c0 <= 0 && (-rem.c0) % rem.c1 == 0 && -rem.c0 / rem.c1 >= ts)
      root = -rem.c0 / rem.c1;
    if (root != r.remainder_root) reject(at, "remainder root");
    const std::size_t expected = static_cast<std::size_t>(ts) + (root ? 1 : 0);
    if (r.checks.size() != expected) reject(at, "manual check count");
    for (std::int64_t t = 0; t < ts; ++t) verify_check(at, f, r.modulus, t, r.checks[t]);
    if (root) verify_check(at, f, r.modulus, *root, r.checks.back());
  }
}

void verify_case(const std::string& id, const CaseInputs& inputs, const CaseCertificate& c) {
  if (c.case_id != id) reject(id, "case order");
  if (c.inputs != inputs) reject(id, "case inputs");
  const QuadPoly f = inputs.fundamental();
  if (c.fundamental != f) reject(id, "fundamental polynomial");
  const GApprox* lo = nullptr;
  const GApprox* hi = nullptr;
  for (const auto& g : c.approximations) {
    verify_approximation(id, g);
    const bool neg = g.role == "L2" || g.role == "U2";
    const LinPoly& arg = g.role == "L1" ? inputs.g1 : g.role == "L2" ? inputs.g2
                         : g.role == "U1" ? inputs.g3 : inputs.g4;
    if (g.c1 != (neg ? -f : f) || g.c2 != arg) reject(id, g.role + " arguments");
    if (g.lower != (g.role[0] == 'L')) reject(id, g.role + " direction");
    if (g.role == c.lower_role) lo = &g;
    if (g.role == c.upper_role) hi = &g;
  }
  if (!lo || !hi || lo->bound != c.lower || hi->bound != c.upper) reject(id, "chosen bounds");
  if (std::holds_alternative<EmptyInterval>(c.discharge)) {
    if (!strictly_above(c.lower, c.upper)) reject(id, "interval not empty");
  } else if (const auto* sq = std::get_if<SmallQuotient>(&c.discharge)) {
    verify_ladder(id, f, c.lower, c.upper, *sq);
  } else {
    if (f.c2 == 0) reject(id, "residue enumeration needs deg F = 2");
    const auto& re = std::get<ResidueEnumeration>(c.discharge);
    if (f.c2 % re.slope != 0) reject(id, "slope divisibility");
    verify_residues(id, f, c.lower, c.upper, re);
  }
}

}  // namespace

void verify_certificate(const FamilyCertificate& cert) {
  std::visit(
      [&](const auto& fam) {
        fam.validate();
        const auto expected = attestations_for(fam);
        if (cert.attestations != expected) reject("preconditions", "attestation list");
        for (const auto& att : cert.attestations)
          if (!att.holds()) reject("preconditions", att.claim);
        const auto cases = required_cases(fam);
        if (cert.cases.size() != cases.size()) reject("cases", "case count");
        for (std::size_t k = 0; k < cases.size(); ++k)
          verify_case(cases[k].first, cases[k].second, cert.cases[k]);
      },
      cert.family);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_number(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw InvalidFamily("bad integer '" + std::string(s) + "'");
  return v;
}

LinPoly parse_form(std::string_view s) {
  auto parts = split(s, ',');
  if (parts.size() != 2) throw InvalidFamily("expected x,y pair, got '" + std::string(s) + "'");
  return {parse_number(parts[0]), parse_number(parts[1])};
}

std::vector<LinPoly> parse_forms(std::string_view s) {
  std::vector<LinPoly> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(parse_form(tok));
  return out;
}

std::string format_form(const LinPoly& p) { return std::to_string(p.c0) + "," + std::to_string(p.c1); }

}  // namespace

FamilySpec parse_family_line(std::string_view line) {
  auto fields = split(line, '|');
  if (fields.empty()) throw InvalidFamily("empty family line");
  if (fields[0] == "S") {
    if (fields.size() != 2) throw InvalidFamily("S family needs one field of branch pairs");
    SFamilySpec fam{parse_forms(fields[1])};
    fam.validate();
    return fam;
  }
  if (fields[0] == "H") {
    if (fields.size() != 4) throw InvalidFamily("H family needs C | A pairs | B pairs");
    auto c = parse_forms(fields[1]);
    auto a = parse_forms(fields[2]);
    auto b = parse_forms(fields[3]);
    if (c.size() != 1 || a.size() != 2 || b.size() != 2)
      throw InvalidFamily("H family needs 1 spine form and 2 forms per side");
    HFamilySpec fam{c[0], {a[0], a[1]}, {b[0], b[1]}};
    fam.validate();
    return fam;
  }
  throw InvalidFamily("unknown family kind '" + std::string(fields[0]) + "'");
}

std::string format_family(const FamilySpec& fam) {
  if (const auto* s = std::get_if<SFamilySpec>(&fam)) {
    std::string out = "S |";
    for (const auto& b : s->branches) out += " " + format_form(b);
    return out;
  }
  const auto& h = std::get<HFamilySpec>(fam);
  return "H | " + format_form(h.c) + " | " + format_form(h.a[0]) + " " + format_form(h.a[1]) +
         " | " + format_form(h.b[0]) + " " + format_form(h.b[1]);
}

std::string describe_family(const FamilySpec& fam) {
  auto join = [](const auto& forms) {
    std::string out;
    for (const auto& f : forms) out += (out.empty() ? "" : ", ") + to_string(f);
    return out;
  };
  if (const auto* s = std::get_if<SFamilySpec>(&fam)) return "S(" + join(s->branches) + ")";
  const auto& h = std::get<HFamilySpec>(fam);
  return "H(" + to_string(h.c) + "; " + join(h.a) + "; " + join(h.b) + ")";
}

std::vector<FamilySpec> parse_family_file(std::istream& in) {
  std::vector<FamilySpec> out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(parse_family_line(t));
  }
  return out;
}

}  // namespace tistar
