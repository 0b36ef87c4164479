#include "qturan/symbolic.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "qturan/bessel.hpp"
#include "qturan/errors.hpp"
#include "qturan/nu.hpp"

namespace qturan {

namespace {

constexpr Precision kSpotBits = 320;

NuLaurent term(const ExactRational& c, long pi_power, long nu_power) {
  return NuLaurent::monomial(PiPoly::monomial(c, pi_power), nu_power);
}

NuLaurent nu_pow(long k) { return NuLaurent::nu(k); }

IdentityCheck check(std::string name, bool holds, std::string detail = {}) {
  return IdentityCheck{std::move(name), holds, std::move(detail)};
}

// Certified sign of an exact expression at an exact nu, refining precision.
int certified_sign(const NuLaurent& p, const ExactRational& at) {
  for (Precision bits = 128; bits <= kPrecisionCap; bits *= 2) {
    const Enclosure v = p.evaluate(Enclosure::from_rational(at, bits));
    if (v.is_positive()) return 1;
    if (v.is_negative()) return -1;
    if (mpfr_zero_p(v.lo().get()) && mpfr_zero_p(v.hi().get())) return 0;
  }
  throw PrecisionExhausted("sign undecided at the precision cap");
}

int certified_sign(const PiPoly& p) { return certified_sign(NuLaurent(p), 1); }

PiPoly abs_of(const PiPoly& p) { return certified_sign(p) < 0 ? -p : p; }

CoefficientMap coefficients_of(const NuLaurent& p, long lo, long hi, const char* label) {
  if (p.is_zero()) throw InternalInconsistency(std::string(label) + " expansion vanished");
  if (p.min_degree() < lo || p.degree() > hi) {
    throw InternalInconsistency(std::string(label) + " expansion has exponents outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  CoefficientMap out;
  for (long j = lo; j <= hi; ++j) out[j] = p.coefficient(j);
  return out;
}

// X^6 - 3/8 X^4 u - 15/128 X^4 - 105/1024 X^2 u - 4725/32768 X^2 - 72765/262144 u + c
NuLaurent f_polynomial(int side, const NuLaurent& u, long c) {
  ShiftPoly f = ShiftPoly::x_power(side, 6);
  f += ShiftPoly::x_power(side, 4, -(NuLaurent(PiPoly(make_rational(3, 8))) * u) -
                                       NuLaurent(PiPoly(make_rational(15, 128))));
  f += ShiftPoly::x_power(side, 2, -(NuLaurent(PiPoly(make_rational(105, 1024))) * u) -
                                       NuLaurent(PiPoly(make_rational(4725, 32768))));
  f += ShiftPoly::x_power(side, 0, -(NuLaurent(PiPoly(make_rational(72765, 262144))) * u) +
                                       NuLaurent(c));
  return f.substitute();
}

Enclosure f_numeric(const Enclosure& x, const Enclosure& u, long c) {
  const Enclosure x2 = x * x;
  const Enclosure x4 = x2 * x2;
  return x4 * x2 - x4 * u * make_rational(3, 8) - x4 * make_rational(15, 128) -
         x2 * u * make_rational(105, 1024) - x2 * make_rational(4725, 32768) -
         u * make_rational(72765, 262144) + c;
}

bool overlaps(const Enclosure& a, const Enclosure& b) { return a.overlaps(b); }

void compare_published(SymbolicReport& report, const std::string& family,
                       const CoefficientMap& derived) {
  for (const auto& p : published_coefficients()) {
    if (p.family != family) continue;
    const PiPoly expected = PiPoly::parse(p.text);
    const PiPoly& got = derived.at(p.j);
    report.checks.push_back(check("published " + family + "_" + std::to_string(p.j),
                                  got == expected,
                                  "derived " + got.to_string() + "; published " + p.text));
  }
}

// |p_j| nu^j <= |p_top| nu^top at nu, for all j in [lo, hi].
IdentityCheck dominance(const std::string& name, const CoefficientMap& p, long lo, long hi,
                        long top, long at) {
  const PiPoly reference = abs_of(p.at(top));
  std::string worst;
  for (long j = lo; j <= hi; ++j) {
    const NuLaurent diff =
        NuLaurent::monomial(reference, top) - NuLaurent::monomial(abs_of(p.at(j)), j);
    if (certified_sign(diff, at) < 0) worst += (worst.empty() ? "" : ",") + std::to_string(j);
  }
  if (worst.empty()) return check(name, true, "all j hold at nu = " + std::to_string(at));
  // Each ratio |p_j| / |p_top| <= nu^(top - j) is monotone in nu.
  long from = at + 1;
  for (; from < 100'000; ++from) {
    bool all = true;
    for (long j = lo; j <= hi && all; ++j) {
      const NuLaurent diff =
          NuLaurent::monomial(reference, top) - NuLaurent::monomial(abs_of(p.at(j)), j);
      all = certified_sign(diff, from) >= 0;
    }
    if (all) break;
  }
  return check(name, false,
               "fails for j = " + worst + " at nu = " + std::to_string(at) +
                   "; holds from nu = " + std::to_string(from));
}

}  // namespace

bool SymbolicReport::all_hold() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

const IdentityCheck* SymbolicReport::find(const std::string& check_name) const {
  for (const auto& c : checks) {
    if (c.name == check_name) return &c;
  }
  return nullptr;
}

NuLaurent e_i_laurent() {
  NuLaurent out;
  const auto& c = e_i_coefficients();
  for (long k = 0; k < 6; ++k) out += term(c[static_cast<std::size_t>(k)], 0, -k);
  return out;
}

NuLaurent e_q_laurent() {
  return NuLaurent(1) - term(make_rational(1, 36), 4, -3) + term(make_rational(1, 12), 4, -4) -
         term(make_rational(1, 32), 4, -5);
}

NuLaurent shift_upper(int side) {
  return nu_pow(1) + term(make_rational(side, 6), 2, -1) - term(make_rational(1, 72), 4, -3) +
         term(make_rational(side, 432), 6, -5);
}

NuLaurent shift_lower(int side) {
  return shift_upper(side) - term(make_rational(5, 5184), 8, -7);
}

RatioBoundExpansion expand_ratio_bound_numerators() {
  const NuLaurent sm = shifted_nu_squared(-1);
  const NuLaurent sp = shifted_nu_squared(1);
  const NuLaurent cube_product = pow(sm, 3) * pow(sp, 3);
  const NuLaurent ei = e_i_laurent();
  const NuLaurent slack = term(31, 0, -6);

  const NuLaurent f_left = f_polynomial(-1, shift_upper(-1), -31) * f_polynomial(1, shift_upper(1), -31);
  const NuLaurent left_target = term(32, 0, 6) - term(1, 4, 1) - NuLaurent(4128);
  const NuLaurent a_num = term(32, 0, 20) * f_left -
                          left_target * pow(ei + slack, 2) * nu_pow(14) * cube_product;

  const NuLaurent f_right = f_polynomial(-1, shift_lower(-1), 31) * f_polynomial(1, shift_lower(1), 31);
  const NuLaurent right_target = term(32, 0, 6) - term(1, 4, 1) + NuLaurent(3872);
  const NuLaurent b_num = right_target * pow(ei - slack, 2) * nu_pow(14) * cube_product -
                          term(32, 0, 20) * f_right;

  RatioBoundExpansion out{a_num, b_num, coefficients_of(a_num, 0, 26, "a"),
                       coefficients_of(b_num, 0, 26, "b")};
  return out;
}

namespace {

NuLaurent lower_product() {
  return (NuLaurent(1) + term(make_rational(1, 12), 4, -4) + term(make_rational(7, 864), 8, -8)) *
         (NuLaurent(1) - term(make_rational(1, 36), 4, -3) - term(make_rational(5, 2592), 8, -7)) *
         (NuLaurent(1) - term(make_rational(1, 32), 4, -5) - term(129, 0, -6)) *
         (NuLaurent(1) - term(5, 0, -6));
}

NuLaurent upper_product() {
  return (NuLaurent(1) + term(make_rational(1, 12), 4, -4) + term(make_rational(1, 123), 8, -8)) *
         (NuLaurent(1) - term(make_rational(1, 36), 4, -3) + term(make_rational(1, 1296), 8, -6)) *
         (NuLaurent(1) - term(make_rational(1, 32), 4, -5) + term(121, 0, -6)) *
         (NuLaurent(1) + term(5, 0, -6));
}

NuLaurent lower_target() { return e_q_laurent() - term(135, 0, -6); }

NuLaurent upper_target() {
  return e_q_laurent() + term(126, 0, -6) + term(make_rational(1, 1296), 8, -6);
}

}  // namespace

QRatioExpansion expand_q_ratio_numerators() {
  const NuLaurent c_num = term(71663616, 0, 27) * (lower_product() - lower_target());
  const NuLaurent d_num = term(-20404224, 0, 26) * (upper_product() - upper_target());
  return QRatioExpansion{c_num, d_num, coefficients_of(c_num, 0, 21, "c"),
                        coefficients_of(d_num, 0, 19, "d")};
}

const std::vector<PublishedCoefficient>& published_coefficients() {
  static const std::vector<PublishedCoefficient> values{
      {"a", 24, "78 - 175/64*pi^4"},  {"a", 25, "-1608 - 19/16*pi^4"},
      {"a", 26, "160 - 4/3*pi^4"},    {"b", 24, "102 + 175/64*pi^4"},
      {"b", 25, "-1416 + 19/16*pi^4"}, {"b", 26, "-96 + 4/3*pi^4"},
      {"c", 19, "642816*pi^8"},       {"c", 20, "-304128*pi^8"},
      {"c", 21, "71663616"},          {"d", 17, "53136*pi^8"},
      {"d", 18, "-183600*pi^8"},      {"d", 19, "47232*pi^8"},
  };
  return values;
}

long smallest_positive_integer_nu(const PiPoly& lead2, const PiPoly& lead1, const PiPoly& lead0,
                                  long multiplier) {
  if (certified_sign(lead2) <= 0) throw ArgumentError("leading coefficient must be positive");
  const NuLaurent f = NuLaurent::monomial(lead2, 2) + NuLaurent::monomial(lead1, 1) -
                      NuLaurent(PiPoly(multiplier) * abs_of(lead0));
  // f(0) <= 0, so f has a single positive crossing.
  for (long v = 1; v <= 1'000'000; ++v) {
    if (certified_sign(f, v) > 0) return v;
  }
  throw PrecisionExhausted("no positive crossing below 10^6");
}

SymbolicReport ratio_bound_report() {
  SymbolicReport r{"ratio_bound_numerators", {}};
  const RatioBoundExpansion e = expand_ratio_bound_numerators();
  r.checks.push_back(check("a expansion degree", e.a_numerator.degree() == 26,
                           "exponents " + std::to_string(e.a_numerator.min_degree()) + ".." +
                               std::to_string(e.a_numerator.degree())));
  r.checks.push_back(check("b expansion degree", e.b_numerator.degree() == 26,
                           "exponents " + std::to_string(e.b_numerator.min_degree()) + ".." +
                               std::to_string(e.b_numerator.degree())));
  compare_published(r, "a", e.a);
  compare_published(r, "b", e.b);
  r.checks.push_back(dominance("a dominance j<=23 at nu=27", e.a, 0, 23, 24, 27));
  r.checks.push_back(dominance("b dominance j<=23 at nu=27", e.b, 0, 23, 24, 27));
  for (const auto& [name, coeffs] : {std::pair{"a", &e.a}, std::pair{"b", &e.b}}) {
    const NuLaurent top = NuLaurent::monomial(coeffs->at(26), 26) +
                          NuLaurent::monomial(coeffs->at(25), 25) -
                          NuLaurent::monomial(PiPoly(25) * abs_of(coeffs->at(24)), 24);
    r.checks.push_back(check(std::string(name) + " top terms positive at nu=60",
                             certified_sign(top, 60) > 0));
  }

  // Direct evaluation of the unexpanded differences at nu = 100.
  const Enclosure v = Enclosure::from_long(100, kSpotBits);
  const Enclosure pi = pi_enclosure(kSpotBits);
  const Enclosure pi4 = pow(pi, 4);
  const Enclosure vm = sqrt(v * v - pi * pi / 3);
  const Enclosure vp = sqrt(v * v + pi * pi / 3);
  const ShiftBounds sb = shift_bounds(v);
  const Enclosure ei = e_i(v);
  const Enclosure slack = 31L / pow(v, 6);
  const Enclosure denom = pow(v, 14) * pow(vm, 6) * pow(vp, 6);
  const Enclosure pl = f_numeric(vm, sb.u_v, -31) * f_numeric(vp, sb.u_bar, -31) /
                       (pow(vm, 6) * pow(vp, 6));
  const Enclosure pr = f_numeric(vm, sb.d_v, 31) * f_numeric(vp, sb.d_bar, 31) /
                       (pow(vm, 6) * pow(vp, 6));
  const Enclosure lhs_a = 32L * pow(v, 6) * pl - (32L * pow(v, 6) - pi4 * v - 4128L) *
                                                     pow(ei + slack, 2);
  const Enclosure lhs_b = (32L * pow(v, 6) - pi4 * v + 3872L) * pow(ei - slack, 2) -
                          32L * pow(v, 6) * pr;
  r.checks.push_back(check("a expansion numeric agreement at nu=100",
                           overlaps(lhs_a, e.a_numerator.evaluate(v) / denom)));
  r.checks.push_back(check("b expansion numeric agreement at nu=100",
                           overlaps(lhs_b, e.b_numerator.evaluate(v) / denom)));
  return r;
}

SymbolicReport q_ratio_report() {
  SymbolicReport r{"q_ratio_numerators", {}};
  const QRatioExpansion e = expand_q_ratio_numerators();
  r.checks.push_back(check("c expansion degree",
                           e.c_numerator.degree() == 21 && e.c_numerator.min_degree() >= 0,
                           "exponents " + std::to_string(e.c_numerator.min_degree()) + ".." +
                               std::to_string(e.c_numerator.degree())));
  r.checks.push_back(check("d expansion degree",
                           e.d_numerator.degree() == 19 && e.d_numerator.min_degree() >= 0,
                           "exponents " + std::to_string(e.d_numerator.min_degree()) + ".." +
                               std::to_string(e.d_numerator.degree())));
  compare_published(r, "c", e.c);
  compare_published(r, "d", e.d);

  r.checks.push_back(dominance("c dominance j<=18 at nu=4", e.c, 0, 18, 19, 4));
  r.checks.push_back(dominance("d dominance j<=16 at nu=2", e.d, 0, 16, 17, 2));
  r.checks.push_back(dominance("d dominance j<=16 at nu=67", e.d, 0, 16, 17, 67));

  const NuLaurent c_quad = NuLaurent::monomial(e.c.at(21), 2) + NuLaurent::monomial(e.c.at(20), 1) -
                           NuLaurent(PiPoly(20) * abs_of(e.c.at(19)));
  const NuLaurent d_quad = NuLaurent::monomial(e.d.at(19), 2) + NuLaurent::monomial(e.d.at(18), 1) -
                           NuLaurent(PiPoly(18) * abs_of(e.d.at(17)));
  r.checks.push_back(check("c leading quadratic positive at nu=67", certified_sign(c_quad, 67) > 0));
  r.checks.push_back(check("d leading quadratic positive at nu=67", certified_sign(d_quad, 67) > 0));
  const long d_from = smallest_positive_integer_nu(e.d.at(19), e.d.at(18), e.d.at(17), 18);
  r.checks.push_back(check("d leading quadratic positive from nu=7", d_from <= 7,
                           "positive from nu = " + std::to_string(d_from)));

  const Enclosure v = Enclosure::from_long(100, kSpotBits);
  const Enclosure c_direct = lower_product().evaluate(v) - lower_target().evaluate(v);
  const Enclosure d_direct = upper_product().evaluate(v) - upper_target().evaluate(v);
  r.checks.push_back(check(
      "c expansion numeric agreement at nu=100",
      overlaps(c_direct, e.c_numerator.evaluate(v) / (71663616L * pow(v, 27)))));
  r.checks.push_back(check(
      "d expansion numeric agreement at nu=100",
      overlaps(d_direct, -(e.d_numerator.evaluate(v) / (20404224L * pow(v, 26))))));
  return r;
}

namespace {

NuLaurent poly_from(const std::vector<std::pair<std::string, long>>& terms) {
  NuLaurent out;
  for (const auto& [coeff, power] : terms) out += NuLaurent::monomial(PiPoly::parse(coeff), power);
  return out;
}

NuLaurent published_phi() {
  return poly_from({{"729", 24}, {"-1215*pi^4", 20}, {"7290", 18}, {"81*pi^8", 16},
                    {"-2187*pi^4", 14}, {"3645 - 3*pi^12", 12}, {"243*pi^8", 10},
                    {"-1215*pi^4", 8}, {"-9*pi^12", 6}, {"135*pi^8", 4}, {"-5*pi^12", 0}});
}

NuLaurent published_psi() {
  return poly_from({{"729", 24}, {"-1215*pi^4", 20}, {"-7290", 18}, {"81*pi^8", 16},
                    {"2187*pi^4", 14}, {"3645 - 3*pi^12", 12}, {"-243*pi^8", 10},
                    {"-1215*pi^4", 8}, {"9*pi^12", 6}, {"135*pi^8", 4}, {"-5*pi^12", 0}});
}

NuLaurent published_phi_minus_psi() {
  return poly_from({{"14580", 18}, {"-4374*pi^4", 14}, {"486*pi^8", 10}, {"-18*pi^12", 6}});
}

}  // namespace

SymbolicReport phi_psi_identities() {
  SymbolicReport r{"phi_psi", {}};
  const NuLaurent sm = shifted_nu_squared(-1);
  const NuLaurent sp = shifted_nu_squared(1);
  const NuLaurent quartic = nu_pow(4) - term(make_rational(1, 9), 4, 0);
  r.checks.push_back(check("nu(n-1)^2 nu(n+1)^2 = nu^4 - pi^4/9", sm * sp == quartic));

  const NuLaurent nine = term(9, 0, 4) - term(1, 4, 0);  // 9 nu^4 - pi^4
  const NuLaurent cube = pow(nine, 3);
  const NuLaurent sm3 = pow(sm, 3);
  const NuLaurent sp3 = pow(sp, 3);
  const NuLaurent nu6 = nu_pow(6);
  // L_Q = nu^12 (S-^3 - 1)(S+^3 - 1) / ((nu^6 + 1)^2 (nu^4 - pi^4/9)^3), so
  // clearing nu^6 (9nu^4 - pi^4)^3 (nu^6 + 1)^2 gives 729 nu^18 (...)(...).
  const NuLaurent phi = term(729, 0, 18) * (sm3 - NuLaurent(1)) * (sp3 - NuLaurent(1)) -
                        (nu6 - NuLaurent(5)) * cube * pow(nu6 + NuLaurent(1), 2);
  const NuLaurent psi = -(term(729, 0, 18) * (sm3 + NuLaurent(1)) * (sp3 + NuLaurent(1)) -
                          (nu6 + NuLaurent(5)) * cube * pow(nu6 - NuLaurent(1), 2));
  r.checks.push_back(check("L_Q identity with phi", phi == published_phi(),
                           phi == published_phi() ? "" : "derived " + phi.to_string()));
  r.checks.push_back(check("R_Q identity with psi", psi == published_psi(),
                           psi == published_psi() ? "" : "derived " + psi.to_string()));
  r.checks.push_back(check("phi - psi", phi - psi == published_phi_minus_psi()));
  r.checks.push_back(check("psi(4) > 0", certified_sign(published_psi(), 4) > 0));
  r.checks.push_back(check("phi(2) - psi(2) > 0", certified_sign(published_phi_minus_psi(), 2) > 0));

  const Enclosure v = Enclosure::from_long(100, kSpotBits);
  const Enclosure pi = pi_enclosure(kSpotBits);
  const Enclosure vm6 = pow(v * v - pi * pi / 3, 3);
  const Enclosure vp6 = pow(v * v + pi * pi / 3, 3);
  const Enclosure v6 = pow(v, 6);
  const Enclosure lq = (1L - 1L / vm6) * (1L - 1L / vp6) / pow(1L + 1L / v6, 2);
  const Enclosure rq = (1L + 1L / vm6) * (1L + 1L / vp6) / pow(1L - 1L / v6, 2);
  const Enclosure nine_v = pow(9L * pow(v, 4) - pow(pi, 4), 3);
  r.checks.push_back(check("L_Q numeric agreement at nu=100",
                           overlaps(lq - (1L - 5L / v6),
                                    published_phi().evaluate(v) / (v6 * nine_v * pow(v6 + 1L, 2)))));
  r.checks.push_back(check("R_Q numeric agreement at nu=100",
                           overlaps(rq - (1L + 5L / v6),
                                    -published_psi().evaluate(v) / (v6 * nine_v * pow(v6 - 1L, 2)))));
  return r;
}

SymbolicReport quartic_product_identities() {
  SymbolicReport r{"quartic_products", {}};
  const NuLaurent cubes = pow(shifted_nu_squared(-1), 3) * pow(shifted_nu_squared(1), 3);
  const NuLaurent low_factor =
      NuLaurent(1) + term(make_rational(1, 12), 4, -4) + term(make_rational(7, 864), 8, -8);
  const NuLaurent high_factor =
      NuLaurent(1) + term(make_rational(1, 12), 4, -4) + term(make_rational(1, 123), 8, -8);
  const NuLaurent lhs_low = nu_pow(12) - cubes * pow(low_factor, 4);
  const NuLaurent lhs_high = nu_pow(12) - cubes * pow(high_factor, 4);

  const NuLaurent inner_low = poly_from({{"1340897918976", 32}, {"27935373312*pi^4", 28},
                                      {"1551965184*pi^8", 24}, {"-1551965184*pi^12", 20},
                                      {"-60816096*pi^16", 16}, {"-3873177*pi^20", 12},
                                      {"625779*pi^24", 8}, {"33957*pi^28", 4}, {"2401*pi^32", 0}});
  const NuLaurent inner_high = poly_from({{"4823367264", 36}, {"-141396118128*pi^4", 32},
                                      {"-2942756919*pi^8", 28}, {"-175420755*pi^12", 24},
                                      {"163918779*pi^16", 20}, {"6413999*pi^20", 16},
                                      {"418192*pi^24", 12}, {"-66144*pi^28", 8},
                                      {"-3584*pi^32", 4}, {"-256*pi^36", 0}});
  const NuLaurent rhs_low = term(make_rational(1, 1), 12, -32) *
                         NuLaurent(PiPoly(ExactRational(1, ExactInteger("406239826673664")))) * inner_low;
  const NuLaurent rhs_high = term(-1, 8, -32) *
                         NuLaurent(PiPoly(ExactRational(1, ExactInteger("42715740489984")))) * inner_high;
  r.checks.push_back(check("lower product factorization", lhs_low - rhs_low == NuLaurent()));
  r.checks.push_back(check("upper product factorization", lhs_high - rhs_high == NuLaurent()));

  // Leading inner coefficients recovered from the derived left sides.
  const PiPoly lead_low = lhs_low.coefficient(0) * PiPoly(ExactRational(ExactInteger("406239826673664")));
  const PiPoly lead_high = lhs_high.coefficient(4) * PiPoly(ExactRational(ExactInteger("-42715740489984")));
  r.checks.push_back(check("lower product leading coefficient",
                           lead_low == PiPoly::monomial(ExactRational(ExactInteger("1340897918976")), 12),
                           lead_low.to_string()));
  r.checks.push_back(check("upper product leading coefficient",
                           lead_high == PiPoly::monomial(ExactRational(ExactInteger("4823367264")), 8),
                           lead_high.to_string()));

  const NuLaurent middle_low = poly_from({{"1551965184*pi^8", 24}, {"-1551965184*pi^12", 20},
                                  {"-60816096*pi^16", 16}, {"-3873177*pi^20", 12}});
  const NuLaurent leading_high = poly_from({{"4823367264", 36}, {"-141396118128*pi^4", 32},
                                         {"-2942756919*pi^8", 28}, {"-175420755*pi^12", 24}});
  const NuLaurent trailing_high = poly_from(
      {{"418192*pi^24", 12}, {"-66144*pi^28", 8}, {"-3584*pi^32", 4}, {"-256*pi^36", 0}});
  r.checks.push_back(check("lower product middle terms at nu=4", certified_sign(middle_low, 4) >= 0));
  r.checks.push_back(check("upper product leading terms at nu=8", certified_sign(leading_high, 8) >= 0));
  r.checks.push_back(check("upper product trailing terms at nu=8", certified_sign(trailing_high, 8) >= 0));
  return r;
}

namespace {

// sqrt2 binom(1/2, k) (-1/2)^k: coefficient of u^k in (2 - u)^(1/2).
QuadSqrt2 taylor_by_binomial(long k) {
  ExactRational c = 1;
  for (long i = 0; i < k; ++i) c *= (make_rational(1, 2) - i) * make_rational(-1, 2) / (i + 1);
  return QuadSqrt2{0, c};
}

struct PowerTerm {
  ExactRational coeff;
  ExactRational exponent;  // coeff * (2 - u)^exponent
};

PowerTerm differentiate(const PowerTerm& t) { return {-t.coeff * t.exponent, t.exponent - 1}; }

// Value of coeff * 2^exponent for half-integer exponent.
QuadSqrt2 at_zero(const PowerTerm& t) {
  const ExactRational shifted = t.exponent - make_rational(1, 2);
  const long e = shifted.get_num().get_si();
  ExactRational scale = 1;
  for (long i = 0; i < std::labs(e); ++i) scale *= 2;
  if (e < 0) scale = 1 / scale;
  return QuadSqrt2{0, t.coeff * scale};
}

ExactRational factorial(long k) {
  ExactRational f = 1;
  for (long i = 2; i <= k; ++i) f *= i;
  return f;
}

// Published coefficients of u^k: sqrt2, -1/(2sqrt2), -1/(16sqrt2), ...
QuadSqrt2 published_taylor(long k) {
  static const std::array<std::pair<long, long>, 6> inv_sqrt2{
      {{0, 0}, {-1, 2}, {-1, 16}, {-1, 64}, {-5, 1024}, {-7, 4096}}};
  if (k == 0) return QuadSqrt2{0, 1};
  const auto [num, den] = inv_sqrt2[static_cast<std::size_t>(k)];
  return QuadSqrt2{0, make_rational(num, 2 * den)};  // c/sqrt2 = (c/2) sqrt2
}

}  // namespace

SymbolicReport taylor_2mu_coeffs() {
  SymbolicReport r{"taylor", {}};
  PowerTerm t{1, make_rational(1, 2)};
  for (long k = 0; k <= 6; ++k) {
    if (k > 0) t = differentiate(t);
    const QuadSqrt2 by_derivative = ExactRational(1 / factorial(k)) * at_zero(t);
    const QuadSqrt2 by_binomial = taylor_by_binomial(k);
    if (k <= 5) {
      r.checks.push_back(check("u^" + std::to_string(k) + " coefficient",
                               by_derivative == by_binomial && by_binomial == published_taylor(k),
                               by_binomial.to_string()));
    }
  }
  // The 6th-derivative term: (1/6!) d^6/du^6 (2-u)^(1/2) = -21/1024 (2-u)^(-11/2).
  const ExactRational remainder = t.coeff / factorial(6);
  r.checks.push_back(check("6th derivative prefactor",
                           remainder == make_rational(-21, 1024) &&
                               t.exponent == make_rational(-11, 2),
                           remainder.get_str() + " * (2-u)^(" + t.exponent.get_str() + ")"));
  return r;
}

SymbolicReport derive_E_I_from_gamma() {
  SymbolicReport r{"E_I_from_gamma", {}};
  static const std::array<ExactRational, 6> integrand{
      make_rational(1), make_rational(-1, 4), make_rational(-1, 32),
      make_rational(-1, 128), make_rational(-5, 2048), make_rational(-7, 8192)};
  ExactRational pinelis_sum = 0;
  for (long k = 0; k < 6; ++k) {
    const ExactRational beta = taylor_by_binomial(k).b;
    const ExactRational a = make_rational(2 * k + 3, 2);
    const ExactRational coeff = 2 * beta * gamma_half_multiple(a);
    r.checks.push_back(check("integrand u^(" + std::to_string(2 * k + 1) + "/2) coefficient",
                             beta == integrand[static_cast<std::size_t>(k)], beta.get_str()));
    r.checks.push_back(check("1/s^" + std::to_string(k) + " coefficient",
                             coeff == e_i_coefficients()[static_cast<std::size_t>(k)],
                             coeff.get_str()));
    pinelis_sum += abs(beta) * a;
  }
  r.checks.push_back(check("incomplete-Gamma constant 37495/16384",
                           pinelis_sum == make_rational(37495, 16384), pinelis_sum.get_str()));
  const ExactRational remainder = make_rational(21, 1024) * gamma_half_multiple(make_rational(15, 2));
  r.checks.push_back(check("remainder constant 2837835/131072",
                           remainder == make_rational(2837835, 131072), remainder.get_str()));
  return r;
}

std::vector<SymbolicReport> symbolic_suite() {
  return {taylor_2mu_coeffs(), derive_E_I_from_gamma(), ratio_bound_report(),
          quartic_product_identities(), phi_psi_identities(), q_ratio_report()};
}

void write_snapshot(std::ostream& out) {
  const RatioBoundExpansion l = expand_ratio_bound_numerators();
  const QRatioExpansion t = expand_q_ratio_numerators();
  out << "# machine-derived expansion coefficients, one \"j: coefficient\" per line\n";
  for (const auto& [family, coeffs] :
       {std::pair{"a", &l.a}, std::pair{"b", &l.b}, std::pair{"c", &t.c}, std::pair{"d", &t.d}}) {
    out << "[" << family << "]\n";
    for (const auto& [j, c] : *coeffs) out << j << ": " << c.to_string() << "\n";
  }
}

std::map<std::string, CoefficientMap> read_snapshot(std::istream& in) {
  std::map<std::string, CoefficientMap> out;
  std::string line;
  std::string family;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      family = line.substr(1, line.size() - 2);
      continue;
    }
    const auto colon = line.find(':');
    if (family.empty() || colon == std::string::npos) {
      throw ArgumentError("malformed snapshot line: " + line);
    }
    out[family][std::stol(line.substr(0, colon))] = PiPoly::parse(line.substr(colon + 1));
  }
  return out;
}

}  // namespace qturan
