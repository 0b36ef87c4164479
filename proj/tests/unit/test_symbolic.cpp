#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "qturan/errors.hpp"
#include "qturan/symbolic.hpp"

using namespace qturan;

namespace {

const IdentityCheck& get(const SymbolicReport& r, const std::string& name) {
  const IdentityCheck* c = r.find(name);
  if (!c) throw std::runtime_error("missing check " + name);
  return *c;
}

PiPoly coeff(const CoefficientMap& m, long j) {
  const auto it = m.find(j);
  return it == m.end() ? PiPoly() : it->second;
}

}  // namespace

TEST(Symbolic, ExpansionsMatchSympyOracle) {
  std::ifstream in(QTURAN_TEST_DATA "/symbolic_coefficients.txt");
  ASSERT_TRUE(in);
  const auto oracle = read_snapshot(in);
  const RatioBoundExpansion ab = expand_ratio_bound_numerators();
  const QRatioExpansion cd = expand_q_ratio_numerators();
  const std::map<std::string, const CoefficientMap*> ours{
      {"a", &ab.a}, {"b", &ab.b}, {"c", &cd.c}, {"d", &cd.d}};
  for (const auto& [family, derived] : ours) {
    ASSERT_TRUE(oracle.count(family)) << family;
    const CoefficientMap& expected = oracle.at(family);
    for (long j = -5; j <= 30; ++j) {
      EXPECT_EQ(coeff(*derived, j), coeff(expected, j)) << family << j;
    }
  }
}

TEST(Symbolic, LeadingCoefficients) {
  const RatioBoundExpansion ab = expand_ratio_bound_numerators();
  EXPECT_EQ(ab.a.at(24), PiPoly::parse("78 - 175/64*pi^4"));
  EXPECT_EQ(ab.a.at(26), PiPoly::parse("160 - 4/3*pi^4"));
  EXPECT_EQ(ab.b.at(24), PiPoly::parse("102 + 175/64*pi^4"));
  EXPECT_EQ(ab.b.at(25), PiPoly::parse("19/16*pi^4 - 1416"));
  EXPECT_EQ(ab.a_numerator.degree(), 26);
  const QRatioExpansion cd = expand_q_ratio_numerators();
  EXPECT_EQ(cd.c.at(19), PiPoly::parse("642816*pi^8"));
  EXPECT_EQ(cd.c.at(21), PiPoly(71663616));
  EXPECT_EQ(cd.d.at(18), PiPoly::parse("-183600*pi^8"));
  EXPECT_EQ(cd.d.at(19), PiPoly::parse("47232*pi^8"));
  // The derived d_17 carries a pi^4 term absent from the published value.
  EXPECT_EQ(cd.d.at(17), PiPoly::parse("71414784*pi^4 + 53136*pi^8"));
}

TEST(Symbolic, SnapshotRoundTrip) {
  std::stringstream buffer;
  write_snapshot(buffer);
  const auto back = read_snapshot(buffer);
  EXPECT_EQ(back.at("c"), expand_q_ratio_numerators().c);
  EXPECT_EQ(back.at("a"), expand_ratio_bound_numerators().a);
  std::istringstream bad("[a]\nnot a line\n");
  EXPECT_THROW(read_snapshot(bad), ArgumentError);
}

TEST(Symbolic, RatioBoundReportHolds) {
  const SymbolicReport r = ratio_bound_report();
  for (const auto& c : r.checks) EXPECT_TRUE(c.holds) << c.name << ": " << c.detail;
}

TEST(Symbolic, QRatioReportFlagsOnlyTheLowerDCoefficient) {
  const SymbolicReport r = q_ratio_report();
  EXPECT_FALSE(r.all_hold());
  EXPECT_FALSE(get(r, "published d_17").holds);
  EXPECT_TRUE(get(r, "published d_18").holds);
  EXPECT_TRUE(get(r, "published c_19").holds);
  EXPECT_TRUE(get(r, "c leading quadratic positive at nu=67").holds);
  EXPECT_TRUE(get(r, "d leading quadratic positive at nu=67").holds);
  EXPECT_TRUE(get(r, "d dominance j<=16 at nu=67").holds);
  EXPECT_TRUE(get(r, "c dominance j<=18 at nu=4").holds);
  EXPECT_TRUE(get(r, "c expansion numeric agreement at nu=100").holds);
  EXPECT_TRUE(get(r, "d expansion numeric agreement at nu=100").holds);
  const IdentityCheck& from7 = get(r, "d leading quadratic positive from nu=7");
  EXPECT_FALSE(from7.holds);
  EXPECT_EQ(from7.detail, "positive from nu = 20");
}

TEST(Symbolic, QuadraticThresholdSearch) {
  // nu^2 - 10 nu - 24 vanishes at 12, so it is first positive at 13.
  EXPECT_EQ(smallest_positive_integer_nu(PiPoly(1), PiPoly(-10), PiPoly(-12), 2), 13);
  EXPECT_THROW(smallest_positive_integer_nu(PiPoly(-1), PiPoly(0), PiPoly(0), 1), ArgumentError);
  const QRatioExpansion cd = expand_q_ratio_numerators();
  EXPECT_EQ(smallest_positive_integer_nu(cd.c.at(21), cd.c.at(20), cd.c.at(19), 20), 67);
}

TEST(Symbolic, PhiPsiAndQuarticProducts) {
  for (const auto& r : {phi_psi_identities(), quartic_product_identities()}) {
    for (const auto& c : r.checks) EXPECT_TRUE(c.holds) << r.name << ": " << c.name << " " << c.detail;
  }
}

TEST(Symbolic, TaylorAndIntegrandCoefficients) {
  for (const auto& r : {taylor_2mu_coeffs(), derive_E_I_from_gamma()}) {
    EXPECT_TRUE(r.all_hold()) << r.name;
  }
  EXPECT_EQ(get(taylor_2mu_coeffs(), "u^1 coefficient").detail, "-1/4*sqrt2");
}

TEST(Symbolic, ExpansionBuildingBlocks) {
  EXPECT_EQ(e_i_laurent().coefficient(-5), PiPoly(make_rational(-72765, 262144)));
  EXPECT_EQ(e_q_laurent().coefficient(-3), PiPoly::monomial(make_rational(-1, 36), 4));
  EXPECT_EQ(shift_upper(1) - shift_lower(1), NuLaurent::monomial(PiPoly::monomial(make_rational(5, 5184), 8), -7));
}

TEST(Symbolic, SuiteCoversEveryReport) {
  const auto suite = symbolic_suite();
  EXPECT_EQ(suite.size(), 6u);
  int failing = 0;
  for (const auto& r : suite) failing += r.all_hold() ? 0 : 1;
  EXPECT_EQ(failing, 1);
}
