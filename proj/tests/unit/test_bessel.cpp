#include <gtest/gtest.h>

#include "qturan/bessel.hpp"
#include "qturan/errors.hpp"
#include "support.hpp"

using namespace qturan;
using qturan::testing::near;

TEST(Bessel, SeriesMatchesReferenceValues) {
  EXPECT_TRUE(near(bessel_i1(Enclosure::from_long(10, 192)).value,
                   "2670.98830370125465434103196677215254914574515", "1e-35"));
  EXPECT_TRUE(near(bessel_i1(Enclosure::from_rational(make_rational(1, 3), 192)).value,
                   "0.168992223058479233449687817189080703209436655", "1e-40"));
  EXPECT_TRUE(near(bessel_i1(Enclosure::from_long(26, 192)).value,
                   "15090072642.3416443053071899268313000050654768", "1e-30"));
  EXPECT_TRUE(bessel_i1(Enclosure::from_long(0, 64)).value.contains(ExactRational(0)));
  EXPECT_THROW(bessel_i1(Enclosure::from_long(-1, 64)), DomainError);
}

TEST(Bessel, SeriesAgreesWithQuadrature) {
  for (const ExactRational s : {make_rational(1, 10), make_rational(5, 2), ExactRational(10), ExactRational(37)}) {
    const Enclosure series = bessel_i1(Enclosure::from_rational(s, 192)).value;
    const Enclosure quad = bessel_i1_quadrature(s, 192);
    EXPECT_TRUE(series.overlaps(quad)) << s.get_str();
    EXPECT_TRUE(bessel_i1_integral_check(s, make_rational(1, 1000000000)));
  }
  EXPECT_THROW(bessel_i1_quadrature(ExactRational(51), 64), ArgumentError);
}

TEST(Bessel, GammaAtHalfIntegers) {
  EXPECT_EQ(gamma_half_multiple(make_rational(1, 2)), 1);
  EXPECT_EQ(gamma_half_multiple(make_rational(15, 2)), make_rational(135135, 128));
  EXPECT_TRUE(near(gamma_half(make_rational(9, 2), 192), "11.6317283965674489291442241094262652621089183", "1e-38"));
  EXPECT_TRUE(near(gamma_half(make_rational(1, 2), 192), "1.77245385090551602729816748334114518279754946", "1e-40"));
  EXPECT_THROW(gamma_half(ExactRational(2), 64), ArgumentError);
}

TEST(Bessel, UpperIncompleteGamma) {
  EXPECT_TRUE(near(incomplete_gamma_upper(make_rational(1, 2), Enclosure::from_long(3, 192)),
                   "0.0253565093234634431895618899987372521229034487", "1e-38"));
  EXPECT_TRUE(near(incomplete_gamma_upper(make_rational(7, 2), Enclosure::from_rational(make_rational(5, 2), 192)),
                   "2.19328943986438684926363026583964737083786684", "1e-38"));
  EXPECT_THROW(incomplete_gamma_upper(make_rational(1, 3), Enclosure::from_long(3, 64)), ArgumentError);
}

TEST(Bessel, PinelisBoundOnGrid) {
  for (long twice_a = 2; twice_a <= 13; ++twice_a) {
    const ExactRational a = make_rational(twice_a, 2);
    for (const ExactRational s : {a, ExactRational(2 * a), ExactRational(30)}) {
      if (s < a) continue;
      EXPECT_EQ(pinelis_check(a, s).verdict, Verdict::Holds) << a.get_str() << ' ' << s.get_str();
    }
  }
  EXPECT_THROW(pinelis_check(make_rational(3, 2), ExactRational(1)), DomainError);
  EXPECT_THROW(pinelis_check(make_rational(1, 2), ExactRational(1)), ArgumentError);
}

TEST(Bessel, IntegrandCoefficientsAndBound) {
  const auto& c = e_i_coefficients();
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[1], make_rational(-3, 8));
  EXPECT_EQ(c[5], make_rational(-72765, 262144));
  EXPECT_THROW(e_i(Enclosure::from_long(0, 64)), DomainError);
}

TEST(Bessel, ElementaryUpperBound) {
  for (long s : {1L, 2L, 5L, 10L, 26L, 100L}) {
    EXPECT_EQ(bkrt_check(ExactRational(s)).verdict, Verdict::Holds) << s;
  }
  EXPECT_THROW(bkrt_check(make_rational(1, 2)), DomainError);
}

TEST(Bessel, SandwichHoldsFrom26) {
  for (long s : {26L, 30L, 50L, 100L, 500L}) {
    EXPECT_EQ(bessel_sandwich(ExactRational(s)).verdict, Verdict::Holds) << s;
    EXPECT_TRUE(bessel_sandwich_check(Enclosure::from_long(s, 192))) << s;
  }
  EXPECT_THROW(bessel_sandwich(ExactRational(25)), ArgumentError);
}

TEST(Bessel, RemainderMajorantAt26) {
  const Enclosure f = bessel_remainder_majorant(Enclosure::from_long(26, 192));
  EXPECT_TRUE(near(f, "30.8068157897773975466564566919552771885630315", "1e-35"));
  EXPECT_TRUE(certainly_less(f, Enclosure::from_long(31, 192)));
}
