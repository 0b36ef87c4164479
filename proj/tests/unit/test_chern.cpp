#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "qturan/chern.hpp"
#include "qturan/errors.hpp"
#include "support.hpp"

using namespace qturan;
using qturan::testing::decimal;
using qturan::testing::near;

namespace {

EtaQuotient by_label(const std::string& label) {
  if (label == "distinct") return EtaQuotient::distinct_parts();
  if (label == "p3") return EtaQuotient::no_multiples_of(3);
  return EtaQuotient::no_multiples_of(5);
}

}  // namespace

TEST(Chern, InvariantsOfDistinctParts) {
  const DeltaInvariants d = delta_invariants(EtaQuotient::distinct_parts());
  EXPECT_EQ(d.delta1, 0);
  EXPECT_EQ(d.delta2, 1);
  EXPECT_EQ(d.L, 2);
  EXPECT_EQ(d.delta3_at(1), make_rational(1, 2));
  EXPECT_EQ(d.delta3_at(2), -1);
  EXPECT_EQ(d.delta4_radicand_at(1), make_rational(1, 2));
  EXPECT_EQ(d.delta4_radicand_at(2), 1);
  EXPECT_EQ(d.lpos, std::vector<long>{1});
  EXPECT_THROW(d.delta3_at(3), IndexError);
}

TEST(Chern, InvariantsOfRestrictedParts) {
  for (long k : {3L, 4L, 5L}) {
    const DeltaInvariants d = delta_invariants(EtaQuotient::no_multiples_of(k));
    EXPECT_EQ(d.delta1, 0);
    EXPECT_EQ(d.delta2, k - 1);
    EXPECT_EQ(d.L, k);
    EXPECT_EQ(d.delta3_at(1), make_rational(k - 1, k));
    EXPECT_TRUE(admissible(EtaQuotient::no_multiples_of(k)));
  }
  EXPECT_TRUE(admissible(EtaQuotient::distinct_parts()));
}

TEST(Chern, ValidationErrors) {
  EXPECT_THROW(delta_invariants(EtaQuotient{{1, 1}, {1, -1}}), ArgumentError);
  EXPECT_THROW(delta_invariants(EtaQuotient{{1, 2}, {1}}), ArgumentError);
  EXPECT_THROW(delta_invariants(EtaQuotient{{0}, {1}}), ArgumentError);
  EXPECT_THROW(delta_invariants(EtaQuotient{{1}, {0}}), ArgumentError);
}

TEST(Chern, DedekindSums) {
  EXPECT_EQ(dedekind_sum(1, 3), make_rational(1, 18));
  EXPECT_EQ(dedekind_sum(0, 1), 0);
  EXPECT_EQ(dedekind_sum(-1, 3), make_rational(-1, 18));
  std::ifstream in(QTURAN_TEST_DATA "/a_hat.txt");
  std::string line;
  int seen = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string label;
    long h = 0;
    long k = 0;
    std::string value;
    if (!(row >> label) || label != "dedekind") continue;
    row >> h >> k >> value;
    ExactRational expected(value);
    expected.canonicalize();
    EXPECT_EQ(dedekind_sum(h, k), expected) << h << ' ' << k;
    ++seen;
  }
  EXPECT_EQ(seen, 3);
  EXPECT_THROW(dedekind_sum(2, 4), ArgumentError);
  EXPECT_THROW(dedekind_sum(1, 0), ArgumentError);
}

TEST(Chern, ExponentialSumsMatchOracle) {
  std::ifstream in(QTURAN_TEST_DATA "/a_hat.txt");
  std::string line;
  int seen = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("dedekind", 0) == 0) continue;
    std::istringstream row(line);
    std::string label, re, im;
    long k = 0;
    long n = 0;
    row >> label >> k >> n >> re >> im;
    const ComplexEnclosure a = a_hat(by_label(label), k, n, 192);
    EXPECT_TRUE(near(a.re, re, "1e-25")) << line;
    EXPECT_TRUE(near(a.im, im, "1e-25")) << line;
    ++seen;
  }
  EXPECT_EQ(seen, 33);
}

TEST(Chern, ExponentialSumTrivialCases) {
  const EtaQuotient q = EtaQuotient::distinct_parts();
  for (long n : {0L, 1L, 17L, 1000L}) EXPECT_TRUE(a_hat(q, 1, n, 64).re.contains(ExactRational(1)));
  EXPECT_TRUE(near(a_hat(q, 3, 0, 192).re, "1.87938524157181676810821855465", "1e-28"));
  EXPECT_THROW(a_hat(q, 0, 1, 64), ArgumentError);
}

TEST(Chern, ExponentialSumModulusAtMostK) {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<long> kd(1, 50);
  std::uniform_int_distribution<long> nd(0, 100000);
  const EtaQuotient q = EtaQuotient::distinct_parts();
  for (int i = 0; i < 100; ++i) {
    const long k = kd(rng);
    const long n = nd(rng);
    const ComplexEnclosure a = a_hat(q, k, n, 128);
    const Enclosure modulus2 = pow(a.re, 2) + pow(a.im, 2);
    EXPECT_TRUE(certainly_less_equal(modulus2, Enclosure::from_long(k * k, 128))) << k << ' ' << n;
  }
}

TEST(Chern, ZetaAndGrowthFactor) {
  EXPECT_TRUE(near(zeta_enclosure(ExactRational(2), 128), "1.64493406684822643647241516664602518923", "1e-6"));
  EXPECT_THROW(zeta_enclosure(ExactRational(1), 64), ArgumentError);
  EXPECT_TRUE(e_delta1(10, 0, 64).contains(ExactRational(1)));
  EXPECT_TRUE(near(e_delta1(16, make_rational(-1, 2), 128), "8", "1e-30"));
  EXPECT_TRUE(near(e_delta1(9, ExactRational(-1), 128), "20.7232658369464111", "1e-15"));
  // N^(2*3/2 - 1) zeta(3/2) at N = 4: 16 * 2.612375348685...
  EXPECT_TRUE(near(e_delta1(4, make_rational(-3, 2), 128), "41.798005578968", "1e-5"));
  EXPECT_THROW(e_delta1(4, ExactRational(1), 64), ArgumentError);
}

TEST(Chern, TruncationIsFloorOfNu) {
  const EtaQuotient q = EtaQuotient::distinct_parts();
  EXPECT_EQ(default_truncation(q, 135), 21);
  EXPECT_EQ(default_truncation(q, 500), 40);
  EXPECT_EQ(default_truncation(q, 1000), 57);
  EXPECT_EQ(default_truncation(q, 5000), 128);
}

TEST(Chern, UnsupportedBesselOrder) {
  const EtaQuotient partitions{{1}, {-1}};  // Delta1 = 1/2 -> order -1/2
  EXPECT_THROW(chern_truncated_sum(partitions, 100, 5, 64), UnsupportedOrder);
}

TEST(Chern, ResidualWithin173) {
  const PartitionTable t = q_table(5000);
  const EtaQuotient q = EtaQuotient::distinct_parts();
  for (long n : {135L, 185L, 1000L, 5000L}) {
    EXPECT_EQ(hybrid_residual_check(q, t, n).verdict, Verdict::Holds) << n;
  }
  const Enclosure budget = chern_error_budget(q, 1000, 57, 128);
  EXPECT_TRUE(certainly_less(budget, Enclosure::from_long(173, 128)));
}

TEST(Chern, ResidualWithinBudgetForRestrictedParts) {
  const PartitionTable t = pk_table(3, 800);
  const EtaQuotient eq = EtaQuotient::no_multiples_of(3);
  for (long n : {300L, 800L}) {
    const long N = default_truncation(eq, n);
    const Enclosure budget = chern_error_budget(eq, n, N, 128);
    const long bound = static_cast<long>(budget.hi_double()) + 1;
    EXPECT_EQ(hybrid_residual_check(eq, t, n, N, bound).verdict, Verdict::Holds) << n;
  }
}

TEST(Chern, TailAndImaginaryPart) {
  const EtaQuotient q = EtaQuotient::distinct_parts();
  for (long n : {135L, 2000L}) {
    EXPECT_EQ(q_tail_check(n).verdict, Verdict::Holds) << n;
    EXPECT_EQ(imaginary_part_check(q, n, 192).verdict, Verdict::Holds) << n;
  }
}
