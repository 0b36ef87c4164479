#pragma once

// Exact-integer Turán-type predicates and threshold scans over partition tables.

#include <optional>
#include <string>
#include <vector>

#include "qturan/exact.hpp"
#include "qturan/partitions.hpp"

namespace qturan {

// a(n)^2 >= a(n-1) a(n+1); requires 1 <= n <= limit - 1.
bool log_concave_at(const PartitionTable& table, long n, bool strict = false);

// 4(a_n^2 - a_{n-1}a_{n+1})(a_{n+1}^2 - a_n a_{n+2}) >= (a_n a_{n+1} - a_{n-1}a_{n+2})^2;
// requires 1 <= n <= limit - 2.
bool higher_turan_at(const PartitionTable& table, long n, bool strict = false);

// Discriminant of a(n-1) + 3a(n)x + 3a(n+1)x^2 + a(n+2)x^3: > 0 for three distinct
// real zeros (strict), >= 0 for real zeros allowing repeats.
bool cubic_hyperbolic_at(const PartitionTable& table, long n, bool strict = true);
ExactInteger cubic_discriminant(const ExactInteger& a, const ExactInteger& b,
                                const ExactInteger& c, const ExactInteger& d);

// C(d, i) a(n + i), i = 0..d.
std::vector<ExactInteger> jensen_coeffs(const PartitionTable& table, long d, long n);

struct JiaOutcome {
  bool hypothesis = false;  // u + sqrt((1-u)^3) > v
  bool conclusion = false;  // 4(1-u)(1-v) - (1-uv)^2 > 0
};

// Requires 15/16 <= u < v < 1, otherwise ArgumentError.
JiaOutcome jia_predicate(const ExactRational& u, const ExactRational& v);

struct QuarticInvariants {
  ExactInteger A;
  ExactInteger B;
  ExactInteger I;
};

QuarticInvariants quartic_invariants(const ExactInteger& a0, const ExactInteger& a1,
                                     const ExactInteger& a2, const ExactInteger& a3,
                                     const ExactInteger& a4);
// Invariants of (a(n-1), ..., a(n+3)); requires 1 <= n <= limit - 3.
QuarticInvariants quartic_invariants_at(const PartitionTable& table, long n);

enum class TuranPredicate { LogConcave, HigherTuran, APositive, BPositive, IPositive };

const char* to_string(TuranPredicate p);
std::optional<TuranPredicate> parse_turan_predicate(const std::string& name);

// How many entries past n the predicate reads.
long predicate_margin(TuranPredicate p);
bool predicate_at(TuranPredicate p, const PartitionTable& table, long n);

struct ThresholdResult {
  TuranPredicate predicate = TuranPredicate::LogConcave;
  long scan_bound = 0;
  std::optional<long> last_failure;
  long holds_from = 1;
  long exhaustive_to = 0;
};

// Exhaustive scan of n in [1, scan_bound] split over `jobs` threads.
ThresholdResult threshold_scan(TuranPredicate p, const PartitionTable& table, long scan_bound,
                               unsigned jobs = 1);

struct PkThresholds {
  long k = 0;
  ThresholdResult log_concave;
  ThresholdResult higher_turan;

  long N() const { return log_concave.holds_from; }
  long M() const { return higher_turan.holds_from; }
};

// k in {3, 4, 5}; scan_bound >= 1000.
PkThresholds pk_thresholds(long k, long scan_bound, unsigned jobs = 1,
                           const std::filesystem::path& cache_dir = {});
PkThresholds pk_thresholds(const PartitionTable& table, long scan_bound, unsigned jobs = 1);

// Q(n) = a(n-1) a(n+1) / a(n)^2 exactly.
ExactRational q_ratio_exact(const PartitionTable& table, long n);

struct QChainCheck {
  long n = 0;
  bool lower = false;      // 15/16 <= Q(n)
  bool increasing = false; // Q(n) < Q(n+1) < 1
  bool jump = false;       // Q(n+1) - Q(n) < sqrt((1 - Q(n))^3)
  bool holds() const { return lower && increasing && jump; }
};

// Requires 1 <= n <= limit - 2.
QChainCheck q_chain_check(const PartitionTable& table, long n);

}  // namespace qturan
