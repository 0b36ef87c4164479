#include "qturan/turan.hpp"

#include <algorithm>
#include <thread>

#include "qturan/errors.hpp"

namespace qturan {

namespace {

void require_window(const PartitionTable& table, long n, long before, long after) {
  if (n - before < 0 || n + after > table.limit) {
    throw IndexError("index " + std::to_string(n) + " needs entries " +
                     std::to_string(n - before) + ".." + std::to_string(n + after) +
                     " of a table with limit " + std::to_string(table.limit));
  }
}

ExactInteger binomial(long d, long i) {
  ExactInteger out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(i));
  return out;
}

}  // namespace

bool log_concave_at(const PartitionTable& table, long n, bool strict) {
  if (n < 1) throw IndexError("log-concavity needs n >= 1");
  require_window(table, n, 1, 1);
  const ExactInteger lhs = table[n] * table[n];
  const ExactInteger rhs = table[n - 1] * table[n + 1];
  return strict ? lhs > rhs : lhs >= rhs;
}

bool higher_turan_at(const PartitionTable& table, long n, bool strict) {
  if (n < 1) throw IndexError("higher-order Turán needs n >= 1");
  require_window(table, n, 1, 2);
  const ExactInteger& a0 = table[n - 1];
  const ExactInteger& a1 = table[n];
  const ExactInteger& a2 = table[n + 1];
  const ExactInteger& a3 = table[n + 2];
  const ExactInteger lhs = 4 * (a1 * a1 - a0 * a2) * (a2 * a2 - a1 * a3);
  const ExactInteger cross = a1 * a2 - a0 * a3;
  const ExactInteger rhs = cross * cross;
  return strict ? lhs > rhs : lhs >= rhs;
}

ExactInteger cubic_discriminant(const ExactInteger& a, const ExactInteger& b,
                                const ExactInteger& c, const ExactInteger& d) {
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
         27 * a * a * d * d;
}

bool cubic_hyperbolic_at(const PartitionTable& table, long n, bool strict) {
  if (n < 1) throw IndexError("cubic needs n >= 1");
  require_window(table, n, 1, 2);
  const int sign =
      sgn(cubic_discriminant(table[n + 2], 3 * table[n + 1], 3 * table[n], table[n - 1]));
  return strict ? sign > 0 : sign >= 0;
}

std::vector<ExactInteger> jensen_coeffs(const PartitionTable& table, long d, long n) {
  if (d < 0 || n < 0) throw IndexError("degree and shift must be non-negative");
  require_window(table, n, 0, d);
  std::vector<ExactInteger> out;
  out.reserve(static_cast<std::size_t>(d + 1));
  for (long i = 0; i <= d; ++i) out.push_back(binomial(d, i) * table[n + i]);
  return out;
}

JiaOutcome jia_predicate(const ExactRational& u, const ExactRational& v) {
  if (!(make_rational(15, 16) <= u && u < v && v < 1)) {
    throw ArgumentError("need 15/16 <= u < v < 1, got u = " + u.get_str() +
                        ", v = " + v.get_str());
  }
  const ExactRational gap = v - u;  // positive, so sqrt((1-u)^3) > gap iff (1-u)^3 > gap^2
  const ExactRational w = 1 - u;
  JiaOutcome out;
  out.hypothesis = w * w * w > gap * gap;
  const ExactRational one_minus_uv = 1 - u * v;
  out.conclusion = 4 * (1 - u) * (1 - v) - one_minus_uv * one_minus_uv > 0;
  return out;
}

QuarticInvariants quartic_invariants(const ExactInteger& a0, const ExactInteger& a1,
                                     const ExactInteger& a2, const ExactInteger& a3,
                                     const ExactInteger& a4) {
  QuarticInvariants out;
  out.A = a0 * a4 - 4 * a1 * a3 + 3 * a2 * a2;
  out.B = -a0 * a2 * a4 + a2 * a2 * a2 + a0 * a3 * a3 + a1 * a1 * a4 - 2 * a1 * a2 * a3;
  out.I = out.A * out.A * out.A - 27 * out.B * out.B;
  return out;
}

QuarticInvariants quartic_invariants_at(const PartitionTable& table, long n) {
  if (n < 1) throw IndexError("invariants need n >= 1");
  require_window(table, n, 1, 3);
  return quartic_invariants(table[n - 1], table[n], table[n + 1], table[n + 2], table[n + 3]);
}

const char* to_string(TuranPredicate p) {
  switch (p) {
    case TuranPredicate::LogConcave: return "logconcave";
    case TuranPredicate::HigherTuran: return "higher_turan";
    case TuranPredicate::APositive: return "A_pos";
    case TuranPredicate::BPositive: return "B_pos";
    case TuranPredicate::IPositive: return "I_pos";
  }
  return "?";
}

std::optional<TuranPredicate> parse_turan_predicate(const std::string& name) {
  for (auto p : {TuranPredicate::LogConcave, TuranPredicate::HigherTuran,
                 TuranPredicate::APositive, TuranPredicate::BPositive,
                 TuranPredicate::IPositive}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

long predicate_margin(TuranPredicate p) {
  switch (p) {
    case TuranPredicate::LogConcave: return 1;
    case TuranPredicate::HigherTuran: return 2;
    default: return 3;
  }
}

bool predicate_at(TuranPredicate p, const PartitionTable& table, long n) {
  switch (p) {
    case TuranPredicate::LogConcave: return log_concave_at(table, n);
    case TuranPredicate::HigherTuran: return higher_turan_at(table, n);
    case TuranPredicate::APositive: return sgn(quartic_invariants_at(table, n).A) > 0;
    case TuranPredicate::BPositive: return sgn(quartic_invariants_at(table, n).B) > 0;
    case TuranPredicate::IPositive: return sgn(quartic_invariants_at(table, n).I) > 0;
  }
  return false;
}

ThresholdResult threshold_scan(TuranPredicate p, const PartitionTable& table, long scan_bound,
                               unsigned jobs) {
  if (scan_bound < 1 || scan_bound > table.limit - predicate_margin(p)) {
    throw IndexError("scan bound " + std::to_string(scan_bound) + " exceeds table limit " +
                     std::to_string(table.limit) + " minus margin " +
                     std::to_string(predicate_margin(p)));
  }
  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(scan_bound));
  std::vector<long> last(jobs, 0);
  auto scan = [&](unsigned w) {
    const long lo = 1 + scan_bound * static_cast<long>(w) / static_cast<long>(jobs);
    const long hi = scan_bound * static_cast<long>(w + 1) / static_cast<long>(jobs);
    for (long n = hi; n >= lo; --n) {
      if (!predicate_at(p, table, n)) {
        last[w] = n;
        return;
      }
    }
  };
  if (jobs == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(scan, w);
  }
  ThresholdResult out;
  out.predicate = p;
  out.scan_bound = scan_bound;
  out.exhaustive_to = scan_bound;
  const long worst = *std::max_element(last.begin(), last.end());
  if (worst > 0) out.last_failure = worst;
  out.holds_from = worst + 1;
  return out;
}

PkThresholds pk_thresholds(const PartitionTable& table, long scan_bound, unsigned jobs) {
  if (table.kind != PartitionKind::NoMultiplesOf) throw ArgumentError("expected a p_k table");
  if (scan_bound < 1000) throw ArgumentError("p_k thresholds need scan_bound >= 1000");
  return PkThresholds{table.k, threshold_scan(TuranPredicate::LogConcave, table, scan_bound, jobs),
                      threshold_scan(TuranPredicate::HigherTuran, table, scan_bound, jobs)};
}

PkThresholds pk_thresholds(long k, long scan_bound, unsigned jobs,
                           const std::filesystem::path& cache_dir) {
  if (k < 3 || k > 5) throw ArgumentError("p_k thresholds are defined for k in {3, 4, 5}");
  const PartitionTable table =
      load_or_compute(cache_dir, PartitionKind::NoMultiplesOf, k, scan_bound + 2);
  return pk_thresholds(table, scan_bound, jobs);
}

ExactRational q_ratio_exact(const PartitionTable& table, long n) {
  if (n < 1) throw IndexError("Q(n) needs n >= 1");
  require_window(table, n, 1, 1);
  ExactRational q(table[n - 1] * table[n + 1], table[n] * table[n]);
  q.canonicalize();
  return q;
}

QChainCheck q_chain_check(const PartitionTable& table, long n) {
  const ExactRational q0 = q_ratio_exact(table, n);
  const ExactRational q1 = q_ratio_exact(table, n + 1);
  QChainCheck out;
  out.n = n;
  out.lower = make_rational(15, 16) <= q0;
  out.increasing = q0 < q1 && q1 < 1;
  const ExactRational gap = q1 - q0;
  const ExactRational w = 1 - q0;
  // A non-positive gap is below the non-negative square root.
  out.jump = w >= 0 && (sgn(gap) <= 0 || gap * gap < w * w * w);
  return out;
}

}  // namespace qturan
