// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "qturan/bessel.hpp"
#include "qturan/chern.hpp"
#include "qturan/nu.hpp"
#include "qturan/partitions.hpp"
#include "qturan/symbolic.hpp"
#include "qturan/turan.hpp"

using namespace qturan;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    else if (detail.size() < 400) detail += "; " + what;
    pass = false;
  }
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

const PartitionTable& q_big() {
  static const PartitionTable t = q_table(10003);
  return t;
}

std::vector<long> ladder(long from, long dense_to) {
  std::set<long> out;
  for (long n = from; n <= dense_to; ++n) out.insert(n);
  for (long n : {500L, 1000L, 2000L, 5000L, 10000L}) {
    if (n >= from) out.insert(n);
  }
  return {out.begin(), out.end()};
}

void require_bound(Outcome& o, const BoundReport& b, const std::string& label) {
  o.require(b.verdict == Verdict::Holds,
            label + " " + to_string(b.verdict) + (b.n >= 0 ? " at n = " + std::to_string(b.n) : ""));
}

Outcome exactness() {
  Outcome o;
  const PartitionTable a = q_table(2000);
  const PartitionTable b = q_oracle_table(2000);
  for (long n = 0; n <= 2000; ++n) {
    if (a[n] != b[n]) {
      o.require(false, "tables differ at n = " + std::to_string(n));
      break;
    }
  }
  o.require(a[9] == 8, "q(9) = " + a[9].get_str());
  return o;
}

Outcome q_thresholds() {
  Outcome o;
  const long lc = threshold_scan(TuranPredicate::LogConcave, q_big(), 5000, jobs()).holds_from;
  const long ht = threshold_scan(TuranPredicate::HigherTuran, q_big(), 5000, jobs()).holds_from;
  o.require(lc == 33, "log-concave from " + std::to_string(lc));
  o.require(ht == 121, "higher-order Turan from " + std::to_string(ht));
  o.detail = o.pass ? "33, 121" : o.detail;
  return o;
}

Outcome pk() {
  Outcome o;
  const long expected[3][3] = {{3, 58, 185}, {4, 17, 64}, {5, 42, 137}};
  for (const auto& e : expected) {
    const PkThresholds r = pk_thresholds(e[0], 3000, jobs());
    o.require(r.N() == e[1] && r.M() == e[2],
              "k = " + std::to_string(e[0]) + ": (" + std::to_string(r.N()) + ", " +
                  std::to_string(r.M()) + ")");
  }
  return o;
}

Outcome invariants() {
  Outcome o;
  const std::pair<TuranPredicate, long> expected[] = {
      {TuranPredicate::APositive, 229}, {TuranPredicate::BPositive, 271}, {TuranPredicate::IPositive, 266}};
  for (const auto& [p, last] : expected) {
    const ThresholdResult r = threshold_scan(p, q_big(), 5000, jobs());
    o.require(r.last_failure == last && r.holds_from == last + 1,
              std::string(to_string(p)) + " from " + std::to_string(r.holds_from));
  }
  return o;
}

Outcome residual() {
  Outcome o;
  for (long n : ladder(135, 335)) require_bound(o, residual_bound_check(n, q_big()[n]), "residual");
  return o;
}

Outcome q_sandwich() {
  Outcome o;
  const long from = nu_min_n(ExactRational(43));
  for (long n : ladder(from, from + 200)) require_bound(o, q_sandwich_check(n, q_big()[n]), "q sandwich");
  return o;
}

Outcome ratio_sandwich() {
  Outcome o;
  for (long n : ladder(1365, 1565)) require_bound(o, Q_sandwich_check(n, q_big()), "Q sandwich");
  return o;
}

Outcome hybrid() {
  Outcome o;
  const EtaQuotient eq = EtaQuotient::distinct_parts();
  for (long n = 135; n <= 5000; n += 50) require_bound(o, hybrid_residual_check(eq, q_big(), n), "hybrid");
  return o;
}

Outcome symbolic() {
  Outcome o;
  for (const SymbolicReport& r : symbolic_suite()) {
    for (const IdentityCheck& c : r.checks) {
      o.require(c.holds, r.name + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
  }
  return o;
}

Outcome bessel_bounds() {
  Outcome o;
  const Precision bits = kDefaultPrecision;
  const Enclosure f26 = bessel_remainder_majorant(Enclosure::from_long(26, bits));
  o.require(f26.lo_double() > 30.79 && f26.hi_double() < 30.82, "f(26) = " + f26.to_string(10));
  o.require(certainly_less(f26, Enclosure::from_long(31, bits)), "f(26) < 31");
  o.require(certainly_less(helper_r(Enclosure::from_long(21, bits)), Enclosure::from_long(1, bits)), "r(21) < 1");
  o.require(certainly_less(helper_L(Enclosure::from_long(43, bits)), Enclosure::from_long(1, bits)), "L(43) < 1");
  for (long s : {26L, 30L, 50L, 100L, 500L}) {
    o.require(bessel_sandwich_check(Enclosure::from_long(s, bits)), "sandwich at s = " + std::to_string(s));
  }
  // 200 points on [1, 500].
  for (long i = 0; i < 200; ++i) {
    const ExactRational s = 1 + make_rational(499 * i, 199);
    require_bound(o, bkrt_check(s), "bkrt");
  }
  for (long twice_a = 2; twice_a <= 13; ++twice_a) {
    const ExactRational a = make_rational(twice_a, 2);
    for (long step = 0; step <= 50; step += 5) require_bound(o, pinelis_check(a, a + step), "pinelis");
  }
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> num(0, 1'000'000);
  long violations = 0;
  for (int i = 0; i < 10000; ++i) {
    ExactRational u(ExactInteger(15'000'001) + num(rng), ExactInteger(16'000'001));
    u.canonicalize();
    if (!(u < 1)) continue;
    ExactRational v = u + (1 - u) * make_rational(num(rng) + 1, 1'000'002);
    v.canonicalize();
    const JiaOutcome j = jia_predicate(u, v);
    if (j.hypothesis && !j.conclusion) ++violations;
  }
  o.require(violations == 0, std::to_string(violations) + " implication violations");

  for (long n = 2; n <= 2000; ++n) {
    if (cubic_hyperbolic_at(q_big(), n) != higher_turan_at(q_big(), n, true)) {
      o.require(false, "cubic disagrees at n = " + std::to_string(n));
      break;
    }
  }

  const EtaQuotient eq = EtaQuotient::distinct_parts();
  std::uniform_int_distribution<long> kd(1, 50), nd(0, 100000);
  for (int i = 0; i < 100; ++i) {
    const long k = kd(rng), n = nd(rng);
    const ComplexEnclosure a = a_hat(eq, k, n, kDefaultPrecision);
    const Enclosure norm = a.re * a.re + a.im * a.im;
    o.require(certainly_less_equal(norm, Enclosure::from_long(k * k, kDefaultPrecision)),
              "|A_" + std::to_string(k) + "(" + std::to_string(n) + ")| > k");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exactness cross-check", exactness},
      {"q thresholds", q_thresholds},
      {"p_k thresholds", pk},
      {"quartic invariant thresholds", invariants},
      {"residual bound", residual},
      {"q sandwich", q_sandwich},
      {"Q sandwich", ratio_sandwich},
      {"hybrid formula", hybrid},
      {"symbolic identities", symbolic},
      {"Bessel bounds", bessel_bounds},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s (%lld ms)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                static_cast<long long>(ms), o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
