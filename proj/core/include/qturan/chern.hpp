#pragma once

// Explicit asymptotics for eta-quotient coefficients: Delta invariants,
// Dedekind sums, the exponential sums A_k(n), the truncated I1 sum and its
// error budget.

#include <optional>
#include <vector>

#include "qturan/enclosure.hpp"
#include "qturan/partitions.hpp"
#include "qturan/report.hpp"

namespace qturan {

// prod_r (q^{m_r}; q^{m_r})_inf^{delta_r}
struct EtaQuotient {
  std::vector<long> m;
  std::vector<long> delta;

  // (q^2;q^2) / (q;q): distinct parts.
  static EtaQuotient distinct_parts();
  // (q^k;q^k) / (q;q): no part divisible by k.
  static EtaQuotient no_multiples_of(long k);

  // ArgumentError unless lengths match, m distinct positive, delta nonzero.
  void validate() const;
};

struct DeltaInvariants {
  ExactRational delta1;
  long delta2 = 0;
  long L = 1;
  std::vector<ExactRational> delta3;           // index l-1
  std::vector<ExactRational> delta4_radicand;  // Delta4(l) = sqrt(radicand)
  std::vector<long> lpos;                      // l with Delta3(l) > 0

  const ExactRational& delta3_at(long l) const;
  const ExactRational& delta4_radicand_at(long l) const;
  Enclosure delta4_at(long l, Precision bits) const;
};

DeltaInvariants delta_invariants(const EtaQuotient& eq);

// Delta1 <= 0 and min_r gcd(m_r,l)^2/m_r >= Delta3(l)/24 for all l.
bool admissible(const EtaQuotient& eq);

// s(h, j); ArgumentError unless j >= 1 and gcd(h, j) = 1.
ExactRational dedekind_sum(long h, long j);

struct ComplexEnclosure {
  Enclosure re;
  Enclosure im;
};

// sum over h mod k coprime to k of exp(pi i e(h)), e(h) reduced mod 2 exactly.
ComplexEnclosure a_hat(const EtaQuotient& eq, long k, long n, Precision bits);
// The rational exponent e(h) itself (before reduction).
ExactRational a_hat_exponent(const EtaQuotient& eq, long h, long k, long n);

// Zeta(sigma) for rational sigma > 1.
Enclosure zeta_enclosure(const ExactRational& sigma, Precision bits);

// 1, 2 sqrt N, N log(N+1), or N^(-2 d - 1) zeta(-d), by the value d of Delta1.
Enclosure e_delta1(long N, const ExactRational& delta1, Precision bits);

// floor of max over Lpos of (pi/6) sqrt(Delta3(l) (24n + Delta2)); nu(n) for q.
long default_truncation(const EtaQuotient& eq, long n, const PrecisionPolicy& policy = {});

// Bessel main sum over l in Lpos and first_k <= k <= N, k = l mod L.
// UnsupportedOrder unless the Bessel order -Delta1-1 is +-1.
ComplexEnclosure chern_truncated_sum_complex(const EtaQuotient& eq, long n, long N,
                                             Precision bits, long first_k = 1);
Enclosure chern_truncated_sum(const EtaQuotient& eq, long n, long N, Precision bits);

// Both summands of the explicit |E(n)| bound, with |delta_r| in the inner sum.
Enclosure chern_error_budget(const EtaQuotient& eq, long n, long N, Precision bits);

// |g(n) - Re(sum)| <= bound with N defaulting to default_truncation.
BoundReport hybrid_residual_check(const EtaQuotient& eq, const PartitionTable& table, long n,
                                  std::optional<long> N = std::nullopt, long bound = 173,
                                  const PrecisionPolicy& policy = {});

// For q: |sum over odd 3 <= k <= nu(n)| <= sqrt3 pi^(3/2) / (12 sqrt nu) e^(nu/3).
BoundReport q_tail_check(long n, const PrecisionPolicy& policy = {});

// |Im(sum)| within enclosure slack of 0 (i.e. the enclosure contains 0).
BoundReport imaginary_part_check(const EtaQuotient& eq, long n, Precision bits);

}  // namespace qturan
