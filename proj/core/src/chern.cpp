#include "qturan/chern.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qturan/bessel.hpp"
#include "qturan/nu.hpp"

namespace qturan {

namespace {
__extension__ typedef __int128 wide_int;
__extension__ typedef unsigned __int128 wide_uint;
}  // namespace

EtaQuotient EtaQuotient::distinct_parts() { return EtaQuotient{{1, 2}, {-1, 1}}; }

EtaQuotient EtaQuotient::no_multiples_of(long k) {
  if (k < 2) throw ArgumentError("no_multiples_of needs k >= 2");
  return EtaQuotient{{1, k}, {-1, 1}};
}

void EtaQuotient::validate() const {
  if (m.empty() || m.size() != delta.size()) {
    throw ArgumentError("eta quotient needs matching non-empty m and delta");
  }
  std::set<long> seen;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r] <= 0) throw ArgumentError("eta quotient m entries must be positive");
    if (delta[r] == 0) throw ArgumentError("eta quotient delta entries must be nonzero");
    if (!seen.insert(m[r]).second) throw ArgumentError("eta quotient m entries must be distinct");
  }
}

const ExactRational& DeltaInvariants::delta3_at(long l) const {
  if (l < 1 || l > L) throw IndexError("l outside [1, L]");
  return delta3[static_cast<std::size_t>(l - 1)];
}

const ExactRational& DeltaInvariants::delta4_radicand_at(long l) const {
  if (l < 1 || l > L) throw IndexError("l outside [1, L]");
  return delta4_radicand[static_cast<std::size_t>(l - 1)];
}

Enclosure DeltaInvariants::delta4_at(long l, Precision bits) const {
  return sqrt(Enclosure::from_rational(delta4_radicand_at(l), bits));
}

DeltaInvariants delta_invariants(const EtaQuotient& eq) {
  eq.validate();
  DeltaInvariants d;
  long delta_sum = 0;
  for (std::size_t r = 0; r < eq.m.size(); ++r) {
    delta_sum += eq.delta[r];
    d.delta2 += eq.m[r] * eq.delta[r];
    d.L = std::lcm(d.L, eq.m[r]);
  }
  d.delta1 = make_rational(-delta_sum, 2);
  for (long l = 1; l <= d.L; ++l) {
    ExactRational d3 = 0;
    ExactRational d4 = 1;
    for (std::size_t r = 0; r < eq.m.size(); ++r) {
      const long g = std::gcd(eq.m[r], l);
      d3 -= make_rational(eq.delta[r] * g * g, eq.m[r]);
      // (m/g)^(-delta/2) = sqrt((m/g)^(-delta))
      const ExactInteger base = eq.m[r] / g;
      ExactInteger power;
      mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(),
                 static_cast<unsigned long>(std::labs(eq.delta[r])));
      d4 *= eq.delta[r] < 0 ? ExactRational(power) : ExactRational(1, power);
    }
    d4.canonicalize();
    if (d3 > 0) d.lpos.push_back(l);
    d.delta3.push_back(d3);
    d.delta4_radicand.push_back(d4);
  }
  return d;
}

bool admissible(const EtaQuotient& eq) {
  const DeltaInvariants d = delta_invariants(eq);
  if (d.delta1 > 0) return false;
  for (long l = 1; l <= d.L; ++l) {
    ExactRational lowest;
    for (std::size_t r = 0; r < eq.m.size(); ++r) {
      const long g = std::gcd(eq.m[r], l);
      const ExactRational v = make_rational(g * g, eq.m[r]);
      if (r == 0 || v < lowest) lowest = v;
    }
    if (lowest < d.delta3_at(l) / 24) return false;
  }
  return true;
}

ExactRational dedekind_sum(long h, long j) {
  if (j < 1) throw ArgumentError("dedekind_sum needs j >= 1");
  if (std::gcd(h, j) != 1) throw ArgumentError("dedekind_sum needs gcd(h, j) = 1");
  const long hr = ((h % j) + j) % j;
  // 4 j^2 s(h, j) = sum_r (2r - j)(2(hr mod j) - j)
  wide_int acc = 0;
  for (long r = 1; r < j; ++r) {
    const long t = static_cast<long>((static_cast<wide_int>(hr) * r) % j);
    acc += static_cast<wide_int>(2 * r - j) * (2 * t - j);
  }
  const auto as_mpz = [](wide_int v) {
    const bool neg = v < 0;
    wide_uint u = neg ? static_cast<wide_uint>(-v) : static_cast<wide_uint>(v);
    ExactInteger z = static_cast<unsigned long>(u >> 64);
    z <<= 64;
    z += static_cast<unsigned long>(u & ~0UL);
    return neg ? ExactInteger(-z) : z;
  };
  ExactRational out(as_mpz(acc), ExactInteger(4) * j * j);
  out.canonicalize();
  return out;
}

ExactRational a_hat_exponent(const EtaQuotient& eq, long h, long k, long n) {
  ExactRational e = make_rational(-2 * h, k) * n;
  for (std::size_t r = 0; r < eq.m.size(); ++r) {
    const long g = std::gcd(eq.m[r], k);
    e -= eq.delta[r] * dedekind_sum(eq.m[r] * h / g, k / g);
  }
  return e;
}

ComplexEnclosure a_hat(const EtaQuotient& eq, long k, long n, Precision bits) {
  if (k < 1) throw ArgumentError("a_hat needs k >= 1");
  eq.validate();
  Enclosure re = Enclosure::from_long(0, bits);
  Enclosure im = Enclosure::from_long(0, bits);
  for (long h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1) continue;
    const ExactRational e = a_hat_exponent(eq, h, k, n);
    re = re + cos_pi(e, bits);
    im = im + sin_pi(e, bits);
  }
  return {re, im};
}

Enclosure zeta_enclosure(const ExactRational& sigma, Precision bits) {
  if (sigma <= 1) throw ArgumentError("zeta enclosure needs sigma > 1");
  constexpr long K = 256;
  Enclosure partial = Enclosure::from_long(0, bits);
  for (long k = 1; k < K; ++k) partial = partial + pow(Enclosure::from_long(k, bits), -sigma);
  // Convexity of x^-sigma: int_K f + f(K)/2 <= sum_{k>=K} f(k) <= int_{K-1/2} f.
  const ExactRational s1 = sigma - 1;
  const Enclosure fK = pow(Enclosure::from_long(K, bits), -sigma);
  const Enclosure low = pow(Enclosure::from_long(K, bits), -s1) / s1 + fK * make_rational(1, 2);
  const Enclosure high =
      pow(Enclosure::from_rational(make_rational(2 * K - 1, 2), bits), -s1) / s1;
  return partial + Enclosure(low.lo(), high.hi());
}

Enclosure e_delta1(long N, const ExactRational& delta1, Precision bits) {
  if (N < 1) throw ArgumentError("e_delta1 needs N >= 1");
  if (delta1 > 0) throw ArgumentError("e_delta1 needs Delta1 <= 0");
  const Enclosure s = Enclosure::from_long(N, bits);
  if (delta1 == 0) return Enclosure::from_long(1, bits);
  if (delta1 == make_rational(-1, 2)) return 2L * sqrt(s);
  if (delta1 == -1) return s * log(s + 1L);
  return pow(s, ExactRational(-2 * delta1 - 1)) * zeta_enclosure(-delta1, bits);
}

namespace {

void require_supported_order(const DeltaInvariants& d) {
  if (d.delta1 != 0 && d.delta1 != -2) {
    throw UnsupportedOrder("only Bessel order +-1 (Delta1 = 0 or -2) is supported");
  }
}

// (pi/6) sqrt(Delta3(l) (24n + Delta2))
Enclosure bessel_scale(const DeltaInvariants& d, long l, long n, Precision bits) {
  const ExactRational arg = d.delta3_at(l) * (ExactRational(24 * n + d.delta2));
  return pi_enclosure(bits) * sqrt(Enclosure::from_rational(arg, bits)) / 6;
}

void require_n(const DeltaInvariants& d, long n) {
  if (ExactRational(24 * n) <= ExactRational(-d.delta2)) {
    throw ArgumentError("n must exceed -Delta2/24");
  }
}

}  // namespace

long default_truncation(const EtaQuotient& eq, long n, const PrecisionPolicy& policy) {
  const DeltaInvariants d = delta_invariants(eq);
  require_n(d, n);
  if (d.lpos.empty()) return 1;
  for (Precision bits = policy.start;; bits *= 2) {
    std::optional<ExactInteger> best;
    bool decided = true;
    for (long l : d.lpos) {
      const auto f = certified_floor(bessel_scale(d, l, n, bits));
      if (!f) {
        decided = false;
        break;
      }
      if (!best || *f > *best) best = f;
    }
    if (decided) return std::max(1L, best->get_si());
    if (bits >= policy.cap) throw PrecisionExhausted("truncation floor undecided");
  }
}

ComplexEnclosure chern_truncated_sum_complex(const EtaQuotient& eq, long n, long N,
                                             Precision bits, long first_k) {
  const DeltaInvariants d = delta_invariants(eq);
  require_supported_order(d);
  require_n(d, n);
  if (N < 1) throw ArgumentError("truncation N must be positive");
  const Enclosure pi = pi_enclosure(bits);
  Enclosure re = Enclosure::from_long(0, bits);
  Enclosure im = Enclosure::from_long(0, bits);
  const ExactRational power = -(d.delta1 + 1) / 2;
  for (long l : d.lpos) {
    const ExactRational ratio = ExactRational(24 * n + d.delta2) / d.delta3_at(l);
    const Enclosure coeff =
        2L * pi * d.delta4_at(l, bits) * pow(Enclosure::from_rational(ratio, bits), power);
    const Enclosure scale = bessel_scale(d, l, n, bits);
    for (long k = l; k <= N; k += d.L) {
      if (k < first_k) continue;
      const ComplexEnclosure a = a_hat(eq, k, n, bits);
      const Enclosure w = coeff * bessel_i1(scale / k).value / k;
      re = re + w * a.re;
      im = im + w * a.im;
    }
  }
  return {re, im};
}

Enclosure chern_truncated_sum(const EtaQuotient& eq, long n, long N, Precision bits) {
  return chern_truncated_sum_complex(eq, n, N, bits).re;
}

Enclosure chern_error_budget(const EtaQuotient& eq, long n, long N, Precision bits) {
  const DeltaInvariants d = delta_invariants(eq);
  require_n(d, n);
  if (N < 1) throw ArgumentError("truncation N must be positive");
  if (d.delta1 > 0) throw ArgumentError("error budget needs Delta1 <= 0");
  const Enclosure pi = pi_enclosure(bits);
  const Enclosure shifted = Enclosure::from_rational(n + make_rational(d.delta2, 24), bits);
  const Enclosure Nn = Enclosure::from_long(N, bits);
  const Enclosure growth = exp(2L * pi * shifted / (Nn * Nn));

  Enclosure lpos_big = Enclosure::from_long(0, bits);
  Enclosure lpos_small = Enclosure::from_long(0, bits);
  for (long l : d.lpos) {
    const Enclosure d4 = d.delta4_at(l, bits);
    const Enclosure d3 = Enclosure::from_rational(d.delta3_at(l), bits);
    lpos_big = lpos_big + d4 * exp(d3 * pi / 3);
    lpos_small = lpos_small + d4 * exp(pi * d3 / 24);
  }
  const Enclosure first = pow(Enclosure::from_long(2, bits), ExactRational(-d.delta1)) / pi *
                          pow(Nn, ExactRational(2 - d.delta1)) / shifted * growth * lpos_big;

  Enclosure all_l = Enclosure::from_long(0, bits);
  for (long l = 1; l <= d.L; ++l) {
    Enclosure inner = pi * Enclosure::from_rational(d.delta3_at(l), bits) / 24;
    for (std::size_t r = 0; r < eq.m.size(); ++r) {
      const long g = std::gcd(eq.m[r], l);
      const Enclosure x = exp(-(pi * make_rational(g * g, eq.m[r])));
      const Enclosure one_minus = 1L - x;
      inner = inner + std::labs(eq.delta[r]) * x / (one_minus * one_minus);
    }
    all_l = all_l + d.delta4_at(l, bits) * exp(inner);
  }
  const Enclosure second = 2L * growth * e_delta1(N, d.delta1, bits) * (all_l - lpos_small);
  return first + second;
}

BoundReport hybrid_residual_check(const EtaQuotient& eq, const PartitionTable& table, long n,
                                  std::optional<long> N, long bound,
                                  const PrecisionPolicy& policy) {
  const ExactInteger& g = table.at(n);
  const long trunc = N ? *N : default_truncation(eq, n, policy);
  return certify(policy, [&](Precision bits) {
    BoundReport rep;
    rep.quantity = "hybrid_residual";
    rep.n = n;
    rep.lower = Enclosure::from_long(-bound, bits);
    rep.value = Enclosure::from_integer(g, bits) - chern_truncated_sum(eq, n, trunc, bits);
    rep.upper = Enclosure::from_long(bound, bits);
    return rep;
  });
}

BoundReport q_tail_check(long n, const PrecisionPolicy& policy) {
  const EtaQuotient eq = EtaQuotient::distinct_parts();
  const long N = default_truncation(eq, n, policy);
  return certify(policy, [&](Precision bits) {
    const ComplexEnclosure tail = chern_truncated_sum_complex(eq, n, N, bits, 3);
    const Enclosure v = nu(n).as_enclosure(bits);
    const Enclosure pi = pi_enclosure(bits);
    const Enclosure bound =
        sqrt(Enclosure::from_long(3, bits)) * pi * sqrt(pi) / (12L * sqrt(v)) * exp(v / 3);
    BoundReport rep;
    rep.quantity = "q_tail";
    rep.n = n;
    // Compare squared modulus against the squared bound.
    rep.value = pow(tail.re, 2) + pow(tail.im, 2);
    rep.upper = pow(bound, 2);
    return rep;
  });
}

BoundReport imaginary_part_check(const EtaQuotient& eq, long n, Precision bits) {
  const long N = default_truncation(eq, n);
  const ComplexEnclosure sum = chern_truncated_sum_complex(eq, n, N, bits);
  BoundReport rep;
  rep.quantity = "imaginary_part";
  rep.n = n;
  rep.value = sum.im;
  rep.precision_bits = bits;
  // Slack: the imaginary enclosure must contain 0 and be narrow relative to
  // the real part.
  BigFloat slack(bits);
  mpfr_abs(slack.get(), sum.re.hi().get(), MPFR_RNDU);
  mpfr_add_ui(slack.get(), slack.get(), 1, MPFR_RNDU);
  mpfr_mul_2si(slack.get(), slack.get(), -(bits / 2), MPFR_RNDU);
  BigFloat neg(bits);
  mpfr_neg(neg.get(), slack.get(), MPFR_RNDD);
  rep.lower = Enclosure(neg, neg);
  rep.upper = Enclosure(slack, slack);
  const bool narrow = mpfr_lessequal_p(sum.im.width().get(), slack.get());
  rep.verdict = sum.im.contains(ExactRational(0)) && narrow ? Verdict::Holds : Verdict::Fails;
  return rep;
}

}  // namespace qturan
