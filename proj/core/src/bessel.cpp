#include "qturan/bessel.hpp"

#include <cmath>

namespace qturan {

namespace {

Enclosure rational(long num, long den, Precision bits) {
  return Enclosure::from_rational(make_rational(num, den), bits);
}

// [0, hi]
Enclosure zero_to(const BigFloat& hi) {
  BigFloat lo(hi.precision());
  return Enclosure(std::move(lo), hi);
}

Enclosure widen(const Enclosure& x, const BigFloat& radius) {
  BigFloat lo(x.precision());
  BigFloat hi(x.precision());
  mpfr_sub(lo.get(), x.lo().get(), radius.get(), MPFR_RNDD);
  mpfr_add(hi.get(), x.hi().get(), radius.get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

bool is_half_integer(const ExactRational& a) { return a.get_den() == 2; }
bool is_integer(const ExactRational& a) { return a.get_den() == 1; }

}  // namespace

BesselValue bessel_i1(const Enclosure& s) {
  if (mpfr_sgn(s.lo().get()) < 0) throw DomainError("I1 series needs s >= 0");
  const Precision bits = s.precision();
  const Enclosure half = s * make_rational(1, 2);
  const Enclosure w = half * half;
  Enclosure term = half;
  Enclosure sum = half;
  BigFloat threshold(bits);
  long m = 0;
  for (;; ++m) {
    const Enclosure ratio = w / ((m + 1) * (m + 2));
    if (mpfr_cmp_d(ratio.hi().get(), 0.5) <= 0) {
      const Enclosure tail = term * ratio / (1L - ratio);
      mpfr_mul_2si(threshold.get(), sum.hi().get(), -(bits + 8), MPFR_RNDD);
      if (mpfr_lessequal_p(tail.hi().get(), threshold.get())) {
        sum = sum + zero_to(tail.hi());
        break;
      }
    }
    if (m > 10'000'000) throw PrecisionExhausted("I1 series did not converge");
    term = term * ratio;
    sum = sum + term;
  }
  return BesselValue{s, sum, m + 1};
}

Enclosure bessel_i1_quadrature(const ExactRational& s, Precision bits) {
  if (s < 0 || s > 50) throw ArgumentError("quadrature oracle is for 0 <= s <= 50");
  if (s == 0) return Enclosure::from_long(0, bits);
  const double sd = s.get_d();
  // Pick K so the aliasing bound 2 s e^s (s/2)^K / K! / (1 - s/(2(K+1)))
  // falls below 2^-(bits+8) * s/2 <= 2^-(bits+8) I1(s).
  const double target = std::log(sd / 2) - (static_cast<double>(bits) + 8) * std::log(2.0);
  long K = static_cast<long>(std::ceil(sd)) + 2;
  while (std::log(2 * sd) + sd + K * std::log(sd / 2) - std::lgamma(K + 1.0) -
             std::log(1 - sd / (2.0 * (K + 1))) >
         target) {
    ++K;
  }
  const long M = K + 2;
  const Precision work = bits + 32;
  const Enclosure S = Enclosure::from_rational(s, work);

  // (s/M) sum_j sin^2(theta_j) e^{s cos theta_j}, theta_j = 2 pi j / M.
  Enclosure acc = Enclosure::from_long(0, work);
  for (long j = 0; j < M; ++j) {
    const Enclosure c = cos_pi(make_rational(2 * j, M), work);
    acc = acc + (1L - c * c) * exp(S * c);
  }
  const Enclosure trapezoid = S * acc / M;

  Enclosure factorial = Enclosure::from_integer([&] {
    ExactInteger f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(K));
    return f;
  }(), work);
  const Enclosure bound = 2L * S * exp(S) * pow(S * make_rational(1, 2), K) / factorial /
                          (1L - S / (2 * (K + 1)));
  return widen(trapezoid, bound.hi()).with_precision(bits);
}

bool bessel_i1_integral_check(const ExactRational& s, const ExactRational& tolerance,
                              Precision bits) {
  const Enclosure quad = bessel_i1_quadrature(s, bits);
  const Enclosure series = bessel_i1(Enclosure::from_rational(s, bits)).value;
  const Enclosure tol = Enclosure::from_rational(abs(tolerance), bits);
  const Enclosure allowed = Enclosure::hull(series - tol, series + tol);
  return allowed.contains(quad);
}

ExactRational gamma_half_multiple(const ExactRational& a) {
  if (!is_half_integer(a) || a < 0) throw ArgumentError("gamma_half needs a = k + 1/2, k >= 0");
  const ExactRational shifted = a - make_rational(1, 2);
  const unsigned long k = shifted.get_num().get_ui();
  ExactInteger num;
  ExactInteger kf;
  mpz_fac_ui(num.get_mpz_t(), 2 * k);
  mpz_fac_ui(kf.get_mpz_t(), k);
  ExactInteger four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
  ExactRational out(num, four_k * kf);
  out.canonicalize();
  return out;
}

Enclosure gamma_half(const ExactRational& a, Precision bits) {
  return sqrt(pi_enclosure(bits)) * gamma_half_multiple(a);
}

Enclosure incomplete_gamma_upper(const ExactRational& a, const Enclosure& s) {
  if (!s.is_positive()) throw DomainError("incomplete Gamma needs s > 0");
  const Precision bits = s.precision();
  const Enclosure decay = exp(-s);
  ExactRational b;
  Enclosure g = decay;
  if (is_integer(a) && a >= 1) {
    b = 1;
  } else if (is_half_integer(a) && a > 0) {
    b = make_rational(1, 2);
    g = sqrt(pi_enclosure(bits)) * erfc(sqrt(s));
  } else {
    throw ArgumentError("incomplete Gamma supports positive integer or half-integer a");
  }
  for (; b < a; b += 1) g = g * b + pow(s, b) * decay;
  return g;
}

Enclosure incomplete_gamma_upper_bound(const ExactRational& a, const Enclosure& s) {
  if (a < 1) throw ArgumentError("Pinelis bound needs a >= 1");
  if (mpfr_cmp_q(s.hi().get(), a.get_mpq_t()) < 0) throw DomainError("Pinelis bound needs s >= a");
  return a * pow(s, ExactRational(a - 1)) * exp(-s);
}

BoundReport pinelis_check(const ExactRational& a, const ExactRational& s,
                          const PrecisionPolicy& policy) {
  if (s < a) throw DomainError("Pinelis bound needs s >= a");
  if (a == 1) {
    // Gamma(1, s) = e^-s is the bound itself.
    BoundReport r;
    r.quantity = "pinelis";
    r.value = incomplete_gamma_upper(a, Enclosure::from_rational(s, policy.start));
    r.upper = r.value;
    r.verdict = Verdict::Holds;
    r.precision_bits = policy.start;
    return r;
  }
  return certify(policy, [&](Precision bits) {
    const Enclosure S = Enclosure::from_rational(s, bits);
    BoundReport r;
    r.quantity = "pinelis";
    r.value = incomplete_gamma_upper(a, S);
    r.upper = incomplete_gamma_upper_bound(a, S);
    return r;
  });
}

const std::array<ExactRational, 6>& e_i_coefficients() {
  static const std::array<ExactRational, 6> coeffs{
      make_rational(1), make_rational(-3, 8), make_rational(-15, 128),
      make_rational(-105, 1024), make_rational(-4725, 32768), make_rational(-72765, 262144)};
  return coeffs;
}

Enclosure e_i(const Enclosure& s) {
  if (!s.is_positive()) throw DomainError("E_I needs s > 0");
  const Enclosure u = 1L / s;
  const auto& c = e_i_coefficients();
  Enclosure acc = Enclosure::from_rational(c[5], s.precision());
  for (int i = 4; i >= 0; --i) acc = acc * u + c[static_cast<std::size_t>(i)];
  return acc;
}

Enclosure bkrt_bound(const Enclosure& s) {
  return sqrt(2L / (pi_enclosure(s.precision()) * s)) * exp(s);
}

BoundReport bkrt_check(const ExactRational& s, const PrecisionPolicy& policy) {
  if (s < 1) throw DomainError("BKRT bound is stated for s >= 1");
  return certify(policy, [&](Precision bits) {
    const Enclosure S = Enclosure::from_rational(s, bits);
    BoundReport r;
    r.quantity = "bkrt";
    r.value = bessel_i1(S).value;
    r.upper = bkrt_bound(S);
    return r;
  });
}

BoundReport bessel_sandwich(const Enclosure& s) {
  if (mpfr_cmp_si(s.lo().get(), 26) < 0) throw ArgumentError("Bessel sandwich needs s >= 26");
  const Precision bits = s.precision();
  const Enclosure prefactor = exp(s) / sqrt(2L * pi_enclosure(bits) * s);
  const Enclosure main = e_i(s);
  const Enclosure slack = 31L / pow(s, 6);
  BoundReport r;
  r.quantity = "bessel_sandwich";
  r.lower = prefactor * (main - slack);
  r.value = bessel_i1(s).value;
  r.upper = prefactor * (main + slack);
  r.precision_bits = bits;
  judge(r);
  return r;
}

BoundReport bessel_sandwich(const ExactRational& s, const PrecisionPolicy& policy) {
  return certify(policy,
                 [&](Precision bits) { return bessel_sandwich(Enclosure::from_rational(s, bits)); });
}

bool bessel_sandwich_check(const Enclosure& s) { return bessel_sandwich(s).certified(); }

Enclosure bessel_remainder_majorant(const Enclosure& s) {
  const Precision bits = s.precision();
  const Enclosure sqrt2 = sqrt(Enclosure::from_long(2, bits));
  const Enclosure sqrtpi = sqrt(pi_enclosure(bits));
  const Enclosure lead = sqrt2 * s / sqrtpi + rational(37495, 8192, bits) / sqrtpi;
  return lead * pow(s, make_rational(13, 2)) * exp(-s) + sqrt2 * make_rational(2837835, 131072);
}

}  // namespace qturan
