#include "qturan/nu.hpp"

#include "qturan/bessel.hpp"

namespace qturan {

namespace {

Enclosure pi_pow(Precision bits, long k) { return pow(pi_enclosure(bits), k); }

void require_index(const PartitionTable& table, long lo, long hi) {
  table.at(lo);
  table.at(hi);
}

}  // namespace

NuValue::NuValue(long n) : n_(n), radicand_(ExactInteger(24) * n + 1) {
  if (n < 0) throw ArgumentError("nu(n) needs n >= 0");
}

Enclosure NuValue::squared(Precision bits) const {
  return pi_pow(bits, 2) * ExactRational(radicand_, 72);
}

Enclosure NuValue::as_enclosure(Precision bits) const {
  const Enclosure root = sqrt(Enclosure::from_rational(ExactRational(radicand_, 2), bits));
  return pi_enclosure(bits) * root / 6;
}

NuValue nu(long n) { return NuValue(n); }

long nu_min_n(const ExactRational& threshold, const PrecisionPolicy& policy) {
  if (threshold <= 0) throw ArgumentError("nu_min_n needs a positive threshold");
  // 24n + 1 >= 72 T^2 / pi^2; the right side is irrational, so its ceiling
  // is floor + 1 once the floor is certified.
  for (Precision bits = policy.start;; bits *= 2) {
    const Enclosure x =
        (Enclosure::from_rational(72 * threshold * threshold, bits) / pi_pow(bits, 2) - 1L) / 24;
    if (auto f = certified_floor(x)) {
      const ExactInteger n = *f + 1;
      return n < 0 ? 0 : n.get_si();
    }
    if (bits >= policy.cap) throw PrecisionExhausted("nu_min_n undecided at the precision cap");
  }
}

Enclosure main_term(long n, Precision bits) {
  if (n < 1) throw ArgumentError("main_term needs n >= 1");
  const Enclosure v = nu(n).as_enclosure(bits);
  const Enclosure sqrt2 = sqrt(Enclosure::from_long(2, bits));
  return sqrt2 * pi_pow(bits, 2) / (12L * v) * bessel_i1(v).value;
}

Enclosure r_error_bound(long n, Precision bits) {
  if (n < 135) throw ArgumentError("the residual bound is stated for n >= 135");
  const Enclosure v = nu(n).as_enclosure(bits);
  const Enclosure pi = pi_enclosure(bits);
  return sqrt(Enclosure::from_long(3, bits)) * pi * sqrt(pi) / (6L * sqrt(v)) *
         exp(v / 3);
}

BoundReport residual_bound_check(long n, const ExactInteger& q_n, const PrecisionPolicy& policy) {
  return certify(policy, [&](Precision bits) {
    const Enclosure m = main_term(n, bits);
    const Enclosure r = r_error_bound(n, bits);
    BoundReport rep;
    rep.quantity = "residual";
    rep.n = n;
    rep.lower = m - r;
    rep.value = Enclosure::from_integer(q_n, bits);
    rep.upper = m + r;
    return rep;
  });
}

BoundReport q_sandwich_check(long n, const ExactInteger& q_n, const PrecisionPolicy& policy) {
  if (n < nu_min_n(43)) throw ArgumentError("q sandwich is stated for nu(n) >= 43");
  return certify(policy, [&](Precision bits) {
    const Enclosure m = main_term(n, bits);
    const Enclosure inv6 = 1L / pow(nu(n).as_enclosure(bits), 6);
    BoundReport rep;
    rep.quantity = "q_sandwich";
    rep.n = n;
    rep.lower = m * (1L - inv6);
    rep.value = Enclosure::from_integer(q_n, bits);
    rep.upper = m * (1L + inv6);
    return rep;
  });
}

Enclosure e_q(const Enclosure& v) {
  const Enclosure pi4 = pi_pow(v.precision(), 4);
  return 1L - pi4 / (36L * pow(v, 3)) + pi4 / (12L * pow(v, 4)) - pi4 / (32L * pow(v, 5));
}

Enclosure e_q(long n, Precision bits) {
  if (n < 1) throw ArgumentError("E_Q needs n >= 1");
  return e_q(nu(n).as_enclosure(bits));
}

ExactRational q_ratio(const PartitionTable& table, long n) {
  require_index(table, n - 1, n + 1);
  ExactRational out(table[n - 1] * table[n + 1], table[n] * table[n]);
  out.canonicalize();
  return out;
}

BoundReport Q_sandwich_check(long n, const PartitionTable& table, const PrecisionPolicy& policy) {
  if (n < 1365) throw ArgumentError("Q sandwich is stated for n >= 1365");
  const ExactRational ratio = q_ratio(table, n);
  return certify(policy, [&](Precision bits) {
    const Enclosure v = nu(n).as_enclosure(bits);
    const Enclosure base = e_q(v);
    const Enclosure inv6 = 1L / pow(v, 6);
    BoundReport rep;
    rep.quantity = "Q_sandwich";
    rep.n = n;
    rep.strict = true;
    rep.lower = base - 135L * inv6;
    rep.value = Enclosure::from_rational(ratio, bits);
    rep.upper = base + (126L + pi_pow(bits, 8) / 1296) * inv6;
    return rep;
  });
}

Enclosure helper_r(const Enclosure& s) {
  const Precision bits = s.precision();
  const Enclosure pi = pi_enclosure(bits);
  return 692L * sqrt(Enclosure::from_long(3, bits)) / (pi * sqrt(pi)) * sqrt(s) * exp(-s / 3);
}

Enclosure helper_L(const Enclosure& s) {
  const Precision bits = s.precision();
  return 4L * sqrt(Enclosure::from_long(3, bits)) * pow(s, 7) *
         exp(-(s * make_rational(2, 3)));
}

Enclosure helper_G(long n, Precision bits) {
  const Enclosure v = nu(n).as_enclosure(bits);
  return sqrt(6L * v / pi_enclosure(bits)) * exp(v / 3) / bessel_i1(v).value;
}

std::vector<BoundReport> helper_monotone_checks(const std::vector<long>& g_samples,
                                                const PrecisionPolicy& policy) {
  std::vector<BoundReport> out;
  auto below_one = [&](const char* name, long s, Enclosure (*fn)(const Enclosure&)) {
    out.push_back(certify(policy, [&](Precision bits) {
      BoundReport rep;
      rep.quantity = name;
      rep.strict = true;
      rep.value = fn(Enclosure::from_long(s, bits));
      rep.upper = Enclosure::from_long(1, bits);
      return rep;
    }));
  };
  below_one("r(21)<1", 21, helper_r);
  below_one("L(43)<1", 43, helper_L);
  for (long n : g_samples) {
    out.push_back(certify(policy, [&](Precision bits) {
      BoundReport rep;
      rep.quantity = "G(n)<=nu^-6";
      rep.n = n;
      rep.value = helper_G(n, bits);
      rep.upper = 1L / pow(nu(n).as_enclosure(bits), 6);
      return rep;
    }));
  }
  return out;
}

ShiftBounds shift_bounds(const Enclosure& v) {
  const Precision bits = v.precision();
  const Enclosure t2 = pi_pow(bits, 2) / (6L * v);
  const Enclosure t4 = pi_pow(bits, 4) / (72L * pow(v, 3));
  const Enclosure t6 = pi_pow(bits, 6) / (432L * pow(v, 5));
  const Enclosure t8 = 5L * pi_pow(bits, 8) / (5184L * pow(v, 7));
  const Enclosure u_v = v - t2 - t4 - t6;
  const Enclosure u_bar = v + t2 - t4 + t6;
  return ShiftBounds{u_v - t8, u_v, u_bar - t8, u_bar};
}

std::vector<BoundReport> shift_bracket_check(long n, const PrecisionPolicy& policy) {
  if (n < 1) throw ArgumentError("shift brackets need n >= 1");
  std::vector<BoundReport> out;
  for (int side : {-1, 1}) {
    out.push_back(certify(policy, [&](Precision bits) {
      const ShiftBounds b = shift_bounds(nu(n).as_enclosure(bits));
      BoundReport rep;
      rep.quantity = side < 0 ? "nu(n-1) bracket" : "nu(n+1) bracket";
      rep.n = n;
      rep.strict = true;
      rep.lower = side < 0 ? b.d_v : b.d_bar;
      rep.value = nu(n + side).as_enclosure(bits);
      rep.upper = side < 0 ? b.u_v : b.u_bar;
      return rep;
    }));
  }
  return out;
}

}  // namespace qturan
