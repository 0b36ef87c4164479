#include "qturan/enclosure.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace qturan {

// ---------------------------------------------------------------------------
// BigFloat

BigFloat::BigFloat(Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

double BigFloat::to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(value_, rnd); }

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*R*g", digits, rnd, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

// ---------------------------------------------------------------------------
// Enclosure

namespace {

Precision join(const Enclosure& a, const Enclosure& b) {
  return std::max(a.precision(), b.precision());
}

Precision join(Precision a, Precision b) { return std::max(a, b); }

const BigFloat& min_of(const std::array<BigFloat, 4>& v) {
  const BigFloat* best = &v[0];
  for (const auto& x : v) {
    if (mpfr_less_p(x.get(), best->get())) best = &x;
  }
  return *best;
}

const BigFloat& max_of(const std::array<BigFloat, 4>& v) {
  const BigFloat* best = &v[0];
  for (const auto& x : v) {
    if (mpfr_greater_p(x.get(), best->get())) best = &x;
  }
  return *best;
}

using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Endpoint-combination rule, valid for * and / (when 0 is not in b).
Enclosure corners(const Enclosure& a, const Enclosure& b, BinaryFn fn) {
  const Precision bits = join(a, b);
  std::array<BigFloat, 4> down{BigFloat(bits), BigFloat(bits), BigFloat(bits), BigFloat(bits)};
  std::array<BigFloat, 4> up = down;
  const std::array<std::pair<const BigFloat*, const BigFloat*>, 4> pairs{{
      {&a.lo(), &b.lo()}, {&a.lo(), &b.hi()}, {&a.hi(), &b.lo()}, {&a.hi(), &b.hi()}}};
  for (std::size_t i = 0; i < 4; ++i) {
    fn(down[i].get(), pairs[i].first->get(), pairs[i].second->get(), MPFR_RNDD);
    fn(up[i].get(), pairs[i].first->get(), pairs[i].second->get(), MPFR_RNDU);
  }
  return Enclosure(min_of(down), max_of(up));
}

using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Enclosure increasing(const Enclosure& x, UnaryFn fn) {
  BigFloat lo(x.precision());
  BigFloat hi(x.precision());
  fn(lo.get(), x.lo().get(), MPFR_RNDD);
  fn(hi.get(), x.hi().get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure decreasing(const Enclosure& x, UnaryFn fn) {
  BigFloat lo(x.precision());
  BigFloat hi(x.precision());
  fn(lo.get(), x.hi().get(), MPFR_RNDD);
  fn(hi.get(), x.lo().get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure long_point(long v, Precision bits) { return Enclosure::from_long(v, join(bits, 64)); }

}  // namespace

Enclosure::Enclosure(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get())) {
    throw DomainError("enclosure endpoint is NaN");
  }
  if (mpfr_greater_p(lo_.get(), hi_.get())) {
    throw DomainError("enclosure with lo > hi");
  }
}

Enclosure Enclosure::from_long(long v, Precision bits) {
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_set_si(lo.get(), v, MPFR_RNDD);
  mpfr_set_si(hi.get(), v, MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::from_integer(const ExactInteger& z, Precision bits) {
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_set_z(lo.get(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), z.get_mpz_t(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::from_rational(const ExactRational& q, Precision bits) {
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::from_double(double d, Precision bits) {
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_set_d(lo.get(), d, MPFR_RNDD);
  mpfr_set_d(hi.get(), d, MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  const Precision bits = join(a, b);
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_min(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Precision Enclosure::precision() const { return std::max(lo_.precision(), hi_.precision()); }

BigFloat Enclosure::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

double Enclosure::mid_double() const {
  return 0.5 * (lo_.to_double(MPFR_RNDN) + hi_.to_double(MPFR_RNDN));
}

bool Enclosure::contains(const ExactRational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool Enclosure::contains(const Enclosure& inner) const {
  return mpfr_lessequal_p(lo_.get(), inner.lo_.get()) &&
         mpfr_greaterequal_p(hi_.get(), inner.hi_.get());
}

bool Enclosure::overlaps(const Enclosure& other) const {
  return mpfr_lessequal_p(lo_.get(), other.hi_.get()) &&
         mpfr_lessequal_p(other.lo_.get(), hi_.get());
}

Enclosure Enclosure::with_precision(Precision bits) const {
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_set(lo.get(), lo_.get(), MPFR_RNDD);
  mpfr_set(hi.get(), hi_.get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

std::string Enclosure::to_string(int digits) const {
  return "[" + lo_.to_string(digits, MPFR_RNDD) + ", " + hi_.to_string(digits, MPFR_RNDU) + "]";
}

// ---------------------------------------------------------------------------
// Arithmetic

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  const Precision bits = join(a, b);
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_add(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  const Precision bits = join(a, b);
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_sub(lo.get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) { return corners(a, b, mpfr_mul); }

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.contains_zero()) throw DomainError("division by an enclosure containing 0");
  return corners(a, b, mpfr_div);
}

Enclosure operator-(const Enclosure& a) {
  BigFloat lo(a.precision());
  BigFloat hi(a.precision());
  mpfr_neg(lo.get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator+(const Enclosure& a, long b) { return a + long_point(b, a.precision()); }
Enclosure operator+(long a, const Enclosure& b) { return b + a; }
Enclosure operator-(const Enclosure& a, long b) { return a - long_point(b, a.precision()); }
Enclosure operator-(long a, const Enclosure& b) { return long_point(a, b.precision()) - b; }
Enclosure operator*(const Enclosure& a, long b) { return a * long_point(b, a.precision()); }
Enclosure operator*(long a, const Enclosure& b) { return b * a; }
Enclosure operator/(const Enclosure& a, long b) { return a / long_point(b, a.precision()); }
Enclosure operator/(long a, const Enclosure& b) { return long_point(a, b.precision()) / b; }

Enclosure operator+(const Enclosure& a, const ExactRational& b) {
  return a + Enclosure::from_rational(b, a.precision());
}
Enclosure operator-(const Enclosure& a, const ExactRational& b) {
  return a - Enclosure::from_rational(b, a.precision());
}
Enclosure operator+(const ExactRational& a, const Enclosure& b) { return b + a; }
Enclosure operator-(const ExactRational& a, const Enclosure& b) {
  return Enclosure::from_rational(a, b.precision()) - b;
}
Enclosure operator/(const Enclosure& a, const ExactRational& b) {
  return a / Enclosure::from_rational(b, a.precision());
}
Enclosure operator*(const Enclosure& a, const ExactRational& b) {
  return a * Enclosure::from_rational(b, a.precision());
}
Enclosure operator*(const ExactRational& a, const Enclosure& b) { return b * a; }

Enclosure sqrt(const Enclosure& x) {
  if (mpfr_sgn(x.lo().get()) < 0) throw DomainError("sqrt of an enclosure reaching below 0");
  return increasing(x, mpfr_sqrt);
}

Enclosure exp(const Enclosure& x) { return increasing(x, mpfr_exp); }

Enclosure log(const Enclosure& x) {
  if (!x.is_positive()) throw DomainError("log of an enclosure not strictly positive");
  return increasing(x, mpfr_log);
}

Enclosure abs(const Enclosure& x) {
  if (x.is_positive() || mpfr_zero_p(x.lo().get())) return x;
  if (!mpfr_greater_p(x.hi().get(), x.lo().get()) || mpfr_sgn(x.hi().get()) <= 0) return -x;
  BigFloat lo(x.precision());
  BigFloat hi(x.precision());
  mpfr_set_zero(lo.get(), 1);
  mpfr_neg(hi.get(), x.lo().get(), MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), x.hi().get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure pow(const Enclosure& x, long k) {
  const Precision bits = x.precision();
  if (k == 0) return Enclosure::from_long(1, bits);
  if (k < 0) return 1L / pow(x, -k);
  auto raise = [&](const BigFloat& base, mpfr_rnd_t rnd) {
    BigFloat r(bits);
    mpfr_pow_ui(r.get(), base.get(), static_cast<unsigned long>(k), rnd);
    return r;
  };
  const bool odd = (k % 2) != 0;
  if (odd || mpfr_sgn(x.lo().get()) >= 0) {
    return Enclosure(raise(x.lo(), MPFR_RNDD), raise(x.hi(), MPFR_RNDU));
  }
  if (mpfr_sgn(x.hi().get()) <= 0) {
    return Enclosure(raise(x.hi(), MPFR_RNDD), raise(x.lo(), MPFR_RNDU));
  }
  // Even power of an interval straddling zero.
  const Enclosure magnitude = abs(x);
  return Enclosure(BigFloat(bits), raise(magnitude.hi(), MPFR_RNDU));
}

Enclosure pow(const Enclosure& x, const ExactRational& q) {
  const ExactInteger& den = q.get_den();
  if (den == 1) return pow(x, q.get_num().get_si());
  if (den == 2) return pow(sqrt(x), q.get_num().get_si());
  if (!x.is_positive()) throw DomainError("non-half-integer power of a non-positive enclosure");
  return exp(log(x) * q);
}

Enclosure pi_enclosure(Precision bits) {
  if (bits < 32) throw ArgumentError("pi_enclosure needs at least 32 bits");
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

namespace {

enum class Trig { Cos, Sin };

Enclosure trig_pi(const ExactRational& r, Precision bits, Trig which) {
  // r mod 2, exactly, in [0, 2).
  ExactRational reduced = r - 2 * ExactRational(floor_of(r / 2));
  reduced.canonicalize();

  const ExactRational half(1, 2);
  const ExactRational three_halves(3, 2);
  auto exact = [&](long v) { return Enclosure::from_long(v, bits); };
  if (reduced == 0) return exact(which == Trig::Cos ? 1 : 0);
  if (reduced == half) return exact(which == Trig::Cos ? 0 : 1);
  if (reduced == 1) return exact(which == Trig::Cos ? -1 : 0);
  if (reduced == three_halves) return exact(which == Trig::Cos ? 0 : -1);

  // Open quarter-turn (quadrant) index; both functions are monotone inside it.
  const long quadrant = floor_of(reduced * 2).get_si();
  const bool rising = which == Trig::Cos ? quadrant >= 2 : (quadrant == 0 || quadrant == 3);
  UnaryFn fn = which == Trig::Cos ? mpfr_cos : mpfr_sin;

  for (Precision work = bits + 16; work <= 8 * bits + 64; work *= 2) {
    const Enclosure pi = pi_enclosure(work);
    const Enclosure x = pi * reduced;
    const Enclosure left = pi * ExactRational(quadrant, 2);
    const Enclosure right = pi * ExactRational(quadrant + 1, 2);
    if (!certainly_less(left, x) || !certainly_less(x, right)) continue;
    const Enclosure value = rising ? increasing(x, fn) : decreasing(x, fn);
    return value.with_precision(bits);
  }
  throw PrecisionExhausted("could not separate trig argument from a quadrant boundary");
}

}  // namespace

Enclosure cos_pi(const ExactRational& r, Precision bits) { return trig_pi(r, bits, Trig::Cos); }

Enclosure sin_pi(const ExactRational& r, Precision bits) { return trig_pi(r, bits, Trig::Sin); }

Enclosure erfc(const Enclosure& x) { return decreasing(x, mpfr_erfc); }

Enclosure enclosure_arith(ArithOp op, std::span<const Enclosure> args, long exponent) {
  const std::size_t arity =
      (op == ArithOp::Add || op == ArithOp::Sub || op == ArithOp::Mul || op == ArithOp::Div) ? 2
                                                                                              : 1;
  if (args.size() != arity) throw ArgumentError("wrong number of enclosure arguments");
  switch (op) {
    case ArithOp::Add: return args[0] + args[1];
    case ArithOp::Sub: return args[0] - args[1];
    case ArithOp::Mul: return args[0] * args[1];
    case ArithOp::Div: return args[0] / args[1];
    case ArithOp::Sqrt: return sqrt(args[0]);
    case ArithOp::Exp: return exp(args[0]);
    case ArithOp::Ln: return log(args[0]);
    case ArithOp::PowInt: return pow(args[0], exponent);
  }
  throw ArgumentError("unknown arithmetic op");
}

// ---------------------------------------------------------------------------
// Comparisons

CompareResult certified_compare(const Enclosure& a, const Enclosure& b) {
  if (mpfr_less_p(a.hi().get(), b.lo().get())) return CompareResult::CertifiedLess;
  if (mpfr_greater_p(a.lo().get(), b.hi().get())) return CompareResult::CertifiedGreater;
  return CompareResult::Indeterminate;
}

bool certainly_less(const Enclosure& a, const Enclosure& b) {
  return mpfr_less_p(a.hi().get(), b.lo().get());
}

bool certainly_less_equal(const Enclosure& a, const Enclosure& b) {
  return mpfr_lessequal_p(a.hi().get(), b.lo().get());
}

std::optional<ExactInteger> certified_floor(const Enclosure& x) {
  ExactInteger lo;
  ExactInteger hi;
  mpfr_get_z(lo.get_mpz_t(), x.lo().get(), MPFR_RNDD);
  mpfr_get_z(hi.get_mpz_t(), x.hi().get(), MPFR_RNDD);
  if (lo != hi) return std::nullopt;
  return lo;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

Verdict check_le(const Enclosure& a, const Enclosure& b, bool strict) {
  if (strict ? certainly_less(a, b) : certainly_less_equal(a, b)) return Verdict::Holds;
  // Violation of a < b is a >= b; violation of a <= b is a > b.
  if (strict ? mpfr_greaterequal_p(a.lo().get(), b.hi().get())
             : mpfr_greater_p(a.lo().get(), b.hi().get())) {
    return Verdict::Fails;
  }
  return Verdict::Indeterminate;
}

Verdict check_between(const Enclosure& lo, const Enclosure& x, const Enclosure& hi,
                      bool strict) {
  const Verdict left = check_le(lo, x, strict);
  const Verdict right = check_le(x, hi, strict);
  if (left == Verdict::Fails || right == Verdict::Fails) return Verdict::Fails;
  if (left == Verdict::Holds && right == Verdict::Holds) return Verdict::Holds;
  return Verdict::Indeterminate;
}

}  // namespace qturan
