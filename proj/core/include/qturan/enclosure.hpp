#pragma once

// Outward-rounded interval arithmetic over MPFR.
//
// An Enclosure [lo, hi] always contains the exact value it stands for. Every
// operation rounds lo toward -inf and hi toward +inf, so containment is
// preserved through arbitrary compositions. Results carry the larger of the
// operand precisions.

#include <mpfr.h>

#include <optional>
#include <span>
#include <string>

#include "qturan/errors.hpp"
#include "qturan/exact.hpp"

namespace qturan {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 192;
inline constexpr Precision kPrecisionCap = 4096;

// RAII owner of one mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(Precision bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  Precision precision() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const;
  // Decimal rendering with `digits` significant digits, rounded as `rnd`.
  std::string to_string(int digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const;

 private:
  mpfr_t value_;
};

class Enclosure {
 public:
  // Throws DomainError unless lo <= hi.
  Enclosure(BigFloat lo, BigFloat hi);

  static Enclosure from_long(long v, Precision bits);
  static Enclosure from_integer(const ExactInteger& z, Precision bits);
  static Enclosure from_rational(const ExactRational& q, Precision bits);
  // Outward enclosure of a double; exact when bits >= 53.
  static Enclosure from_double(double d, Precision bits);
  // Smallest enclosure containing both.
  static Enclosure hull(const Enclosure& a, const Enclosure& b);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  Precision precision() const;

  // Upper bound on hi - lo.
  BigFloat width() const;
  double lo_double() const { return lo_.to_double(MPFR_RNDD); }
  double hi_double() const { return hi_.to_double(MPFR_RNDU); }
  double mid_double() const;

  bool contains(const ExactRational& q) const;
  bool contains(const Enclosure& inner) const;
  bool overlaps(const Enclosure& other) const;
  bool is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool contains_zero() const { return !is_positive() && !is_negative(); }

  // Same interval re-expressed at `bits` (rounded outward if narrower).
  Enclosure with_precision(Precision bits) const;

  std::string to_string(int digits = 20) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator/(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a);

Enclosure operator+(const Enclosure& a, long b);
Enclosure operator+(long a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, long b);
Enclosure operator-(long a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, long b);
Enclosure operator*(long a, const Enclosure& b);
Enclosure operator/(const Enclosure& a, long b);
Enclosure operator/(long a, const Enclosure& b);
Enclosure operator+(const Enclosure& a, const ExactRational& b);
Enclosure operator+(const ExactRational& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const ExactRational& b);
Enclosure operator-(const ExactRational& a, const Enclosure& b);
Enclosure operator/(const Enclosure& a, const ExactRational& b);
Enclosure operator*(const Enclosure& a, const ExactRational& b);
Enclosure operator*(const ExactRational& a, const Enclosure& b);

Enclosure sqrt(const Enclosure& x);
Enclosure exp(const Enclosure& x);
Enclosure log(const Enclosure& x);
Enclosure abs(const Enclosure& x);
Enclosure pow(const Enclosure& x, long k);
// x^q for x > 0; half-integer exponents go through sqrt, others through exp/log.
Enclosure pow(const Enclosure& x, const ExactRational& q);

// Encloses pi; width <= 2^(4 - bits). Requires bits >= 32.
Enclosure pi_enclosure(Precision bits);

// cos(pi r) and sin(pi r) for exact rational r, with the argument reduced
// modulo 2 exactly before any rounding.
Enclosure cos_pi(const ExactRational& r, Precision bits);
Enclosure sin_pi(const ExactRational& r, Precision bits);

// Decreasing-function evaluation of erfc on x >= 0.
Enclosure erfc(const Enclosure& x);

enum class ArithOp { Add, Sub, Mul, Div, Sqrt, Exp, Ln, PowInt };

// Generic dispatch. Binary ops take two args; unary ops one; PowInt uses
// `exponent`.
Enclosure enclosure_arith(ArithOp op, std::span<const Enclosure> args, long exponent = 0);

enum class CompareResult { CertifiedLess, CertifiedGreater, Indeterminate };

CompareResult certified_compare(const Enclosure& a, const Enclosure& b);

// a.hi < b.lo
bool certainly_less(const Enclosure& a, const Enclosure& b);
// a.hi <= b.lo
bool certainly_less_equal(const Enclosure& a, const Enclosure& b);

// floor(x) when both endpoints share it.
std::optional<ExactInteger> certified_floor(const Enclosure& x);

// Three-valued outcome of a certified predicate.
enum class Verdict { Holds, Fails, Indeterminate };

const char* to_string(Verdict v);

struct PrecisionPolicy {
  Precision start = kDefaultPrecision;
  Precision cap = kPrecisionCap;
};

// Verdict for "lo <= x <= hi" (strict when `strict`).
Verdict check_between(const Enclosure& lo, const Enclosure& x, const Enclosure& hi,
                      bool strict);
// Verdict for "a <= b" (strict when `strict`).
Verdict check_le(const Enclosure& a, const Enclosure& b, bool strict);

// Calls attempt(bits) with bits = start, 2*start, ... up to cap until the
// result's `verdict` member is decided. Throws PrecisionExhausted otherwise.
template <class Attempt>
auto refine_until_decided(const PrecisionPolicy& policy, Attempt&& attempt) {
  Precision bits = policy.start;
  while (true) {
    if (bits > policy.cap) bits = policy.cap;
    auto result = attempt(bits);
    if (result.verdict != Verdict::Indeterminate) return result;
    if (bits >= policy.cap) {
      throw PrecisionExhausted("undecided at " + std::to_string(policy.cap) + " bits");
    }
    bits *= 2;
  }
}

}  // namespace qturan
