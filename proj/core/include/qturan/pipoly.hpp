#pragma once

// Exact polynomials in pi over Q, Laurent polynomials in nu over Q[pi],
// polynomials in nu(n -+ 1) awaiting the substitution nu(n -+ 1)^2 = nu^2 -+ pi^2/3,
// and the quadratic field Q(sqrt 2).

#include <map>
#include <string>

#include "qturan/enclosure.hpp"
#include "qturan/exact.hpp"

namespace qturan {

// Q[pi] with pi a free generator. Zero coefficients are never stored.
class PiPoly {
 public:
  PiPoly() = default;
  PiPoly(long c);
  PiPoly(const ExactRational& c);

  static PiPoly monomial(const ExactRational& c, long pi_power);
  static PiPoly pi(long power = 1) { return monomial(1, power); }
  // Inverse of to_string(): e.g. "78 - 175/64*pi^4", "642816*pi^8", "0".
  static PiPoly parse(const std::string& text);

  const std::map<long, ExactRational>& terms() const { return terms_; }
  ExactRational coefficient(long pi_power) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;

  PiPoly& operator+=(const PiPoly& o);
  PiPoly& operator-=(const PiPoly& o);
  PiPoly& operator*=(const PiPoly& o);

  Enclosure evaluate(Precision bits) const;
  // Terms in ascending pi power, e.g. "78 - 175/64*pi^4".
  std::string to_string() const;

  friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(long power, const ExactRational& c);
  std::map<long, ExactRational> terms_;
};

PiPoly operator+(PiPoly a, const PiPoly& b);
PiPoly operator-(PiPoly a, const PiPoly& b);
PiPoly operator-(const PiPoly& a);
PiPoly operator*(const PiPoly& a, const PiPoly& b);
PiPoly pow(const PiPoly& a, unsigned k);

// Laurent polynomials in nu with Q[pi] coefficients.
class NuLaurent {
 public:
  NuLaurent() = default;
  NuLaurent(const PiPoly& c);
  NuLaurent(long c) : NuLaurent(PiPoly(c)) {}

  static NuLaurent monomial(const PiPoly& c, long nu_power);
  static NuLaurent nu(long power = 1) { return monomial(PiPoly(1), power); }

  const std::map<long, PiPoly>& terms() const { return terms_; }
  PiPoly coefficient(long nu_power) const;
  bool is_zero() const { return terms_.empty(); }
  // Highest / lowest nu exponent; throws on zero.
  long degree() const;
  long min_degree() const;

  NuLaurent& operator+=(const NuLaurent& o);
  NuLaurent& operator-=(const NuLaurent& o);
  NuLaurent& operator*=(const NuLaurent& o);
  // Multiply by nu^k.
  NuLaurent shifted(long k) const;

  Enclosure evaluate(const Enclosure& nu_value) const;
  std::string to_string() const;

  friend bool operator==(const NuLaurent& a, const NuLaurent& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(long power, const PiPoly& c);
  std::map<long, PiPoly> terms_;
};

NuLaurent operator+(NuLaurent a, const NuLaurent& b);
NuLaurent operator-(NuLaurent a, const NuLaurent& b);
NuLaurent operator-(const NuLaurent& a);
NuLaurent operator*(const NuLaurent& a, const NuLaurent& b);
NuLaurent pow(const NuLaurent& a, unsigned k);

// Polynomial in X = nu(n + side) (side = -1 or +1) with NuLaurent
// coefficients. substitute() applies X^2 = nu^2 + side pi^2/3.
class ShiftPoly {
 public:
  explicit ShiftPoly(int side);

  static ShiftPoly x_power(int side, long power, const NuLaurent& coeff = NuLaurent(1));

  int side() const { return side_; }
  const std::map<long, NuLaurent>& terms() const { return terms_; }

  ShiftPoly& operator+=(const ShiftPoly& o);
  ShiftPoly& operator*=(const ShiftPoly& o);

  // OddPowerError if any odd power of X is present.
  NuLaurent substitute() const;

 private:
  void add_term(long power, const NuLaurent& c);
  int side_;
  std::map<long, NuLaurent> terms_;
};

ShiftPoly operator+(ShiftPoly a, const ShiftPoly& b);
ShiftPoly operator*(ShiftPoly a, const ShiftPoly& b);

// nu(n + side)^2 = nu^2 + side pi^2/3
NuLaurent shifted_nu_squared(int side);

// a + b sqrt2
struct QuadSqrt2 {
  ExactRational a;
  ExactRational b;

  friend bool operator==(const QuadSqrt2& x, const QuadSqrt2& y) {
    return x.a == y.a && x.b == y.b;
  }
  std::string to_string() const;
};

QuadSqrt2 operator+(const QuadSqrt2& x, const QuadSqrt2& y);
QuadSqrt2 operator*(const QuadSqrt2& x, const QuadSqrt2& y);
QuadSqrt2 operator*(const ExactRational& c, const QuadSqrt2& y);

}  // namespace qturan
