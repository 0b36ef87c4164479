#pragma once

// I1 by its ascending series, half-integer Gamma values, the upper incomplete
// Gamma function, and the explicit bounds built on them.

#include <array>

#include "qturan/enclosure.hpp"
#include "qturan/report.hpp"

namespace qturan {

struct BesselValue {
  Enclosure s;
  Enclosure value;
  long terms_used = 0;
};

// Series sum_m (s/2)^(2m+1) / (m! (m+1)!) with a geometric tail bound.
// Requires s.lo >= 0.
BesselValue bessel_i1(const Enclosure& s);

// Independent enclosure of I1(s) = (s/pi) int_{-1}^{1} sqrt(1-t^2) e^{st} dt
// by the periodic trapezoid rule with a rigorous aliasing bound.
Enclosure bessel_i1_quadrature(const ExactRational& s, Precision bits);

// True iff the quadrature enclosure sits inside the series enclosure widened
// by `tolerance` on both sides. Test-scale only: 0 <= s <= 50.
bool bessel_i1_integral_check(const ExactRational& s, const ExactRational& tolerance,
                              Precision bits = kDefaultPrecision);

// Gamma(a) / sqrt(pi) for a = k + 1/2, i.e. (2k)! / (4^k k!).
ExactRational gamma_half_multiple(const ExactRational& a);
Enclosure gamma_half(const ExactRational& a, Precision bits);

// Gamma(a, s) for a a positive integer or half-integer, by upward recurrence
// from Gamma(1, s) = e^-s or Gamma(1/2, s) = sqrt(pi) erfc(sqrt(s)).
Enclosure incomplete_gamma_upper(const ExactRational& a, const Enclosure& s);

// a s^(a-1) e^-s. Requires a >= 1; DomainError if s.hi < a.
Enclosure incomplete_gamma_upper_bound(const ExactRational& a, const Enclosure& s);

// Gamma(a, s) <= a s^(a-1) e^-s at exact s.
BoundReport pinelis_check(const ExactRational& a, const ExactRational& s,
                          const PrecisionPolicy& policy = {});

// 1 - 3/(8s) - 15/(128s^2) - 105/(1024s^3) - 4725/(32768s^4) - 72765/(262144s^5)
Enclosure e_i(const Enclosure& s);

// Coefficients of E_I in powers of 1/s, index 0..5.
const std::array<ExactRational, 6>& e_i_coefficients();

// sqrt(2/(pi s)) e^s.
Enclosure bkrt_bound(const Enclosure& s);
BoundReport bkrt_check(const ExactRational& s, const PrecisionPolicy& policy = {});

// e^s/sqrt(2 pi s) (E_I(s) -+ 31/s^6) around I1(s). Requires s.lo >= 26.
BoundReport bessel_sandwich(const Enclosure& s);
BoundReport bessel_sandwich(const ExactRational& s, const PrecisionPolicy& policy = {});
bool bessel_sandwich_check(const Enclosure& s);

// f(s) = (sqrt2 s/sqrt pi + 37495/(8192 sqrt pi)) s^(13/2) e^-s + 2837835 sqrt2/131072
Enclosure bessel_remainder_majorant(const Enclosure& s);

}  // namespace qturan
