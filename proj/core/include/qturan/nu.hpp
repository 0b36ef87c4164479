#pragma once

// nu(n) = pi sqrt(24n+1) / (6 sqrt 2), the main term M(n), and the explicit
// bounds around q(n) and Q(n) = q(n-1) q(n+1) / q(n)^2.

#include <vector>

#include "qturan/enclosure.hpp"
#include "qturan/partitions.hpp"
#include "qturan/report.hpp"

namespace qturan {

class NuValue {
 public:
  explicit NuValue(long n);

  long n() const { return n_; }
  const ExactInteger& radicand() const { return radicand_; }

  // pi^2 (24n+1) / 72
  Enclosure squared(Precision bits) const;
  Enclosure as_enclosure(Precision bits) const;

 private:
  long n_;
  ExactInteger radicand_;
};

NuValue nu(long n);

// Smallest n >= 0 with nu(n) >= threshold.
long nu_min_n(const ExactRational& threshold, const PrecisionPolicy& policy = {});

// sqrt2 pi^2 / (12 nu) I1(nu)
Enclosure main_term(long n, Precision bits);

// sqrt3 pi^(3/2) / (6 sqrt nu) e^(nu/3). ArgumentError below n = 135.
Enclosure r_error_bound(long n, Precision bits);

// M(n) - R <= q(n) <= M(n) + R.
BoundReport residual_bound_check(long n, const ExactInteger& q_n,
                                 const PrecisionPolicy& policy = {});

// M(n)(1 - nu^-6) <= q(n) <= M(n)(1 + nu^-6); needs nu(n) >= 43.
BoundReport q_sandwich_check(long n, const ExactInteger& q_n, const PrecisionPolicy& policy = {});

// 1 - pi^4/(36 nu^3) + pi^4/(12 nu^4) - pi^4/(32 nu^5)
Enclosure e_q(const Enclosure& nu_value);
Enclosure e_q(long n, Precision bits);

ExactRational q_ratio(const PartitionTable& table, long n);

// E_Q - 135/nu^6 < Q(n) < E_Q + (126 + pi^8/1296)/nu^6; needs n >= 1365.
BoundReport Q_sandwich_check(long n, const PartitionTable& table,
                             const PrecisionPolicy& policy = {});

// 692 sqrt3 / pi^(3/2) sqrt(s) e^(-s/3)
Enclosure helper_r(const Enclosure& s);
// 4 sqrt3 s^7 e^(-2s/3)
Enclosure helper_L(const Enclosure& s);
// sqrt(6 nu / pi) e^(nu/3) / I1(nu)
Enclosure helper_G(long n, Precision bits);

// r(21) < 1, L(43) < 1, and G(n) <= nu(n)^-6 for each n in g_samples.
std::vector<BoundReport> helper_monotone_checks(const std::vector<long>& g_samples,
                                                const PrecisionPolicy& policy = {});

// Truncated expansions bracketing nu(n-1) (d_v, u_v) and nu(n+1) (d_bar, u_bar).
struct ShiftBounds {
  Enclosure d_v;
  Enclosure u_v;
  Enclosure d_bar;
  Enclosure u_bar;
};

ShiftBounds shift_bounds(const Enclosure& nu_value);

// d_v < nu(n-1) < u_v and d_bar < nu(n+1) < u_bar.
std::vector<BoundReport> shift_bracket_check(long n, const PrecisionPolicy& policy = {});

}  // namespace qturan
