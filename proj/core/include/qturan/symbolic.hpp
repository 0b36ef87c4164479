#pragma once

// Exact re-derivation of the polynomial identities behind the Bessel-ratio
// and Q(n) bounds, with comparisons against the published coefficients.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qturan/pipoly.hpp"

namespace qturan {

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct SymbolicReport {
  std::string name;
  std::vector<IdentityCheck> checks;

  bool all_hold() const;
  const IdentityCheck* find(const std::string& check_name) const;
};

using CoefficientMap = std::map<long, PiPoly>;

// E_I as a Laurent polynomial in nu.
NuLaurent e_i_laurent();
// E_Q as a Laurent polynomial in nu.
NuLaurent e_q_laurent();
// Expansions bracketing nu(n - 1) (side -1) or nu(n + 1) (side +1).
NuLaurent shift_upper(int side);
NuLaurent shift_lower(int side);

struct RatioBoundExpansion {
  NuLaurent a_numerator;  // sum_j a_j nu^j
  NuLaurent b_numerator;  // sum_j b_j nu^j
  CoefficientMap a;
  CoefficientMap b;
};

// Clears nu^14 nu(n-1)^6 nu(n+1)^6 from both ratio-bound differences.
// InternalInconsistency if the result is not a polynomial of degree <= 26.
RatioBoundExpansion expand_ratio_bound_numerators();

struct QRatioExpansion {
  NuLaurent c_numerator;  // 71663616 nu^27 (lower product - lower target)
  NuLaurent d_numerator;  // -20404224 nu^26 (upper product - upper target)
  CoefficientMap c;
  CoefficientMap d;
};

QRatioExpansion expand_q_ratio_numerators();

// Published values of a_24..26, b_24..26, c_19..21, d_17..19.
struct PublishedCoefficient {
  std::string family;
  long j;
  std::string text;
};
const std::vector<PublishedCoefficient>& published_coefficients();

// Positive root region of lead2 nu^2 + lead1 nu - k |lead0|: smallest integer
// nu >= 1 from which the quadratic stays positive.
long smallest_positive_integer_nu(const PiPoly& lead2, const PiPoly& lead1, const PiPoly& lead0,
                                  long multiplier);

SymbolicReport ratio_bound_report();
SymbolicReport q_ratio_report();
SymbolicReport phi_psi_identities();
SymbolicReport quartic_product_identities();
SymbolicReport taylor_2mu_coeffs();
SymbolicReport derive_E_I_from_gamma();

std::vector<SymbolicReport> symbolic_suite();

// Snapshot text: "[family]" headers followed by "j: coefficient" lines.
void write_snapshot(std::ostream& out);
std::map<std::string, CoefficientMap> read_snapshot(std::istream& in);

}  // namespace qturan
