#pragma once

#include <string>

#include "qturan/enclosure.hpp"

namespace qturan::testing {

// Exact rational value of a decimal literal such as "-3.1415" or "1e-30".
inline ExactRational decimal(const std::string& text) {
  const bool negative = !text.empty() && text[0] == '-';
  std::string digits = negative ? text.substr(1) : text;
  long exponent = 0;
  if (const auto e = digits.find_first_of("eE"); e != std::string::npos) {
    exponent = std::stol(digits.substr(e + 1));
    digits.erase(e);
  }
  ExactInteger scale = 1;
  const auto dot = digits.find('.');
  if (dot != std::string::npos) {
    for (std::size_t i = dot + 1; i < digits.size(); ++i) scale *= 10;
    digits.erase(dot, 1);
  }
  ExactInteger num(digits, 10);
  for (; exponent > 0; --exponent) num *= 10;
  for (; exponent < 0; ++exponent) scale *= 10;
  ExactRational q(num, scale);
  q.canonicalize();
  return negative ? ExactRational(-q) : q;
}

// |x - reference| <= tol for every point of x.
inline bool near(const Enclosure& x, const std::string& reference, const std::string& tol) {
  const Precision bits = x.precision();
  const ExactRational ref = decimal(reference);
  const ExactRational t = decimal(tol);
  return certainly_less_equal(Enclosure::from_rational(ref - t, bits), x) &&
         certainly_less_equal(x, Enclosure::from_rational(ref + t, bits));
}

}  // namespace qturan::testing
