#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qturan {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

inline ExactRational make_rational(long num, long den = 1) {
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const ExactInteger& z) { return z.get_str(); }

inline std::string to_string(const ExactRational& q) { return q.get_str(); }

inline ExactInteger floor_of(const ExactRational& q) {
  ExactInteger r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline ExactInteger ceil_of(const ExactRational& q) {
  ExactInteger r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace qturan
