#pragma once

#include <stdexcept>
#include <string>

namespace qturan {

// Interval operation outside its domain (0 in a divisor, negative radicand).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A certified decision stayed undecided at the precision cap.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Bessel order other than +-1 requested from the eta-quotient evaluator.
class UnsupportedOrder : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Substitution would leave an odd power of nu(n -+ 1).
class OddPowerError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A symbolic derivation produced something structurally impossible.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qturan
