#pragma once

#include <optional>
#include <string>

#include "qturan/enclosure.hpp"

namespace qturan {

// Outcome of a certified chain lower <= value <= upper (either side optional).
struct BoundReport {
  std::string quantity;
  long n = -1;  // -1 when the check is not indexed by n
  std::optional<Enclosure> lower;
  std::optional<Enclosure> value;
  std::optional<Enclosure> upper;
  bool strict = false;
  Verdict verdict = Verdict::Indeterminate;
  Precision precision_bits = 0;

  bool certified() const { return verdict == Verdict::Holds; }
};

// Sets report.verdict from whichever bounds are present.
inline void judge(BoundReport& report) {
  Verdict out = Verdict::Holds;
  auto merge = [&](Verdict v) {
    if (v == Verdict::Fails || out == Verdict::Fails) {
      out = Verdict::Fails;
    } else if (v == Verdict::Indeterminate) {
      out = Verdict::Indeterminate;
    }
  };
  if (!report.value) throw ArgumentError("bound report without a value");
  if (report.lower) merge(check_le(*report.lower, *report.value, report.strict));
  if (report.upper) merge(check_le(*report.value, *report.upper, report.strict));
  report.verdict = out;
}

// Re-evaluates `fill(bits)` at increasing precision until judge() decides.
template <class Fill>
BoundReport certify(const PrecisionPolicy& policy, Fill&& fill) {
  return refine_until_decided(policy, [&](Precision bits) {
    BoundReport r = fill(bits);
    r.precision_bits = bits;
    judge(r);
    return r;
  });
}

}  // namespace qturan
