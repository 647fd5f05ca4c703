#pragma once

#include <string>

#include "jsum/errors.hpp"

namespace jsum {

/// Interval answer for a quantity computed by optimization. A side is
/// certified when the value is a mathematically guaranteed bound on that
/// side; heuristic estimates are reported uncertified.
struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
  bool certified_lower = false;
  bool certified_upper = false;

  static BoundPair exact(double value) {
    return BoundPair{value, value, true, true};
  }

  static BoundPair checked(double lower, double upper, bool cert_lo,
                           bool cert_hi) {
    if (!(lower >= 0.0) || !(upper >= 0.0)) {
      throw PreconditionError("BoundPair: bounds must be >= 0");
    }
    if (lower > upper + 1e-12) {
      throw InternalConsistencyError(
          "BoundPair: lower " + std::to_string(lower) + " exceeds upper " +
          std::to_string(upper));
    }
    return BoundPair{lower, upper, cert_lo, cert_hi};
  }
};

}  // namespace jsum
