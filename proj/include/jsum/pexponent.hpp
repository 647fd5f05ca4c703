#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "jsum/errors.hpp"

namespace jsum {

/// Exponent of an l_p norm. Valid values are the reals p >= 1 together
/// with infinity (stored as the IEEE infinity).
class PExponent {
 public:
  /// Accepts any finite p >= 1 or +infinity.
  PExponent(double p) : p_(p) {  // NOLINT: implicit by design
    if (std::isnan(p) || p < 1.0) {
      throw PreconditionError("l_p exponent must satisfy p >= 1, got " +
                              std::to_string(p));
    }
  }

  static PExponent infinity() {
    return PExponent(std::numeric_limits<double>::infinity());
  }

  bool is_infinite() const { return std::isinf(p_); }

  /// The numeric exponent; +infinity for the sup norm.
  double value() const { return p_; }

  friend bool operator==(const PExponent& a, const PExponent& b) {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const PExponent& a, const PExponent& b) {
    return !(a == b);
  }

 private:
  double p_;
};

/// Conjugate exponent q with 1/p + 1/q = 1; dual(1) = inf, dual(inf) = 1.
inline PExponent dual_exponent(PExponent p) {
  if (p.is_infinite()) return PExponent(1.0);
  if (p.value() == 1.0) return PExponent::infinity();
  return PExponent(p.value() / (p.value() - 1.0));
}

}  // namespace jsum
