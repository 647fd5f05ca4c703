#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jsum/errors.hpp"
#include "jsum/pexponent.hpp"

namespace jsum {

/// Dense real vector in a finite-dimensional coordinate space. The empty
/// vector (dimension zero) is allowed and represents the origin of the
/// trivial space.
class Vector {
 public:
  Vector() = default;

  explicit Vector(std::vector<double> coords) : coords_(std::move(coords)) {
    for (double c : coords_) {
      if (!std::isfinite(c)) {
        throw PreconditionError("vector entries must be finite");
      }
    }
  }

  static Vector zeros(std::size_t dim) {
    return Vector(std::vector<double>(dim, 0.0));
  }

  /// Unit coordinate vector e_axis (1-based axis) in dimension dim.
  static Vector unit(std::size_t dim, std::size_t axis) {
    if (axis < 1 || axis > dim) {
      throw PreconditionError("unit vector axis out of range");
    }
    std::vector<double> c(dim, 0.0);
    c[axis - 1] = 1.0;
    return Vector(std::move(c));
  }

  std::size_t ambient_dim() const { return coords_.size(); }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const Vector& a, const Vector& b) {
    return !(a == b);
  }

 private:
  std::vector<double> coords_;
};

/// (sum |x_i|^p)^(1/p), or max |x_i| when p is infinite. Scaled by the
/// largest magnitude so that homogeneity holds to relative rounding error.
inline double lp_norm(const std::vector<double>& coords, PExponent p) {
  if (coords.empty()) return 0.0;
  double m = 0.0;
  for (double c : coords) m = std::max(m, std::abs(c));
  if (m == 0.0) return 0.0;
  if (p.is_infinite()) return m;
  const double q = p.value();
  double s = 0.0;
  for (double c : coords) s += std::pow(std::abs(c) / m, q);
  return m * std::pow(s, 1.0 / q);
}

inline double lp_norm(const Vector& v, PExponent p) {
  return lp_norm(v.coords(), p);
}

inline double dot(const Vector& a, const Vector& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw PreconditionError("dot: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.ambient_dim(); ++i) s += a[i] * b[i];
  return s;
}

/// Embeds v into a larger ambient dimension by appending zeros.
inline Vector zero_pad(const Vector& v, std::size_t dim) {
  if (dim < v.ambient_dim()) {
    throw PreconditionError("zero_pad: target dimension smaller than vector");
  }
  std::vector<double> c = v.coords();
  c.resize(dim, 0.0);
  return Vector(std::move(c));
}

/// a + s*b where the shorter vector is zero-padded into the larger space.
inline Vector add_scaled(const Vector& a, double s, const Vector& b) {
  const std::size_t dim = std::max(a.ambient_dim(), b.ambient_dim());
  std::vector<double> c(dim, 0.0);
  for (std::size_t i = 0; i < a.ambient_dim(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.ambient_dim(); ++i) c[i] += s * b[i];
  return Vector(std::move(c));
}

inline Vector scale(double s, const Vector& v) {
  std::vector<double> c = v.coords();
  for (double& x : c) x *= s;
  return Vector(std::move(c));
}

/// lp norm of the padded difference a - b. Cross-dimension inputs embed the
/// shorter vector by zero-padding.
inline double padded_diff_norm(const Vector& a, const Vector& b, PExponent p) {
  return lp_norm(add_scaled(a, -1.0, b), p);
}

/// Norm of a direct sum from its component norms: treats the list of
/// component norms as a vector and takes its lp norm.
inline double lp_direct_sum(const std::vector<double>& component_norms,
                            PExponent p) {
  for (double n : component_norms) {
    if (!(n >= 0.0)) {
      throw PreconditionError("lp_direct_sum: component norms must be >= 0");
    }
  }
  return lp_norm(component_norms, p);
}

}  // namespace jsum
