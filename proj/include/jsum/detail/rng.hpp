#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace jsum::detail {

/// Seeded generator producing identical streams for identical seeds on one
/// platform. Uniform doubles are built from raw engine bits rather than
/// std::uniform_real_distribution so the stream does not depend on the
/// standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [-1, 1).
  double uniform_pm1() { return 2.0 * uniform() - 1.0; }

  /// Standard normal via Box-Muller.
  double gaussian() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

/// n-th element of the van der Corput sequence in the given base (n >= 0).
inline double van_der_corput(std::uint64_t n, std::uint64_t base) {
  double x = 0.0;
  double f = 1.0 / static_cast<double>(base);
  while (n > 0) {
    x += f * static_cast<double>(n % base);
    n /= base;
    f /= static_cast<double>(base);
  }
  return x;
}

inline const int kHaltonPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                    31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

/// Point index n of the Halton sequence in [0,1)^dim (dim <= 20).
inline std::vector<double> halton_point(std::uint64_t n, int dim) {
  std::vector<double> x(static_cast<std::size_t>(dim));
  for (int d = 0; d < dim; ++d) {
    x[static_cast<std::size_t>(d)] =
        van_der_corput(n + 1, static_cast<std::uint64_t>(kHaltonPrimes[d]));
  }
  return x;
}

/// Inverse of the standard normal CDF (Acklam's rational approximation,
/// relative error below 1.15e-9; ample for spreading start points).
inline double inverse_normal_cdf(double u) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (u <= 0.0) u = 1e-300;
  if (u >= 1.0) u = 1.0 - 1e-16;
  if (u < plow) {
    const double q = std::sqrt(-2.0 * std::log(u));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (u <= 1.0 - plow) {
    const double q = u - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r +
            a[5]) *
           q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double q = std::sqrt(-2.0 * std::log(1.0 - u));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
           c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

/// Deterministic, well-spread direction in R^dim: Halton point mapped
/// through the normal quantile, coordinate-wise.
inline std::vector<double> halton_gaussian_direction(std::uint64_t n,
                                                     int dim) {
  std::vector<double> x = halton_point(n, dim);
  for (double& v : x) v = inverse_normal_cdf(v);
  return x;
}

}  // namespace jsum::detail
