#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "jsum/bounds.hpp"
#include "jsum/detail/rng.hpp"
#include "jsum/errors.hpp"
#include "jsum/pexponent.hpp"

namespace jsum {

struct OpNormOptions {
  int lowdisc_starts = 8;
  int random_starts = 4;
  int ascent_iters = 120;
  std::uint64_t seed = 0;
};

namespace detail {

inline double lp_norm_eigen(const Eigen::VectorXd& x, PExponent p) {
  const double m = x.lpNorm<Eigen::Infinity>();
  if (m == 0.0) return 0.0;
  if (p.is_infinite()) return m;
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s += std::pow(std::abs(x(i)) / m, p.value());
  }
  return m * std::pow(s, 1.0 / p.value());
}

inline double max_abs_col_sum(const Eigen::MatrixXd& A) {
  return A.cwiseAbs().colwise().sum().maxCoeff();
}

inline double max_abs_row_sum(const Eigen::MatrixXd& A) {
  return A.cwiseAbs().rowwise().sum().maxCoeff();
}

/// Largest singular value.
inline double spectral_norm(const Eigen::MatrixXd& A) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  return svd.singularValues()(0);
}

/// Best ratio ||Av||_p / ||v||_p found by normalized gradient ascent from
/// one start. The ratio at any point is a valid lower estimate; ascent only
/// sharpens it.
inline double ascend_ratio(const Eigen::MatrixXd& A, double p,
                           Eigen::VectorXd v, int iters) {
  const auto ratio = [&](const Eigen::VectorXd& u) {
    const double nu = lp_norm_eigen(u, p);
    return nu == 0.0 ? 0.0 : lp_norm_eigen(A * u, p) / nu;
  };
  const auto signed_pow = [&](const Eigen::VectorXd& y, double q) {
    Eigen::VectorXd g(y.size());
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      const double a = std::abs(y(i));
      g(i) = a == 0.0 ? 0.0 : std::pow(a, q) * (y(i) > 0 ? 1.0 : -1.0);
    }
    return g;
  };
  v /= std::max(v.lpNorm<Eigen::Infinity>(), 1e-300);
  double best = ratio(v);
  double step = 0.5;
  for (int it = 0; it < iters; ++it) {
    const Eigen::VectorXd Av = A * v;
    const double nAv = lp_norm_eigen(Av, p);
    const double nv = lp_norm_eigen(v, p);
    if (nAv == 0.0 || nv == 0.0) break;
    // Gradient of log(||Av||_p / ||v||_p).
    const Eigen::VectorXd grad =
        A.transpose() * signed_pow(Av, p - 1.0) / std::pow(nAv, p) -
        signed_pow(v, p - 1.0) / std::pow(nv, p);
    const double gn = grad.norm();
    if (gn < 1e-14) break;
    Eigen::VectorXd v_try = v + step * grad / gn;
    double r_try = ratio(v_try);
    int bt = 0;
    while (r_try < best && bt++ < 20) {
      step *= 0.5;
      v_try = v + step * grad / gn;
      r_try = ratio(v_try);
    }
    if (r_try <= best) break;
    best = r_try;
    v = v_try / std::max(v_try.lpNorm<Eigen::Infinity>(), 1e-300);
    step = std::min(step * 2.0, 1.0);
  }
  return best;
}

}  // namespace detail

/// Bounds on the operator norm of A acting l_p -> l_p. Exact (certified on
/// both sides) for p in {1, 2, inf}; for other p the upper bound is the
/// Riesz-Thorin interpolation bound ||A||_1^(1/p) ||A||_inf^(1-1/p) and the
/// lower bound is the best multistart ascent value, reported uncertified.
inline BoundPair operator_norm_bounds(const Eigen::MatrixXd& A, PExponent p,
                                      const OpNormOptions& opts = {}) {
  if (A.rows() == 0 || A.cols() == 0) {
    throw PreconditionError("operator_norm_bounds: empty matrix");
  }
  if (!A.allFinite()) {
    throw PreconditionError("operator_norm_bounds: entries must be finite");
  }
  if (p.value() == 1.0) return BoundPair::exact(detail::max_abs_col_sum(A));
  if (p.is_infinite()) return BoundPair::exact(detail::max_abs_row_sum(A));
  if (p.value() == 2.0) return BoundPair::exact(detail::spectral_norm(A));

  const double q = p.value();
  const double upper = std::pow(detail::max_abs_col_sum(A), 1.0 / q) *
                       std::pow(detail::max_abs_row_sum(A), 1.0 - 1.0 / q);
  const int n = static_cast<int>(A.cols());
  double lower = 0.0;
  for (int s = 0; s < opts.lowdisc_starts; ++s) {
    const std::vector<double> d = detail::halton_gaussian_direction(
        static_cast<std::uint64_t>(s), std::min(n, 20));
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) v(i) = d[static_cast<std::size_t>(i % 20)];
    lower = std::max(lower, detail::ascend_ratio(A, q, v, opts.ascent_iters));
  }
  detail::Rng rng(opts.seed);
  for (int s = 0; s < opts.random_starts; ++s) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.gaussian();
    lower = std::max(lower, detail::ascend_ratio(A, q, v, opts.ascent_iters));
  }
  lower = std::min(lower, upper);  // guard against rounding past the bound
  return BoundPair::checked(lower, upper, false, true);
}

}  // namespace jsum
