#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jsum/detail/simplex.hpp"
#include "jsum/errors.hpp"
#include "jsum/pexponent.hpp"
#include "jsum/vec.hpp"

namespace jsum {

inline Eigen::VectorXd to_eigen(const Vector& v) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(v.ambient_dim()));
  for (std::size_t i = 0; i < v.ambient_dim(); ++i) {
    x(static_cast<Eigen::Index>(i)) = v[i];
  }
  return x;
}

inline Vector from_eigen(const Eigen::VectorXd& x) {
  return Vector(std::vector<double>(x.data(), x.data() + x.size()));
}

/// Finite-dimensional subspace of a coordinate space, given by a spanning
/// list. A rank-deficient spanning list is rejected at construction rather
/// than silently repaired.
class Subspace {
 public:
  explicit Subspace(std::vector<Vector> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) {
      throw PreconditionError("subspace: spanning list must be nonempty");
    }
    ambient_dim_ = basis_.front().ambient_dim();
    if (ambient_dim_ == 0) {
      throw PreconditionError("subspace: ambient dimension must be positive");
    }
    for (const Vector& b : basis_) {
      if (b.ambient_dim() != ambient_dim_) {
        throw PreconditionError("subspace: basis vectors have unequal dims");
      }
    }
    if (basis_.size() > ambient_dim_) {
      throw PreconditionError("subspace: more basis vectors than dimensions");
    }
    matrix_.resize(static_cast<Eigen::Index>(ambient_dim_),
                   static_cast<Eigen::Index>(basis_.size()));
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      matrix_.col(static_cast<Eigen::Index>(j)) = to_eigen(basis_[j]);
    }
    // Independence check: smallest singular value relative to the largest,
    // tolerance 1e-10.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(matrix_,
                                          Eigen::ComputeThinU |
                                              Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-10 * sv(0)) {
      throw PreconditionError(
          "subspace: spanning list is rank-deficient (tolerance 1e-10)");
    }
    orthonormal_ = svd.matrixU();
  }

  static Subspace coordinate_span(std::size_t ambient, std::size_t count) {
    std::vector<Vector> b;
    b.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
      b.push_back(Vector::unit(ambient, i));
    }
    return Subspace(std::move(b));
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  /// ambient_dim x dim matrix whose columns are the spanning vectors.
  const Eigen::MatrixXd& matrix() const { return matrix_; }

  /// Euclidean-orthonormal basis (thin factor); spans the same subspace.
  const Eigen::MatrixXd& orthonormal() const { return orthonormal_; }

  /// Euclidean-orthogonal projector onto the subspace. Depends only on the
  /// subspace, not on the spanning list.
  Eigen::MatrixXd projector() const {
    return orthonormal_ * orthonormal_.transpose();
  }

  /// Euclidean membership test.
  bool contains(const Vector& v, double tol) const {
    const Eigen::VectorXd x = to_eigen(v);
    const Eigen::VectorXd r = x - projector() * x;
    return r.norm() <= tol * std::max(1.0, x.norm());
  }

 private:
  std::vector<Vector> basis_;
  std::size_t ambient_dim_ = 0;
  Eigen::MatrixXd matrix_;
  Eigen::MatrixXd orthonormal_;
};

struct DistOptions {
  double tol = 1e-8;           // convex solve target
  int max_iter = 10000;        // iteration budget
  double rel_improve = 1e-12;  // stopping rule on relative improvement
};

namespace detail {

/// min over c of ||v - B c||_1 via the standard LP reduction.
inline double dist_l1_lp(const Eigen::VectorXd& v, const Eigen::MatrixXd& B) {
  const int n = static_cast<int>(v.size());
  const int k = static_cast<int>(B.cols());
  const int nv = 2 * k + n;  // c+ , c- , t
  Eigen::MatrixXd A(2 * n, nv);
  Eigen::VectorXd b(2 * n), cost = Eigen::VectorXd::Zero(nv);
  A.setZero();
  A.block(0, 0, n, k) = -B;
  A.block(0, k, n, k) = B;
  A.block(0, 2 * k, n, n) = -Eigen::MatrixXd::Identity(n, n);
  b.head(n) = -v;
  A.block(n, 0, n, k) = B;
  A.block(n, k, n, k) = -B;
  A.block(n, 2 * k, n, n) = -Eigen::MatrixXd::Identity(n, n);
  b.tail(n) = v;
  cost.tail(n).setOnes();
  return solve_lp(A, b, cost).objective;
}

/// min over c of ||v - B c||_inf via the Chebyshev LP reduction.
inline double dist_linf_lp(const Eigen::VectorXd& v,
                           const Eigen::MatrixXd& B) {
  const int n = static_cast<int>(v.size());
  const int k = static_cast<int>(B.cols());
  const int nv = 2 * k + 1;  // c+ , c- , t
  Eigen::MatrixXd A(2 * n, nv);
  Eigen::VectorXd b(2 * n), cost = Eigen::VectorXd::Zero(nv);
  A.setZero();
  A.block(0, 0, n, k) = -B;
  A.block(0, k, n, k) = B;
  A.col(2 * k).head(n).setConstant(-1.0);
  b.head(n) = -v;
  A.block(n, 0, n, k) = B;
  A.block(n, k, n, k) = -B;
  A.col(2 * k).tail(n).setConstant(-1.0);
  b.tail(n) = v;
  cost(2 * k) = 1.0;
  return solve_lp(A, b, cost).objective;
}

/// Smooth convex case 1 < p < inf: iteratively reweighted least squares on
/// the coefficients, with backtracking on the true objective.
inline double dist_smooth_irls(const Eigen::VectorXd& v,
                               const Eigen::MatrixXd& B, double p,
                               const DistOptions& opts) {
  const double scale = std::max(1.0, v.lpNorm<Eigen::Infinity>());
  const double eps = 1e-14 * scale;
  const auto objective = [&](const Eigen::VectorXd& c) {
    Eigen::VectorXd r = v - B * c;
    double m = r.lpNorm<Eigen::Infinity>();
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (Eigen::Index i = 0; i < r.size(); ++i) {
      s += std::pow(std::abs(r(i)) / m, p);
    }
    return m * std::pow(s, 1.0 / p);
  };

  Eigen::VectorXd c = B.colPivHouseholderQr().solve(v);
  double f = objective(c);
  for (int it = 0; it < opts.max_iter; ++it) {
    Eigen::VectorXd r = v - B * c;
    Eigen::VectorXd w(r.size());
    for (Eigen::Index i = 0; i < r.size(); ++i) {
      w(i) = std::pow(std::max(std::abs(r(i)), eps), p - 2.0);
    }
    const Eigen::VectorXd sw = w.cwiseSqrt();
    const Eigen::MatrixXd Bw = sw.asDiagonal() * B;
    const Eigen::VectorXd vw = sw.asDiagonal() * v;
    Eigen::VectorXd c_next = Bw.colPivHouseholderQr().solve(vw);

    // Backtrack toward the previous iterate until the true objective
    // decreases (full IRLS steps can overshoot for p > 2).
    double alpha = 1.0;
    Eigen::VectorXd c_try = c_next;
    double f_try = objective(c_try);
    for (int bt = 0; bt < 40 && f_try > f; ++bt) {
      alpha *= 0.5;
      c_try = c + alpha * (c_next - c);
      f_try = objective(c_try);
    }
    double improve = 0.0;
    if (f_try <= f) {
      improve = f - f_try;
      c = c_try;
      f = f_try;
    }
    if (improve <= opts.rel_improve * std::max(1.0, f)) {
      return f;
    }
  }
  throw UnconvergedError(
      "dist_to_subspace: no convergence within iteration budget", f);
}

}  // namespace detail

/// Distance in the l_p norm from v to the subspace V: min over coefficients
/// of ||v - sum c_j b_j||_p. Exact LP reduction at the kinked exponents
/// p = 1 and p = inf; smooth convex descent otherwise.
inline double dist_to_subspace(const Vector& v, const Subspace& V,
                               PExponent p, const DistOptions& opts = {}) {
  if (v.ambient_dim() != V.ambient_dim()) {
    throw PreconditionError("dist_to_subspace: dimension mismatch");
  }
  if (!(opts.tol > 0.0)) {
    throw PreconditionError("dist_to_subspace: tol must be > 0");
  }
  const Eigen::VectorXd x = to_eigen(v);
  if (p.is_infinite()) return detail::dist_linf_lp(x, V.matrix());
  if (p.value() == 1.0) return detail::dist_l1_lp(x, V.matrix());
  if (p.value() == 2.0) {
    // First IRLS iterate is already the exact least-squares solution.
    return detail::dist_smooth_irls(x, V.matrix(), 2.0, opts);
  }
  return detail::dist_smooth_irls(x, V.matrix(), p.value(), opts);
}

}  // namespace jsum
