#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "jsum/errors.hpp"

namespace jsum::detail {

struct LpSolution {
  Eigen::VectorXd x;
  double objective = 0.0;
};

/// Dense two-phase primal simplex for
///     minimize c.x  subject to  A x <= b,  x >= 0.
/// Bland's rule throughout, so the method terminates on degenerate
/// problems. Intended for the small LPs arising from l1 / l_inf distance
/// reductions; throws on infeasible or unbounded inputs.
class Simplex {
 public:
  Simplex(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
          const Eigen::VectorXd& c)
      : m_(static_cast<int>(A.rows())), n_(static_cast<int>(A.cols())) {
    if (b.size() != m_ || c.size() != n_) {
      throw PreconditionError("simplex: inconsistent dimensions");
    }
    // Rows become  A x + s = b  with s >= 0; rows with b < 0 are negated
    // first, which flips the slack sign and requires an artificial there.
    std::vector<int> art_rows;
    for (int i = 0; i < m_; ++i) {
      if (b(i) < 0.0) art_rows.push_back(i);
    }
    n_art_ = static_cast<int>(art_rows.size());
    n_total_ = n_ + m_ + n_art_;
    T_.setZero(m_ + 1, n_total_ + 1);
    basis_.assign(static_cast<std::size_t>(m_), -1);

    int art = 0;
    for (int i = 0; i < m_; ++i) {
      const double sgn = b(i) < 0.0 ? -1.0 : 1.0;
      for (int j = 0; j < n_; ++j) T_(i, j) = sgn * A(i, j);
      T_(i, n_ + i) = sgn;  // slack
      T_(i, n_total_) = sgn * b(i);
      if (b(i) < 0.0) {
        T_(i, n_ + m_ + art) = 1.0;
        basis_[static_cast<std::size_t>(i)] = n_ + m_ + art;
        ++art;
      } else {
        basis_[static_cast<std::size_t>(i)] = n_ + i;
      }
    }
    cost_ = c;
  }

  LpSolution solve() {
    if (n_art_ > 0) {
      // Phase 1: minimize the sum of artificials.
      Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n_total_);
      for (int j = n_ + m_; j < n_total_; ++j) phase1(j) = 1.0;
      load_objective(phase1);
      run();
      if (T_(m_, n_total_) < -kTol) {
        throw PreconditionError("simplex: infeasible constraints");
      }
      drive_out_artificials();
      first_allowed_ = n_ + m_;  // artificials may not re-enter
    }
    Eigen::VectorXd full = Eigen::VectorXd::Zero(n_total_);
    full.head(n_) = cost_;
    load_objective(full);
    run();

    LpSolution sol;
    sol.x = Eigen::VectorXd::Zero(n_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < n_) {
        sol.x(basis_[static_cast<std::size_t>(i)]) = T_(i, n_total_);
      }
    }
    sol.objective = cost_.dot(sol.x);
    return sol;
  }

 private:
  static constexpr double kTol = 1e-9;

  void load_objective(const Eigen::VectorXd& obj) {
    for (int j = 0; j < n_total_; ++j) T_(m_, j) = obj(j);
    T_(m_, n_total_) = 0.0;
    // Eliminate basic columns from the objective row.
    for (int i = 0; i < m_; ++i) {
      const int jb = basis_[static_cast<std::size_t>(i)];
      const double coeff = T_(m_, jb);
      if (coeff != 0.0) T_.row(m_) -= coeff * T_.row(i);
    }
  }

  void run() {
    const long max_pivots = 200000;
    for (long iter = 0; iter < max_pivots; ++iter) {
      // Bland: entering variable = lowest-index column with negative
      // reduced cost.
      int enter = -1;
      for (int j = 0; j < limit_columns(); ++j) {
        if (T_(m_, j) < -kTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;  // optimal
      // Ratio test, lowest basis index on ties.
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < m_; ++i) {
        if (T_(i, enter) > kTol) {
          const double ratio = T_(i, n_total_) / T_(i, enter);
          if (leave < 0 || ratio < best - kTol ||
              (ratio < best + kTol &&
               basis_[static_cast<std::size_t>(i)] <
                   basis_[static_cast<std::size_t>(leave)])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) {
        throw PreconditionError("simplex: objective unbounded below");
      }
      pivot(leave, enter);
    }
    throw InternalConsistencyError("simplex: pivot budget exhausted");
  }

  int limit_columns() const {
    return first_allowed_ > 0 ? first_allowed_ : n_total_;
  }

  void pivot(int row, int col) {
    T_.row(row) /= T_(row, col);
    for (int i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = T_(i, col);
      if (f != 0.0) T_.row(i) -= f * T_.row(row);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < n_ + m_) continue;
      int col = -1;
      for (int j = 0; j < n_ + m_; ++j) {
        if (std::abs(T_(i, j)) > kTol) {
          col = j;
          break;
        }
      }
      if (col >= 0) pivot(i, col);
      // Otherwise the row is redundant (all-zero); the artificial stays
      // basic at value zero and never re-enters with a nonzero value.
    }
  }

  int m_, n_, n_art_ = 0, n_total_ = 0;
  int first_allowed_ = 0;
  Eigen::MatrixXd T_;
  Eigen::VectorXd cost_;
  std::vector<int> basis_;
};

inline LpSolution solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                           const Eigen::VectorXd& c) {
  return Simplex(A, b, c).solve();
}

}  // namespace jsum::detail
