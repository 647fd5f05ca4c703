#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jsum/bounds.hpp"
#include "jsum/detail/rng.hpp"
#include "jsum/errors.hpp"
#include "jsum/operator_norm.hpp"
#include "jsum/pexponent.hpp"
#include "jsum/subspace.hpp"
#include "jsum/vec.hpp"

namespace jsum {

/// Nested pair of subspaces of one l_p space.
struct SubspacePair {
  Subspace inner;
  Subspace outer;
  PExponent p;

  SubspacePair(Subspace inner_, Subspace outer_, PExponent p_)
      : inner(std::move(inner_)), outer(std::move(outer_)), p(p_) {
    if (inner.ambient_dim() != outer.ambient_dim()) {
      throw PreconditionError("subspace pair: ambient dimensions differ");
    }
    for (const Vector& b : inner.basis()) {
      if (!outer.contains(b, 1e-9)) {
        throw PreconditionError(
            "subspace pair: inner must be contained in outer (tol 1e-9)");
      }
    }
  }
};

/// Per-index weights f(i) > 0 against which extension norms are measured.
struct ApproximabilityProfile {
  std::vector<double> weights;

  explicit ApproximabilityProfile(std::vector<double> w)
      : weights(std::move(w)) {
    if (weights.empty()) {
      throw PreconditionError("profile: weights must be nonempty");
    }
    for (double v : weights) {
      if (!(v > 0.0)) {
        throw PreconditionError("profile: weights must be strictly positive");
      }
    }
  }
};

/// Budgets for the nonconvex searches. 64 low-discrepancy starts plus 16
/// seeded random starts keeps runs reproducible with reasonable coverage.
struct SearchOptions {
  int lowdisc_starts = 64;
  int random_starts = 16;
  int refine_iters = 200;
  std::uint64_t seed = 0;
  double tol = 1e-6;
  DistOptions dist = {};
};

namespace detail {

/// Seeded derivative-free descent: gaussian perturbations with adaptive
/// radius. Returns the best value; x is updated in place.
template <typename F>
double perturb_descend(const F& f, Eigen::VectorXd& x, double init_radius,
                       int iters, Rng& rng) {
  double best = f(x);
  double radius = init_radius;
  for (int it = 0; it < iters; ++it) {
    Eigen::VectorXd d(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) d(i) = rng.gaussian();
    const Eigen::VectorXd x_try = x + radius * d;
    const double v = f(x_try);
    if (v < best) {
      best = v;
      x = x_try;
      radius *= 1.5;
    } else {
      radius *= 0.7;
      if (radius < 1e-12) break;
    }
  }
  return best;
}

inline Vector normalize_lp(const Vector& v, PExponent p) {
  const double n = lp_norm(v, p);
  if (n == 0.0) throw PreconditionError("cannot normalize the zero vector");
  return scale(1.0 / n, v);
}

}  // namespace detail

struct InclinationResult {
  BoundPair bounds;
  Vector witness;  // unit vector of U realizing the certified upper bound
};

/// Inclination of U to V: the infimum of ||u - v||_p over unit u in U and
/// arbitrary v in V. At p = 2 this reduces to a symmetric eigenproblem and
/// both bounds are certified; otherwise the reported value is the best
/// multistart minimum (a certified upper bound, an uncertified lower one).
/// The search is built from the projector onto U, so the answer depends
/// only on the subspaces, not on their spanning lists.
inline InclinationResult inclination(const Subspace& U, const Subspace& V,
                                     PExponent p,
                                     const SearchOptions& opts = {}) {
  if (U.ambient_dim() != V.ambient_dim()) {
    throw PreconditionError("inclination: ambient dimensions differ");
  }
  const int n = static_cast<int>(U.ambient_dim());

  if (!p.is_infinite() && p.value() == 2.0) {
    const Eigen::MatrixXd& Q = U.orthonormal();
    const Eigen::MatrixXd R =
        Eigen::MatrixXd::Identity(n, n) - V.projector();
    const Eigen::MatrixXd M = Q.transpose() * R * Q;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(M);
    const Eigen::Index lo = 0;  // eigenvalues ascend
    const double delta = std::sqrt(std::max(0.0, eig.eigenvalues()(lo)));
    const Vector witness = from_eigen(Q * eig.eigenvectors().col(lo));
    return InclinationResult{BoundPair::checked(delta, delta, true, true),
                             witness};
  }

  const Eigen::MatrixXd P = U.projector();
  const auto objective = [&](const Eigen::VectorXd& raw) {
    const Eigen::VectorXd proj = P * raw;
    const Vector u = from_eigen(proj);
    const double nu = lp_norm(u, p);
    if (nu < 1e-12) return 1e100;  // degenerate direction
    return dist_to_subspace(scale(1.0 / nu, u), V, p, opts.dist);
  };

  double best = 1e100;
  Eigen::VectorXd best_x = Eigen::VectorXd::Zero(n);
  detail::Rng rng(opts.seed);
  const int total = opts.lowdisc_starts + opts.random_starts;
  for (int s = 0; s < total; ++s) {
    Eigen::VectorXd x(n);
    if (s < opts.lowdisc_starts) {
      const std::vector<double> d = detail::halton_gaussian_direction(
          static_cast<std::uint64_t>(s), std::min(n, 20));
      for (int i = 0; i < n; ++i) x(i) = d[static_cast<std::size_t>(i % 20)];
    } else {
      for (int i = 0; i < n; ++i) x(i) = rng.gaussian();
    }
    if ((P * x).norm() < 1e-9) continue;
    detail::Rng local(opts.seed ^ (0x9e3779b97f4a7c15ULL +
                                   static_cast<std::uint64_t>(s)));
    const double v =
        detail::perturb_descend(objective, x, 0.5, opts.refine_iters, local);
    if (v < best) {
      best = v;
      best_x = x;
    }
  }
  const Vector witness =
      detail::normalize_lp(from_eigen(P * best_x), p);
  // Evaluating the distance at the witness certifies the upper bound; the
  // same value doubles as the (uncertified) lower estimate.
  const double value = dist_to_subspace(witness, V, p, opts.dist);
  return InclinationResult{BoundPair::checked(value, value, false, true),
                           witness};
}

struct ExtensionResult {
  BoundPair bounds;
  Eigen::MatrixXd op;  // ambient x ambient; range inside outer, fixes inner
};

namespace detail {

/// Certified upper bound on the l_p operator norm.
inline double certified_opnorm_upper(const Eigen::MatrixXd& A, PExponent p) {
  return operator_norm_bounds(A, p).upper;
}

}  // namespace detail

/// Minimal l_p operator norm over linear maps of the ambient space into
/// `outer` that restrict to the identity on `inner`. The lower bound 1 is
/// certified (such a map fixes a unit vector); the upper bound is realized
/// by a concrete candidate operator whose certified norm bound is reported.
/// Candidates include the orthogonal projectors onto `inner` and onto every
/// prefix span of the outer basis containing `inner`, each refined by a
/// seeded local search over the interpolation constraint's null space, so
/// appending vectors to the outer basis never worsens the reported bound.
inline ExtensionResult min_extension_norm(const SubspacePair& pair,
                                          const SearchOptions& opts = {}) {
  const PExponent p = pair.p;
  const int n = static_cast<int>(pair.inner.ambient_dim());
  const Eigen::MatrixXd& Bin = pair.inner.matrix();
  // Minimal-Frobenius interpolant: the orthogonal projector onto inner.
  Eigen::MatrixXd best_op = pair.inner.projector();
  double best_upper = detail::certified_opnorm_upper(best_op, p);

  const Eigen::MatrixXd pinv_bin =
      Bin.completeOrthogonalDecomposition().pseudoInverse();
  const Eigen::MatrixXd ker =
      Eigen::MatrixXd::Identity(n, n) - Bin * pinv_bin;  // annihilates inner

  const std::size_t k = pair.outer.dim();
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<Vector> prefix(pair.outer.basis().begin(),
                               pair.outer.basis().begin() +
                                   static_cast<std::ptrdiff_t>(j));
    const Subspace span_j(prefix);
    bool contains_inner = true;
    for (const Vector& b : pair.inner.basis()) {
      if (!span_j.contains(b, 1e-9)) {
        contains_inner = false;
        break;
      }
    }
    if (!contains_inner) continue;

    const Eigen::MatrixXd Bj = span_j.matrix();
    const Eigen::MatrixXd pinv_bj =
        Bj.completeOrthogonalDecomposition().pseudoInverse();
    const int kj = static_cast<int>(j);

    // Feasible slice: u = Bj (C0 + W K) with C0 reproducing the identity on
    // inner and K the annihilator of inner. Any W gives a feasible map.
    const Eigen::MatrixXd C0 = pinv_bj * Bin * pinv_bin;
    const auto op_of = [&](const Eigen::VectorXd& w) {
      Eigen::MatrixXd W =
          Eigen::Map<const Eigen::MatrixXd>(w.data(), kj, n);
      return Eigen::MatrixXd(Bj * (C0 + W * ker));
    };
    const auto objective = [&](const Eigen::VectorXd& w) {
      return detail::certified_opnorm_upper(op_of(w), p);
    };

    // Starts: the inner projector (W = 0 reproduces it up to the feasible
    // slice) and the orthogonal projector onto the prefix span.
    std::vector<Eigen::VectorXd> starts;
    starts.push_back(Eigen::VectorXd::Zero(kj * n));
    {
      const Eigen::MatrixXd Wp = pinv_bj * span_j.projector();
      Eigen::VectorXd w(kj * n);
      Eigen::Map<Eigen::MatrixXd>(w.data(), kj, n) = Wp;
      starts.push_back(w);
    }
    for (std::size_t s = 0; s < starts.size(); ++s) {
      Eigen::VectorXd w = starts[s];
      detail::Rng rng(opts.seed ^ (j * 1315423911ULL + s));
      const double v = detail::perturb_descend(objective, w, 0.25,
                                               opts.refine_iters, rng);
      if (v < best_upper) {
        best_upper = v;
        best_op = op_of(w);
      }
    }
  }

  const double lower = 1.0;
  const double upper = std::max(best_upper, lower - 1e-12);
  return ExtensionResult{BoundPair::checked(lower, upper, true, true),
                         best_op};
}

struct UniformReport {
  std::vector<ExtensionResult> per_pair;
  double sup_upper = 0.0;
  /// True when every pair's certified upper bound is at most lambda; a
  /// negative verdict is never certified from finitely many pairs.
  bool uniform_certified = false;
  double lambda = 0.0;
  std::vector<double> lower_trend;
};

inline UniformReport uniform_approximability_report(
    const std::vector<SubspacePair>& pairs, const SearchOptions& opts = {}) {
  if (pairs.empty()) {
    throw PreconditionError("uniform report: empty pair list");
  }
  UniformReport rep;
  bool all_certified = true;
  for (const SubspacePair& pair : pairs) {
    ExtensionResult r = min_extension_norm(pair, opts);
    rep.sup_upper = std::max(rep.sup_upper, r.bounds.upper);
    rep.lower_trend.push_back(r.bounds.lower);
    all_certified = all_certified && r.bounds.certified_upper;
    rep.per_pair.push_back(std::move(r));
  }
  rep.lambda = rep.sup_upper;
  rep.uniform_certified = all_certified;
  return rep;
}

struct FApproximabilityResult {
  std::vector<double> ratios;  // upper_i / f(i)
  double constant = 0.0;       // max ratio
  bool certified = false;
  std::vector<ExtensionResult> per_pair;
};

inline FApproximabilityResult f_approximability_check(
    const std::vector<SubspacePair>& pairs,
    const ApproximabilityProfile& profile, const SearchOptions& opts = {}) {
  if (pairs.empty()) {
    throw PreconditionError("f-approximability: empty pair list");
  }
  if (pairs.size() != profile.weights.size()) {
    throw PreconditionError(
        "f-approximability: pair and weight counts differ");
  }
  FApproximabilityResult res;
  bool all_certified = true;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ExtensionResult r = min_extension_norm(pairs[i], opts);
    res.ratios.push_back(r.bounds.upper / profile.weights[i]);
    res.constant = std::max(res.constant, res.ratios.back());
    all_certified = all_certified && r.bounds.certified_upper;
    res.per_pair.push_back(std::move(r));
  }
  res.certified = all_certified;
  return res;
}

namespace detail {

/// Certified bound on ||M||_{2 -> q} from exact endpoints: the spectral
/// norm and the maximal row Euclidean norm interpolate for q >= 2; below 2
/// the bound falls back to the norm-equivalence factor on the output side.
inline double mixed_norm_from_l2_upper(const Eigen::MatrixXd& M, double q) {
  const double s2 = spectral_norm(M);
  if (q == 2.0) return s2;
  const double rowmax = M.rowwise().norm().maxCoeff();
  if (std::isinf(q)) return rowmax;
  if (q > 2.0) {
    return std::pow(s2, 2.0 / q) * std::pow(rowmax, 1.0 - 2.0 / q);
  }
  const double rows = static_cast<double>(M.rows());
  return std::pow(rows, 1.0 / q - 0.5) * s2;
}

}  // namespace detail

/// Bounds on the Banach-Mazur distance from E (with the ambient l_p norm)
/// to the Euclidean space of the same dimension. The candidate map reads
/// coordinates in a Euclidean-orthonormal basis of E; its mixed-norm bounds
/// give the upper estimate. Heuristic (uncertified upper) away from p = 2.
inline BoundPair bm_distance_to_l2(const Subspace& E, PExponent p,
                                   const SearchOptions& opts = {}) {
  (void)opts;
  if (!p.is_infinite() && p.value() == 2.0) return BoundPair::exact(1.0);
  if (E.dim() == 1) {
    // One-dimensional normed spaces are mutually isometric.
    return BoundPair::checked(1.0, 1.0, true, false);
  }
  const Eigen::MatrixXd& Q = E.orthonormal();
  const double pv = p.value();
  const double pdual = dual_exponent(p).value();
  // T = Q^T reads coordinates: ||T||_{p->2} = ||Q||_{2->p'} by duality;
  // T^{-1} = Q maps coordinates back: ||Q||_{2->p}.
  const double t_norm = detail::mixed_norm_from_l2_upper(Q, pdual);
  const double tinv_norm = detail::mixed_norm_from_l2_upper(Q, pv);
  const double upper = std::max(1.0, t_norm * tinv_norm);
  return BoundPair::checked(1.0, upper, true, false);
}

/// Heuristic spreading family: W_i is spanned by i normalized vectors, each
/// constant (with seeded signs) on its own coordinate block, block widths
/// growing with i as the coordinate budget allows. Supports are pairwise
/// disjoint across the whole family. Deterministic per seed.
inline std::vector<Subspace> rosenthal_like_subspaces(int i_max, int N,
                                                      PExponent p,
                                                      std::uint64_t seed) {
  if (i_max < 1) {
    throw PreconditionError("spreading family: need i_max >= 1");
  }
  const long blocks = static_cast<long>(i_max) * (i_max + 1) / 2;
  if (blocks > N) {
    throw PreconditionError(
        "spreading family: " + std::to_string(blocks) +
        " blocks do not fit in " + std::to_string(N) + " coordinates");
  }
  // Largest lambda with sum_i i * max(1, floor(lambda * i)) <= N.
  const auto total_for = [&](double lambda) {
    long t = 0;
    for (int i = 1; i <= i_max; ++i) {
      t += static_cast<long>(i) *
           std::max(1L, static_cast<long>(std::floor(lambda * i)));
    }
    return t;
  };
  double lo = 0.0, hi = static_cast<double>(N);
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (total_for(mid) <= N) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  detail::Rng rng(seed);
  std::vector<Subspace> family;
  int cursor = 0;
  for (int i = 1; i <= i_max; ++i) {
    const int width =
        static_cast<int>(std::max(1L, static_cast<long>(std::floor(lo * i))));
    std::vector<Vector> basis;
    for (int j = 0; j < i; ++j) {
      std::vector<double> coords(static_cast<std::size_t>(N), 0.0);
      const double mag =
          p.is_infinite()
              ? 1.0
              : std::pow(static_cast<double>(width), -1.0 / p.value());
      for (int t = 0; t < width; ++t) {
        coords[static_cast<std::size_t>(cursor + t)] =
            (rng.uniform() < 0.5 ? -mag : mag);
      }
      cursor += width;
      basis.push_back(Vector(std::move(coords)));
    }
    family.push_back(Subspace(std::move(basis)));
  }
  return family;
}

}  // namespace jsum
