#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "jsum/errors.hpp"
#include "jsum/jvector.hpp"
#include "jsum/vec.hpp"

namespace jsum {

namespace detail {

/// Entries 0..horizon with the tail resolved, plus pairwise squared
/// difference and squared entry norms in the element's l_p norm.
struct ChainTables {
  std::vector<double> norm2;               // ||x_i||^2
  std::vector<std::vector<double>> diff2;  // ||x_i - x_j||^2, i < j
};

inline ChainTables chain_tables(const JVector& x, int horizon) {
  ChainTables t;
  const std::size_t h = static_cast<std::size_t>(horizon);
  std::vector<Vector> e;
  e.reserve(h + 1);
  for (std::size_t i = 0; i <= h; ++i) e.push_back(x.entry(i));
  t.norm2.resize(h + 1);
  t.diff2.assign(h + 1, std::vector<double>(h + 1, 0.0));
  for (std::size_t i = 0; i <= h; ++i) {
    const double n = lp_norm(e[i], x.p());
    t.norm2[i] = n * n;
    for (std::size_t j = i + 1; j <= h; ++j) {
      const double d = padded_diff_norm(e[i], e[j], x.p());
      t.diff2[i][j] = d * d;
    }
  }
  return t;
}

/// Largest chain value over all nonempty increasing chains in [0, horizon],
/// by dynamic programming over the first chain index:
///   W(j) = max(||x_j||^2, max_{j' > j} ||x_j - x_j'||^2 + W(j')).
inline double best_chain_value_dp(const JVector& x, int horizon) {
  const ChainTables t = chain_tables(x, horizon);
  const int h = horizon;
  std::vector<double> W(static_cast<std::size_t>(h) + 1, 0.0);
  double best = 0.0;
  for (int j = h; j >= 0; --j) {
    double w = t.norm2[static_cast<std::size_t>(j)];
    for (int j2 = j + 1; j2 <= h; ++j2) {
      w = std::max(w, t.diff2[static_cast<std::size_t>(j)]
                           [static_cast<std::size_t>(j2)] +
                          W[static_cast<std::size_t>(j2)]);
    }
    W[static_cast<std::size_t>(j)] = w;
    best = std::max(best, w);
  }
  return best;
}

}  // namespace detail

/// Value of one chain: sum of squared l_p norms of consecutive padded
/// differences plus the squared norm of the final entry. Entries beyond the
/// explicit list are resolved by the tail mode.
inline double chain_value(const JVector& x, const Chain& c, int horizon) {
  if (c.indices().back() > horizon) {
    throw PreconditionError("chain_value: chain index beyond horizon");
  }
  const std::vector<int>& idx = c.indices();
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
    const double d =
        padded_diff_norm(x.entry(static_cast<std::size_t>(idx[i])),
                         x.entry(static_cast<std::size_t>(idx[i + 1])), x.p());
    s += d * d;
  }
  const double tail =
      lp_norm(x.entry(static_cast<std::size_t>(idx.back())), x.p());
  return s + tail * tail;
}

/// Exhaustive maximum of chain_value over every nonempty increasing chain
/// inside [0, horizon]. Exponential; capped at horizon 16.
inline double enumerate_chains_oracle(const JVector& x, int horizon) {
  if (horizon < 0) {
    throw PreconditionError("enumerate_chains_oracle: negative horizon");
  }
  if (horizon > 16) {
    throw PreconditionError(
        "enumerate_chains_oracle: horizon above the enumeration cap of 16");
  }
  const detail::ChainTables t = detail::chain_tables(x, horizon);
  const int h = horizon;
  double best = 0.0;
  const std::uint32_t top = static_cast<std::uint32_t>(1)
                            << static_cast<std::uint32_t>(h + 1);
  for (std::uint32_t mask = 1; mask < top; ++mask) {
    double value = 0.0;
    int prev = -1;
    for (int i = 0; i <= h; ++i) {
      if ((mask >> static_cast<std::uint32_t>(i)) & 1u) {
        if (prev >= 0) {
          value += t.diff2[static_cast<std::size_t>(prev)]
                          [static_cast<std::size_t>(i)];
        }
        prev = i;
      }
    }
    value += t.norm2[static_cast<std::size_t>(prev)];
    best = std::max(best, value);
  }
  return best;
}

/// Chain-sup norm of a zero-tail element: sqrt(S / 2) with S the maximal
/// chain value. The chain horizon is one past the explicit support; entries
/// beyond it are zero, so longer chains cannot improve the value.
inline double j_norm(const JVector& x) {
  if (x.tail() != TailMode::kZero) {
    throw PreconditionError("j_norm: zero-tail input required (use k_norm)");
  }
  const int horizon = static_cast<int>(x.support_end()) + 1;
  return std::sqrt(detail::best_chain_value_dp(x, horizon) / 2.0);
}

/// Truncation-sup norm: for a zero tail this is the chain-sup norm itself;
/// for a constant tail the truncation values stabilize at the support end,
/// which is verified at runtime over a window of five truncations.
inline double k_norm(const JVector& x) {
  if (x.tail() == TailMode::kZero) return j_norm(x);
  const int N = static_cast<int>(x.support_end());
  const double value = j_norm(truncate(x, N));
  for (int n = N + 1; n <= N + 4; ++n) {
    const double v = j_norm(truncate(x, n));
    if (std::abs(v - value) > 1e-10 * std::max(1.0, value)) {
      throw InternalConsistencyError(
          "k_norm: truncation values failed to stabilize (" +
          std::to_string(value) + " vs " + std::to_string(v) + " at n=" +
          std::to_string(n) + ")");
    }
  }
  return value;
}

/// Limit of the entry norms: the l_p norm of the constant tail value, and 0
/// for a zero tail.
inline double omega_seminorm(const JVector& x) {
  if (x.tail() == TailMode::kZero) return 0.0;
  return lp_norm(x.tail_value(), x.p());
}

}  // namespace jsum
