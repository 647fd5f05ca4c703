#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "jsum/errors.hpp"
#include "jsum/pexponent.hpp"
#include "jsum/vec.hpp"

namespace jsum {

/// Tail behaviour of a finitely presented sequence: identically zero past
/// the last explicit entry, or constant (the last explicit entry repeats,
/// zero-padded into each larger space).
enum class TailMode { kZero, kConstant };

/// Finitely presented element of a nested-space sequence: entry i lives in
/// the i-dimensional coordinate space (entry 0 is the empty vector), plus a
/// tail mode. The nesting of the spaces is structural: comparing entries of
/// different index zero-pads the shorter one.
class JVector {
 public:
  JVector(PExponent p, std::vector<Vector> entries, TailMode tail)
      : p_(p), entries_(std::move(entries)), tail_(tail) {
    if (entries_.empty()) {
      throw PreconditionError("jvector: needs at least the index-0 entry");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].ambient_dim() != i) {
        throw PreconditionError("jvector: entry " + std::to_string(i) +
                                " must have dimension " + std::to_string(i));
      }
    }
  }

  static JVector zero(PExponent p) {
    return JVector(p, std::vector<Vector>{Vector()}, TailMode::kZero);
  }

  PExponent p() const { return p_; }
  TailMode tail() const { return tail_; }

  /// Index of the last explicit entry.
  std::size_t support_end() const { return entries_.size() - 1; }

  const std::vector<Vector>& explicit_entries() const { return entries_; }

  /// The constant tail value (the last explicit entry).
  const Vector& tail_value() const {
    if (tail_ != TailMode::kConstant) {
      throw PreconditionError("jvector: no constant tail");
    }
    return entries_.back();
  }

  /// Entry at any index, resolving the tail mode and padding as needed.
  Vector entry(std::size_t i) const {
    if (i < entries_.size()) return entries_[i];
    if (tail_ == TailMode::kZero) return Vector::zeros(i);
    return zero_pad(entries_.back(), i);
  }

  bool is_zero() const {
    for (const Vector& e : entries_) {
      for (double c : e.coords()) {
        if (c != 0.0) return false;
      }
    }
    return true;
  }

 private:
  PExponent p_;
  std::vector<Vector> entries_;
  TailMode tail_;
};

/// Exact equality as sequence-space elements (ignores how many trailing
/// entries are spelled out explicitly).
inline bool same_element(const JVector& a, const JVector& b) {
  if (a.p() != b.p()) return false;
  const std::size_t top = std::max(a.support_end(), b.support_end()) + 1;
  for (std::size_t i = 0; i <= top; ++i) {
    if (a.entry(i) != b.entry(i)) return false;
  }
  return true;
}

/// Strictly increasing list of non-negative indices over which chain values
/// are evaluated.
class Chain {
 public:
  explicit Chain(std::vector<int> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) {
      throw PreconditionError("chain: must be nonempty");
    }
    if (indices_.front() < 0) {
      throw PreconditionError("chain: indices must be >= 0");
    }
    for (std::size_t i = 1; i < indices_.size(); ++i) {
      if (indices_[i] <= indices_[i - 1]) {
        throw PreconditionError("chain: indices must be strictly increasing");
      }
    }
  }

  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }

 private:
  std::vector<int> indices_;
};

/// Keeps entries up to index n and zeroes everything beyond; a constant
/// tail supplies the entries between the explicit ones and n.
inline JVector truncate(const JVector& x, int n) {
  if (n < 0) throw PreconditionError("truncate: n must be >= 0");
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t keep = std::min(nn, x.support_end());
  std::vector<Vector> entries;
  entries.reserve(nn + 1);
  for (std::size_t i = 0; i <= keep; ++i) entries.push_back(x.entry(i));
  if (x.tail() == TailMode::kConstant) {
    for (std::size_t i = keep + 1; i <= nn; ++i) entries.push_back(x.entry(i));
  }
  return JVector(x.p(), std::move(entries), TailMode::kZero);
}

/// Entrywise linear combination; tails combine linearly, so the result has
/// a constant tail exactly when some input does.
inline JVector jvec_lincomb(const std::vector<double>& coeffs,
                            const std::vector<JVector>& xs) {
  if (coeffs.size() != xs.size() || xs.empty()) {
    throw PreconditionError("jvec_lincomb: needs matching nonempty lists");
  }
  const PExponent p = xs.front().p();
  bool constant_tail = false;
  std::size_t top = 0;
  for (const JVector& x : xs) {
    if (x.p() != p) {
      throw PreconditionError("jvec_lincomb: mixed l_p exponents");
    }
    constant_tail = constant_tail || x.tail() == TailMode::kConstant;
    top = std::max(top, x.support_end());
  }
  std::vector<Vector> entries;
  entries.reserve(top + 1);
  for (std::size_t i = 0; i <= top; ++i) {
    Vector acc = Vector::zeros(i);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      acc = add_scaled(acc, coeffs[k], xs[k].entry(i));
    }
    entries.push_back(std::move(acc));
  }
  return JVector(p, std::move(entries),
                 constant_tail ? TailMode::kConstant : TailMode::kZero);
}

/// Canonical tail vector: zero before index i, then the i-th unit
/// coordinate at every index from i on (constant tail). 1 <= i <= N.
inline JVector canonical_f(int i, int N, PExponent p) {
  if (i < 1 || i > N) {
    throw PreconditionError("canonical_f: need 1 <= i <= N");
  }
  std::vector<Vector> entries;
  entries.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    entries.push_back(n < i ? Vector::zeros(static_cast<std::size_t>(n))
                            : Vector::unit(static_cast<std::size_t>(n),
                                           static_cast<std::size_t>(i)));
  }
  return JVector(p, std::move(entries), TailMode::kConstant);
}

/// Canonical basis vector: single non-zero entry e_i at index n, zero tail.
/// 1 <= i <= n.
inline JVector canonical_basis_fn(int i, int n, PExponent p) {
  if (i < 1 || i > n) {
    throw PreconditionError("canonical_basis_fn: need 1 <= i <= n");
  }
  std::vector<Vector> entries;
  entries.reserve(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m < n; ++m) {
    entries.push_back(Vector::zeros(static_cast<std::size_t>(m)));
  }
  entries.push_back(Vector::unit(static_cast<std::size_t>(n),
                                 static_cast<std::size_t>(i)));
  return JVector(p, std::move(entries), TailMode::kZero);
}

/// Coordinates of a zero-tail element in the canonical basis: one triple
/// (i, n, a) per non-zero coordinate a of entry n.
inline std::vector<std::tuple<int, int, double>> basis_coordinates(
    const JVector& x) {
  if (x.tail() != TailMode::kZero) {
    throw PreconditionError("basis_coordinates: zero-tail input required");
  }
  std::vector<std::tuple<int, int, double>> out;
  for (std::size_t n = 1; n <= x.support_end(); ++n) {
    const Vector e = x.entry(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] != 0.0) {
        out.emplace_back(static_cast<int>(i) + 1, static_cast<int>(n), e[i]);
      }
    }
  }
  return out;
}

}  // namespace jsum
