#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jsum/errors.hpp"
#include "jsum/jvector.hpp"
#include "jsum/pexponent.hpp"

namespace jsum {

/// Inclusive index interval [first, last].
struct IndexRange {
  int first = 0;
  int last = 0;
};

/// Payload of one hump: a constant plateau amplitude * e_coordinate across
/// the hump's active range. coordinate is 1-based; 0 picks the range start.
struct HumpSpec {
  int coordinate = 0;
  double amplitude = 1.0;
};

/// Vectors with disjoint, advancing supports: hump k is zero outside its
/// active range and carries a constant coordinate plateau inside it. Within
/// each range the chain through the flanking zero indices realizes the
/// hump's full truncation-sup norm, which is what the concatenated-chain
/// lower estimates rely on.
class GlidingHumpFamily {
 public:
  GlidingHumpFamily(std::vector<IndexRange> ranges,
                    std::vector<HumpSpec> payloads, PExponent p)
      : ranges_(std::move(ranges)), p_(p) {
    if (ranges_.empty() || payloads.size() != ranges_.size()) {
      throw PreconditionError(
          "gliding humps: need one payload per active range");
    }
    int prev_end = 0;
    for (std::size_t k = 0; k < ranges_.size(); ++k) {
      const IndexRange& r = ranges_[k];
      if (r.first < 1 || r.last < r.first) {
        throw PreconditionError("gliding humps: malformed active range");
      }
      if (k > 0 && r.first <= prev_end) {
        throw PreconditionError("gliding humps: active ranges overlap");
      }
      prev_end = r.last;
      HumpSpec spec = payloads[k];
      if (spec.coordinate == 0) spec.coordinate = r.first;
      if (spec.coordinate < 1 || spec.coordinate > r.first) {
        throw PreconditionError(
            "gliding humps: payload coordinate must fit every entry of its "
            "range (1 <= coordinate <= range start)");
      }
      humps_.push_back(build_hump(r, spec, p));
    }
  }

  const std::vector<JVector>& humps() const { return humps_; }
  const std::vector<IndexRange>& active_ranges() const { return ranges_; }
  PExponent p() const { return p_; }

  /// One past the last active index; chains above it add nothing.
  int horizon() const { return ranges_.back().last + 1; }

  /// Sum of coefficient * hump over the family.
  JVector combine(const std::vector<double>& coeffs) const {
    if (coeffs.size() != humps_.size()) {
      throw PreconditionError("gliding humps: coefficient count mismatch");
    }
    return jvec_lincomb(coeffs, humps_);
  }

 private:
  static JVector build_hump(const IndexRange& r, const HumpSpec& spec,
                            PExponent p) {
    std::vector<Vector> entries;
    entries.reserve(static_cast<std::size_t>(r.last) + 1);
    for (int n = 0; n <= r.last; ++n) {
      if (n < r.first) {
        entries.push_back(Vector::zeros(static_cast<std::size_t>(n)));
      } else {
        entries.push_back(
            scale(spec.amplitude,
                  Vector::unit(static_cast<std::size_t>(n),
                               static_cast<std::size_t>(spec.coordinate))));
      }
    }
    return JVector(p, std::move(entries), TailMode::kZero);
  }

  std::vector<IndexRange> ranges_;
  PExponent p_;
  std::vector<JVector> humps_;
};

/// Builds a family from a flat boundary list [s1, e1, s2, e2, ...] pairing
/// into inclusive active ranges, one payload per range.
inline GlidingHumpFamily gliding_hump_family(
    const std::vector<int>& block_boundaries,
    const std::vector<HumpSpec>& payloads, PExponent p) {
  if (block_boundaries.empty() || block_boundaries.size() % 2 != 0) {
    throw PreconditionError(
        "gliding humps: boundaries must pair into [start, end] ranges");
  }
  for (std::size_t i = 1; i < block_boundaries.size(); ++i) {
    if (block_boundaries[i] < block_boundaries[i - 1]) {
      throw PreconditionError("gliding humps: boundaries must be sorted");
    }
  }
  std::vector<IndexRange> ranges;
  for (std::size_t i = 0; i < block_boundaries.size(); i += 2) {
    ranges.push_back(IndexRange{block_boundaries[i],
                                block_boundaries[i + 1]});
  }
  return GlidingHumpFamily(std::move(ranges), payloads, p);
}

/// r unit humps on single-index ranges separated by one free index each:
/// ranges [1,1], [3,3], ..., each on a fresh coordinate. The workhorse
/// family for the growth experiments.
inline GlidingHumpFamily unit_hump_family(int r, PExponent p) {
  if (r < 1) throw PreconditionError("unit_hump_family: need r >= 1");
  std::vector<IndexRange> ranges;
  std::vector<HumpSpec> payloads;
  for (int k = 0; k < r; ++k) {
    const int idx = 2 * k + 1;
    ranges.push_back(IndexRange{idx, idx});
    payloads.push_back(HumpSpec{idx, 1.0});
  }
  return GlidingHumpFamily(std::move(ranges), std::move(payloads), p);
}

}  // namespace jsum
