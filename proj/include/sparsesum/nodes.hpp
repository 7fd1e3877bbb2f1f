#pragma once

// Node-selection plans.
//
//   q_sequence    geometric nodes n_j = floor(q^{j-1}), falling back to j while
//                 the geometric value has not yet overtaken the index.
//   hybrid_nodes  equal-spaced nodes over a flat head [1, N0], unit steps until
//                 the growth ratio takes effect, then a geometric tail to N.
//   split_nodes   two regions around a singular index N0, with nodes packed
//                 densely on both sides of it.

#include <cstdint>
#include <vector>

#include "sparsesum/transform.hpp"

namespace sparsesum {

struct QSequenceSpec {
  double q;
  std::int64_t count;
};

struct HybridSpec {
  std::int64_t flat_end;  // N0
  std::int64_t cutoff;    // N
  std::int64_t count;     // M

  /// Parameters for f(n) = 1/((n pi/a)^2 + 1):
  /// N0 = floor(4a/pi) + 1, N = max(300, floor(300 a/pi)).
  static HybridSpec for_lorentzian(double a, std::int64_t count = 151);

  /// min(N0, floor(4M/5))
  std::int64_t flat_count() const noexcept;
};

struct SplitSpec {
  std::int64_t singular_index;  // N0
  std::int64_t cutoff;          // N
  double dense_ratio = 1.1;
  std::int64_t count = 151;

  /// Parameters for f(n) = 1/((n pi/a)^2 - 1): N0 = floor(a/pi), N = max(1, N0) * 10^4.
  static SplitSpec for_resonant(double a, std::int64_t count = 151);
};

/// Region 1 is summed term by term when N0 is at most this.
inline constexpr std::int64_t kDirectRegionLimit = 301;

/// Raw q-sequence values, strictly ascending, any length >= 1. Throws
/// Error{InvalidRatio} for q <= 1.
std::vector<std::int64_t> q_sequence_values(double q, std::int64_t count);

/// Throws Error{InvalidCount} for even or < 3 counts, Error{InvalidRatio} for q <= 1.
NodeSequence q_sequence(const QSequenceSpec& spec);

/// Throws Error{InvalidCutoff} if N <= N0, Error{InvalidCount} for bad M and
/// Error{BudgetExhausted} if the unit-step stretch uses up all M nodes.
NodeSequence hybrid_nodes(const HybridSpec& spec);

/// One or two ordered, disjoint segments covering [1, N]; empty when N0 = 0
/// would leave nothing in region 1.
std::vector<Segment> split_nodes(const SplitSpec& spec);

/// Makes a sorted node list strictly ascending and odd-length: repeats are
/// dropped and, for an even count, a node is inserted in the widest gap.
/// The endpoints are kept.
std::vector<std::int64_t> repair_nodes(std::vector<std::int64_t> nodes);

}  // namespace sparsesum
