#pragma once

// Weighted sparse evaluation of F(k) = sum_{n=na}^{nb} f(n) e^{-ikn}.
//
// An odd-length node sequence n_1 < ... < n_{2m+1} is cut into m panels
// (n_{2l-1}, n_{2l}, n_{2l+1}); the per-panel weights are merged at shared
// nodes into one global weight per node, so that
//   F(k) ~= sum_j W_j(k) f(n_j) e^{-ik n_j}
// costs exactly one evaluation of f per node.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sparsesum/phase.hpp"

namespace sparsesum {

/// Strictly ascending, odd-length (>= 3) list of integer nodes.
class NodeSequence {
 public:
  /// Throws Error{InvalidSequence}.
  explicit NodeSequence(std::vector<std::int64_t> nodes);

  std::span<const std::int64_t> nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::int64_t first() const noexcept { return nodes_.front(); }
  std::int64_t last() const noexcept { return nodes_.back(); }
  std::int64_t operator[](std::size_t i) const noexcept { return nodes_[i]; }

  bool operator==(const NodeSequence&) const = default;

 private:
  std::vector<std::int64_t> nodes_;
};

/// Global weights W_j for one (k, nodes) pair; independent of f, so one table
/// can be reused for any number of functions.
struct WeightTable {
  double k = 0.0;
  std::vector<complex> weights;
};

/// f(n) on an integer domain [first, last].
class SampledFunction {
 public:
  using Evaluator = std::function<complex(std::int64_t)>;

  SampledFunction(Evaluator evaluator, std::int64_t first, std::int64_t last);

  /// Backed by a table; evaluating an index not in the table is a domain error.
  static SampledFunction from_table(std::map<std::int64_t, complex> table);

  /// Throws Error{Domain} outside [first, last].
  complex operator()(std::int64_t n) const;

  std::int64_t first() const noexcept { return first_; }
  std::int64_t last() const noexcept { return last_; }

 private:
  Evaluator evaluator_;
  std::int64_t first_;
  std::int64_t last_;
};

struct TransformResult {
  complex value;
  std::size_t node_count = 0;
  std::int64_t cutoff = 0;
  double efficiency = 0.0;  // cutoff / node_count
};

/// One summation region. Without nodes the range is summed term by term.
struct Segment {
  std::int64_t first;
  std::int64_t last;
  std::optional<NodeSequence> nodes;

  static Segment weighted(NodeSequence nodes);
  static Segment direct(std::int64_t first, std::int64_t last);

  std::size_t evaluation_count() const noexcept;
};

WeightTable assemble_weights(double k, const NodeSequence& nodes);

TransformResult dft(const SampledFunction& f, const NodeSequence& nodes, double k);
TransformResult dft(const SampledFunction& f, const NodeSequence& nodes, const WeightTable& table);

/// dft at k = 0 on the real weight path.
TransformResult series_sum(const SampledFunction& f, const NodeSequence& nodes);

/// sum_j f(n_j) [Re W_j sin(k n_j) - Im W_j cos(k n_j)]; complex f is handled by linearity.
TransformResult sine_transform(const SampledFunction& f, const NodeSequence& nodes, double k);
TransformResult sine_transform(const SampledFunction& f, const NodeSequence& nodes,
                               const WeightTable& table);

/// sum_j f(n_j) [Re W_j cos(k n_j) + Im W_j sin(k n_j)].
TransformResult cosine_transform(const SampledFunction& f, const NodeSequence& nodes, double k);
TransformResult cosine_transform(const SampledFunction& f, const NodeSequence& nodes,
                                 const WeightTable& table);

enum class TransformKind { Exponential, Sine, Cosine };

/// Sum of per-segment transforms. Segments must be pairwise disjoint
/// (Error{InvalidPartition}); they are processed in ascending order.
TransformResult piecewise_transform(std::span<const Segment> segments, const SampledFunction& f,
                                    double k, TransformKind kind = TransformKind::Exponential);

}  // namespace sparsesum
