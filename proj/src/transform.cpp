#include "sparsesum/transform.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <utility>

#include "sparsesum/error.hpp"
#include "sparsesum/kernel.hpp"
#include "sparsesum/summation.hpp"

namespace sparsesum {

NodeSequence::NodeSequence(std::vector<std::int64_t> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 3 || nodes_.size() % 2 == 0) {
    throw Error(ErrorKind::InvalidSequence,
                "length must be odd and >= 3, got " + std::to_string(nodes_.size()));
  }
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i] <= nodes_[i - 1]) {
      throw Error(ErrorKind::InvalidSequence,
                  "not strictly ascending at position " + std::to_string(i));
    }
  }
}

SampledFunction::SampledFunction(Evaluator evaluator, std::int64_t first, std::int64_t last)
    : evaluator_(std::move(evaluator)), first_(first), last_(last) {
  if (first > last) throw Error(ErrorKind::Domain, "empty domain");
}

SampledFunction SampledFunction::from_table(std::map<std::int64_t, complex> table) {
  if (table.empty()) throw Error(ErrorKind::Domain, "empty sample table");
  const auto first = table.begin()->first;
  const auto last = table.rbegin()->first;
  auto shared = std::make_shared<const std::map<std::int64_t, complex>>(std::move(table));
  return SampledFunction(
      [shared](std::int64_t n) {
        const auto it = shared->find(n);
        if (it == shared->end()) {
          throw Error(ErrorKind::Domain, "no sample at n = " + std::to_string(n));
        }
        return it->second;
      },
      first, last);
}

complex SampledFunction::operator()(std::int64_t n) const {
  if (n < first_ || n > last_) {
    throw Error(ErrorKind::Domain, "n = " + std::to_string(n) + " outside [" +
                                       std::to_string(first_) + ", " + std::to_string(last_) + "]");
  }
  return evaluator_(n);
}

Segment Segment::weighted(NodeSequence nodes) {
  const auto first = nodes.first();
  const auto last = nodes.last();
  return {first, last, std::move(nodes)};
}

Segment Segment::direct(std::int64_t first, std::int64_t last) {
  if (first > last) throw Error(ErrorKind::InvalidPartition, "empty segment");
  return {first, last, std::nullopt};
}

std::size_t Segment::evaluation_count() const noexcept {
  return nodes ? nodes->size() : static_cast<std::size_t>(last - first + 1);
}

WeightTable assemble_weights(double k, const NodeSequence& nodes) {
  k = reduce_wavenumber(k);
  WeightTable table{k, std::vector<complex>(nodes.size())};
  auto& w = table.weights;
  for (std::size_t j = 0; j + 2 < nodes.size(); j += 2) {
    const auto pw = panel_weights(k, Panel{nodes[j], nodes[j + 1], nodes[j + 2]});
    w[j] += pw.w1;
    w[j + 1] = pw.w2;
    w[j + 2] = pw.w3;
  }
  // the panels are half-open; the final term f(nb) e^{-ik nb} enters with unit weight
  w.back() += 1.0;
  return table;
}

namespace {

void check_domain(const SampledFunction& f, const NodeSequence& nodes) {
  if (nodes.first() < f.first() || nodes.last() > f.last()) {
    throw Error(ErrorKind::Domain, "nodes [" + std::to_string(nodes.first()) + ", " +
                                       std::to_string(nodes.last()) +
                                       "] exceed the function domain");
  }
}

void check_table(const NodeSequence& nodes, const WeightTable& table) {
  if (table.weights.size() != nodes.size()) {
    throw Error(ErrorKind::InvalidSequence, "weight table does not match node sequence");
  }
}

TransformResult make_result(complex value, std::size_t count, std::int64_t cutoff) {
  return {value, count, cutoff, static_cast<double>(cutoff) / static_cast<double>(count)};
}

// Per-node factor g_j so that the transform is sum_j f(n_j) g_j.
complex node_factor(TransformKind kind, complex weight, double k, std::int64_t n) {
  const auto sc = sincos_product(k, static_cast<double>(n));
  switch (kind) {
    case TransformKind::Exponential: return weight * complex(sc.cos, -sc.sin);
    case TransformKind::Sine: return weight.real() * sc.sin - weight.imag() * sc.cos;
    case TransformKind::Cosine: return weight.real() * sc.cos + weight.imag() * sc.sin;
  }
  return 0.0;
}

complex direct_factor(TransformKind kind, double k, std::int64_t n) {
  return node_factor(kind, 1.0, k, n);
}

TransformResult weighted(const SampledFunction& f, const NodeSequence& nodes,
                         const WeightTable& table, TransformKind kind) {
  check_table(nodes, table);
  check_domain(f, nodes);
  complex acc = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    acc += f(nodes[j]) * node_factor(kind, table.weights[j], table.k, nodes[j]);
  }
  return make_result(acc, nodes.size(), nodes.last());
}

complex direct_sum(const SampledFunction& f, std::int64_t first, std::int64_t last, double k,
                   TransformKind kind) {
  CompensatedSum acc;
  for (auto n = first; n <= last; ++n) acc.add(f(n) * direct_factor(kind, k, n));
  return acc.value();
}

}  // namespace

TransformResult dft(const SampledFunction& f, const NodeSequence& nodes, double k) {
  return weighted(f, nodes, assemble_weights(k, nodes), TransformKind::Exponential);
}

TransformResult dft(const SampledFunction& f, const NodeSequence& nodes, const WeightTable& table) {
  return weighted(f, nodes, table, TransformKind::Exponential);
}

TransformResult series_sum(const SampledFunction& f, const NodeSequence& nodes) {
  return dft(f, nodes, 0.0);
}

TransformResult sine_transform(const SampledFunction& f, const NodeSequence& nodes, double k) {
  return weighted(f, nodes, assemble_weights(k, nodes), TransformKind::Sine);
}

TransformResult sine_transform(const SampledFunction& f, const NodeSequence& nodes,
                               const WeightTable& table) {
  return weighted(f, nodes, table, TransformKind::Sine);
}

TransformResult cosine_transform(const SampledFunction& f, const NodeSequence& nodes, double k) {
  return weighted(f, nodes, assemble_weights(k, nodes), TransformKind::Cosine);
}

TransformResult cosine_transform(const SampledFunction& f, const NodeSequence& nodes,
                                 const WeightTable& table) {
  return weighted(f, nodes, table, TransformKind::Cosine);
}

TransformResult piecewise_transform(std::span<const Segment> segments, const SampledFunction& f,
                                    double k, TransformKind kind) {
  if (segments.empty()) throw Error(ErrorKind::InvalidPartition, "no segments");
  std::vector<const Segment*> order;
  for (const auto& s : segments) {
    if (s.first > s.last) throw Error(ErrorKind::InvalidPartition, "empty segment");
    if (s.nodes && (s.nodes->first() != s.first || s.nodes->last() != s.last)) {
      throw Error(ErrorKind::InvalidPartition, "segment nodes do not span the segment range");
    }
    order.push_back(&s);
  }
  std::sort(order.begin(), order.end(),
            [](const Segment* a, const Segment* b) { return a->first < b->first; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (order[i]->first <= order[i - 1]->last) {
      throw Error(ErrorKind::InvalidPartition, "segments overlap");
    }
  }

  k = reduce_wavenumber(k);
  complex value = 0.0;
  std::size_t count = 0;
  for (const auto* s : order) {
    if (s->nodes) {
      value += weighted(f, *s->nodes, assemble_weights(k, *s->nodes), kind).value;
    } else {
      if (s->first < f.first() || s->last > f.last()) {
        throw Error(ErrorKind::Domain, "segment exceeds the function domain");
      }
      value += direct_sum(f, s->first, s->last, k, kind);
    }
    count += s->evaluation_count();
  }
  return make_result(value, count, order.back()->last);
}

}  // namespace sparsesum
