#include "sparsesum/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sparsesum/error.hpp"

namespace sparsesum {

namespace {

constexpr double kIndexLimit = 4.0e18;

std::int64_t floor_index(double v) {
  if (!(v < kIndexLimit)) throw Error(ErrorKind::OutOfRange, "node index overflows 64 bits");
  return static_cast<std::int64_t>(std::floor(v));
}

void require_odd_count(std::int64_t count) {
  if (count < 3 || count % 2 == 0) {
    throw Error(ErrorKind::InvalidCount, "node count must be odd and >= 3, got " +
                                             std::to_string(count));
  }
}

bool is_integer_multiple_of_pi(double a) {
  const double r = a / std::numbers::pi;
  return r == std::floor(r);
}

// Drops everything past `cutoff` and makes `cutoff` the final node. A last
// node that merely falls short (pow rounding) is moved rather than followed.
void clamp_to(std::vector<std::int64_t>& nodes, std::int64_t cutoff) {
  if (!nodes.empty() && nodes.back() < cutoff) {
    nodes.back() = cutoff;
    return;
  }
  while (!nodes.empty() && nodes.back() >= cutoff) nodes.pop_back();
  nodes.push_back(cutoff);
}

Segment make_segment(std::vector<std::int64_t> nodes) {
  nodes = repair_nodes(std::move(nodes));
  if (nodes.size() < 3) return Segment::direct(nodes.front(), nodes.back());
  return Segment::weighted(NodeSequence(std::move(nodes)));
}

}  // namespace

std::vector<std::int64_t> q_sequence_values(double q, std::int64_t count) {
  if (!(q > 1.0)) throw Error(ErrorKind::InvalidRatio, "q must exceed 1");
  if (count < 1) throw Error(ErrorKind::InvalidCount, "count must be positive");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  std::int64_t prev = 0;
  for (std::int64_t j = 1; j <= count; ++j) {
    const auto g = floor_index(std::pow(q, static_cast<double>(j - 1)));
    const auto n = std::max(g > j ? g : j, prev + 1);
    out.push_back(n);
    prev = n;
  }
  return out;
}

NodeSequence q_sequence(const QSequenceSpec& spec) {
  if (!(spec.q > 1.0)) throw Error(ErrorKind::InvalidRatio, "q must exceed 1");
  require_odd_count(spec.count);
  return NodeSequence(q_sequence_values(spec.q, spec.count));
}

HybridSpec HybridSpec::for_lorentzian(double a, std::int64_t count) {
  if (!(a > 0.0)) throw Error(ErrorKind::OutOfRange, "a must be positive");
  const double scale = a / std::numbers::pi;
  return {floor_index(4.0 * scale) + 1, std::max<std::int64_t>(300, floor_index(300.0 * scale)),
          count};
}

std::int64_t HybridSpec::flat_count() const noexcept {
  return std::min(flat_end, 4 * count / 5);
}

NodeSequence hybrid_nodes(const HybridSpec& spec) {
  require_odd_count(spec.count);
  if (spec.flat_end < 1) throw Error(ErrorKind::InvalidCutoff, "N0 must be >= 1");
  if (spec.cutoff <= spec.flat_end) {
    throw Error(ErrorKind::InvalidCutoff, "cutoff N = " + std::to_string(spec.cutoff) +
                                              " must exceed N0 = " +
                                              std::to_string(spec.flat_end));
  }
  const auto m0 = spec.flat_count();
  std::vector<std::int64_t> nodes;
  nodes.reserve(static_cast<std::size_t>(spec.count) + 1);

  // equal-spaced head over [1, N0], rounded linear interpolation
  if (m0 == 1) {
    nodes.push_back(1);
  } else {
    const double step = static_cast<double>(spec.flat_end - 1) / static_cast<double>(m0 - 1);
    for (std::int64_t j = 0; j < m0; ++j) {
      nodes.push_back(1 + std::llround(static_cast<double>(j) * step));
    }
  }

  const double q = std::pow(static_cast<double>(spec.cutoff) / static_cast<double>(spec.flat_end),
                            1.0 / static_cast<double>(spec.count - m0));
  bool geometric = false;
  for (std::int64_t j = m0 + 1; j <= spec.count; ++j) {
    const auto prev = nodes.back();
    const auto scaled = floor_index(q * static_cast<double>(prev));
    if (!geometric && scaled > prev) geometric = true;
    const auto next = geometric ? std::max(scaled, prev + 1) : prev + 1;
    if (next >= spec.cutoff) {
      nodes.push_back(spec.cutoff);
      break;
    }
    nodes.push_back(next);
  }
  if (nodes.back() < spec.cutoff) {
    if (!geometric) {
      throw Error(ErrorKind::BudgetExhausted,
                  "unit steps used all " + std::to_string(spec.count) + " nodes before reaching N");
    }
    nodes.back() = spec.cutoff;
  }
  return NodeSequence(repair_nodes(std::move(nodes)));
}

SplitSpec SplitSpec::for_resonant(double a, std::int64_t count) {
  if (!(a > 0.0)) throw Error(ErrorKind::OutOfRange, "a must be positive");
  if (is_integer_multiple_of_pi(a)) {
    throw Error(ErrorKind::SingularParameter, "a/pi must not be an integer");
  }
  const auto n0 = floor_index(a / std::numbers::pi);
  return {n0, std::max<std::int64_t>(1, n0) * 10000, 1.1, count};
}

std::vector<Segment> split_nodes(const SplitSpec& spec) {
  const auto n0 = spec.singular_index;
  if (n0 < 0) throw Error(ErrorKind::InvalidCutoff, "N0 must be >= 0");
  if (spec.cutoff <= n0) throw Error(ErrorKind::InvalidCutoff, "cutoff must exceed N0");
  if (!(spec.dense_ratio > 1.0)) throw Error(ErrorKind::InvalidRatio, "dense ratio must exceed 1");
  require_odd_count(spec.count);

  std::vector<Segment> segments;
  if (n0 >= 1 && n0 <= kDirectRegionLimit) {
    segments.push_back(Segment::direct(1, n0));
  } else if (n0 > kDirectRegionLimit) {
    // reversed q-sequence, densest next to N0
    std::vector<std::int64_t> dense{0};
    std::int64_t prev = 0;
    for (std::int64_t j = 1;; ++j) {
      const auto g = floor_index(std::pow(spec.dense_ratio, static_cast<double>(j - 1)));
      const auto n = std::max(g > j ? g : j, prev + 1);
      if (n > n0) break;
      dense.push_back(n);
      prev = n;
    }
    // dense[j] is the j-th (1-based) value; the first index past N0 is j0 = dense.size()
    const auto j0 = static_cast<std::int64_t>(dense.size());
    auto m1 = j0 % 2 == 1 ? j0 : j0 - 1;
    // n_2 = N0 + 1 - dense[m1 - 1] would collide with n_1 = 1
    while (m1 > 3 && dense[m1 - 1] >= n0) m1 -= 2;
    std::vector<std::int64_t> nodes{1};
    for (std::int64_t j = 2; j <= m1; ++j) nodes.push_back(n0 + 1 - dense[m1 + 1 - j]);
    segments.push_back(make_segment(std::move(nodes)));
  }

  const auto width = spec.cutoff - n0;
  const double q = std::pow(static_cast<double>(width), 1.0 / static_cast<double>(spec.count - 1));
  std::vector<std::int64_t> tail;
  if (q > 1.0) {
    for (auto v : q_sequence_values(q, spec.count)) tail.push_back(n0 + v);
  } else {
    tail.push_back(n0 + 1);
  }
  clamp_to(tail, spec.cutoff);
  segments.push_back(make_segment(std::move(tail)));
  return segments;
}

std::vector<std::int64_t> repair_nodes(std::vector<std::int64_t> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.size() < 3 || nodes.size() % 2 == 1) return nodes;

  std::size_t widest = 0;
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
    if (nodes[i + 1] - nodes[i] > nodes[widest + 1] - nodes[widest]) widest = i;
  }
  const auto gap = nodes[widest + 1] - nodes[widest];
  if (gap >= 2) {
    nodes.insert(nodes.begin() + static_cast<std::ptrdiff_t>(widest) + 1,
                 nodes[widest] + gap / 2);
  } else {
    // consecutive run; dropping an interior node leaves the endpoints intact
    nodes.erase(nodes.begin() + 1);
  }
  return nodes;
}

}  // namespace sparsesum
