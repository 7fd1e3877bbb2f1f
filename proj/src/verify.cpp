#include "sparsesum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "sparsesum/error.hpp"
#include "sparsesum/kernel.hpp"
#include "sparsesum/nodes.hpp"
#include "sparsesum/oracle.hpp"
#include "sparsesum/transform.hpp"

namespace sparsesum::verify {

namespace {

using namespace std::complex_literals;
using Rng = std::mt19937_64;

constexpr double kPi = std::numbers::pi;

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::int64_t log_uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const double v = std::exp(uniform(rng, std::log(static_cast<double>(lo)),
                                    std::log(static_cast<double>(hi) + 1.0)));
  return std::clamp(static_cast<std::int64_t>(v), lo, hi);
}

// Mostly uniform on (-pi, pi); every third draw has a tiny magnitude to hit
// the Taylor path.
double random_k(Rng& rng) {
  if (uniform_int(rng, 0, 2) == 0) {
    const double mag = std::pow(10.0, uniform(rng, -9.0, 0.0));
    return uniform_int(rng, 0, 1) ? mag : -mag;
  }
  return uniform(rng, -kPi, kPi);
}

Panel random_panel(Rng& rng, std::int64_t max_span) {
  const auto n1 = uniform_int(rng, -100000, 100000);
  const auto span = log_uniform_int(rng, 2, max_span);
  const auto n2 = uniform_int(rng, n1 + 1, n1 + span - 1);
  return {n1, n2, n1 + span};
}

NodeSequence random_sequence(Rng& rng, std::int64_t max_width) {
  const auto first = uniform_int(rng, -100000, 100000);
  const auto width = log_uniform_int(rng, 2, max_width);
  const auto max_count = std::min<std::int64_t>(width + 1, 401);
  const auto count = 2 * uniform_int(rng, 1, (max_count - 1) / 2) + 1;
  std::set<std::int64_t> interior;
  while (static_cast<std::int64_t>(interior.size()) < count - 2) {
    interior.insert(uniform_int(rng, first + 1, first + width - 1));
  }
  std::vector<std::int64_t> nodes{first};
  nodes.insert(nodes.end(), interior.begin(), interior.end());
  nodes.push_back(first + width);
  return NodeSequence(std::move(nodes));
}

SampledFunction polynomial(complex c0, complex c1, complex c2) {
  return SampledFunction(
      [=](std::int64_t n) {
        const double x = static_cast<double>(n);
        return c0 + c1 * x + c2 * x * x;
      },
      std::numeric_limits<std::int64_t>::min() / 2, std::numeric_limits<std::int64_t>::max() / 2);
}

double rel_error(complex got, complex want) {
  return std::abs(got - want) / std::abs(want);
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

PropertyResult make(std::string name, double measured, double tolerance, std::string detail = {}) {
  return {std::move(name), measured <= tolerance, measured, tolerance, std::move(detail)};
}

complex weighted_constant(const NodeSequence& nodes, const WeightTable& table) {
  complex acc = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    acc += table.weights[j] * std::conj(expi(table.k, nodes[j]));
  }
  return acc;
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

const PropertyResult* Report::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

PropertyResult panel_constant_exactness(std::uint64_t seed) {
  Rng rng(seed);
  const auto one = polynomial(1.0, 0.0, 0.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto panel = random_panel(rng, 100000);
    const double k = random_k(rng);
    const auto got = panel_sum(k, panel, 1.0, 1.0, 1.0);
    const auto want = oracle::brute_force_dft(one, panel.n1, panel.n3 - 1, k);
    // |err| <= 1e-11 |S1| + 1e-13, reported as a ratio to that bound
    worst = std::max(worst, std::abs(got - want) / (1e-11 * std::abs(want) + 1e-13));
  }
  return make("panel constant exactness", worst, 1.0,
              "worst |err| / (1e-11 |S1| + 1e-13) over 100 panels");
}

PropertyResult panel_quadratic_exactness(std::uint64_t seed) {
  Rng rng(seed + 1);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto panel = random_panel(rng, 100000);
    const double k = random_k(rng);
    for (int power = 1; power <= 2; ++power) {
      const auto f = power == 1 ? polynomial(0.0, 1.0, 0.0) : polynomial(0.0, 0.0, 1.0);
      const auto got = panel_sum(k, panel, f(panel.n1), f(panel.n2), f(panel.n3));
      const auto want = oracle::brute_force_dft(f, panel.n1, panel.n3 - 1, k);
      worst = std::max(worst, rel_error(got, want));
    }
  }
  return make("panel linear/quadratic exactness", worst, 1e-10,
              "relative error vs brute force, f = n and n^2, 100 panels");
}

PropertyResult panel_weight_sum_at_zero(std::uint64_t seed) {
  Rng rng(seed + 2);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto panel = random_panel(rng, 1'000'000'000);
    const auto w = panel_weights(0.0, panel);
    const double span = static_cast<double>(panel.span());
    worst = std::max(worst, std::abs(w.w1 + w.w2 + w.w3 - span) / span);
  }
  return make("k=0 weight-sum identity", worst, 1e-12, "w1 + w2 + w3 = n3 - n1, 1000 panels");
}

PropertyResult conjugate_symmetry(std::uint64_t seed) {
  Rng rng(seed + 3);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto panel = random_panel(rng, 100000);
    const double k = random_k(rng);
    const auto a = panel_weights(k, panel);
    const auto b = panel_weights(-k, panel);
    for (auto [x, y] : {std::pair{a.w1, b.w1}, {a.w2, b.w2}, {a.w3, b.w3}}) {
      worst = std::max(worst, std::abs(std::conj(x) - y) / std::max(1.0, std::abs(x)));
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    const auto nodes = random_sequence(rng, 100000);
    const double k = random_k(rng);
    const auto a = assemble_weights(k, nodes);
    const auto b = assemble_weights(-k, nodes);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      worst = std::max(worst, std::abs(std::conj(a.weights[j]) - b.weights[j]) /
                                  std::max(1.0, std::abs(a.weights[j])));
    }
  }
  return make("conjugate symmetry", worst, 1e-12,
              "w(-k) vs conj w(k), 200 panels and 50 assembled tables");
}

PropertyResult small_k_continuity(std::uint64_t seed) {
  Rng rng(seed + 4);
  double worst = 0.0;
  std::string where;
  for (int trial = 0; trial < 200; ++trial) {
    const auto panel = random_panel(rng, 10000);
    const auto w0 = panel_weights(0.0, panel);
    for (const double k : {1e-6, -1e-6}) {
      const auto w = panel_weights(k, panel);
      for (auto [x, y] : {std::pair{w.w1, w0.w1}, {w.w2, w0.w2}, {w.w3, w0.w3}}) {
        const double err = std::abs(x - y);
        const double ratio = std::abs(y) > 1.0 ? err / (1e-5 * std::abs(y)) : err / 1e-6;
        if (ratio > worst) {
          worst = ratio;
          where = "panel (" + std::to_string(panel.n1) + ", " + std::to_string(panel.n2) + ", " +
                  std::to_string(panel.n3) + "), |w0| = " + format_value(std::abs(y)) +
                  ", |w(k) - w0| = " + format_value(err);
        }
      }
    }
  }
  return make("small-k continuity vs k=0 forms", worst, 1.0,
              "worst error / allowed (1e-5 rel if |w|>1, else 1e-6 abs), spans <= 1e4; " + where);
}

PropertyResult small_k_expansion(std::uint64_t seed) {
  Rng rng(seed + 4);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto panel = random_panel(rng, 10000);
    const auto L = panel.span();
    const double d2 = static_cast<double>(panel.n2 - panel.n1);
    const double d3 = static_cast<double>(panel.n3 - panel.n1);
    const double d32 = static_cast<double>(panel.n3 - panel.n2);
    // derivatives of T_j = sum m^j e^{-ikm} at 0: T_j^(r) = (-i)^r P_{j+r}
    std::array<std::array<complex, 3>, 3> t{};  // t[r][j]
    for (int r = 0; r < 3; ++r) {
      for (int j = 0; j < 3; ++j) t[r][j] = std::pow(-1i, r) * oracle::faulhaber(j + r, L);
    }
    std::array<complex, 3> w1{}, g2{}, g3{};
    for (int r = 0; r < 3; ++r) {
      w1[r] = t[r][0] + (t[r][2] - (d2 + d3) * t[r][1]) / (d2 * d3);
      g2[r] = d3 * t[r][1] - t[r][2];
      g3[r] = t[r][2] - d2 * t[r][1];
    }
    // (g e^{ikd})' = g' + i d g,  (g e^{ikd})'' = g'' + 2 i d g' - d^2 g
    const auto shifted = [](const std::array<complex, 3>& g, double d) {
      return std::array<complex, 3>{g[0], g[1] + 1i * d * g[0],
                                    g[2] + 2.0 * 1i * d * g[1] - d * d * g[0]};
    };
    auto w2 = shifted(g2, d2);
    auto w3 = shifted(g3, d3);
    for (auto& v : w2) v /= d2 * d32;
    for (auto& v : w3) v /= d3 * d32;

    for (const double k : {1e-6, -1e-6}) {
      const auto w = panel_weights(k, panel);
      const auto expand = [k](const std::array<complex, 3>& c) {
        return c[0] + k * c[1] + 0.5 * k * k * c[2];
      };
      for (auto [x, c] : {std::pair{w.w1, w1}, {w.w2, w2}, {w.w3, w3}}) {
        const double scale = std::max(std::abs(c[0]), static_cast<double>(L));
        worst = std::max(worst, std::abs(x - expand(c)) / scale);
      }
    }
  }
  return make("small-k second-order expansion", worst, 1e-6,
              "|w(k) - (w0 + k w0' + k^2/2 w0'')| / max(|w0|, span) at |k| = 1e-6, spans <= 1e4");
}

PropertyResult global_quadratic_exactness(std::uint64_t seed) {
  Rng rng(seed + 5);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto nodes = random_sequence(rng, 100000);
    const double k = random_k(rng);
    const auto f = polynomial(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1));
    const auto got = dft(f, nodes, k).value;
    const auto want = oracle::brute_force_dft(f, nodes.first(), nodes.last(), k);
    worst = std::max(worst, rel_error(got, want));
  }
  return make("global quadratic exactness", worst, 1e-9,
              "dft vs brute force, random quadratic f, 200 sequences");
}

PropertyResult constant_sum_identity(std::uint64_t seed) {
  Rng rng(seed + 6);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto nodes = random_sequence(rng, 1'000'000'000);
    const auto table = assemble_weights(0.0, nodes);
    complex sum = 0.0;
    for (const auto& w : table.weights) sum += w;
    const double want = static_cast<double>(nodes.last() - nodes.first() + 1);
    worst = std::max(worst, rel_error(sum, want));
  }
  return make("constant-sum identity at k=0", worst, 1e-11,
              "sum_j W_j(0) = nb - na + 1, 500 sequences");
}

PropertyResult general_k_constant_identity(std::uint64_t seed) {
  Rng rng(seed + 7);
  const auto one = polynomial(1.0, 0.0, 0.0);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto nodes = random_sequence(rng, 100000);
    const double k = random_k(rng);
    const auto got = weighted_constant(nodes, assemble_weights(k, nodes));
    const auto want = oracle::brute_force_dft(one, nodes.first(), nodes.last(), k);
    worst = std::max(worst, rel_error(got, want));
  }
  return make("general-k constant identity", worst, 1e-10,
              "sum_j W_j e^{-ik n_j} vs brute force, 200 sequences");
}

PropertyResult sine_cosine_consistency(std::uint64_t seed) {
  Rng rng(seed + 8);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto nodes = random_sequence(rng, 100000);
    const double k = random_k(rng);
    std::map<std::int64_t, complex> samples;
    for (const auto n : nodes.nodes()) samples[n] = uniform(rng, -1, 1);
    const auto f = SampledFunction::from_table(std::move(samples));
    const auto table = assemble_weights(k, nodes);
    const auto d = dft(f, nodes, table).value;
    const auto c = cosine_transform(f, nodes, table).value;
    const auto s = sine_transform(f, nodes, table).value;
    const double scale = std::max(1.0, std::abs(d));
    worst = std::max({worst, std::abs(c - d.real()) / scale, std::abs(s + d.imag()) / scale});
  }
  return make("sine/cosine vs dft parts", worst, 1e-12,
              "cos = Re dft, sin = -Im dft for real f, 200 sequences");
}

PropertyResult evaluation_count(std::uint64_t seed) {
  Rng rng(seed + 9);
  double violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto nodes = random_sequence(rng, 1'000'000);
    std::atomic<std::size_t> calls{0};
    const SampledFunction f(
        [&calls](std::int64_t n) {
          ++calls;
          return complex(static_cast<double>(n));
        },
        nodes.first(), nodes.last());
    const double k = random_k(rng);
    const std::array<std::size_t, 4> got = {
        (calls = 0, dft(f, nodes, k), calls.load()),
        (calls = 0, series_sum(f, nodes), calls.load()),
        (calls = 0, sine_transform(f, nodes, k), calls.load()),
        (calls = 0, cosine_transform(f, nodes, k), calls.load())};
    for (auto g : got) violations += g != nodes.size();
  }
  return make("evaluation count = M", violations, 0.0,
              "transforms whose f-call count differed from the node count, 400 runs");
}

PropertyResult node_sequences_valid(std::uint64_t seed) {
  Rng rng(seed + 10);
  int violations = 0;
  int exhausted = 0;
  const auto check = [&](const std::vector<std::int64_t>& v, std::int64_t first,
                         std::int64_t last) {
    bool ok = v.size() >= 3 && v.size() % 2 == 1 && v.front() == first && v.back() == last;
    for (std::size_t i = 1; ok && i < v.size(); ++i) ok = v[i] > v[i - 1];
    violations += !ok;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const auto count = 2 * uniform_int(rng, 1, 150) + 1;
    switch (trial % 3) {
      case 0: {
        const double q = 1.0 + std::pow(10.0, uniform(rng, -2.0, 0.3));
        const auto max_count = static_cast<std::int64_t>(std::log(1e17) / std::log(q));
        const auto c = std::min(count, max_count % 2 ? max_count : max_count - 1);
        const auto s = q_sequence({q, c});
        const std::vector<std::int64_t> v(s.nodes().begin(), s.nodes().end());
        check(v, 1, v.back());
        break;
      }
      case 1: {
        const double a = std::pow(10.0, uniform(rng, -1.0, 6.0));
        const auto spec = HybridSpec::for_lorentzian(a, count);
        try {
          const auto s = hybrid_nodes(spec);
          check({s.nodes().begin(), s.nodes().end()}, 1, spec.cutoff);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::BudgetExhausted) throw;
          ++exhausted;
        }
        break;
      }
      default: {
        const double a = std::pow(10.0, uniform(rng, -1.0, 7.0));
        const auto spec = SplitSpec::for_resonant(a, count);
        for (const auto& seg : split_nodes(spec)) {
          if (seg.nodes) check({seg.nodes->nodes().begin(), seg.nodes->nodes().end()}, seg.first,
                               seg.last);
        }
        break;
      }
    }
  }
  return make("generated sequences ascending and odd", violations, 0.0,
              "1000 random q/hybrid/split specs; " + std::to_string(exhausted) +
                  " hybrid specs rejected for exhausting the unit-step budget");
}

PropertyResult q_sequence_regression() {
  const auto s = q_sequence({1.15, 151});
  int violations = 0;
  violations += s[23] != 24;
  violations += s[24] != 28;
  violations += s.last() != 1272553509;  // floor(1.15^150), exact rational arithmetic
  for (std::size_t j = 0; j < 23; ++j) violations += s[j] != static_cast<std::int64_t>(j + 1);
  return make("q=1.15 sequence regression", violations, 0.0,
              "n_24 = 24, n_25 = 28, n_151 = 1272553509, n_j = j before the crossover");
}

PropertyResult hybrid_endpoints(std::uint64_t seed) {
  Rng rng(seed + 11);
  int violations = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const double a = std::pow(10.0, uniform(rng, -1.0, 6.0));
    const auto spec = HybridSpec::for_lorentzian(a, 151);
    const auto s = hybrid_nodes(spec);
    violations += s.first() != 1 || s.last() != spec.cutoff;
    violations += s.size() > 152;
    // equal-spaced head ends at N0
    const auto m0 = static_cast<std::size_t>(spec.flat_count());
    violations += m0 >= 2 && s[m0 - 1] != spec.flat_end;
  }
  return make("hybrid nodes cover [1, N]", violations, 0.0, "300 values of a, M = 151");
}

PropertyResult split_layout(std::uint64_t seed) {
  Rng rng(seed + 12);
  int violations = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const double a = std::pow(10.0, uniform(rng, -1.0, 7.0));
    const auto spec = SplitSpec::for_resonant(a);
    const auto segs = split_nodes(spec);
    violations += segs.front().first != 1 || segs.back().last != spec.cutoff;
    violations += segs.back().first != spec.singular_index + 1;
    for (std::size_t i = 1; i < segs.size(); ++i) violations += segs[i].first != segs[i - 1].last + 1;
    if (segs.size() == 2 && segs.front().nodes) {
      // reversed q-sequence: from n_2 on, gaps shrink toward N0 (floor jitter of 1 allowed)
      const auto v = segs.front().nodes->nodes();
      violations += v.back() != spec.singular_index;
      for (std::size_t i = 2; i + 1 < v.size(); ++i) {
        violations += (v[i + 1] - v[i]) > (v[i] - v[i - 1]) + 1;
      }
    }
  }
  return make("split segments disjoint, dense toward N0", violations, 0.0,
              "300 values of a");
}

PropertyResult faulhaber_exact(std::uint64_t seed) {
  Rng rng(seed + 13);
  __extension__ typedef __int128 int128;
  int violations = 0;
  std::vector<std::int64_t> lengths;
  for (std::int64_t L = 1; L <= 300; ++L) lengths.push_back(L);
  for (int i = 0; i < 200; ++i) lengths.push_back(uniform_int(rng, 301, 10000));
  lengths.push_back(10000);
  for (const auto L : lengths) {
    std::array<int128, 9> direct{};
    for (std::int64_t n = 0; n < L; ++n) {
      int128 p = 1;
      for (int m = 0; m <= 8; ++m) {
        direct[m] += p;
        p *= n;
      }
    }
    for (int m = 0; m <= 8; ++m) {
      violations += oracle::faulhaber(m, L) != static_cast<double>(direct[m]);
    }
  }
  return make("faulhaber vs integer summation", violations, 0.0,
              "m = 0..8 at 501 lengths up to 1e4, compared after rounding to double");
}

PropertyResult brute_force_power_sums(std::uint64_t seed) {
  Rng rng(seed + 14);
  double worst = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto L = uniform_int(rng, 1, 10000);
    for (int m = 0; m <= 8; ++m) {
      const SampledFunction f([m](std::int64_t n) { return complex(std::pow(static_cast<double>(n), m)); },
                              0, L);
      const auto got = oracle::brute_force_dft(f, 0, L - 1, 0.0).real();
      const double want = oracle::faulhaber(m, L);
      worst = std::max(worst, std::abs(got - want) / want);
    }
  }
  return make("brute force k=0 vs faulhaber", worst, 1e-15,
              "relative difference, m = 0..8, 40 lengths up to 1e4");
}

PropertyResult lorentzian_tail_bound() {
  int violations = 0;
  double worst = 0.0;
  for (const double a : {0.5, 1.0, 5.0, 20.0}) {
    for (const std::int64_t cutoff : {300, 1000, 5000}) {
      for (const double x : {0.1, 0.5, 1.0, 1.7}) {
        const double k = x * kPi;
        const SampledFunction f(
            [a](std::int64_t n) {
              const double r = static_cast<double>(n) * kPi / a;
              return complex(1.0 / (r * r + 1.0));
            },
            1, cutoff);
        const double series = 1.0 / a + 2.0 / a * oracle::brute_force_dft(f, 1, cutoff, k).real();
        const double exact = oracle::exact_value({oracle::Series::Lorentzian, a}, x);
        const double bound = 2.0 * a / (kPi * kPi * static_cast<double>(cutoff));
        worst = std::max(worst, std::abs(series - exact) / bound);
        violations += std::abs(series - exact) > bound;
      }
    }
  }
  return make("Lorentzian closed form within tail bound", worst, 1.0,
              "|truncated - closed| / (2a / (pi^2 N)); " + std::to_string(violations) +
                  " violations");
}

Report run_verify(std::uint64_t seed) {
  Report r;
  r.results = {panel_constant_exactness(seed),
               panel_quadratic_exactness(seed),
               panel_weight_sum_at_zero(seed),
               conjugate_symmetry(seed),
               small_k_continuity(seed),
               small_k_expansion(seed),
               global_quadratic_exactness(seed),
               constant_sum_identity(seed),
               general_k_constant_identity(seed),
               sine_cosine_consistency(seed),
               evaluation_count(seed),
               node_sequences_valid(seed),
               q_sequence_regression(),
               hybrid_endpoints(seed),
               split_layout(seed),
               faulhaber_exact(seed),
               brute_force_power_sums(seed),
               lorentzian_tail_bound()};
  return r;
}

void print(std::ostream& out, const Report& report) {
  for (const auto& r : report.results) {
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %-42s measured %-10.3g tolerance %-10.3g", 
                  r.passed ? "PASS" : "FAIL", r.name.c_str(), r.measured, r.tolerance);
    out << line << "  " << r.detail << '\n';
  }
  const auto failed = std::count_if(report.results.begin(), report.results.end(),
                                    [](const auto& r) { return !r.passed; });
  out << (report.results.size() - static_cast<std::size_t>(failed)) << "/" << report.results.size()
      << " properties passed\n";
}

}  // namespace sparsesum::verify
