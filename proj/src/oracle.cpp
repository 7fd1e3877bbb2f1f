#include "sparsesum/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "sparsesum/error.hpp"
#include "sparsesum/summation.hpp"

namespace sparsesum::oracle {

namespace {

constexpr std::int64_t kBlock = 1 << 20;

__extension__ typedef __int128 int128;

// Extended precision keeps k*n exact enough for n up to ~1e9.
complex unit_phase(long double k, std::int64_t n) {
  const long double t = k * static_cast<long double>(n);
  return {static_cast<double>(std::cos(t)), -static_cast<double>(std::sin(t))};
}

// Phases are anchored in long double every kStride terms; in between the
// anchor is multiplied by a tabulated e^{-ikj}, so rounding never accumulates
// past one complex product.
constexpr std::int64_t kStride = 64;

CompensatedSum sum_block(const SampledFunction& f, std::int64_t first, std::int64_t last,
                         long double k) {
  std::array<complex, kStride> step;
  for (std::int64_t j = 0; j < kStride; ++j) step[static_cast<std::size_t>(j)] = unit_phase(k, j);
  CompensatedSum acc;
  for (auto base = first; base <= last; base += kStride) {
    const complex anchor = unit_phase(k, base);
    const auto top = std::min(last - base, kStride - 1);
    for (std::int64_t j = 0; j <= top; ++j) {
      acc.add(f(base + j) * (anchor * step[static_cast<std::size_t>(j)]));
    }
  }
  return acc;
}

}  // namespace

complex brute_force_dft(const SampledFunction& f, std::int64_t first, std::int64_t last, double k,
                        bool force) {
  if (first > last) return 0.0;
  if (first < f.first() || last > f.last()) {
    throw Error(ErrorKind::Domain, "brute-force range exceeds the function domain");
  }
  const auto width = last - first;
  if (width > kBruteForceLimit && !force) {
    throw Error(ErrorKind::CostGuard, "range of " + std::to_string(width) +
                                          " terms exceeds the brute-force limit");
  }

  const auto blocks = static_cast<std::size_t>(width / kBlock + 1);
  std::vector<CompensatedSum> partial(blocks);
  const auto run = [&](std::size_t b) {
    const auto lo = first + static_cast<std::int64_t>(b) * kBlock;
    const auto hi = std::min(last, lo + kBlock - 1);
    partial[b] = sum_block(f, lo, hi, k);
  };

  const auto workers =
      std::min<std::size_t>(blocks, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) run(b);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t b = w; b < blocks; b += workers) run(b);
      });
    }
    for (auto& t : pool) t.join();
  }

  CompensatedSum total;
  for (const auto& p : partial) total.add(p);
  return total.value();
}

std::optional<double> zeta_reference(double p) {
  struct Row {
    double p;
    double zeta;
  };
  static constexpr std::array<Row, 6> kRows = {{{1.4, 3.1055},
                                                {1.5, 2.6124},
                                                {1.6, 2.2858},
                                                {1.7, 2.0543},
                                                {1.8, 1.8822},
                                                {2.0, std::numbers::pi * std::numbers::pi / 6.0}}};
  for (const auto& r : kRows) {
    if (std::abs(r.p - p) < 1e-12) return r.zeta;
  }
  return std::nullopt;
}

double exact_value(const ExactExample& ex, double x) {
  const double a = ex.param;
  switch (ex.which) {
    case Series::Zeta: {
      if (!(a > 1.0)) throw Error(ErrorKind::DivergentSeries, "zeta needs p > 1");
      const auto z = zeta_reference(a);
      if (!z) throw Error(ErrorKind::OutOfRange, "no reference value for p = " + std::to_string(a));
      return *z;
    }
    case Series::Lorentzian: {
      if (!(a > 0.0)) throw Error(ErrorKind::OutOfRange, "a must be positive");
      const double t = x - 2.0 * std::floor(x / 2.0);
      // cosh(a(1-t))/sinh(a) without overflow
      return (std::exp(-a * t) + std::exp(-a * (2.0 - t))) / -std::expm1(-2.0 * a);
    }
    case Series::Resonant: {
      const double r = a / std::numbers::pi;
      if (r == std::floor(r)) throw Error(ErrorKind::SingularParameter, "a/pi is an integer");
      const double t = x - 2.0 * std::floor(x / 2.0);
      return std::sin(a * t) - std::cos(a * t) / std::tan(a);
    }
  }
  return 0.0;
}

double faulhaber(int m, std::int64_t L) {
  if (m < 0 || m > 8) throw Error(ErrorKind::OutOfRange, "faulhaber order " + std::to_string(m));
  if (L < 1) throw Error(ErrorKind::OutOfRange, "faulhaber length must be >= 1");

  // Closed forms for sum_{n=1}^{N} n^m with N = L - 1 (the n = 0 term only matters for m = 0).
  const auto eval = [m](auto N) {
    using T = decltype(N);
    const T one = 1;
    const T a = N * (N + one);
    switch (m) {
      case 0: return N + one;
      case 1: return a / 2;
      case 2: return a * (2 * N + one) / 6;
      case 3: return (a / 2) * (a / 2);
      case 4: return a * (2 * N + one) * (3 * N * N + 3 * N - one) / 30;
      case 5: return a * a * (2 * N * N + 2 * N - one) / 12;
      case 6: return a * (2 * N + one) * (3 * N * N * N * N + 6 * N * N * N - 3 * N + one) / 42;
      case 7: return a * a * (3 * N * N * N * N + 6 * N * N * N - N * N - 4 * N + 2) / 24;
      default: {
        const T n2 = N * N;
        const T n3 = n2 * N;
        return a * (2 * N + one) *
               (5 * n3 * n3 + 15 * n3 * n2 + 5 * n2 * n2 - 15 * n3 - n2 + 9 * N - 3) / 90;
      }
    }
  };

  if (L <= 10000) return static_cast<double>(eval(static_cast<int128>(L - 1)));
  return static_cast<double>(eval(static_cast<long double>(L - 1)));
}

}  // namespace sparsesum::oracle
