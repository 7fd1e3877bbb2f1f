#pragma once

// Ground-truth references used to check the weighted scheme: compensated
// term-by-term summation, closed forms for the three model series and exact
// power sums.

#include <cstdint>
#include <optional>

#include "sparsesum/transform.hpp"

namespace sparsesum::oracle {

inline constexpr std::int64_t kBruteForceLimit = 100'000'000;

/// Compensated sum_{n=first}^{last} f(n) e^{-ikn}. Ranges wider than
/// kBruteForceLimit need force = true (Error{CostGuard} otherwise). Large ranges
/// are split into fixed blocks reduced in a fixed order, so the result does not
/// depend on the number of worker threads.
complex brute_force_dft(const SampledFunction& f, std::int64_t first, std::int64_t last, double k,
                        bool force = false);

enum class Series {
  Zeta,        // sum_{n>=1} n^{-p}
  Lorentzian,  // 1/a + (2/a) sum cos(n pi x) / ((n pi/a)^2 + 1)
  Resonant,    // 1/a - (2/a) sum cos(n pi x) / ((n pi/a)^2 - 1)
};

struct ExactExample {
  Series which;
  double param;  // p for Zeta, a otherwise
};

/// Closed-form value. Zeta ignores x and only knows the tabulated arguments
/// (Error{OutOfRange} otherwise); the Fourier series take x modulo 2.
/// Resonant with integer a/pi throws Error{SingularParameter}.
double exact_value(const ExactExample& ex, double x = 0.0);

/// Reference zeta(p) if tabulated: 4-decimal values for p in {1.4, 1.5, 1.6, 1.7, 1.8}
/// and pi^2/6 at p = 2.
std::optional<double> zeta_reference(double p);

/// sum_{n=0}^{L-1} n^m for 0 <= m <= 8, L >= 1 (Error{OutOfRange} otherwise).
/// Exact whenever the result is below 2^53.
double faulhaber(int m, std::int64_t L);

}  // namespace sparsesum::oracle
