#pragma once

// Per-panel weights for the three-node parabolic rule.
//
// A panel (n1, n2, n3) approximates
//   sum_{n=n1}^{n3-1} f(n) e^{-ikn}  ~=  w1 f(n1) e^{-ikn1} + w2 f(n2) e^{-ikn2} + w3 f(n3) e^{-ikn3}
// by interpolating f with the parabola through the three nodes and summing the
// resulting geometric moments in closed form. The rule is exact for quadratic f.

#include <cstdint>

#include "sparsesum/phase.hpp"

namespace sparsesum {

/// Wavenumber reduced into [-pi, pi).
double reduce_wavenumber(double k) noexcept;

struct Panel {
  std::int64_t n1;
  std::int64_t n2;
  std::int64_t n3;

  /// Throws Error{InvalidPanel} unless n1 < n2 < n3.
  void validate() const;
  std::int64_t span() const noexcept { return n3 - n1; }
};

struct PanelWeights {
  complex w1;
  complex w2;
  complex w3;
};

/// y(k) = sum_{m=0}^{L-1} e^{-ikm} and its first two k-derivatives.
struct YTriple {
  complex y;
  complex y1;
  complex y2;
  std::int64_t span;
};

/// |k| * span below this uses the Taylor path.
inline constexpr double kSmallKThreshold = 0.5;

/// Highest power sum used by the Taylor path; the series is truncated after
/// kTaylorOrder terms, which bounds the truncation error at the threshold by
/// 0.5^15 / 15! ~ 2e-17.
inline constexpr int kTaylorOrder = 14;
inline constexpr int kMaxPowerSumExponent = kTaylorOrder + 2;

/// Normalized power sum sum_{m=0}^{L-1} m^e / L^{e+1}, 0 <= e <= kMaxPowerSumExponent,
/// from the Bernoulli-number form of Faulhaber's formula.
double normalized_power_sum(int e, std::int64_t L);

YTriple y_triple(double k, std::int64_t span);

PanelWeights panel_weights(double k, const Panel& panel);

complex panel_sum(double k, const Panel& panel, complex f1, complex f2, complex f3);

}  // namespace sparsesum
