#include "sparsesum/kernel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "sparsesum/error.hpp"

namespace sparsesum {

namespace {

using namespace std::complex_literals;

constexpr double kPi = std::numbers::pi;

// B_0..B_16 with B_1 = -1/2, so that sum_{m=0}^{L-1} m^e comes out directly.
constexpr std::array<double, kMaxPowerSumExponent + 1> kBernoulli = {
    1.0,          -0.5,         1.0 / 6.0,  0.0, -1.0 / 30.0, 0.0, 1.0 / 42.0,  0.0,
    -1.0 / 30.0,  0.0,          5.0 / 66.0, 0.0, -691.0 / 2730.0, 0.0, 7.0 / 6.0, 0.0,
    -3617.0 / 510.0};

double binomial(int n, int r) {
  double b = 1.0;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

// Moments T_j = sum_{m=0}^{L-1} m^j e^{-ikm}, j = 0, 1, 2.
struct Moments {
  complex t0;
  complex t1;
  complex t2;
};

Moments moments_at_zero(std::int64_t span) {
  const double L = static_cast<double>(span);
  return {L, L * (L - 1.0) / 2.0, L * (L - 1.0) * (2.0 * L - 1.0) / 6.0};
}

Moments moments_taylor(double k, std::int64_t span) {
  const double L = static_cast<double>(span);
  std::array<double, kMaxPowerSumExponent + 1> p{};
  for (int e = 0; e <= kMaxPowerSumExponent; ++e) p[e] = normalized_power_sum(e, span);

  // sum_r (-ikL)^r / r! * p_{j+r}
  std::array<complex, 3> acc{};
  complex term = 1.0;
  const complex step = -1i * (k * L);
  for (int r = 0; r <= kTaylorOrder; ++r) {
    for (int j = 0; j < 3; ++j) acc[j] += term * p[j + r];
    term *= step / static_cast<double>(r + 1);
  }
  return {acc[0] * L, acc[1] * (L * L), acc[2] * (L * L * L)};
}

// Centered form: with c = (L-1)/2 and D(k) = sin(kL/2)/sin(k/2) = sum_u cos(ku)
// over the symmetric offsets u = m - c,
//   T0 = phi D,  T1 = phi (c D + i D'),  T2 = phi (c^2 D + 2ic D' - D''),
// where phi = e^{-ikc}.
Moments moments_closed(double k, std::int64_t span) {
  const double L = static_cast<double>(span);
  const double half = 0.5 * L;
  const double s = std::sin(0.5 * k);
  const double ch = std::cos(0.5 * k);
  const auto big = sincos_product(k, half);

  const double d0 = big.sin / s;
  const double num = half * big.cos * s - 0.5 * big.sin * ch;
  const double d1 = num / (s * s);
  const double d2 = -(half * half - 0.25) * big.sin / s - num * ch / (s * s * s);

  const double c = 0.5 * (L - 1.0);
  const auto ph = sincos_product(k, c);
  const complex phi(ph.cos, -ph.sin);
  return {phi * d0, phi * complex(c * d0, d1), phi * complex(c * c * d0 - d2, 2.0 * c * d1)};
}

Moments moments(double k, std::int64_t span) {
  if (k == 0.0) return moments_at_zero(span);
  if (std::abs(k) * static_cast<double>(span) < kSmallKThreshold) return moments_taylor(k, span);
  return moments_closed(k, span);
}

}  // namespace

double reduce_wavenumber(double k) noexcept {
  if (k >= -kPi && k <= kPi) return k;
  double r = std::remainder(k, 2.0 * kPi);
  if (r >= kPi) r -= 2.0 * kPi;
  return r;
}

void Panel::validate() const {
  if (!(n1 < n2 && n2 < n3)) {
    throw Error(ErrorKind::InvalidPanel, "nodes must satisfy n1 < n2 < n3, got (" +
                                             std::to_string(n1) + ", " + std::to_string(n2) + ", " +
                                             std::to_string(n3) + ")");
  }
}

double normalized_power_sum(int e, std::int64_t L) {
  if (e < 0 || e > kMaxPowerSumExponent) {
    throw Error(ErrorKind::OutOfRange, "power sum exponent " + std::to_string(e));
  }
  if (L < 1) throw Error(ErrorKind::OutOfRange, "power sum length must be >= 1");
  // (1/(e+1)) sum_{i=0}^{e} C(e+1, i) B_i L^{-i}, Horner in 1/L
  const double inv = 1.0 / static_cast<double>(L);
  double acc = 0.0;
  for (int i = e; i >= 0; --i) acc = acc * inv + binomial(e + 1, i) * kBernoulli[i];
  return acc / (e + 1);
}

YTriple y_triple(double k, std::int64_t span) {
  if (span < 2) throw Error(ErrorKind::InvalidPanel, "span must be >= 2");
  const auto m = moments(reduce_wavenumber(k), span);
  return {m.t0, -1i * m.t1, -m.t2, span};
}

PanelWeights panel_weights(double k, const Panel& panel) {
  panel.validate();
  k = reduce_wavenumber(k);
  const double d2 = static_cast<double>(panel.n2 - panel.n1);
  const double d3 = static_cast<double>(panel.n3 - panel.n1);
  const double d32 = static_cast<double>(panel.n3 - panel.n2);

  if (k == 0.0) {
    return {(d3 + 1.0) * (3.0 * d2 - d3 + 1.0) / (6.0 * d2),
            d3 * (d3 * d3 - 1.0) / (6.0 * d2 * d32),
            (d3 - 1.0) * (2.0 * d3 - 3.0 * d2 - 1.0) / (6.0 * d32)};
  }

  const auto m = moments(k, panel.span());
  return {m.t0 + (m.t2 - (d2 + d3) * m.t1) / (d2 * d3),
          (d3 * m.t1 - m.t2) / (d2 * d32) * expi(k, panel.n2 - panel.n1),
          (m.t2 - d2 * m.t1) / (d3 * d32) * expi(k, panel.n3 - panel.n1)};
}

complex panel_sum(double k, const Panel& panel, complex f1, complex f2, complex f3) {
  const auto w = panel_weights(k, panel);
  k = reduce_wavenumber(k);
  return w.w1 * f1 * std::conj(expi(k, panel.n1)) + w.w2 * f2 * std::conj(expi(k, panel.n2)) +
         w.w3 * f3 * std::conj(expi(k, panel.n3));
}

}  // namespace sparsesum
