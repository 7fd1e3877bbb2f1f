#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace sparsesum {

using complex = std::complex<double>;

struct SinCos {
  double sin;
  double cos;
};

/// sin and cos of the exact product k*x. The rounding residual of k*x is
/// recovered with an fma and folded in to first order, so the phase stays
/// accurate for |x| up to 2^53.
inline SinCos sincos_product(double k, double x) noexcept {
  const double p = k * x;
  const double e = std::fma(k, x, -p);
  const double s = std::sin(p);
  const double c = std::cos(p);
  return {s + e * c, c - e * s};
}

/// e^{i k n}
inline complex expi(double k, std::int64_t n) noexcept {
  const auto sc = sincos_product(k, static_cast<double>(n));
  return {sc.cos, sc.sin};
}

}  // namespace sparsesum
