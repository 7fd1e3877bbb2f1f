#pragma once

#include <cmath>

#include "sparsesum/phase.hpp"

namespace sparsesum {

/// Neumaier-compensated accumulator for real and imaginary parts.
class CompensatedSum {
 public:
  void add(complex v) noexcept {
    add_part(re_, re_c_, v.real());
    add_part(im_, im_c_, v.imag());
  }

  void add(const CompensatedSum& other) noexcept {
    add({other.re_, other.im_});
    add({other.re_c_, other.im_c_});
  }

  complex value() const noexcept { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double x) noexcept {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double re_ = 0.0;
  double re_c_ = 0.0;
  double im_ = 0.0;
  double im_c_ = 0.0;
};

}  // namespace sparsesum
