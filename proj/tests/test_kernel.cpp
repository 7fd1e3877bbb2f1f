#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sparsesum/error.hpp"
#include "sparsesum/kernel.hpp"

using namespace sparsesum;
using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;

// sum_{m=0}^{L-1} (-i m)^j e^{-ikm}, i.e. the j-th k-derivative of y, term by term
complex direct_y(double k, std::int64_t L, int j) {
  complex acc = 0.0;
  for (std::int64_t m = 0; m < L; ++m) {
    const double x = static_cast<double>(m);
    acc += std::pow(-1i * x, j) * std::exp(-1i * (k * x));
  }
  return acc;
}

// sum_{n=n1}^{n3-1} q(n) e^{-ikn}
template <class F>
complex direct_panel(double k, const Panel& p, F q) {
  complex acc = 0.0;
  for (auto n = p.n1; n < p.n3; ++n) acc += q(static_cast<double>(n)) * std::exp(-1i * (k * n));
  return acc;
}

template <class F>
complex via_weights(double k, const Panel& p, F q) {
  return panel_sum(k, p, q(p.n1), q(p.n2), q(p.n3));
}

void check_close(complex got, complex want, double rel) {
  CHECK(std::abs(got - want) <= rel * std::abs(want));
}

}  // namespace

TEST_CASE("y_triple limits at k = 0") {
  const auto t = y_triple(0.0, 4);
  CHECK(t.y == complex(4.0, 0.0));
  CHECK(t.y1 == complex(0.0, -6.0));
  CHECK(t.y2 == complex(-14.0, 0.0));
  CHECK(t.span == 4);
}

TEST_CASE("y_triple at k = pi, L = 2 cancels") {
  const auto t = y_triple(kPi, 2);
  CHECK(std::abs(t.y - direct_y(kPi, 2, 0)) < 1e-15);
  CHECK(std::abs(t.y) < 1e-15);  // 1 + e^{-i pi}
}

TEST_CASE("y_triple matches direct summation on both paths") {
  SUBCASE("k = 1e-8, L = 10 (Taylor)") {
    for (int j = 0; j < 3; ++j) {
      const auto t = y_triple(1e-8, 10);
      const complex got = j == 0 ? t.y : j == 1 ? t.y1 : t.y2;
      check_close(got, direct_y(1e-8, 10, j), 1e-12);
    }
  }
  SUBCASE("sweep across the crossover") {
    for (std::int64_t L : {2, 3, 7, 50, 333, 4000}) {
      for (double kl : {1e-3, 0.1, 0.49, 0.5, 0.51, 2.0, 40.0}) {
        const double k = kl / static_cast<double>(L);
        if (k > kPi) continue;
        const auto t = y_triple(k, L);
        check_close(t.y, direct_y(k, L, 0), 1e-12);
        check_close(t.y1, direct_y(k, L, 1), 1e-12);
        check_close(t.y2, direct_y(k, L, 2), 1e-12);
      }
    }
  }
}

TEST_CASE("y_triple rejects spans below 2") {
  CHECK_THROWS_AS(y_triple(0.3, 1), Error);
  try {
    y_triple(0.3, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPanel);
  }
}

TEST_CASE("normalized power sums") {
  // sum_{m=0}^{L-1} m^e / L^{e+1}
  for (std::int64_t L : {1, 2, 5, 37}) {
    for (int e = 0; e <= kMaxPowerSumExponent; ++e) {
      long double direct = 0;
      for (std::int64_t m = 0; m < L; ++m) direct += std::pow(static_cast<long double>(m), e);
      const double want = static_cast<double>(direct / std::pow(static_cast<long double>(L), e + 1));
      CHECK(normalized_power_sum(e, L) == doctest::Approx(want).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(normalized_power_sum(kMaxPowerSumExponent + 1, 3), Error);
}

TEST_CASE("panel weights at k = 0") {
  SUBCASE("(0,1,2) -> (1,1,0)") {
    const auto w = panel_weights(0.0, {0, 1, 2});
    CHECK(w.w1 == complex(1.0));
    CHECK(w.w2 == complex(1.0));
    CHECK(w.w3 == complex(0.0));
  }
  SUBCASE("(0,2,4) -> (5/4, 5/2, 1/4)") {
    const auto w = panel_weights(0.0, {0, 2, 4});
    CHECK(w.w1 == complex(1.25));
    CHECK(w.w2 == complex(2.5));
    CHECK(w.w3 == complex(0.25));
    CHECK((w.w1 + w.w2 + w.w3).real() == 4.0);
  }
  SUBCASE("imaginary parts are exactly zero") {
    const auto w = panel_weights(0.0, {-17, 3, 1000});
    CHECK(w.w1.imag() == 0.0);
    CHECK(w.w2.imag() == 0.0);
    CHECK(w.w3.imag() == 0.0);
  }
}

TEST_CASE("panel (3,7,20) at k = 0.7 reproduces quadratics") {
  const Panel p{3, 7, 20};
  check_close(via_weights(0.7, p, [](double) { return 1.0; }),
              direct_panel(0.7, p, [](double) { return 1.0; }), 1e-10);
  check_close(via_weights(0.7, p, [](double n) { return n; }),
              direct_panel(0.7, p, [](double n) { return n; }), 1e-10);
  check_close(via_weights(0.7, p, [](double n) { return n * n; }),
              direct_panel(0.7, p, [](double n) { return n * n; }), 1e-10);
}

TEST_CASE("panel_sum examples") {
  SUBCASE("constant on (0,1,2)") {
    for (double k : {-2.5, -0.1, 0.0, 1e-9, 1.0, kPi}) {
      const auto got = panel_sum(k, {0, 1, 2}, 1.0, 1.0, 1.0);
      CHECK(std::abs(got - (1.0 + std::exp(-1i * k))) < 1e-15);
    }
  }
  SUBCASE("n^2 at k = 0 on (0,2,4) is 14") {
    CHECK(std::abs(panel_sum(0.0, {0, 2, 4}, 0.0, 4.0, 16.0) - 14.0) < 1e-13);
  }
  SUBCASE("n at k = 1.3 on (0,1,2)") {
    CHECK(std::abs(panel_sum(1.3, {0, 1, 2}, 0.0, 1.0, 2.0) - std::exp(-1.3i)) < 1e-15);
  }
}

TEST_CASE("invalid panels are rejected") {
  CHECK_THROWS_AS(panel_weights(0.1, {0, 0, 2}), Error);
  CHECK_THROWS_AS(panel_weights(0.1, {3, 2, 5}), Error);
  CHECK_THROWS_AS(panel_sum(0.1, {0, 2, 2}, 1.0, 1.0, 1.0), Error);
}

TEST_CASE("wavenumber reduction") {
  CHECK(reduce_wavenumber(0.5) == 0.5);
  CHECK(reduce_wavenumber(kPi) == kPi);
  CHECK(reduce_wavenumber(-kPi) == -kPi);
  CHECK(reduce_wavenumber(2.0 * kPi + 0.25) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(reduce_wavenumber(-7.0) == doctest::Approx(-7.0 + 2.0 * kPi).epsilon(1e-14));
  // weights are 2pi periodic
  const auto a = panel_weights(0.3, {0, 5, 11});
  const auto b = panel_weights(0.3 + 4.0 * kPi, {0, 5, 11});
  CHECK(std::abs(a.w2 - b.w2) < 1e-12);
}

TEST_CASE("weights at k = +-pi are finite") {
  for (double k : {kPi, -kPi}) {
    const auto w = panel_weights(k, {0, 3, 8});
    CHECK(std::isfinite(std::abs(w.w1)));
    check_close(via_weights(k, {0, 3, 8}, [](double n) { return n * n - 2.0; }),
                direct_panel(k, {0, 3, 8}, [](double n) { return n * n - 2.0; }), 1e-12);
  }
}

TEST_CASE("huge spans lift to floating point before squaring") {
  // span of the last zeta panel; (n3 - n1)^2 overflows 64-bit integers
  const Panel p{1'000'000'000, 1'150'000'000, 1'272'553'509};
  const auto w = panel_weights(0.0, p);
  CHECK((w.w1 + w.w2 + w.w3).real() == doctest::Approx(272'553'509.0).epsilon(1e-14));
  const auto wk = panel_weights(1e-3, p);
  CHECK(std::isfinite(std::abs(wk.w1) + std::abs(wk.w2) + std::abs(wk.w3)));
}

TEST_CASE("weights for symmetric panels are flat to first order near k = 0") {
  // symmetric panels have zero first derivative, so the k=0 forms are approached
  // quadratically; asymmetric ones move at O(k * span)
  const auto w0 = panel_weights(0.0, {0, 50, 100});
  const auto w = panel_weights(1e-6, {0, 50, 100});
  CHECK(std::abs(w.w2 - w0.w2) < 1e-5 * std::abs(w0.w2));
  const auto a0 = panel_weights(0.0, {0, 1, 4});
  const auto a = panel_weights(1e-6, {0, 1, 4});
  CHECK(a0.w1 == complex(0.0));
  CHECK(std::abs(a.w1 - 2.5e-6i) < 1e-11);  // dw1/dk = 2.5i at k = 0
}
