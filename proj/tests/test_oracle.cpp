#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sparsesum/error.hpp"
#include "sparsesum/oracle.hpp"

using namespace sparsesum;
using namespace sparsesum::oracle;

namespace {

constexpr double kPi = std::numbers::pi;

SampledFunction constant_one(std::int64_t first, std::int64_t last) {
  return SampledFunction([](std::int64_t) { return complex(1.0); }, first, last);
}

}  // namespace

TEST_CASE("brute_force_dft") {
  CHECK(brute_force_dft(constant_one(0, 9), 0, 9, 0.0) == complex(10.0));
  CHECK(std::abs(brute_force_dft(constant_one(0, 1), 0, 1, kPi)) < 1e-15);

  SUBCASE("1/n^2 to 1e6 misses a tail in (1/(N+1), 1/N)") {
    const SampledFunction f(
        [](std::int64_t n) { return complex(1.0 / (static_cast<double>(n) * static_cast<double>(n))); },
        1, 1000000);
    const double tail = kPi * kPi / 6.0 - brute_force_dft(f, 1, 1000000, 0.0).real();
    CHECK(tail > 1.0 / 1000001.0);
    CHECK(tail < 1.0 / 1000000.0);
  }
  SUBCASE("cost guard") {
    const auto f = constant_one(0, 2 * kBruteForceLimit);
    try {
      brute_force_dft(f, 0, kBruteForceLimit + 1, 0.1);
      FAIL("expected cost guard");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::CostGuard);
    }
  }
  SUBCASE("block reduction matches a closed geometric sum") {
    const std::int64_t last = 3 * (1 << 20) + 17;
    const double k = 0.3;
    const auto got = brute_force_dft(constant_one(0, last), 0, last, k);
    const auto L = static_cast<long double>(last + 1);
    const long double kl = k;
    const std::complex<long double> want =
        (1.0L - std::polar(1.0L, -kl * L)) / (1.0L - std::polar(1.0L, -kl));
    CHECK(std::abs(got.real() - static_cast<double>(want.real())) < 1e-9);
    CHECK(std::abs(got.imag() - static_cast<double>(want.imag())) < 1e-9);
  }
}

TEST_CASE("exact_value") {
  CHECK(exact_value({Series::Zeta, 2.0}) == doctest::Approx(1.6449).epsilon(1e-4));
  CHECK(exact_value({Series::Zeta, 1.5}) == 2.6124);
  CHECK_THROWS_AS(exact_value({Series::Zeta, 3.0}), Error);
  CHECK_THROWS_AS(exact_value({Series::Zeta, 1.0}), Error);

  CHECK(exact_value({Series::Lorentzian, 1.0}, 1.0) ==
        doctest::Approx(1.0 / std::sinh(1.0)).epsilon(1e-15));
  CHECK(exact_value({Series::Lorentzian, 1.0}, 1.0) == doctest::Approx(0.850918).epsilon(1e-6));
  for (double a : {0.3, 1.0, 5.0, 1e5}) {
    for (double x : {0.01, 0.4, 0.93}) {
      const double l = exact_value({Series::Lorentzian, a}, x);
      CHECK(l == doctest::Approx(exact_value({Series::Lorentzian, a}, 2.0 - x)).epsilon(1e-14));
      CHECK(std::isfinite(l));
    }
  }
  // period 2
  CHECK(exact_value({Series::Lorentzian, 2.0}, 0.3) ==
        doctest::Approx(exact_value({Series::Lorentzian, 2.0}, 4.3)).epsilon(1e-12));

  const double a = 1.5 * kPi;
  CHECK(exact_value({Series::Resonant, a}, 0.5) ==
        doctest::Approx(std::sin(a / 2) - std::cos(a / 2) / std::tan(a)).epsilon(1e-14));
  try {
    exact_value({Series::Resonant, 3.0 * kPi}, 0.5);
    FAIL("expected singular parameter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularParameter);
  }
}

TEST_CASE("faulhaber") {
  CHECK(faulhaber(0, 7) == 7.0);
  CHECK(faulhaber(1, 10) == 45.0);
  CHECK(faulhaber(2, 4) == 14.0);
  CHECK(faulhaber(8, 1) == 0.0);
  CHECK(faulhaber(3, 1000000) == doctest::Approx(2.49999500000250e23).epsilon(1e-14));
  CHECK_THROWS_AS(faulhaber(9, 3), Error);
  CHECK_THROWS_AS(faulhaber(-1, 3), Error);
  CHECK_THROWS_AS(faulhaber(2, 0), Error);
}
