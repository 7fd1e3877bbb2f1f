#pragma once

// Drivers for the three model problems: zeta partial sums on a q-sequence,
// the Lorentzian cosine series on hybrid nodes and the resonant cosine series
// on a singularity split. The 1/a constant and the 2/a prefactor are applied
// here; the transform core only ever sees sum f(n) e^{-ikn}.

#include <cstdint>
#include <optional>
#include <vector>

#include "sparsesum/nodes.hpp"
#include "sparsesum/transform.hpp"

namespace sparsesum::experiments {

struct Grid {
  double x_min = 0.01;
  double x_max = 1.99;
  std::int64_t count = 199;

  /// Throws Error{OutOfRange} unless x_min < x_max (or count == 1) and count > 0.
  void validate() const;
  std::vector<double> points() const;
};

/// Wavenumber for cos(n pi x), folded so that x in (1, 2) maps to (x - 2) pi exactly.
double wavenumber_for(double x);

/// n^{-p} on [1, cutoff]
SampledFunction zeta_terms(double p, std::int64_t cutoff);
/// 1/((n pi/a)^2 + 1) on [1, cutoff]
SampledFunction lorentzian_terms(double a, std::int64_t cutoff);
/// 1/((n pi/a)^2 - 1) on [1, cutoff]
SampledFunction resonant_terms(double a, std::int64_t cutoff);

struct ZetaRow {
  double p;
  double sum;
  std::optional<double> reference;
  std::optional<double> delta;
  std::size_t node_count;
  std::int64_t cutoff;
  double efficiency;
};

/// Throws Error{DivergentSeries} for p <= 1.
std::vector<ZetaRow> run_zeta(const std::vector<double>& p_list, double q = 1.15,
                              std::int64_t count = 151);

struct CurveRow {
  double x;
  double approx;
  double exact;
  double error;  // approx - exact
};

struct Curve {
  std::vector<CurveRow> rows;
  std::size_t node_count;
  std::int64_t cutoff;
};

Curve run_example2(double a, const Grid& grid = {}, std::int64_t count = 151);

/// Throws Error{SingularParameter} when a/pi is an integer.
Curve run_example3(double a, const Grid& grid = {}, std::int64_t count = 151);

/// Term-by-term value of the Lorentzian series truncated at `cutoff`.
double lorentzian_truncated(double a, double x, std::int64_t cutoff);
/// Term-by-term value of the resonant series truncated at `cutoff`.
double resonant_truncated(double a, double x, std::int64_t cutoff);

}  // namespace sparsesum::experiments
