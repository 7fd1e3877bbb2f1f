#include "sparsesum/experiments.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sparsesum/error.hpp"
#include "sparsesum/oracle.hpp"

namespace sparsesum::experiments {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

void Grid::validate() const {
  if (count < 1) throw Error(ErrorKind::OutOfRange, "grid count must be positive");
  if (count > 1 && !(x_min < x_max)) throw Error(ErrorKind::OutOfRange, "grid needs x_min < x_max");
}

std::vector<double> Grid::points() const {
  validate();
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count));
  if (count == 1) return {x_min};
  const double step = (x_max - x_min) / static_cast<double>(count - 1);
  for (std::int64_t i = 0; i < count; ++i) xs.push_back(x_min + step * static_cast<double>(i));
  xs.back() = x_max;
  return xs;
}

double wavenumber_for(double x) {
  const double t = x - 2.0 * std::floor(x / 2.0);
  return (t > 1.0 ? t - 2.0 : t) * kPi;
}

SampledFunction zeta_terms(double p, std::int64_t cutoff) {
  return SampledFunction([p](std::int64_t n) { return complex(std::pow(static_cast<double>(n), -p)); },
                         1, cutoff);
}

SampledFunction lorentzian_terms(double a, std::int64_t cutoff) {
  return SampledFunction(
      [a](std::int64_t n) {
        const double r = static_cast<double>(n) * kPi / a;
        return complex(1.0 / (r * r + 1.0));
      },
      1, cutoff);
}

SampledFunction resonant_terms(double a, std::int64_t cutoff) {
  return SampledFunction(
      [a](std::int64_t n) {
        const double t = static_cast<double>(n) * kPi;
        return complex(a * a / ((t - a) * (t + a)));
      },
      1, cutoff);
}

std::vector<ZetaRow> run_zeta(const std::vector<double>& p_list, double q, std::int64_t count) {
  const auto nodes = q_sequence({q, count});
  std::vector<ZetaRow> rows;
  for (const double p : p_list) {
    if (!(p > 1.0)) {
      throw Error(ErrorKind::DivergentSeries, "p = " + std::to_string(p) + " must exceed 1");
    }
    const auto r = series_sum(zeta_terms(p, nodes.last()), nodes);
    const auto ref = oracle::zeta_reference(p);
    std::optional<double> delta;
    if (ref) delta = r.value.real() - *ref;
    rows.push_back({p, r.value.real(), ref, delta, r.node_count, r.cutoff, r.efficiency});
  }
  return rows;
}

Curve run_example2(double a, const Grid& grid, std::int64_t count) {
  const auto nodes = hybrid_nodes(HybridSpec::for_lorentzian(a, count));
  const auto f = lorentzian_terms(a, nodes.last());
  Curve curve{{}, nodes.size(), nodes.last()};
  for (const double x : grid.points()) {
    const auto c = cosine_transform(f, nodes, wavenumber_for(x));
    const double approx = 1.0 / a + 2.0 / a * c.value.real();
    const double exact = oracle::exact_value({oracle::Series::Lorentzian, a}, x);
    curve.rows.push_back({x, approx, exact, approx - exact});
  }
  return curve;
}

Curve run_example3(double a, const Grid& grid, std::int64_t count) {
  const auto segments = split_nodes(SplitSpec::for_resonant(a, count));
  const auto cutoff = segments.back().last;
  const auto f = resonant_terms(a, cutoff);
  std::size_t evaluations = 0;
  for (const auto& s : segments) evaluations += s.evaluation_count();
  Curve curve{{}, evaluations, cutoff};
  for (const double x : grid.points()) {
    const auto c = piecewise_transform(segments, f, wavenumber_for(x), TransformKind::Cosine);
    const double approx = 1.0 / a - 2.0 / a * c.value.real();
    const double exact = oracle::exact_value({oracle::Series::Resonant, a}, x);
    curve.rows.push_back({x, approx, exact, approx - exact});
  }
  return curve;
}

double lorentzian_truncated(double a, double x, std::int64_t cutoff) {
  const auto s = oracle::brute_force_dft(lorentzian_terms(a, cutoff), 1, cutoff, wavenumber_for(x));
  return 1.0 / a + 2.0 / a * s.real();
}

double resonant_truncated(double a, double x, std::int64_t cutoff) {
  const auto s = oracle::brute_force_dft(resonant_terms(a, cutoff), 1, cutoff, wavenumber_for(x));
  return 1.0 / a - 2.0 / a * s.real();
}

}  // namespace sparsesum::experiments
