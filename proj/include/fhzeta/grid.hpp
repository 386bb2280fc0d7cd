#pragma once

// Data-parallel evaluation over rectangular (σ, t) grids. Every kernel has an
// OpenMP path and a serial reference path; both fill the same row-major
// layout (σ outer, t inner) and must agree bit for bit.

#include <cstddef>
#include <exception>
#include <limits>
#include <vector>

#include "fhzeta/zeta.hpp"

namespace fhzeta {

enum class Exec { Serial, Parallel };

/// Inclusive lattice: sigma_min + i * sigma_step for i = 0 .. sigma_count()-1.
struct GridSpec {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double sigma_step = 0.1;
  double t_min = 0.0;
  double t_max = 0.0;
  double t_step = 0.1;

  std::size_t sigma_count() const;
  std::size_t t_count() const;
  std::size_t size() const { return sigma_count() * t_count(); }
  double sigma_at(std::size_t i) const { return sigma_min + static_cast<double>(i) * sigma_step; }
  double t_at(std::size_t j) const { return t_min + static_cast<double>(j) * t_step; }
  ComplexPoint point(std::size_t flat) const {
    return {sigma_at(flat / t_count()), t_at(flat % t_count())};
  }
  /// Throws InvalidArgument on inverted ranges or non-positive steps.
  void validate() const;
};

struct GridSample {
  ComplexPoint s;
  cplx value{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
  bool valid = false;  // false at poles and failed evaluations
};

/// Applies f to every grid point. f must be pure; exceptions thrown by f
/// mark the sample invalid instead of escaping the parallel region.
template <class F>
std::vector<GridSample> map_grid(const GridSpec& grid, F&& f, Exec exec) {
  grid.validate();
  const std::size_t n = grid.size();
  std::vector<GridSample> out(n);
  auto one = [&](std::size_t k) {
    GridSample& g = out[k];
    g.s = grid.point(k);
    try {
      g.value = f(g.s);
      g.valid = true;
    } catch (const std::exception&) {
      g.valid = false;
    }
  };
  const auto count = static_cast<long long>(n);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long long k = 0; k < count; ++k) one(static_cast<std::size_t>(k));
  } else {
    for (long long k = 0; k < count; ++k) one(static_cast<std::size_t>(k));
  }
  return out;
}

/// ζ_a over the grid.
std::vector<GridSample> zeta_grid(const ZetaParams& params, const GridSpec& grid,
                                  Exec exec = Exec::Parallel);

/// F_n over the grid (the continuation with the gamma factor stripped).
std::vector<GridSample> continued_grid(const ZetaParams& params, int n, const GridSpec& grid,
                                       Exec exec = Exec::Parallel);

/// |ζ_a| at explicit points; +inf where ζ_a cannot be evaluated.
std::vector<double> zeta_modulus_at(const ZetaParams& params, const std::vector<ComplexPoint>& pts,
                                    Exec exec = Exec::Parallel);

}  // namespace fhzeta
