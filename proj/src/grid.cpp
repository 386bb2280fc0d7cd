#include "fhzeta/grid.hpp"

#include <cmath>

#include "fhzeta/error.hpp"

namespace fhzeta {

namespace {

std::size_t lattice_count(double lo, double hi, double step) {
  // tolerate the usual decimal-step roundoff at the top end
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

}  // namespace

std::size_t GridSpec::sigma_count() const { return lattice_count(sigma_min, sigma_max, sigma_step); }

std::size_t GridSpec::t_count() const { return lattice_count(t_min, t_max, t_step); }

void GridSpec::validate() const {
  const bool finite = std::isfinite(sigma_min) && std::isfinite(sigma_max) &&
                      std::isfinite(t_min) && std::isfinite(t_max);
  if (!finite || !(sigma_step > 0.0) || !(t_step > 0.0) || sigma_max < sigma_min ||
      t_max < t_min) {
    throw Error(ErrorCode::InvalidArgument, "grid needs ordered finite ranges and positive steps");
  }
  if (size() > 50'000'000) {
    throw Error(ErrorCode::InvalidArgument, "grid too large");
  }
}

std::vector<GridSample> zeta_grid(const ZetaParams& params, const GridSpec& grid, Exec exec) {
  return map_grid(
      grid, [&](ComplexPoint s) { return zeta_a(params, s).value; }, exec);
}

std::vector<GridSample> continued_grid(const ZetaParams& params, int n, const GridSpec& grid,
                                       Exec exec) {
  return map_grid(
      grid, [&](ComplexPoint s) { return eval_continued(params, s, n).value; }, exec);
}

std::vector<double> zeta_modulus_at(const ZetaParams& params, const std::vector<ComplexPoint>& pts,
                                    Exec exec) {
  std::vector<double> out(pts.size());
  auto one = [&](std::size_t k) {
    try {
      out[k] = std::abs(zeta_a(params, pts[k]).value);
    } catch (const std::exception&) {
      out[k] = std::numeric_limits<double>::infinity();
    }
  };
  const auto count = static_cast<long long>(pts.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long long k = 0; k < count; ++k) one(static_cast<std::size_t>(k));
  } else {
    for (long long k = 0; k < count; ++k) one(static_cast<std::size_t>(k));
  }
  return out;
}

}  // namespace fhzeta
