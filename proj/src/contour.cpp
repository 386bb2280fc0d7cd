#include "fhzeta/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>

#include "fhzeta/error.hpp"

namespace fhzeta {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string rect_str(const Rectangle& r) {
  return "[" + std::to_string(r.sigma_min) + ", " + std::to_string(r.sigma_max) + "] x [" +
         std::to_string(r.t_min) + ", " + std::to_string(r.t_max) + "]";
}

// distance from the real point q to the rectangle perimeter
double distance_to_boundary(const Rectangle& r, double q) {
  const bool inside = q > r.sigma_min && q < r.sigma_max && r.t_min < 0.0 && r.t_max > 0.0;
  if (inside) {
    return std::min({q - r.sigma_min, r.sigma_max - q, -r.t_min, r.t_max});
  }
  const double dx = std::max({r.sigma_min - q, 0.0, q - r.sigma_max});
  const double dy = std::max({r.t_min, 0.0, -r.t_max});
  return std::hypot(dx, dy);
}

std::vector<double> effective_poles_inside(double a, const Rectangle& r) {
  std::vector<double> poles;
  if (!(r.t_min < 0.0 && r.t_max > 0.0)) return poles;
  const double top = std::min(1.0, std::floor(r.sigma_max));
  for (double p = top; p > r.sigma_min; p -= 1.0) {
    if (p < r.sigma_max && is_effective_pole(a, p)) poles.push_back(p);
  }
  std::sort(poles.begin(), poles.end(), std::greater<>());
  return poles;
}

bool in_pole_lattice(double x, double tol) {
  return x <= 1.0 + tol && std::fabs(x - std::round(x)) < tol;
}

cplx zeta_value(const ZetaParams& params, cplx s) {
  return zeta_a(params, ComplexPoint::from(s)).value;
}

// evaluates ζ_a at every point, OpenMP across points; first failure rethrown
std::vector<cplx> evaluate_nodes(const ZetaParams& params, const std::vector<cplx>& pts) {
  std::vector<cplx> out(pts.size());
  std::vector<std::exception_ptr> errors(pts.size());
  const auto count = static_cast<long long>(pts.size());
#pragma omp parallel for schedule(dynamic, 2)
  for (long long k = 0; k < count; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = zeta_value(params, pts[static_cast<std::size_t>(k)]);
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

struct PhaseWalker {
  const ZetaParams& params;
  const WindingOptions& opt;
  int evaluations = 0;
  double min_modulus = std::numeric_limits<double>::infinity();

  double step(cplx fa, cplx fb) const { return std::arg(fb / fa); }

  // phase change of ζ_a from a to b, bisecting until each piece is below the limit
  double walk(cplx a, cplx fa, cplx b, cplx fb) {
    struct Seg {
      cplx a, fa, b, fb;
      int depth;
    };
    double total = 0.0;
    std::vector<Seg> stack{{a, fa, b, fb, 0}};
    while (!stack.empty()) {
      Seg s = stack.back();
      stack.pop_back();
      const double d = step(s.fa, s.fb);
      if (!std::isfinite(d)) {
        throw Error(ErrorCode::PhaseTrackingFailed, "zeta_a vanished on the contour");
      }
      if (std::fabs(d) < opt.max_phase_step) {
        total += d;
        continue;
      }
      if (s.depth > 48 || evaluations >= opt.max_evaluations) {
        throw Error(ErrorCode::PhaseTrackingFailed,
                    "phase refinement exhausted its budget near (" +
                        std::to_string(s.a.real()) + ", " + std::to_string(s.a.imag()) + ")");
      }
      const cplx mid = 0.5 * (s.a + s.b);
      const cplx fm = zeta_value(params, mid);
      ++evaluations;
      min_modulus = std::min(min_modulus, std::abs(fm));
      // process the first half first
      stack.push_back({mid, fm, s.b, s.fb, s.depth + 1});
      stack.push_back({s.a, s.fa, mid, fm, s.depth + 1});
    }
    return total;
  }
};

int zero_count(const ZetaParams& params, const Rectangle& cell, const WindingOptions& opt) {
  return detail::contour_winding(params, cell, opt).inferred_zero_count;
}

ZeroClass classify(double a, ComplexPoint z) {
  return near_trivial_zero_lattice(a, z, 1e-6) ? ZeroClass::Trivial
                                               : ZeroClass::NontrivialCandidate;
}

}  // namespace

double Rectangle::diameter() const { return std::hypot(sigma_max - sigma_min, t_max - t_min); }

void validate_rectangle(double a, const Rectangle& r, double min_clearance) {
  const bool finite = std::isfinite(r.sigma_min) && std::isfinite(r.sigma_max) &&
                      std::isfinite(r.t_min) && std::isfinite(r.t_max);
  if (!finite || !(r.sigma_min < r.sigma_max) || !(r.t_min < r.t_max)) {
    throw Error(ErrorCode::InvalidRectangle, "rectangle must be ordered and finite: " + rect_str(r));
  }
  if (r.t_min < 0.0 && r.t_max > 0.0 &&
      std::fabs(r.t_min + r.t_max) > 1e-12 * std::max(1.0, r.t_max)) {
    throw Error(ErrorCode::InvalidRectangle,
                "rectangle straddles the real axis asymmetrically: " + rect_str(r));
  }
  const double lo = r.sigma_min - min_clearance - 1.0;
  const double hi = r.sigma_max + min_clearance + 1.0;
  // poles {1, 0, -1, ...}
  for (double p = std::min(1.0, std::floor(hi)); p >= lo; p -= 1.0) {
    if (distance_to_boundary(r, p) < min_clearance) {
      throw Error(ErrorCode::BoundaryTooCloseToSingularity,
                  "pole " + std::to_string(p) + " too close to " + rect_str(r));
    }
  }
  // trivial zeros 2 - a - n
  const double first_n = std::max(1.0, std::floor(2.0 - a - hi));
  for (double n = first_n; 2.0 - a - n >= lo; n += 1.0) {
    const double q = 2.0 - a - n;
    if (q <= hi && distance_to_boundary(r, q) < min_clearance) {
      throw Error(ErrorCode::BoundaryTooCloseToSingularity,
                  "trivial zero " + std::to_string(q) + " too close to " + rect_str(r));
    }
  }
}

ContourReport detail::contour_winding(const ZetaParams& params, const Rectangle& r,
                                      const WindingOptions& opt) {
  const std::array<cplx, 4> corners = {cplx{r.sigma_min, r.t_min}, cplx{r.sigma_max, r.t_min},
                                       cplx{r.sigma_max, r.t_max}, cplx{r.sigma_min, r.t_max}};
  std::vector<cplx> nodes;
  for (std::size_t e = 0; e < 4; ++e) {
    const cplx from = corners[e];
    const cplx to = corners[(e + 1) % 4];
    const double len = std::abs(to - from);
    const int m = std::max(4, static_cast<int>(std::ceil(len / opt.max_segment)));
    for (int i = 0; i < m; ++i) nodes.push_back(from + (to - from) * (static_cast<double>(i) / m));
  }
  const std::vector<cplx> values = evaluate_nodes(params, nodes);

  PhaseWalker walker{params, opt};
  walker.evaluations = static_cast<int>(nodes.size());
  for (const cplx& v : values) walker.min_modulus = std::min(walker.min_modulus, std::abs(v));

  double total = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::size_t j = (i + 1) % nodes.size();
    total += walker.walk(nodes[i], values[i], nodes[j], values[j]);
  }
  const double turns = total / kTwoPi;
  const double rounded = std::round(turns);
  if (std::fabs(turns - rounded) > 0.01) {
    throw Error(ErrorCode::PhaseTrackingFailed,
                "phase did not close: " + std::to_string(turns) + " turns on " + rect_str(r));
  }
  ContourReport rep;
  rep.winding = static_cast<int>(rounded);
  rep.known_poles_inside = effective_poles_inside(params.a(), r);
  rep.inferred_zero_count = rep.winding + static_cast<int>(rep.known_poles_inside.size());
  rep.min_boundary_modulus = walker.min_modulus;
  rep.evaluations = walker.evaluations;
  if (rep.inferred_zero_count < 0) {
    throw Error(ErrorCode::PhaseTrackingFailed,
                "winding implies a negative zero count on " + rect_str(r));
  }
  return rep;
}

ContourReport winding_number(const ZetaParams& params, const Rectangle& rect,
                             const WindingOptions& opt) {
  validate_rectangle(params.a(), rect, opt.min_clearance);
  return detail::contour_winding(params, rect, opt);
}

double find_real_zero(const ZetaParams& params, double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw Error(ErrorCode::InvalidArgument, "bracket must be finite with lo < hi");
  }
  // lattice poles in the bracket; for integer a the ones below 2-a cancel
  for (double p = std::min(1.0, std::floor(hi + kProximityTol)); p >= lo - kProximityTol;
       p -= 1.0) {
    if (is_effective_pole(params.a(), p)) {
      throw Error(ErrorCode::PoleInBracket,
                  "pole " + std::to_string(p) + " lies in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
    }
  }
  auto f = [&](double x) { return zeta_a(params, {x, 0.0}).value.real(); };
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw Error(ErrorCode::NoSignChange, "zeta_a has the same sign at both ends of the bracket");
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (in_pole_lattice(mid, kProximityTol)) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<ZeroCandidate> scan_region(const ZetaParams& params, const Rectangle& rect,
                                       double resolution, const ScanOptions& opt) {
  if (!(resolution > 0.0) || resolution > 0.1) {
    throw Error(ErrorCode::InvalidArgument, "scan resolution must lie in (0, 0.1]");
  }
  validate_rectangle(params.a(), rect);
  const double a = params.a();

  const GridSpec grid{rect.sigma_min, rect.sigma_max, resolution,
                      rect.t_min,     rect.t_max,     resolution};
  const auto samples = zeta_grid(params, grid, opt.exec);
  const std::size_t ns = grid.sigma_count();
  const std::size_t nt = grid.t_count();
  auto modulus = [&](std::size_t i, std::size_t j) {
    const GridSample& g = samples[i * nt + j];
    return g.valid ? std::abs(g.value) : std::numeric_limits<double>::infinity();
  };

  std::vector<ComplexPoint> minima;
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      const double m = modulus(i, j);
      if (!(m < opt.trigger)) continue;
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const long long ii = static_cast<long long>(i) + di;
          const long long jj = static_cast<long long>(j) + dj;
          if (ii < 0 || jj < 0 || ii >= static_cast<long long>(ns) ||
              jj >= static_cast<long long>(nt)) {
            continue;
          }
          if (modulus(static_cast<std::size_t>(ii), static_cast<std::size_t>(jj)) < m) {
            is_min = false;
            break;
          }
        }
      }
      if (is_min) minima.push_back(samples[i * nt + j].s);
    }
  }

  std::vector<ZeroCandidate> found;
  auto polish = [&](const Rectangle& leaf) {
    const cplx start{0.5 * (leaf.sigma_min + leaf.sigma_max), 0.5 * (leaf.t_min + leaf.t_max)};
    cplx z = start;
    const double h = std::max(1e-9, 0.25 * leaf.diameter());
    for (int it = 0; it < 12; ++it) {
      const cplx fz = zeta_value(params, z);
      if (std::abs(fz) < 1e-15) break;
      const cplx d = (zeta_value(params, z + h) - zeta_value(params, z - h)) / (2.0 * h);
      const cplx next = z - fz / d;
      if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
      if (std::abs(next - start) > 10.0 * leaf.diameter()) break;
      const bool done = std::abs(next - z) < 1e-15 * (1.0 + std::abs(z));
      z = next;
      if (done) break;
    }
    if (std::fabs(z.imag()) < 1e-12) z.imag(0.0);
    ZeroCandidate c;
    c.location = ComplexPoint::from(z);
    c.residual = std::abs(zeta_value(params, z));
    c.classification = classify(a, c.location);
    if (c.residual <= opt.max_residual) found.push_back(c);
  };

  // subdivides a cell holding `count` zeros until the cells are small enough
  auto refine = [&](auto&& self, const Rectangle& cell, int count, int depth) -> void {
    if (cell.diameter() <= opt.cell_diameter || depth > 80) {
      polish(cell);
      return;
    }
    static constexpr std::array<std::array<double, 2>, 3> kSplits = {
        {{0.5173, 0.4781}, {0.4637, 0.5419}, {0.5521, 0.5257}}};
    for (const auto& frac : kSplits) {
      const double sm = cell.sigma_min + frac[0] * (cell.sigma_max - cell.sigma_min);
      const double tm = cell.t_min + frac[1] * (cell.t_max - cell.t_min);
      const std::array<Rectangle, 4> parts = {
          Rectangle{cell.sigma_min, sm, cell.t_min, tm}, Rectangle{sm, cell.sigma_max, cell.t_min, tm},
          Rectangle{cell.sigma_min, sm, tm, cell.t_max}, Rectangle{sm, cell.sigma_max, tm, cell.t_max}};
      WindingOptions wopt;
      wopt.max_segment = std::min(0.05, 0.25 * (cell.sigma_max - cell.sigma_min));
      std::array<int, 4> counts{};
      int sum = 0;
      bool ok = true;
      try {
        for (std::size_t k = 0; k < 4; ++k) {
          counts[k] = zero_count(params, parts[k], wopt);
          sum += counts[k];
        }
      } catch (const Error&) {
        ok = false;
      }
      if (!ok || sum != count) continue;
      for (std::size_t k = 0; k < 4; ++k) {
        if (counts[k] > 0) self(self, parts[k], counts[k], depth + 1);
      }
      return;
    }
    // splitting kept failing; settle for the current cell
    polish(cell);
  };

  static constexpr std::array<std::array<double, 2>, 3> kOffsets = {
      {{0.137, 0.071}, {-0.113, 0.163}, {0.057, -0.149}}};
  for (const ComplexPoint& m : minima) {
    for (const auto& off : kOffsets) {
      const double cs = m.sigma + off[0] * resolution;
      const double ct = m.t + off[1] * resolution;
      const double half = 0.75 * resolution;
      const Rectangle cell{cs - half, cs + half, ct - half, ct + half};
      WindingOptions wopt;
      wopt.max_segment = std::min(0.05, 0.25 * resolution);
      int count = 0;
      try {
        count = zero_count(params, cell, wopt);
      } catch (const Error&) {
        continue;
      }
      if (count > 0) refine(refine, cell, count, 0);
      break;
    }
  }

  std::vector<ZeroCandidate> out;
  const double merge = 10.0 * opt.cell_diameter;
  for (const auto& c : found) {
    if (!rect.contains(c.location)) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const ZeroCandidate& o) {
      return std::hypot(o.location.sigma - c.location.sigma, o.location.t - c.location.t) < merge;
    });
    if (!dup) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const ZeroCandidate& x, const ZeroCandidate& y) {
    return x.location.t != y.location.t ? x.location.t < y.location.t
                                        : x.location.sigma < y.location.sigma;
  });
  return out;
}

}  // namespace fhzeta
