#include "fhzeta/positivity.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fhzeta/error.hpp"
#include "fhzeta/quadrature.hpp"
#include "fhzeta/specfun.hpp"

namespace fhzeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxPanels = 1'000'000;

}  // namespace

RealFn zeta_weight(double sigma, double a) {
  return [sigma, a](double x) {
    if (x <= 0.0) return std::numeric_limits<double>::infinity();
    const double lower = lower_incomplete_gamma(a, x).value;
    return std::exp((sigma + a - 2.0) * std::log(x) - x) / (a * lower);
  };
}

PositivitySpec PositivitySpec::zeta_kernel(double sigma, double a, double t, double domain_end,
                                           double phase_anchor) {
  if (!(a > 0.0)) throw Error(ErrorCode::NonpositiveOrder, "order a must be positive");
  if (!(sigma + a - 2.0 < 0.0)) {
    throw Error(ErrorCode::MonotonicityViolated,
                "zeta weight is monotone only for sigma + a - 2 < 0");
  }
  PositivitySpec spec;
  spec.weight = zeta_weight(sigma, a);
  spec.t = t;
  spec.domain_end = domain_end;
  spec.phase_anchor = phase_anchor;
  spec.sigma = sigma;
  spec.a = a;
  return spec;
}

bool monotonicity_check(const RealFn& h, double lo, double hi, int samples,
                        double min_strict_length) {
  if (samples < 100) {
    throw Error(ErrorCode::InvalidArgument, "monotonicity_check needs at least 100 samples");
  }
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "interval must have lo < hi");
  const double dx = (hi - lo) / (samples - 1);
  double prev = h(lo);
  if (std::isnan(prev)) return false;
  bool strict_found = false;
  double run_start = lo;
  bool in_run = false;
  for (int i = 1; i < samples; ++i) {
    const double x = (i == samples - 1) ? hi : lo + i * dx;
    const double v = h(x);
    if (!std::isfinite(v)) return false;
    // allow a few ulps of noise on plateaus
    if (v > prev + 1e-13 * std::fabs(prev) && !(std::isinf(prev) && prev > 0.0)) return false;
    if (v < prev) {
      if (!in_run) {
        in_run = true;
        run_start = x - dx;
      }
      const double run = x - run_start;
      if (min_strict_length <= 0.0 || run >= min_strict_length * (1.0 - 1e-12)) strict_found = true;
    } else {
      in_run = false;
    }
    prev = v;
  }
  return strict_found;
}

PositivityResult half_period_integral(const RealFn& h, double t, double lo, double hi) {
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "oscillation frequency t must be > 0");
  if (!(hi > lo)) throw Error(ErrorCode::InvalidArgument, "integration domain must have hi > lo");
  const double half = kPi / t;
  quad::Options opt;
  opt.abs_tol = 1e-17;
  opt.rel_tol = 1e-14;
  opt.max_subdivisions = 600;

  PositivityResult res;
  res.converged = true;
  double total = 0.0;
  double err = 0.0;
  double k = std::floor(lo / half) + 1.0;
  double left = lo;
  const bool infinite = !std::isfinite(hi);
  for (int p = 0; p < kMaxPanels; ++p, k += 1.0) {
    double right = k * half;
    bool last = false;
    if (!infinite && right >= hi) {
      right = hi;
      last = true;
    }
    const auto r = quad::integrate<double>(
        [&](double r) { return h(r) * std::sin(t * r); }, left, right, opt);
    total += r.value;
    err += r.abs_error;
    res.converged = res.converged && r.converged;
    ++res.panels;
    left = right;
    if (last) break;
    // alternating tail of a decreasing weight is bounded by the next panel
    if (infinite && p > 2 && std::fabs(r.value) <= 1e-16 * std::fabs(total)) {
      err += std::fabs(r.value);
      break;
    }
    if (p + 1 == kMaxPanels) {
      res.converged = false;
      err += std::fabs(r.value);
    }
  }
  // a weight with a non-integrable singularity at lo drives the sum to +inf
  if (!std::isfinite(total)) res.converged = false;
  res.integral = total;
  res.est_error = err;
  res.positive = total > 0.0;
  return res;
}

PositivityResult oscillatory_positivity(const PositivitySpec& spec, PositivityVariant variant) {
  if (!spec.weight) throw Error(ErrorCode::InvalidArgument, "positivity spec has no weight");
  if (!(spec.t > 0.0)) throw Error(ErrorCode::InvalidArgument, "oscillation frequency t must be > 0");
  const double t = spec.t;
  const double half = kPi / t;
  constexpr int kSamples = 4000;

  if (variant == PositivityVariant::Linear) {
    if (!(spec.domain_end > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "domain end must be positive");
    }
    const double check_end =
        std::isfinite(spec.domain_end) ? spec.domain_end : 100.0 + 20.0 * half;
    if (!monotonicity_check(spec.weight, 0.0, check_end, kSamples, std::min(half, check_end / 2))) {
      throw Error(ErrorCode::MonotonicityViolated, "weight h is not decreasing on the domain");
    }
    return half_period_integral(spec.weight, t, 0.0, spec.domain_end);
  }

  // log variant: substitute x = e^u, the weight becomes H(u) = e^u g(e^u)
  const double anchor = spec.phase_anchor;
  if (!(anchor >= 1.0) || !std::isfinite(anchor)) {
    throw Error(ErrorCode::PhaseAnchorInvalid, "phase anchor must be >= 1");
  }
  const double phase = t * std::log(anchor);
  const double k = std::round(phase / (2.0 * kPi));
  if (k < 1.0 || std::fabs(phase - 2.0 * kPi * k) > 1e-12 * std::max(1.0, k)) {
    throw Error(ErrorCode::PhaseAnchorInvalid,
                "t ln x~ = " + std::to_string(phase) + " is not 2 pi k for a positive integer k");
  }
  if (!(spec.domain_end > anchor)) {
    throw Error(ErrorCode::InvalidArgument, "domain end must exceed the phase anchor");
  }
  const double u0 = 2.0 * kPi * k / t;  // exact node, not the rounded log
  const double u_end = std::isfinite(spec.domain_end) ? std::log(spec.domain_end)
                                                      : std::numeric_limits<double>::infinity();
  const RealFn& g = spec.weight;
  const RealFn lifted = [&g](double u) {
    const double x = std::exp(u);
    return x * g(x);
  };
  const double check_end = std::isfinite(u_end) ? u_end : u0 + std::max(8.0, 20.0 * half);
  if (!monotonicity_check(lifted, u0, check_end, kSamples,
                          std::min(half, 0.5 * (check_end - u0)))) {
    throw Error(ErrorCode::MonotonicityViolated, "x g(x) is not decreasing on the domain");
  }
  return half_period_integral(lifted, t, u0, u_end);
}

ImagPositivityReport verify_imag_positivity(const ZetaParams& params, int n, const GridSpec& grid,
                                            Exec exec) {
  grid.validate();
  const VerticalStrip strip{n};
  const double a = params.a();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const ComplexPoint s = grid.point(k);
    if (!strip.contains_upper(s) || !(s.sigma + a - 2.0 < 0.0)) {
      throw Error(ErrorCode::GridOutsideStrip,
                  "grid point (" + std::to_string(s.sigma) + ", " + std::to_string(s.t) +
                      ") is outside V_" + std::to_string(n) + "^+ or has sigma + a - 2 >= 0");
    }
  }
  const auto samples = continued_grid(params, n, grid, exec);
  ImagPositivityReport rep;
  rep.points = samples.size();
  for (const auto& g : samples) {
    if (!g.valid) {
      rep.failures.push_back(g.s);
      continue;
    }
    const double im = g.value.imag();
    if (im < rep.min_imag) {
      rep.min_imag = im;
      rep.argmin = g.s;
    }
    if (!(im > 0.0)) rep.failures.push_back(g.s);
  }
  return rep;
}

}  // namespace fhzeta
