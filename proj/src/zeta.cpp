#include "fhzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fhzeta/error.hpp"
#include "fhzeta/quadrature.hpp"

namespace fhzeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Lower cut of the direct integral in u = -ln x. Below x = e^{-kHeadCut}
// the integrand is replaced by its small-x power series.
constexpr double kHeadCut = 36.0;

std::string point_str(ComplexPoint s) {
  return std::to_string(s.sigma) + (s.t < 0 ? "" : "+") + std::to_string(s.t) + "i";
}

// x^a / (a γ(a,x))
double inv_scaled_gamma(double a, double x) {
  const double lower = lower_incomplete_gamma(a, x).value;
  return std::exp(a * std::log(x)) / (a * lower);
}

// x^{s} for x > 0 through e^{s ln x}
cplx real_pow(double x, cplx s) {
  const double lx = std::log(x);
  return std::exp(s * lx);
}

// Coefficients of x^a e^{-x} / (a γ(a,x)) = Σ d_j x^j restricted to the
// terms from c_n upward: δ_j = Σ_{i=n..j} c_i (-1)^{j-i} / (j-i)!.
double remainder_coeff(const std::vector<double>& c, int n, int j) {
  double acc = 0.0;
  double inv_fact = 1.0;
  for (int m = 0; m <= j - n; ++m) {
    if (m > 0) inv_fact /= m;
    const double e = (m % 2 == 0) ? inv_fact : -inv_fact;
    acc += c[static_cast<std::size_t>(j - m)] * e;
  }
  return acc;
}

// Number of panels so the phase t ln x advances by at most π/2 per panel.
int phase_panels(double log_span, double t, int minimum) {
  const double needed = std::ceil(std::fabs(t) * log_span / kHalfPi);
  return std::max(minimum, static_cast<int>(std::min(needed, 1e6)));
}

quad::Options quad_options(const ZetaParams& p, int panels) {
  quad::Options opt;
  opt.abs_tol = p.quad_abs_tol();
  opt.rel_tol = p.quad_rel_tol();
  opt.max_subdivisions = std::max(p.max_subdivisions(), panels * 4);
  opt.initial_panels = panels;
  return opt;
}

// Smallest integer X >= 2 past which the tail of the [1, ∞) integral,
// bounded by e^{-X} Q(X) / (1 - p/X) with Q the polynomial-like factor,
// drops below tol/10.
double truncation_point(const ZetaParams& params, double sigma, int n) {
  const double a = params.a();
  const auto& c = params.coeffs();
  const double degree = std::max(0.0, sigma - 2.0 + a) + std::max(0, n - 1) + 2.0;
  const double tol = params.quad_abs_tol() / 10.0;
  for (double x = std::max(2.0, 2.0 * degree); x < 2000.0; x += 1.0) {
    double poly = 0.0;
    for (int k = 0; k < n; ++k) poly += std::fabs(c[static_cast<std::size_t>(k)]) * std::pow(x, k);
    const double q = std::pow(x, sigma - 2.0) * (inv_scaled_gamma(a, x) + poly);
    const double bound = std::exp(-x) * q * 2.0 * x / (x - degree);
    if (bound < tol) return x;
  }
  return 2000.0;
}

void check_params(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::NonpositiveOrder, "order a must be positive and finite");
  }
}

}  // namespace

ZetaParams::ZetaParams(double a, double quad_abs_tol, double quad_rel_tol,
                       int max_subdivisions)
    : a_(a),
      abs_tol_(quad_abs_tol),
      rel_tol_(quad_rel_tol),
      max_subdivisions_(max_subdivisions) {
  check_params(a);
  if (!(quad_abs_tol > 0.0) || !(quad_rel_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "quadrature tolerances must be positive");
  }
  if (max_subdivisions < 16) {
    throw Error(ErrorCode::InvalidArgument, "max_subdivisions must be >= 16");
  }
  coeffs_ = subtraction_coeffs(a, kCachedCoeffs).coeffs;
  log_gamma_a1_ = std::lgamma(a + 1.0);
}

bool near_pole_lattice(ComplexPoint s, double tol) {
  const double nearest = std::min(1.0, std::round(s.sigma));
  return std::hypot(s.sigma - nearest, s.t) < tol;
}

bool near_trivial_zero_lattice(double a, ComplexPoint s, double tol) {
  // lattice points 2-a-n, n >= 1, i.e. s + a - 1 a nonpositive integer
  const double shifted = s.sigma + a - 1.0;
  const double nearest = std::min(0.0, std::round(shifted));
  return std::hypot(shifted - nearest, s.t) < tol;
}

bool is_effective_pole(double a, double p) {
  if (p > 1.0) return false;
  const double gap = 2.0 - a - p;  // positive integer when p is also a trivial zero
  const bool cancelled = gap >= 1.0 - 1e-12 && std::fabs(gap - std::round(gap)) < 1e-12;
  return !cancelled;
}

cplx integrand_direct(const ZetaParams& params, ComplexPoint s, double x) {
  const double a = params.a();
  const double lower = lower_incomplete_gamma(a, x).value;
  return std::exp((s.value() + a - 2.0) * std::log(x) - x) / (a * lower);
}

EvalResult eval_direct(const ZetaParams& params, ComplexPoint s) {
  if (!(s.sigma > 1.0)) {
    throw Error(ErrorCode::OutOfRegion,
                "direct integral needs Re s > 1, got " + point_str(s));
  }
  const double a = params.a();
  const cplx sv = s.value();
  const auto& c = params.coeffs();

  // [e^{-kHeadCut}, 1] in u = -ln x: x f(x) = x^{s+a-1} e^{-x} / (a γ(a,x))
  auto head = [&](double u) -> cplx {
    const double x = std::exp(-u);
    const double lower = lower_incomplete_gamma(a, x).value;
    return std::exp(-(sv + a - 1.0) * u - x) / (a * lower);
  };
  const auto head_res = quad::integrate<cplx>(
      head, 0.0, kHeadCut, quad_options(params, phase_panels(kHeadCut, s.t, 8)));

  // [0, e^{-kHeadCut}]: Σ_j d_j x0^{j+s-1} / (j+s-1), four terms reach roundoff
  const double x0 = std::exp(-kHeadCut);
  cplx tiny{};
  for (int j = 0; j < 4; ++j) {
    const cplx p = sv - 1.0 + static_cast<double>(j);
    tiny += remainder_coeff(c, 0, j) * real_pow(x0, p) / p;
  }

  // [1, X] in u = ln x: x f(x)
  const double big_x = truncation_point(params, s.sigma, 0);
  const double span = std::log(big_x);
  auto tail = [&](double u) -> cplx {
    const double x = std::exp(u);
    const double lower = lower_incomplete_gamma(a, x).value;
    return std::exp((sv + a - 1.0) * u - x) / (a * lower);
  };
  const auto tail_res = quad::integrate<cplx>(
      tail, 0.0, span, quad_options(params, phase_panels(span, s.t, 4)));

  const cplx integral = head_res.value + tiny + tail_res.value;
  const cplx z = sv + a - 1.0;
  const cplx factor = std::exp(params.log_gamma_a1() - log_gamma(z).log());

  EvalResult out;
  out.value = factor * integral;
  out.est_error = std::abs(factor) * (head_res.abs_error + tail_res.abs_error) +
                  1e-14 * std::abs(out.value);
  out.representation = Representation::Direct;
  out.near_pole = near_pole_lattice(s);
  out.near_trivial_zero = near_trivial_zero_lattice(a, s);
  if (s.t == 0.0) out.value.imag(0.0);
  return out;
}

StripValue eval_continued(const ZetaParams& params, ComplexPoint s, int n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "strip index must be >= 1");
  }
  if (!(s.sigma > 1.0 - n)) {
    throw Error(ErrorCode::InsufficientStrip,
                "F_" + std::to_string(n) + " needs Re s > " + std::to_string(1 - n) +
                    ", got " + point_str(s));
  }
  for (int k = 0; k < n; ++k) {
    if (distance_to_gamma_pole(s.value() - 1.0 + static_cast<double>(k)) < kGammaPoleTol) {
      throw Error(ErrorCode::PoleProximity, "s = " + point_str(s) + " sits on a pole");
    }
  }
  const auto& c = params.coeffs();
  if (static_cast<std::size_t>(n) + 40 > c.size()) {
    throw Error(ErrorCode::InvalidArgument, "strip index too large for cached coefficients");
  }
  const double a = params.a();
  const cplx sv = s.value();

  StripValue out;
  // closed-form terms
  for (int k = 0; k < n; ++k) {
    out.value += c[static_cast<std::size_t>(k)] * gamma(sv - 1.0 + static_cast<double>(k));
  }

  // [0, 1]: Σ_{j>=n} δ_j / (j+s-1), exact termwise integration of the series
  cplx head{};
  int small_run = 0;
  int j = n;
  for (; static_cast<std::size_t>(j) < c.size(); ++j) {
    const double dj = remainder_coeff(c, n, j);
    head += dj / (sv - 1.0 + static_cast<double>(j));
    small_run = std::fabs(dj) < 1e-21 ? small_run + 1 : 0;
    if (small_run >= 3) break;
  }
  if (static_cast<std::size_t>(j) >= c.size()) {
    throw Error(ErrorCode::SeriesDiverged, "small-x remainder series did not settle");
  }
  out.value += head;

  // [1, X] in u = ln x: [x^a/(a γ) - P_n(x)] x^{s-1} e^{-x}
  const double big_x = truncation_point(params, s.sigma, n);
  const double span = std::log(big_x);
  auto tail = [&](double u) -> cplx {
    const double x = std::exp(u);
    double poly = 0.0;
    for (int k = n - 1; k >= 0; --k) poly = poly * x + c[static_cast<std::size_t>(k)];
    const double bracket = inv_scaled_gamma(a, x) - poly;
    return bracket * std::exp((sv - 1.0) * u - x);
  };
  const auto tail_res = quad::integrate<cplx>(
      tail, 0.0, span, quad_options(params, phase_panels(span, s.t, 4)));
  out.value += tail_res.value;
  out.est_error = tail_res.abs_error + 1e-15 * std::abs(out.value);
  if (s.t == 0.0) out.value.imag(0.0);
  return out;
}

int choose_strip(ComplexPoint s) {
  // σ - (1 - n) >= 1/2  <=>  n >= 3/2 - σ
  const int n = static_cast<int>(std::ceil(1.5 - s.sigma));
  return std::max(1, n);
}

EvalResult zeta_a(const ZetaParams& params, ComplexPoint s) {
  if (!std::isfinite(s.sigma) || !std::isfinite(s.t)) {
    throw Error(ErrorCode::InvalidArgument, "non-finite evaluation point");
  }
  if (near_pole_lattice(s)) {
    throw Error(ErrorCode::PoleOfZeta, "s = " + point_str(s) + " is a pole of zeta_a");
  }
  if (s.sigma > 1.0) return eval_direct(params, s);

  const double a = params.a();
  const int n = choose_strip(s);
  const StripValue f = eval_continued(params, s, n);
  const cplx z = s.value() + a - 1.0;

  EvalResult out;
  out.representation = Representation::Strip;
  out.strip = n;
  out.near_pole = false;
  out.near_trivial_zero = near_trivial_zero_lattice(a, s);
  cplx factor;
  if (out.near_trivial_zero) {
    factor = std::exp(params.log_gamma_a1()) * rgamma(z);
  } else {
    factor = std::exp(params.log_gamma_a1() - log_gamma(z).log());
  }
  out.value = factor * f.value;
  out.est_error = std::abs(factor) * f.est_error + 1e-14 * std::abs(out.value);
  if (s.t == 0.0) out.value.imag(0.0);
  return out;
}

cplx riemann_zeta_oracle(ComplexPoint s) {
  if (std::hypot(s.sigma - 1.0, s.t) < kProximityTol) {
    throw Error(ErrorCode::PoleAtOne, "riemann zeta has a pole at s = 1");
  }
  const cplx sv = s.value();
  // Cohen-Rodriguez Villegas-Zagier acceleration of η(s) = Σ (-1)^k (k+1)^{-s}.
  // The error decays like 5.83^{-N} but is amplified by ~e^{π|t|/2}/|Γ(s)|.
  const int terms = std::clamp(
      30 + static_cast<int>(std::ceil(1.2 * std::fabs(s.t))) +
          static_cast<int>(std::ceil(2.0 * std::max(0.0, -s.sigma))),
      30, 150);
  const double nn = terms;
  double d = std::pow(3.0 + std::sqrt(8.0), nn);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double cc = -d;
  cplx sum{};
  for (int k = 0; k < terms; ++k) {
    cc = b - cc;
    sum += cc * std::exp(-sv * std::log(static_cast<double>(k + 1)));
    b = (k + nn) * (k - nn) * b / ((k + 0.5) * (k + 1.0));
  }
  const cplx eta = sum / d;
  const cplx zeta = eta / (1.0 - std::exp((1.0 - sv) * std::log(2.0)));
  return s.t == 0.0 ? cplx{zeta.real(), 0.0} : zeta;
}

}  // namespace fhzeta
