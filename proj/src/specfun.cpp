#include "fhzeta/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fhzeta/error.hpp"

namespace fhzeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Lanczos approximation, g = 7, nine terms. Relative error ~1e-15 on Re z >= 1/2.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos_log_gamma(cplx z) {
  const cplx zm = z - 1.0;
  cplx sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (zm + static_cast<double>(i));
  }
  const cplx t = zm + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t +
         std::log(sum);
}

// Continuous log sin(πz) on Im z >= 0:
//   sin(πz) = (i/2) e^{-iπz} (1 - e^{2πiz}),  |e^{2πiz}| <= 1,
// and Re(1 - e^{2πiz}) >= 0, so the principal log of the last factor
// never meets its cut.
cplx log_sin_pi_upper(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  const double decay = std::exp(-2.0 * kPi * y);
  const cplx w{decay * cos_pi(2.0 * x), decay * sin_pi(2.0 * x)};
  return cplx{std::log(0.5) + kPi * y, 0.5 * kPi - kPi * x} +
         std::log(1.0 - w);
}

void check_pole(cplx z) {
  if (distance_to_gamma_pole(z) < kGammaPoleTol) {
    throw Error(ErrorCode::PoleAtNonpositiveInteger,
                "gamma argument (" + std::to_string(z.real()) + ", " +
                    std::to_string(z.imag()) + ") is a pole");
  }
}

}  // namespace

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  // reduce to r in [-1, 1] with x = 2m + r
  double r = std::remainder(x, 2.0);
  if (r == 0.0 || std::fabs(r) == 1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double r = std::fabs(std::remainder(x, 2.0));  // in [0, 1]
  if (r == 0.5) return 0.0;
  if (r > 0.5) return -std::sin(kPi * (r - 0.5));
  return std::sin(kPi * (0.5 - r));
}

cplx sin_pi(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  if (y == 0.0) return {sin_pi(x), 0.0};
  return {sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y)};
}

double distance_to_gamma_pole(cplx z) {
  const double x = z.real();
  const double nearest = x > 0.0 ? 0.0 : std::round(x);
  return std::abs(z - cplx{nearest, 0.0});
}

GammaValue log_gamma(cplx z) {
  check_pole(z);
  if (z.imag() < 0.0) {
    const GammaValue up = log_gamma(std::conj(z));
    return {up.log_modulus, -up.phase};
  }
  cplx lg;
  if (z.real() >= 0.5) {
    lg = lanczos_log_gamma(z);
  } else {
    // reflection: Γ(z)Γ(1-z) = π / sin(πz)
    lg = std::log(kPi) - log_sin_pi_upper(z) - lanczos_log_gamma(1.0 - z);
  }
  return {lg.real(), lg.imag()};
}

cplx gamma(cplx z) {
  check_pole(z);
  if (z.imag() == 0.0) return {std::tgamma(z.real()), 0.0};
  return log_gamma(z).value();
}

cplx rgamma(cplx z) {
  if (z.imag() == 0.0) {
    const double x = z.real();
    if (x > 0.0) return {1.0 / std::tgamma(x), 0.0};
    if (sin_pi(x) == 0.0) return {0.0, 0.0};
    return {sin_pi(x) * std::tgamma(1.0 - x) / kPi, 0.0};
  }
  if (z.real() >= 0.5) return std::exp(-lanczos_log_gamma(z));
  return sin_pi(z) / kPi * log_gamma(1.0 - z).value();
}

IncompleteGammaValue lower_incomplete_gamma(double a, double x) {
  if (!(a > 0.0)) {
    throw Error(ErrorCode::NonpositiveOrder,
                "order a must be positive, got " + std::to_string(a));
  }
  if (!(x >= 0.0)) {
    throw Error(ErrorCode::NegativeArgument,
                "argument x must be nonnegative, got " + std::to_string(x));
  }
  if (x == 0.0) return {0.0, 0.0};

  constexpr int kMaxIter = 10000;
  if (x < a + 1.0) {
    // γ(a,x) = x^a e^{-x} Σ x^n / (a (a+1) ... (a+n))
    double term = 1.0 / a;
    double sum = term;
    int n = 1;
    for (; n < kMaxIter; ++n) {
      term *= x / (a + n);
      sum += term;
      if (term < sum * kEps * 0.5) break;
    }
    const double value = sum * std::exp(a * std::log(x) - x);
    return {value, value * kEps * (4.0 + std::sqrt(static_cast<double>(n)))};
  }

  // Γ(a,x) by modified Lentz on the Legendre continued fraction.
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  int i = 1;
  for (; i < kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  if (i == kMaxIter) {
    throw Error(ErrorCode::SeriesDiverged, "incomplete gamma continued fraction");
  }
  const double upper = std::exp(a * std::log(x) - x) * h;
  const double complete = std::tgamma(a);
  const double value = complete - upper;
  return {value, kEps * (4.0 * complete + std::sqrt(static_cast<double>(i)) * upper)};
}

double incomplete_gamma_series_coeff(double a, std::size_t m) {
  double inv_fact = 1.0;
  for (std::size_t i = 2; i <= m; ++i) inv_fact /= static_cast<double>(i);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return a * sign * inv_fact / (a + static_cast<double>(m));
}

SubtractionCoeffs subtraction_coeffs(double a, std::size_t count) {
  if (!(a > 0.0)) {
    throw Error(ErrorCode::NonpositiveOrder,
                "order a must be positive, got " + std::to_string(a));
  }
  if (count == 0) {
    throw Error(ErrorCode::InvalidArgument, "coefficient count must be >= 1");
  }
  std::vector<double> g(count);
  double inv_fact = 1.0;
  for (std::size_t m = 0; m < count; ++m) {
    if (m > 0) inv_fact /= static_cast<double>(m);
    g[m] = a * ((m % 2 == 0) ? 1.0 : -1.0) * inv_fact / (a + static_cast<double>(m));
  }
  SubtractionCoeffs out{a, std::vector<double>(count)};
  auto& c = out.coeffs;
  c[0] = 1.0;
  for (std::size_t k = 1; k < count; ++k) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += g[j] * c[k - j];
    c[k] = -acc;
  }
  return out;
}

}  // namespace fhzeta
