#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fhzeta {

using cplx = std::complex<double>;

/// Distance below which a gamma argument counts as sitting on a pole.
inline constexpr double kGammaPoleTol = 1e-12;

/// log Γ(z) split into modulus and phase. The phase is the principal
/// branch: continuous on C minus the negative real axis, with the value
/// on that axis taken as the limit from above.
struct GammaValue {
  double log_modulus = 0.0;
  double phase = 0.0;

  cplx log() const { return {log_modulus, phase}; }
  cplx value() const { return std::polar(std::exp(log_modulus), phase); }
};

/// Lower incomplete gamma γ(a, x) together with a bound on its error.
struct IncompleteGammaValue {
  double value = 0.0;
  double est_error = 0.0;
};

/// Power-series coefficients of x^a / (a γ(a, x)) = Σ c_k x^k.
struct SubtractionCoeffs {
  double a = 1.0;
  std::vector<double> coeffs;
};

// sin(πx), cos(πx) with exact zeros at the integers / half-integers.
double sin_pi(double x);
double cos_pi(double x);
cplx sin_pi(cplx z);

/// Distance from z to the nearest nonpositive integer.
double distance_to_gamma_pole(cplx z);

/// Throws PoleAtNonpositiveInteger within kGammaPoleTol of a pole.
GammaValue log_gamma(cplx z);

/// Γ(z). Real arguments take a purely real path so no imaginary noise leaks.
cplx gamma(cplx z);

/// 1/Γ(z); entire, vanishes at the nonpositive integers.
cplx rgamma(cplx z);

IncompleteGammaValue lower_incomplete_gamma(double a, double x);

/// m-th coefficient of a γ(a, x) x^{-a} = Σ g_m x^m, i.e. a(-1)^m / (m!(a+m)).
double incomplete_gamma_series_coeff(double a, std::size_t m);

/// c_0 .. c_{count-1} via c_k = -Σ_{j=1..k} g_j c_{k-j}.
SubtractionCoeffs subtraction_coeffs(double a, std::size_t count);

}  // namespace fhzeta
