#pragma once

// Fractional hypergeometric zeta function
//
//   ζ_a(s) = Γ(a+1)/Γ(s+a-1) ∫_0^∞ x^{s+a-2} e^{-x} / (a γ(a,x)) dx,   Re s > 1,
//
// and its continuation to the whole plane strip by strip. On the strip
// V_n = {1-n < Re s < 2-n} the continued integral is
//
//   F_n(s) = Σ_{k<n} c_k Γ(s-1+k)
//          + ∫_0^∞ [x^a/(a γ(a,x)) - Σ_{k<n} c_k x^k] x^{s-2} e^{-x} dx,
//
// with c_k the power-series coefficients of x^a/(a γ(a,x)). The bracket is
// O(x^n) at the origin so the integral converges for Re s > 1-n.

#include <complex>
#include <cstddef>
#include <vector>

#include "fhzeta/specfun.hpp"

namespace fhzeta {

/// Distance at which s counts as sitting on a pole or trivial zero of ζ_a.
inline constexpr double kProximityTol = 1e-9;

struct ComplexPoint {
  double sigma = 0.0;
  double t = 0.0;

  cplx value() const { return {sigma, t}; }
  static ComplexPoint from(cplx s) { return {s.real(), s.imag()}; }
  ComplexPoint conj() const { return {sigma, -t}; }
};

struct VerticalStrip {
  int n = 1;

  double sigma_low() const { return 1.0 - n; }
  double sigma_high() const { return 2.0 - n; }
  bool contains(ComplexPoint s) const {
    return s.sigma > sigma_low() && s.sigma < sigma_high();
  }
  bool contains_upper(ComplexPoint s) const { return contains(s) && s.t > 0.0; }
  bool contains_lower(ComplexPoint s) const { return contains(s) && s.t < 0.0; }
};

/// Order a plus quadrature controls. Immutable once built; the subtraction
/// coefficients are computed once and shared by every evaluation.
class ZetaParams {
 public:
  explicit ZetaParams(double a, double quad_abs_tol = 1e-15,
                      double quad_rel_tol = 1e-13, int max_subdivisions = 4000);

  double a() const { return a_; }
  double quad_abs_tol() const { return abs_tol_; }
  double quad_rel_tol() const { return rel_tol_; }
  int max_subdivisions() const { return max_subdivisions_; }

  /// c_0, c_1, ... (cached length kCachedCoeffs).
  const std::vector<double>& coeffs() const { return coeffs_; }
  /// log Γ(a+1).
  double log_gamma_a1() const { return log_gamma_a1_; }

  static constexpr std::size_t kCachedCoeffs = 160;

 private:
  double a_;
  double abs_tol_;
  double rel_tol_;
  int max_subdivisions_;
  std::vector<double> coeffs_;
  double log_gamma_a1_;
};

enum class Representation { Direct, Strip };

struct EvalResult {
  cplx value{};
  double est_error = 0.0;
  Representation representation = Representation::Direct;
  int strip = 0;  // n when representation == Strip
  bool near_pole = false;
  bool near_trivial_zero = false;
};

struct StripValue {
  cplx value{};
  double est_error = 0.0;
};

/// True within tol of {1, 0, -1, ...}.
bool near_pole_lattice(ComplexPoint s, double tol = kProximityTol);
/// True within tol of {1-a, -a, -(1+a), ...} = {2-a-n}.
bool near_trivial_zero_lattice(double a, ComplexPoint s, double tol = kProximityTol);

/// Poles of ζ_a that survive cancellation against the trivial zeros.
/// For non-integer a this is the whole lattice {1, 0, -1, ...}; for integer
/// a only 1, ..., 2-a remain (zero and pole coincide and cancel below).
bool is_effective_pole(double a, double p);

/// x^{s+a-2} e^{-x} / (a γ(a,x)), x > 0.
cplx integrand_direct(const ZetaParams& params, ComplexPoint s, double x);

/// Defining integral, Re s > 1.
EvalResult eval_direct(const ZetaParams& params, ComplexPoint s);

/// F_n(s), the continuation of Γ(s+a-1) ζ_a(s) / Γ(a+1), valid on Re s > 1-n.
StripValue eval_continued(const ZetaParams& params, ComplexPoint s, int n);

/// Smallest n >= 1 with σ - (1-n) >= 1/2.
int choose_strip(ComplexPoint s);

/// ζ_a(s) anywhere off the pole lattice.
EvalResult zeta_a(const ZetaParams& params, ComplexPoint s);

/// Classical ζ(s) from the accelerated alternating (eta) series. Independent
/// of every other routine here; kept for cross-checks at a = 1.
cplx riemann_zeta_oracle(ComplexPoint s);

}  // namespace fhzeta
