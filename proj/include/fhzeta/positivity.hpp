#pragma once

// Positivity of oscillatory integrals with monotone weights, and the
// Im F_n > 0 grid check those integrals are meant to imply.
//
//   linear:  ∫_0^T h(r) sin(t r) dr            h decreasing
//   log:     ∫_x̃^T g(x) sin(t ln x) dx         x g(x) decreasing, t ln x̃ = 2πk
//
// Both are integrated panel by panel between consecutive zeros of the sine,
// so every panel carries one sign.

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "fhzeta/grid.hpp"
#include "fhzeta/zeta.hpp"

namespace fhzeta {

using RealFn = std::function<double(double)>;

/// x^{σ+a-2} / (a γ(a,x) e^x), the weight behind Im F_n.
RealFn zeta_weight(double sigma, double a);

struct PositivitySpec {
  RealFn weight;  // h for the linear variant, g for the log variant
  double t = 1.0;
  double domain_end = std::numeric_limits<double>::infinity();
  double phase_anchor = 1.0;  // x̃, log variant only
  // set when the weight is zeta_weight(sigma, a)
  std::optional<double> sigma;
  std::optional<double> a;

  /// The ζ_a weight; requires σ + a - 2 < 0 and t > 0.
  static PositivitySpec zeta_kernel(double sigma, double a, double t,
                                    double domain_end = std::numeric_limits<double>::infinity(),
                                    double phase_anchor = 1.0);
};

enum class PositivityVariant { Linear, Log };

struct PositivityResult {
  double integral = 0.0;
  bool positive = false;
  double est_error = 0.0;
  int panels = 0;
  bool converged = false;
};

/// Non-increasing across all adjacent samples of [lo, hi] and strictly
/// decreasing over a run of length >= min_strict_length (any single strict
/// step when 0). A +inf value at lo counts as decreasing. samples >= 100.
bool monotonicity_check(const RealFn& h, double lo, double hi, int samples,
                        double min_strict_length = 0.0);

/// ∫_lo^hi h(r) sin(t r) dr with panel nodes at multiples of π/t.
PositivityResult half_period_integral(const RealFn& h, double t, double lo, double hi);

/// Checks the weight's monotonicity, then integrates. Throws
/// MonotonicityViolated or PhaseAnchorInvalid on bad specs.
PositivityResult oscillatory_positivity(const PositivitySpec& spec, PositivityVariant variant);

struct ImagPositivityReport {
  std::size_t points = 0;
  double min_imag = std::numeric_limits<double>::infinity();
  ComplexPoint argmin{};
  std::vector<ComplexPoint> failures;  // sites with Im F_n <= 0 or failed evaluation
};

/// Im F_n(s) over a grid lying in V_n^+ with σ + a - 2 < 0.
ImagPositivityReport verify_imag_positivity(const ZetaParams& params, int n, const GridSpec& grid,
                                            Exec exec = Exec::Parallel);

}  // namespace fhzeta
