#pragma once

// Zero census for ζ_a: argument-principle winding over rectangles,
// bisection for real zeros, and a grid scanner that confirms candidates
// by winding before refining them.

#include <numbers>
#include <vector>

#include "fhzeta/grid.hpp"
#include "fhzeta/zeta.hpp"

namespace fhzeta {

struct Rectangle {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;

  bool contains(ComplexPoint s) const {
    return s.sigma > sigma_min && s.sigma < sigma_max && s.t > t_min && s.t < t_max;
  }
  Rectangle mirrored() const { return {sigma_min, sigma_max, -t_max, -t_min}; }
  double diameter() const;
};

struct ContourReport {
  int winding = 0;  // zeros minus poles inside
  std::vector<double> known_poles_inside;
  int inferred_zero_count = 0;
  double min_boundary_modulus = 0.0;
  int evaluations = 0;
};

struct WindingOptions {
  /// Initial node spacing along each edge.
  double max_segment = 0.05;
  /// A segment is bisected until arg f changes by less than this across it.
  double max_phase_step = 0.5 * std::numbers::pi;
  int max_evaluations = 400000;
  /// Required clearance between the boundary and the real pole/zero lattices.
  double min_clearance = 1e-3;
};

/// Ordered, finite, and either clear of the real axis or symmetric about
/// it; every pole and trivial zero at least min_clearance from the edges.
void validate_rectangle(double a, const Rectangle& rect, double min_clearance = 1e-3);

/// Counterclockwise boundary walk tracking the continuous phase of ζ_a.
ContourReport winding_number(const ZetaParams& params, const Rectangle& rect,
                             const WindingOptions& opt = {});

namespace detail {
/// winding_number without the rectangle validation; used for the small,
/// deliberately asymmetric cells of the scanner.
ContourReport contour_winding(const ZetaParams& params, const Rectangle& rect,
                              const WindingOptions& opt);
}  // namespace detail

/// Bisection on the real axis to |hi - lo| <= 1e-10.
double find_real_zero(const ZetaParams& params, double lo, double hi);

enum class ZeroClass { Trivial, NontrivialCandidate };

struct ZeroCandidate {
  ComplexPoint location;
  double residual = 0.0;  // |ζ_a(location)|
  ZeroClass classification = ZeroClass::NontrivialCandidate;
};

struct ScanOptions {
  /// Grid minima of |ζ_a| below this are followed up.
  double trigger = 0.05;
  /// Winding cells are subdivided until their diameter is at most this.
  double cell_diameter = 1e-6;
  /// Accepted candidates satisfy |ζ_a| <= this after polishing.
  double max_residual = 1e-8;
  Exec exec = Exec::Parallel;
};

/// Candidates are sorted by (t, σ) and each lies inside rect.
std::vector<ZeroCandidate> scan_region(const ZetaParams& params, const Rectangle& rect,
                                       double resolution, const ScanOptions& opt = {});

}  // namespace fhzeta
