#pragma once

// The ten acceptance criteria as a runnable suite. Each criterion reports a
// measured value against a pinned tolerance.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fhzeta/grid.hpp"

namespace fhzeta {

/// Supplies c_0 .. c_{count-1} for order a. Criterion 10 checks whatever it
/// returns, which is how faults are injected.
using CoeffProvider = std::function<std::vector<double>(double a, std::size_t count)>;

CoeffProvider default_coeff_provider();
/// Default provider with c_1 shifted by delta.
CoeffProvider perturbed_c1_provider(double delta);

struct AcceptanceOptions {
  CoeffProvider coeffs = default_coeff_provider();
  Exec exec = Exec::Parallel;
  /// Criterion ids to run; empty means all.
  std::vector<int> only;
  std::uint64_t seed = 20231107;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
  double seconds = 0.0;
};

CriterionResult criterion_a1_reduction(const AcceptanceOptions& opt);
CriterionResult criterion_trivial_zeros(const AcceptanceOptions& opt);
CriterionResult criterion_poles(const AcceptanceOptions& opt);
CriterionResult criterion_zero_free_strips(const AcceptanceOptions& opt);
CriterionResult criterion_imag_positivity(const AcceptanceOptions& opt);
CriterionResult criterion_zero_free_region(const AcceptanceOptions& opt);
CriterionResult criterion_positivity_harness(const AcceptanceOptions& opt);
CriterionResult criterion_reflection(const AcceptanceOptions& opt);
CriterionResult criterion_representation(const AcceptanceOptions& opt);
CriterionResult criterion_coefficients(const AcceptanceOptions& opt);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

/// "PASS  3 poles  measured=... tol=...  (detail)  [0.12 s]"
std::string format_result(const CriterionResult& r);

}  // namespace fhzeta
