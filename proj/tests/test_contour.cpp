#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fhzeta/contour.hpp"
#include "fhzeta/error.hpp"

using namespace fhzeta;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an fhzeta::Error");
  return ErrorCode::InvalidArgument;
}

// Winding of 1/(s-p) around a rectangle by summing arg increments over a
// fine polygon; independent of the phase walker.
int simple_pole_winding(const Rectangle& r, double p) {
  const int m = 4000;
  double total = 0.0;
  cplx prev;
  bool first = true;
  auto visit = [&](double x, double y) {
    const cplx v = 1.0 / (cplx{x, y} - p);
    if (!first) total += std::arg(v / prev);
    prev = v;
    first = false;
  };
  for (int i = 0; i <= m; ++i) visit(r.sigma_min + (r.sigma_max - r.sigma_min) * i / m, r.t_min);
  for (int i = 1; i <= m; ++i) visit(r.sigma_max, r.t_min + (r.t_max - r.t_min) * i / m);
  for (int i = 1; i <= m; ++i) visit(r.sigma_max - (r.sigma_max - r.sigma_min) * i / m, r.t_max);
  for (int i = 1; i <= m; ++i) visit(r.sigma_min, r.t_max - (r.t_max - r.t_min) * i / m);
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

}  // namespace

TEST_CASE("winding around the pole at 1 for a = 1") {
  const Rectangle r{0.5, 1.5, -0.5, 0.5};
  const auto rep = winding_number(ZetaParams(1.0), r);
  CHECK(rep.winding == simple_pole_winding(r, 1.0));
  CHECK(rep.winding == -1);
  CHECK(rep.inferred_zero_count == 0);
  REQUIRE(rep.known_poles_inside.size() == 1);
  CHECK(rep.known_poles_inside[0] == 1.0);
  CHECK(rep.min_boundary_modulus > 0.0);
}

TEST_CASE("winding around a trivial zero") {
  const auto rep = winding_number(ZetaParams(0.5), {0.3, 0.7, -0.2, 0.2});
  CHECK(rep.winding == 1);
  CHECK(rep.inferred_zero_count == 1);
  CHECK(rep.known_poles_inside.empty());
}

TEST_CASE("zero-free rectangle off the axis") {
  const auto rep = winding_number(ZetaParams(0.5), {0.1, 0.9, 0.5, 5.0});
  CHECK(rep.winding == 0);
  CHECK(rep.inferred_zero_count == 0);
}

TEST_CASE("winding is additive under a vertical split") {
  const ZetaParams p(1.5);
  // zero at -0.5, pole at 0
  const auto whole = winding_number(p, {-0.9, 0.9, -0.2, 0.2});
  const auto left = winding_number(p, {-0.9, -0.25, -0.2, 0.2});
  const auto right = winding_number(p, {-0.25, 0.9, -0.2, 0.2});
  CHECK(left.winding == 1);
  CHECK(right.winding == -1);
  CHECK(whole.winding == left.winding + right.winding);

  const ZetaParams q(0.5);
  const auto w = winding_number(q, {0.1, 0.9, 1.0, 4.0});
  const auto l = winding_number(q, {0.1, 0.45, 1.0, 4.0});
  const auto rr = winding_number(q, {0.45, 0.9, 1.0, 4.0});
  CHECK(w.winding == l.winding + rr.winding);
}

TEST_CASE("conjugate census symmetry") {
  for (double a : {0.5, 1.5}) {
    const ZetaParams p(a);
    for (const Rectangle r : {Rectangle{0.1, 0.9, 0.5, 5.0}, Rectangle{-2.9, -2.1, 1.0, 6.0},
                              Rectangle{-1.2, 1.3, 0.2, 3.0}}) {
      CHECK(winding_number(p, r).winding == winding_number(p, r.mirrored()).winding);
    }
  }
}

TEST_CASE("pole bookkeeping over several lattice points") {
  const auto rep = winding_number(ZetaParams(0.5), {-1.2, 1.2, -0.3, 0.3});
  // zeros 0.5, -0.5; poles 1, 0, -1
  CHECK(rep.winding == -1);
  CHECK(rep.known_poles_inside.size() == 3);
  CHECK(rep.inferred_zero_count == 2);
}

TEST_CASE("single lattice zero gives inferred count one") {
  for (double a : {0.5, 1.5}) {
    const ZetaParams p(a);
    for (int n = 1; n <= 4; ++n) {
      const double z = 2.0 - a - n;
      const auto rep = winding_number(p, {z - 0.005, z + 0.005, -0.2, 0.2});
      CHECK(rep.inferred_zero_count == 1);
    }
  }
}

TEST_CASE("census around the real axis matches a sign-change count") {
  // off the axis the strips are zero-free, so every zero in a thin
  // symmetric box is a real one; count them by sampling the real line
  for (double a : {0.5, 1.5}) {
    const ZetaParams p(a);
    for (int n = 1; n <= 4; ++n) {
      const double z = 2.0 - a - n;
      const double lo = z - 0.3;
      const double hi = z + 0.3;
      int changes = 0;
      double prev = zeta_a(p, {lo, 0.0}).value.real();
      for (int i = 1; i <= 6000; ++i) {
        const double v = zeta_a(p, {lo + (hi - lo) * i / 6000.0, 0.0}).value.real();
        if ((v > 0.0) != (prev > 0.0)) ++changes;
        prev = v;
      }
      CAPTURE(a);
      CAPTURE(n);
      CHECK(winding_number(p, {lo, hi, -0.2, 0.2}).inferred_zero_count == changes);
    }
  }
}

TEST_CASE("real zeros off the trivial lattice") {
  const ZetaParams p(0.5);
  const double r = find_real_zero(p, -2.57, -2.54);
  CHECK(r == doctest::Approx(-2.558517).epsilon(1e-6));
  CHECK_FALSE(near_trivial_zero_lattice(0.5, {r, 0.0}, 1e-3));
  CHECK(winding_number(p, {-2.8, -2.2, -0.2, 0.2}).inferred_zero_count == 2);
}

TEST_CASE("integer order: poles below 1-a cancel") {
  const ZetaParams p(1.0);
  // ζ(-1) = -1/12: pole of F and zero of 1/Γ cancel
  const auto at_m1 = winding_number(p, {-1.3, -0.7, -0.2, 0.2});
  CHECK(at_m1.winding == 0);
  CHECK(at_m1.known_poles_inside.empty());
  // ζ(-2) = 0
  const auto at_m2 = winding_number(p, {-2.3, -1.7, -0.2, 0.2});
  CHECK(at_m2.winding == 1);
  CHECK(at_m2.inferred_zero_count == 1);
}

TEST_CASE("rectangle validation") {
  const ZetaParams p(0.5);
  CHECK(code_of([&] { winding_number(p, {0.1, 0.9, -0.2, 0.5}); }) ==
        ErrorCode::InvalidRectangle);
  CHECK(code_of([&] { winding_number(p, {0.9, 0.1, 0.5, 1.0}); }) ==
        ErrorCode::InvalidRectangle);
  CHECK(code_of([&] { winding_number(p, {1.0005, 2.0, -1.0, 1.0}); }) ==
        ErrorCode::BoundaryTooCloseToSingularity);
  CHECK(code_of([&] { winding_number(p, {0.4995, 0.9, -1.0, 1.0}); }) ==
        ErrorCode::BoundaryTooCloseToSingularity);
  CHECK_NOTHROW(validate_rectangle(0.5, {0.1, 0.9, 0.5, 5.0}));
}

TEST_CASE("find_real_zero examples") {
  CHECK(find_real_zero(ZetaParams(0.5), 0.2, 0.8) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(find_real_zero(ZetaParams(0.5), -0.9, -0.1) == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(find_real_zero(ZetaParams(1.5), -0.9, -0.1) == doctest::Approx(-0.5).epsilon(1e-10));
  // a = 1 reproduces the Riemann trivial zero at -2
  CHECK(std::fabs(find_real_zero(ZetaParams(1.0), -2.4, -1.6) + 2.0) < 1e-9);
}

TEST_CASE("find_real_zero errors") {
  const ZetaParams p(0.5);
  CHECK(code_of([&] { find_real_zero(p, 0.6, 0.9); }) == ErrorCode::NoSignChange);
  CHECK(code_of([&] { find_real_zero(p, -0.2, 0.2); }) == ErrorCode::PoleInBracket);
  CHECK(code_of([&] { find_real_zero(p, 0.8, 0.2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("scan finds the trivial zero 1-a") {
  const auto c = scan_region(ZetaParams(0.5), {0.05, 0.95, -5.0, 5.0}, 0.05);
  REQUIRE(c.size() == 1);
  CHECK(c[0].classification == ZeroClass::Trivial);
  CHECK(std::fabs(c[0].location.sigma - 0.5) < 1e-6);
  CHECK(std::fabs(c[0].location.t) < 1e-6);
  CHECK(c[0].residual <= 1e-8);
}

TEST_CASE("scan of zero-free regions") {
  CHECK(scan_region(ZetaParams(1.0), {2.0, 3.0, 1.0, 5.0}, 0.05).empty());
  CHECK(scan_region(ZetaParams(0.3), {1.0, 1.65, 0.1, 10.0}, 0.05).empty());
}

TEST_CASE("scan finds the first Riemann zero at a = 1") {
  const auto c = scan_region(ZetaParams(1.0), {0.3, 0.7, 13.5, 14.6}, 0.05);
  REQUIRE(c.size() == 1);
  CHECK(c[0].classification == ZeroClass::NontrivialCandidate);
  CHECK(c[0].location.sigma == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(c[0].location.t == doctest::Approx(14.134725141734693).epsilon(1e-7));
}

TEST_CASE("scan serial and parallel agree") {
  ScanOptions s;
  s.exec = Exec::Serial;
  const auto a = scan_region(ZetaParams(0.5), {0.05, 0.95, -2.0, 2.0}, 0.05, s);
  s.exec = Exec::Parallel;
  const auto b = scan_region(ZetaParams(0.5), {0.05, 0.95, -2.0, 2.0}, 0.05, s);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].location.sigma == b[i].location.sigma);
    CHECK(a[i].location.t == b[i].location.t);
  }
}

TEST_CASE("scan resolution precondition") {
  CHECK(code_of([] { scan_region(ZetaParams(0.5), {0.1, 0.9, 1.0, 2.0}, 0.2); }) ==
        ErrorCode::InvalidArgument);
}
