#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "fhzeta/quadrature.hpp"

using fhzeta::quad::integrate;
using fhzeta::quad::Options;

TEST_CASE("gauss-kronrod integrates smooth real functions") {
  Options opt;
  opt.abs_tol = 1e-14;
  auto r = integrate<double>([](double x) { return std::exp(-x) * std::cos(3.0 * x); }, 0.0, 10.0, opt);
  const double exact = (1.0 - std::exp(-10.0) * (std::cos(30.0) - 3.0 * std::sin(30.0))) / 10.0;
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("gauss-kronrod handles complex oscillation and algebraic endpoint singularity") {
  Options opt;
  opt.abs_tol = 1e-12;
  opt.initial_panels = 16;
  auto r = integrate<std::complex<double>>(
      [](double x) { return std::exp(std::complex<double>(0.0, 20.0 * x)); }, 0.0, 1.0, opt);
  const std::complex<double> exact = (std::exp(std::complex<double>(0.0, 20.0)) - 1.0) /
                                     std::complex<double>(0.0, 20.0);
  CHECK(std::abs(r.value - exact) < 1e-13);

  opt.initial_panels = 1;
  opt.max_subdivisions = 2000;
  auto s = integrate<double>([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("empty interval") {
  auto r = integrate<double>([](double) { return 1.0; }, 2.0, 2.0, Options{});
  CHECK(r.value == 0.0);
  CHECK(r.converged);
}
