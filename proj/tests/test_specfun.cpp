#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "fhzeta/error.hpp"
#include "fhzeta/specfun.hpp"

using namespace fhzeta;

namespace {

// ∫_0^∞ x^{-1/2} e^{-x} dx = 2 ∫_0^∞ e^{-u^2} du, composite Simpson on [0, 12].
double sqrt_pi_by_quadrature() {
  const int n = 20000;
  const double h = 12.0 / n;
  double acc = 1.0 + std::exp(-144.0);
  for (int i = 1; i < n; ++i) {
    const double u = i * h;
    acc += (i % 2 ? 4.0 : 2.0) * std::exp(-u * u);
  }
  return 2.0 * acc * h / 3.0;
}

// γ(a,x) = Σ (-1)^m x^{a+m} / (m! (a+m)), truncated at `terms`
double incomplete_gamma_alternating(double a, double x, int terms) {
  double acc = 0.0;
  double fact = 1.0;
  for (int m = 0; m < terms; ++m) {
    if (m > 0) fact *= m;
    acc += ((m % 2) ? -1.0 : 1.0) * std::pow(x, a + m) / (fact * (a + m));
  }
  return acc;
}

// Long division 1 / (Σ g_m x^m) written out independently of the library
// recurrence: the quotient is built term by term by subtracting q_k * G(x)
// from the running remainder.
std::vector<double> reciprocal_by_long_division(const std::vector<double>& g, std::size_t count) {
  std::vector<double> rem(count, 0.0);
  rem[0] = 1.0;
  std::vector<double> q(count, 0.0);
  for (std::size_t k = 0; k < count; ++k) {
    q[k] = rem[k] / g[0];
    for (std::size_t m = 0; m + k < count; ++m) rem[k + m] -= q[k] * g[m];
  }
  return q;
}

std::vector<double> g_series(double a, std::size_t count) {
  std::vector<double> g(count);
  for (std::size_t m = 0; m < count; ++m) {
    double fact = std::tgamma(static_cast<double>(m) + 1.0);
    g[m] = a * ((m % 2) ? -1.0 : 1.0) / (fact * (a + static_cast<double>(m)));
  }
  return g;
}

}  // namespace

TEST_CASE("log_gamma at integers and one half") {
  const GammaValue one = log_gamma({1.0, 0.0});
  CHECK(one.log_modulus == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(one.phase == 0.0);

  CHECK(gamma({5.0, 0.0}).real() == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(std::exp(log_gamma({5.0, 0.0}).log_modulus) == doctest::Approx(24.0).epsilon(1e-13));

  const double oracle = sqrt_pi_by_quadrature();
  CHECK(oracle == doctest::Approx(1.7724538509055160).epsilon(1e-13));
  CHECK(std::exp(log_gamma({0.5, 0.0}).log_modulus) == doctest::Approx(oracle).epsilon(1e-13));
}

TEST_CASE("log_gamma rejects poles") {
  for (double z : {0.0, -1.0, -7.0, -3.0 + 1e-13}) {
    CHECK_THROWS_AS(log_gamma({z, 0.0}), Error);
    try {
      log_gamma({z, 0.0});
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PoleAtNonpositiveInteger);
    }
  }
  CHECK_NOTHROW(log_gamma({-3.0 + 1e-6, 0.0}));
}

TEST_CASE("gamma recurrence and conjugate symmetry") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> re(-20.0, 20.0);
  std::uniform_real_distribution<double> im(-20.0, 20.0);
  for (int i = 0; i < 400; ++i) {
    const cplx z{re(rng), im(rng)};
    if (distance_to_gamma_pole(z) < 1e-3 || distance_to_gamma_pole(z + 1.0) < 1e-3) continue;
    const GammaValue g0 = log_gamma(z);
    const GammaValue g1 = log_gamma(z + 1.0);
    // |Γ(z+1)| = |z| |Γ(z)|
    CHECK(std::exp(g1.log_modulus - g0.log_modulus) ==
          doctest::Approx(std::abs(z)).epsilon(1e-12));
    if (z.imag() != 0.0) {
      const GammaValue gc = log_gamma(std::conj(z));
      CHECK(gc.log_modulus == doctest::Approx(g0.log_modulus).epsilon(1e-12));
      CHECK(std::fabs(gc.phase + g0.phase) <= 1e-12 * (1.0 + std::fabs(g0.phase)));
    }
  }
}

TEST_CASE("log_gamma phase is continuous off the negative real axis") {
  // walk from 20 + 2i to -20 + 2i; consecutive phases must not jump
  double prev = log_gamma({20.0, 2.0}).phase;
  for (int i = 1; i <= 4000; ++i) {
    const double x = 20.0 - 40.0 * i / 4000.0;
    const double ph = log_gamma({x, 2.0}).phase;
    CHECK(std::fabs(ph - prev) < 0.1);
    prev = ph;
  }
  // principal branch matches log Γ(z+1) = log Γ(z) + log z exactly, not mod 2π
  for (double y : {0.5, 5.0, 30.0}) {
    const cplx z{0.7, y};
    const cplx diff = log_gamma(z + 1.0).log() - log_gamma(z).log() - std::log(z);
    CHECK(std::abs(diff) < 1e-12);
  }
}

TEST_CASE("gamma accuracy against reflection values") {
  // Γ(-0.5) = -2 √π, Γ(1/2 + i y) modulus √(π / cosh(π y))
  CHECK(gamma({-0.5, 0.0}).real() == doctest::Approx(-2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-13));
  for (double y : {0.1, 1.0, 3.0, 10.0, 40.0}) {
    const double expect = 0.5 * (std::log(std::numbers::pi) - std::log(std::cosh(std::numbers::pi * y)));
    CHECK(log_gamma({0.5, y}).log_modulus == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("rgamma vanishes at the poles and inverts gamma elsewhere") {
  for (int k = 0; k <= 6; ++k) CHECK(rgamma({-static_cast<double>(k), 0.0}) == cplx{0.0, 0.0});
  for (cplx z : {cplx{-2.3, 0.0}, cplx{0.7, 1.5}, cplx{-4.2, -3.0}, cplx{3.5, 0.0}}) {
    CHECK(std::abs(rgamma(z) * gamma(z) - 1.0) < 1e-13);
  }
}

TEST_CASE("lower_incomplete_gamma examples") {
  CHECK(lower_incomplete_gamma(1.0, 2.0).value == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-14));
  CHECK(lower_incomplete_gamma(0.7, 0.0).value == 0.0);
  const double oracle = incomplete_gamma_alternating(0.5, 1.0, 30);
  CHECK(oracle == doctest::Approx(1.4936482656248540).epsilon(1e-14));
  CHECK(lower_incomplete_gamma(0.5, 1.0).value == doctest::Approx(oracle).epsilon(1e-13));
  // both branches of the algorithm
  for (double a : {0.3, 1.7, 4.0}) {
    for (double x : {0.2, 0.9, 2.5, 5.5}) {
      const double o = incomplete_gamma_alternating(a, x, 80);
      CHECK(lower_incomplete_gamma(a, x).value == doctest::Approx(o).epsilon(1e-12));
    }
  }
}

TEST_CASE("lower_incomplete_gamma errors") {
  CHECK_THROWS_AS(lower_incomplete_gamma(0.0, 1.0), Error);
  CHECK_THROWS_AS(lower_incomplete_gamma(-1.0, 1.0), Error);
  CHECK_THROWS_AS(lower_incomplete_gamma(1.0, -0.5), Error);
  try {
    lower_incomplete_gamma(1.0, -0.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeArgument);
  }
  try {
    lower_incomplete_gamma(0.0, 1.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonpositiveOrder);
  }
}

TEST_CASE("lower_incomplete_gamma is increasing and saturates") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ua(0.05, 5.0);
  std::uniform_real_distribution<double> ux(0.0, 50.0);
  for (int i = 0; i < 500; ++i) {
    const double a = ua(rng);
    double x1 = ux(rng), x2 = ux(rng);
    if (x1 > x2) std::swap(x1, x2);
    if (x2 - x1 < 1e-9 || x1 == 0.0) continue;
    const double g1 = lower_incomplete_gamma(a, x1).value;
    const double g2 = lower_incomplete_gamma(a, x2).value;
    CHECK(g1 > 0.0);
    // strict increase, up to ulps once both are saturated at Γ(a)
    CHECK(g1 <= g2);
    CHECK(g2 <= std::tgamma(a) * (1.0 + 1e-15));
  }
  for (double a : {0.1, 0.5, 1.0, 2.5, 5.0}) {
    const double big = lower_incomplete_gamma(a, 40.0 + 5.0 * a).value;
    CHECK(std::fabs(big - std::tgamma(a)) / std::tgamma(a) <= 1e-10);
  }
}

TEST_CASE("subtraction_coeffs examples") {
  for (double a : {0.3, 0.5, 1.0, 1.7, 3.0}) {
    const auto c = subtraction_coeffs(a, 4).coeffs;
    CHECK(c[0] == 1.0);
    CHECK(c[1] == doctest::Approx(a / (a + 1.0)).epsilon(1e-15));
  }
  // a = 1: x / (1 - e^{-x}) = 1 + x/2 + x^2/12 + 0 x^3 - x^4/720
  const auto c1 = subtraction_coeffs(1.0, 5).coeffs;
  CHECK(c1[2] == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  CHECK(std::fabs(c1[3]) < 1e-16);
  CHECK(c1[4] == doctest::Approx(-1.0 / 720.0).epsilon(1e-13));
  CHECK_THROWS_AS(subtraction_coeffs(1.0, 0), Error);
  CHECK_THROWS_AS(subtraction_coeffs(-0.5, 3), Error);
}

TEST_CASE("subtraction_coeffs agree with long division and satisfy the convolution identity") {
  for (double a : {0.3, 0.5, 1.0, 1.7, 3.0}) {
    const std::size_t count = 13;
    const auto c = subtraction_coeffs(a, count).coeffs;
    const auto g = g_series(a, count);
    const auto q = reciprocal_by_long_division(g, count);
    for (std::size_t k = 0; k < count; ++k) {
      CHECK(std::fabs(c[k] - q[k]) <= 1e-12);
      double conv = 0.0;
      for (std::size_t j = 0; j <= k; ++j) conv += g[j] * c[k - j];
      CHECK(std::fabs(conv - (k == 0 ? 1.0 : 0.0)) <= 1e-12);
      CHECK(incomplete_gamma_series_coeff(a, k) == doctest::Approx(g[k]).epsilon(1e-14));
    }
  }
}
