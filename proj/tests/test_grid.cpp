#include <cmath>

#include "doctest.h"
#include "fhzeta/error.hpp"
#include "fhzeta/grid.hpp"

using namespace fhzeta;

TEST_CASE("grid lattice counts tolerate decimal steps") {
  const GridSpec g{-0.9, -0.1, 0.1, 0.1, 10.0, 0.1};
  CHECK(g.sigma_count() == 9);
  CHECK(g.t_count() == 100);
  CHECK(g.size() == 900);
  const auto last = g.point(g.size() - 1);
  CHECK(last.sigma == doctest::Approx(-0.1));
  CHECK(last.t == doctest::Approx(10.0));
  const auto second = g.point(1);
  CHECK(second.sigma == -0.9);
  CHECK(second.t == doctest::Approx(0.2));
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS((GridSpec{1.0, 0.0, 0.1, 0.0, 1.0, 0.1}.validate()), Error);
  CHECK_THROWS_AS((GridSpec{0.0, 1.0, 0.0, 0.0, 1.0, 0.1}.validate()), Error);
  CHECK_THROWS_AS((GridSpec{0.0, 1.0, 0.1, 0.0, NAN, 0.1}.validate()), Error);
  CHECK_NOTHROW((GridSpec{0.0, 0.0, 0.1, 0.0, 0.0, 0.1}.validate()));
}

TEST_CASE("serial and OpenMP zeta grids are bit-identical") {
  const ZetaParams p(0.5);
  const GridSpec g{-2.0, 2.0, 0.25, -5.0, 5.0, 0.5};
  const auto s = zeta_grid(p, g, Exec::Serial);
  const auto q = zeta_grid(p, g, Exec::Parallel);
  REQUIRE(s.size() == q.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].valid == q[i].valid);
    if (s[i].valid) {
      CHECK(s[i].value.real() == q[i].value.real());
      CHECK(s[i].value.imag() == q[i].value.imag());
    }
  }
}

TEST_CASE("grid samples at poles are invalid, others match pointwise") {
  const ZetaParams p(1.5);
  const GridSpec g{-1.0, 1.0, 0.5, 0.0, 1.0, 0.5};
  const auto out = zeta_grid(p, g);
  for (const auto& smp : out) {
    const bool pole = smp.s.t == 0.0 && smp.s.sigma == std::round(smp.s.sigma);
    CHECK(smp.valid == !pole);
    if (smp.valid) CHECK(smp.value == zeta_a(p, smp.s).value);
  }
}

TEST_CASE("continued grid matches eval_continued") {
  const ZetaParams p(0.7);
  const GridSpec g{-0.8, -0.2, 0.3, 0.5, 2.0, 0.5};
  const auto s = continued_grid(p, 2, g, Exec::Serial);
  const auto q = continued_grid(p, 2, g, Exec::Parallel);
  for (std::size_t i = 0; i < s.size(); ++i) {
    REQUIRE(s[i].valid);
    CHECK(s[i].value == eval_continued(p, s[i].s, 2).value);
    CHECK(s[i].value == q[i].value);
  }
}

TEST_CASE("modulus helper marks failures with infinity") {
  const ZetaParams p(0.5);
  const auto m = zeta_modulus_at(p, {{2.0, 0.0}, {1.0, 0.0}, {0.5, 0.0}});
  CHECK(std::isfinite(m[0]));
  CHECK(std::isinf(m[1]));
  CHECK(m[2] < 1e-12);
}
