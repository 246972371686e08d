#include <cmath>

#include "doctest.h"

#include "conjp/error.hpp"
#include "conjp/expr.hpp"
#include "conjp/harmonic.hpp"
#include "conjp/oracles.hpp"
#include "oracle_values.hpp"

using namespace conjp;

TEST_CASE("annulus example coefficients") {
  CHECK(annulus_example(0.5, 2).coefficient().value() == doctest::Approx(oracle::kCoefficientN2).epsilon(1e-15));
  CHECK(annulus_example(0.5, 0).coefficient().value() == doctest::Approx(oracle::kCoefficientN0).epsilon(1e-15));
  CHECK(annulus_example(0.5, -3).coefficient().value() == doctest::Approx(oracle::kCoefficientNm3).epsilon(1e-14));
  CHECK_FALSE(annulus_example(0.5, 1).coefficient().has_value());
  const Complex z(0.6, 0.3);
  CHECK(annulus_example(0.5, 2).u(z) == doctest::Approx(oracle::kAnnulusU2).epsilon(1e-14));
  CHECK(annulus_example(0.5, 0).u(z) == doctest::Approx(oracle::kAnnulusU0).epsilon(1e-14));
  CHECK(annulus_example(0.5, -2).u(z) == doctest::Approx(oracle::kAnnulusUm2).epsilon(1e-14));
  CHECK(annulus_example(0.5, 1).period() == doctest::Approx(oracle::kRadialPeriodHalf).epsilon(1e-14));
  CHECK(annulus_example(0.3, 1).period() == doctest::Approx(oracle::kRadialPeriodPoint3).epsilon(1e-14));
  CHECK(annulus_example(0.5, 3).period() == 0.0);
  CHECK_THROWS_AS(annulus_example(1.5, 2), Error);
}

TEST_CASE("annulus example matches the boundary data and the solver") {
  const BoundaryGrid g(make_annulus(0.5), 256);
  const DirichletSolver solver(g, 32);
  for (int n = -3; n <= 5; ++n) {
    CAPTURE(n);
    const AnnulusExample ex = annulus_example(0.5, n);
    const BoundarySamples data = real_part(sample_boundary(pow(Expr::var(), n) * conj(Expr::var()), g));
    if (n != 1) {
      for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(ex.u(g.node(i)) - data[i].real()) < 1e-12);
    }
    const HarmonicRep rep = solver.solve(data);
    for (int t = 0; t < 100; ++t) {
      const double r = 0.52 + 0.46 * t / 99.0;
      const Complex z = std::polar(r, 0.37 * t);
      CHECK(std::abs(ex.u(z) - rep.value(z)) < 1e-8);
    }
    CHECK(std::abs(conjugate_periods(rep)[0] - ex.period()) < 1e-8);
  }
}

TEST_CASE("conjugate is single valued for n != 1") {
  const AnnulusExample ex = annulus_example(0.5, 3);
  const double a = ex.conjugate(std::polar(0.75, -kPi + 1e-9));
  const double b = ex.conjugate(std::polar(0.75, kPi - 1e-9));
  CHECK(std::abs(a - b) < 1e-7);
  // Cauchy-Riemann: d u*/d theta = r du/dr
  const double r = 0.75, th = 0.4, h = 1e-5;
  const double dtheta = (ex.conjugate(std::polar(r, th + h)) - ex.conjugate(std::polar(r, th - h))) / (2 * h);
  const double dr = (ex.u(std::polar(r + h, th)) - ex.u(std::polar(r - h, th))) / (2 * h);
  CHECK(dtheta == doctest::Approx(r * dr).epsilon(1e-7));
}

TEST_CASE("annulus Szego series") {
  const SeriesValue aa = annulus_szego_series(0.5, 0.8, 0.8);
  CHECK(aa.value.real() > 0.0);
  CHECK(aa.value.imag() == 0.0);
  CHECK(std::abs(aa.value - oracle::kSzegoAA) < 1e-14);
  const Complex z(-0.7, 0.2), a(0.3, 0.6);
  CHECK(std::abs(annulus_szego_series(0.5, z, a).value - oracle::kSzegoZA) < 1e-14);
  CHECK(annulus_szego_series(0.5, z, a).value == std::conj(annulus_szego_series(0.5, a, z).value));
  CHECK_THROWS_AS(annulus_szego_series(0.5, z, a, 10), Error);
  try {
    annulus_szego_series(0.5, Complex(0.999, 0), Complex(0.999, 0), 50);
    FAIL("expected TruncationInsufficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TruncationInsufficient);
  }
}
