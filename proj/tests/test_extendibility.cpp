#include <algorithm>
#include <cmath>

#include "doctest.h"

#include "common.hpp"
#include "conjp/error.hpp"
#include "conjp/expr.hpp"
#include "conjp/extendibility.hpp"
#include "conjp/sampling.hpp"
#include "oracle_values.hpp"

using namespace conjp;

namespace {

const PeriodFields& annulus_fields() {
  static const PeriodFields f = compute_period_fields(BoundaryGrid(make_annulus(0.5), 256), 32);
  return f;
}

const PeriodFields& three_fields() {
  static const PeriodFields f = compute_period_fields(BoundaryGrid(testing::three_connected(), 256), 32);
  return f;
}

ExtendibilityReport run(const PeriodFields& f, const std::string& phi, int ptest = 12) {
  return extendibility_test(f, sample_boundary(parse_expr(phi), f.grid), TestFamily::standard(f.grid.domain(), ptest));
}

}  // namespace

TEST_CASE("test family") {
  const TestFamily a = TestFamily::standard(make_annulus(0.5), 3);
  REQUIRE(a.members.size() == 7);
  CHECK(a.members[0].name == "1");
  CHECK(a.members[1].name == "z");
  CHECK(a.members[2].name == "z^2");
  CHECK(std::abs(a.members[4].expr(Complex(0.5, 0)) - 1.0) < 1e-15);
}

TEST_CASE("cauchy transform") {
  const BoundaryGrid& g = annulus_fields().grid;
  const BoundarySamples one = sample_function(g, [](Complex) { return Complex(1.0); });
  CHECK(std::abs(cauchy_transform(g, one, 0.1)) < 1e-14);
  const BoundarySamples cz = sample_boundary(builtin::conj_z(), g);
  CHECK(std::abs(cauchy_transform(g, cz, 2.0) - (-0.375)) < 1e-13);
  CHECK(std::abs(cauchy_transform(g, cz, 0.0)) < 1e-14);
  try {
    cauchy_transform(g, cz, 0.51);
    FAIL("expected ProbeTooCloseToBoundary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ProbeTooCloseToBoundary);
  }
}

TEST_CASE("verdicts on the annulus") {
  const PeriodFields& f = annulus_fields();
  SUBCASE("conj(z)") {
    const ExtendibilityReport r = run(f, "conj(z)");
    CHECK(r.verdict == Verdict::NotExtends);
    CHECK(r.witness.g == "z");
    CHECK(r.witness.j == 1);
    CHECK(std::abs(r.witness.value) == doctest::Approx(oracle::kRadialPeriodHalf).epsilon(1e-10));
    CHECK(r.max_cauchy == doctest::Approx(0.375).epsilon(1e-10));
  }
  SUBCASE("conj(z) against z^n, n != 1, has vanishing periods") {
    TestFamily fam = TestFamily::standard(f.grid.domain(), 12);
    std::erase_if(fam.members, [](const TestFunction& t) { return t.name == "z"; });
    const ExtendibilityReport r =
        extendibility_test(f, sample_boundary(builtin::conj_z(), f.grid), fam);
    CHECK(r.max_rho < 1e-9);
    CHECK(r.period_verdict == Verdict::Extends);
    CHECK(r.cauchy_verdict == Verdict::NotExtends);
    // the two diagnostics disagree, so the combined verdict is not certified either way
    CHECK(r.verdict == Verdict::Inconclusive);
  }
  for (const char* phi : {"1/z", "z^2", "z^-3+2*z"}) {
    CAPTURE(phi);
    const ExtendibilityReport r = run(f, phi);
    CHECK(r.verdict == Verdict::Extends);
    CHECK(r.max_rho < 1e-9);
    CHECK(r.max_cauchy < 1e-9);
  }
}

TEST_CASE("verdicts on the three-connected domain") {
  const PeriodFields& f = three_fields();
  for (const char* phi : {"z^2", "1/(z-(-0.4+0.15i))", "1/(z-(0.45+0.2i))"}) {
    CAPTURE(phi);
    const ExtendibilityReport r = run(f, phi);
    CHECK(r.verdict == Verdict::Extends);
    CHECK(r.max_rho < 1e-8);
    CHECK(r.max_cauchy < 1e-8);
  }
  // 0 lies in D here, so 1/z has a pole inside and must be rejected
  CHECK(run(f, "1/z").verdict == Verdict::NotExtends);
  for (const char* phi : {"conj(z-(-0.4+0.15i))", "conj(z-(0.45+0.2i))"}) {
    CAPTURE(phi);
    const ExtendibilityReport r = run(f, phi);
    CHECK(r.verdict == Verdict::NotExtends);
    CHECK(r.witness.kind == Witness::Kind::Period);
  }
}

TEST_CASE("forward direction on random members of A(bD)") {
  const PeriodFields& f = three_fields();
  Rng rng(20061017);
  const TestFamily fam = TestFamily::standard(f.grid.domain(), 12);
  for (int t = 0; t < 10; ++t) {
    const Expr e = random_extendible(f.grid.domain(), rng);
    const ExtendibilityReport r = extendibility_test(f, sample_boundary(e, f.grid), fam);
    CAPTURE(to_string(e));
    CHECK(r.verdict == Verdict::Extends);
    CHECK(r.max_rho < 1e-8);
    CHECK(r.max_cauchy < 1e-8);
  }
}

TEST_CASE("noise lands in the inconclusive band") {
  const PeriodFields& f = annulus_fields();
  Rng rng(3);
  BoundarySamples phi = sample_boundary(parse_expr("z^2"), f.grid);
  for (auto& v : phi.values) v += 1e-5 * Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  const ExtendibilityReport r = extendibility_test(f, phi, TestFamily::standard(f.grid.domain(), 12));
  CHECK(r.verdict == Verdict::Inconclusive);
}

TEST_CASE("tolerance validation") {
  const PeriodFields& f = annulus_fields();
  Tolerances tol;
  tol.accept = 1e-3;
  tol.reject = 1e-6;
  try {
    extendibility_test(f, sample_boundary(builtin::zpow(2), f.grid), TestFamily::standard(f.grid.domain(), 4), tol);
    FAIL("expected ConfigInvalid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigInvalid);
  }
}

TEST_CASE("reconstruction") {
  SUBCASE("annulus") {
    const PeriodFields& f = annulus_fields();
    const BoundarySamples inv = sample_boundary(parse_expr("1/z"), f.grid);
    const ExtendibilityReport r =
        extendibility_test(f, inv, TestFamily::standard(f.grid.domain(), 12));
    CHECK(std::abs(reconstruct_extension(f, r, inv, 0.7) - 1.0 / 0.7) < 1e-8);
    const BoundarySamples sq = sample_boundary(parse_expr("z^2"), f.grid);
    const ExtendibilityReport rs = extendibility_test(f, sq, TestFamily::standard(f.grid.domain(), 12));
    CHECK(std::abs(reconstruct_extension(f, rs, sq, Complex(0, 0.6)) + 0.36) < 1e-8);
  }
  SUBCASE("three-connected, both fields agree") {
    const PeriodFields& f = three_fields();
    const Complex c1(-0.4, 0.15);
    const BoundarySamples phi = sample_boundary(parse_expr("1/(z-(-0.4+0.15i))"), f.grid);
    const ExtendibilityReport r = extendibility_test(f, phi, TestFamily::standard(f.grid.domain(), 12));
    for (Complex z : {Complex(0.1, -0.5), Complex(-0.2, 0.6), Complex(0.6, -0.2)}) {
      const Complex exact = 1.0 / (z - c1);
      CHECK(std::abs(reconstruct_extension(f, r, phi, z) - exact) < 1e-8);
      CHECK(std::abs(reconstruct_extension(f, r, phi, z, 1) - reconstruct_extension(f, r, phi, z, 2)) < 1e-7);
    }
  }
  SUBCASE("refused without certification") {
    const PeriodFields& f = annulus_fields();
    const BoundarySamples cz = sample_boundary(builtin::conj_z(), f.grid);
    const ExtendibilityReport r = extendibility_test(f, cz, TestFamily::standard(f.grid.domain(), 12));
    try {
      reconstruct_extension(f, r, cz, 0.7);
      FAIL("expected NotCertifiedExtendible");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotCertifiedExtendible);
    }
  }
}
