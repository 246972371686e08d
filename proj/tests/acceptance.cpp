// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--known-red N ...]
//
// Exit status is 0 when every failing criterion is listed with --known-red.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "common.hpp"
#include "conjp/expr.hpp"
#include "conjp/extendibility.hpp"
#include "conjp/harmonic.hpp"
#include "conjp/kernels.hpp"
#include "conjp/oracles.hpp"
#include "conjp/sampling.hpp"

using namespace conjp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const double kR = 0.5;

struct Setup {
  CircleDomain domain;
  PeriodFields fields;
  std::vector<std::pair<std::string, std::string>> holomorphic;  // label, expression
};

Setup annulus(std::size_t n, int degree) {
  return {make_annulus(kR), compute_period_fields(BoundaryGrid(make_annulus(kR), n), degree),
          {{"z^2", "z^2"}, {"1/z", "1/z"}, {"1/(z-c_1)", "1/z"}}};
}

Setup three(std::size_t n, int degree) {
  const CircleDomain d = testing::three_connected();
  return {d, compute_period_fields(BoundaryGrid(d, n), degree),
          {{"z^2", "z^2"}, {"1/z", "1/z"}, {"1/(z-c_1)", "1/(z-(-0.4+0.15i))"}, {"1/(z-c_2)", "1/(z-(0.45+0.2i))"}}};
}

ExtendibilityReport test(const PeriodFields& f, const Expr& phi) {
  return extendibility_test(f, sample_boundary(phi, f.grid), TestFamily::standard(f.grid.domain(), 12));
}

BoundarySamples example_data(const BoundaryGrid& g, int n) {
  return real_part(sample_boundary(pow(Expr::var(), n) * conj(Expr::var()), g));
}

Outcome criterion1(const Setup& a) {
  Outcome o;
  const DirichletSolver solver(a.fields.grid, a.fields.degree);
  double worst = 0.0;
  for (int n = -3; n <= 5; ++n) {
    if (n == 1) continue;
    worst = std::max(worst, std::abs(conjugate_periods(solver.solve(example_data(a.fields.grid, n)))[0]));
  }
  o.require(worst < 1e-8, "max |period| " + fmt(worst));
  o.detail = o.pass ? "max |period| " + fmt(worst) : o.detail;
  return o;
}

Outcome criterion2(const Setup& a) {
  Outcome o;
  const double expected = 2.0 * kPi * (kR * kR - 1.0) / std::log(kR);
  const double got = conjugate_periods(solve_dirichlet(a.fields.grid, example_data(a.fields.grid, 1), a.fields.degree))[0];
  const double paired = period_pairing(a.fields.grid, example_data(a.fields.grid, 1), a.fields.w[0]);
  const double rel = std::max(std::abs(got - expected), std::abs(paired - expected)) / std::abs(expected);
  o.require(rel < 1e-8, "relative error " + fmt(rel));
  char buf[96];
  std::snprintf(buf, sizeof buf, "period %.9f, oracle %.9f, rel %s", got, expected, fmt(rel).c_str());
  if (o.pass) o.detail = buf;
  return o;
}

Outcome criterion3(const std::vector<const Setup*>& setups) {
  Outcome o;
  for (const Setup* s : setups) {
    const std::string tag = "m=" + std::to_string(s->domain.m()) + " ";
    const ExtendibilityReport c = test(s->fields, builtin::conj_z());
    o.require(c.verdict == Verdict::NotExtends && c.witness.g == "z",
              tag + "conj(z) gave " + std::string(to_string(c.verdict)) + " " + c.witness.describe());
    for (const auto& [label, text] : s->holomorphic) {
      const ExtendibilityReport r = test(s->fields, parse_expr(text));
      o.require(r.verdict == Verdict::Extends && r.max_rho < 1e-8 && r.max_cauchy < 1e-8,
                tag + label + " gave " + std::string(to_string(r.verdict)) + " (rho " + fmt(r.max_rho) +
                    ", cauchy " + fmt(r.max_cauchy) + ")");
    }
  }
  return o;
}

Outcome criterion4(const Setup& t) {
  Outcome o;
  Rng rng(20061017);
  const TestFamily fam = TestFamily::standard(t.domain, 12);
  double rho = 0.0, cauchy = 0.0;
  for (int k = 0; k < 50; ++k) {
    const ExtendibilityReport r =
        extendibility_test(t.fields, sample_boundary(random_extendible(t.domain, rng), t.fields.grid), fam);
    rho = std::max(rho, r.max_rho);
    cauchy = std::max(cauchy, r.max_cauchy);
  }
  o.require(rho < 1e-8 && cauchy < 1e-8, "");
  o.detail = "max rho " + fmt(rho) + ", max cauchy " + fmt(cauchy);
  return o;
}

Outcome criterion5(const std::vector<const Setup*>& setups) {
  Outcome o;
  double worst = 0.0;
  for (const Setup* s : setups) {
    const BoundaryGrid& g = s->fields.grid;
    const DirichletSolver solver(g, s->fields.degree);
    std::vector<BoundarySamples> dn;
    for (std::size_t j = 0; j < s->fields.w.size(); ++j) dn.push_back(normal_derivative(*s->fields.measures[j], g));
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
      const BoundarySamples phi = random_smooth_data(g, rng);
      const auto coef = conjugate_periods(solver.solve(phi));
      for (std::size_t j = 0; j < coef.size(); ++j) {
        const double flux = flux_period(g, phi, dn[j]);
        const double pair = period_pairing(g, phi, s->fields.w[j]);
        worst = std::max({worst, std::abs(coef[j] - flux), std::abs(coef[j] - pair), std::abs(flux - pair)});
      }
    }
  }
  o.require(worst < 1e-8, "");
  o.detail = "max discrepancy " + fmt(worst);
  return o;
}

Outcome criterion6(const Setup& a, const Setup& t) {
  Outcome o;
  const BoundarySamples inv = sample_boundary(parse_expr("1/z"), a.fields.grid);
  const ExtendibilityReport ra = extendibility_test(a.fields, inv, TestFamily::standard(a.domain, 12));
  const double err = std::abs(reconstruct_extension(a.fields, ra, inv, 0.7) - 1.0 / 0.7);
  o.require(err < 1e-8, "annulus error " + fmt(err));

  const BoundarySamples phi = sample_boundary(parse_expr("1/(z-(-0.4+0.15i))"), t.fields.grid);
  const ExtendibilityReport rt = extendibility_test(t.fields, phi, TestFamily::standard(t.domain, 12));
  double spread = 0.0;
  for (Complex z : {Complex(0.1, -0.5), Complex(-0.2, 0.6), Complex(0.6, -0.2), Complex(0.0, 0.0)})
    spread = std::max(spread, std::abs(reconstruct_extension(t.fields, rt, phi, z, 1) -
                                       reconstruct_extension(t.fields, rt, phi, z, 2)));
  o.require(spread < 1e-7, "j-spread " + fmt(spread));
  if (o.pass) o.detail = "error " + fmt(err) + ", j-spread " + fmt(spread);
  return o;
}

Outcome criterion7(const std::vector<const Setup*>& setups) {
  Outcome o;
  std::string summary;
  for (const Setup* s : setups) {
    const std::string tag = "m=" + std::to_string(s->domain.m()) + " ";
    const SzegoSolver solver(s->fields.grid);
    auto [szego, zeros] = szego_with_retry(solver);
    o.require(zeros.zeros.size() + 1 == s->domain.m(), tag + "zero count " + std::to_string(zeros.zeros.size()));
    if (s->domain.m() == 2) {
      double worst = 0.0;
      const BoundaryGrid& g = s->fields.grid;
      for (std::size_t i = 0; i < g.size(); ++i)
        worst = std::max(worst,
                         std::abs(szego.boundary()[i] - annulus_szego_series(kR, g.node(i), szego.base_point()).value));
      o.require(worst < 1e-7, tag + "series mismatch " + fmt(worst));
      summary += tag + "series " + fmt(worst) + " ";
    }
    const KernelField L = garabedian_field(szego, s->fields.grid);
    const Complex res = contour_integral(s->fields.grid, L.boundary()) / (2.0 * kPi * kI);
    const double res_err = std::abs(res - 1.0 / (2.0 * kPi));
    o.require(res_err < 1e-5, tag + "residue error " + fmt(res_err));
    const SpanReport sp = span_check(solver, szego, zeros, s->fields.w);
    o.require(sp.w_onto_products < 1e-5 && sp.products_onto_w < 1e-5,
              tag + "span " + fmt(sp.w_onto_products) + "/" + fmt(sp.products_onto_w));
    const CommonZeroReport cz = common_zero_check(s->domain, s->fields.w);
    o.require(cz.min_max_modulus > 0.0, tag + "common zero");
    summary += tag + "span " + fmt(std::max(sp.w_onto_products, sp.products_onto_w)) + " margin " +
               fmt(cz.min_max_modulus) + " ";
  }
  if (o.pass) o.detail = summary;
  return o;
}

Outcome criterion8(const std::vector<const Setup*>& fine, const std::vector<const Setup*>& coarse) {
  Outcome o;
  for (std::size_t k = 0; k < fine.size(); ++k) {
    std::vector<Expr> cases{builtin::conj_z()};
    for (const auto& [label, text] : fine[k]->holomorphic) cases.push_back(parse_expr(text));
    for (const Expr& e : cases) {
      const Verdict a = test(fine[k]->fields, e).verdict;
      const Verdict b = test(coarse[k]->fields, e).verdict;
      o.require(a == b, "verdict of " + to_string(e) + " changed");
    }
  }
  double drift = 0.0;
  for (int n = -3; n <= 5; ++n) {
    const auto p = [&](const Setup* s) {
      return conjugate_periods(solve_dirichlet(s->fields.grid, example_data(s->fields.grid, n), s->fields.degree))[0];
    };
    drift = std::max(drift, std::abs(p(fine[0]) - p(coarse[0])));
  }
  o.require(drift < 1e-9, "period drift " + fmt(drift));
  if (o.pass) o.detail = "max period drift " + fmt(drift);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> known_red;
  CLI::App app{"acceptance suite"};
  app.add_option("--known-red", known_red, "criteria documented as unattainable");
  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  const Setup a = annulus(256, 32), t = three(256, 32);
  const Setup a128 = annulus(128, 24), t128 = three(128, 24);
  const std::vector<const Setup*> both{&a, &t};

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"annulus example n != 1: periods vanish", [&] { return criterion1(a); }},
      {"annulus example n = 1: radial period", [&] { return criterion2(a); }},
      {"extendibility verdicts on both domains", [&] { return criterion3(both); }},
      {"forward direction, 50 random members", [&] { return criterion4(t); }},
      {"three-route period agreement", [&] { return criterion5(both); }},
      {"reconstruction and j-independence", [&] { return criterion6(a, t); }},
      {"kernels: zeros, series, residue, span, common zero", [&] { return criterion7(both); }},
      {"convergence N 256 -> 128", [&] { return criterion8(both, {&a128, &t128}); }},
  };

  bool ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const bool expected_red = std::find(known_red.begin(), known_red.end(), id) != known_red.end();
    std::printf("%s %d %s: %s%s\n", out.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), out.detail.c_str(),
                !out.pass && expected_red ? " [known red]" : "");
    std::fflush(stdout);
    if (!out.pass && !expected_red) ok = false;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("elapsed %.1f s\n", secs);
  return ok ? 0 : 1;
}
