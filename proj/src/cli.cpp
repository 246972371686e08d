#include "conjp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"

#include "conjp/error.hpp"
#include "conjp/expr.hpp"
#include "conjp/extendibility.hpp"
#include "conjp/harmonic.hpp"
#include "conjp/io.hpp"
#include "conjp/kernels.hpp"
#include "conjp/oracles.hpp"
#include "conjp/sampling.hpp"

namespace conjp {

namespace {

using nlohmann::json;

constexpr double kPropertyTolerance = 1e-8;
constexpr double kSpanTolerance = 1e-5;
constexpr double kResidueTolerance = 1e-5;
constexpr int kForwardSamples = 50;
constexpr int kThreeRouteSamples = 20;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

/// Annulus R < |z| < 1 centred at the origin, if the domain is one.
std::optional<double> unit_annulus_radius(const CircleDomain& d) {
  if (d.m() != 2) return std::nullopt;
  const Circle& o = d.outer();
  const Circle& h = d.hole(0);
  if (o.center != Complex{} || o.radius != 1.0 || h.center != Complex{}) return std::nullopt;
  return h.radius;
}

Expr resolve_phi(const std::string& text, const CircleDomain& domain) {
  Expr e = builtin::lookup(text, domain);
  return e.empty() ? parse_expr(text) : e;
}

BoundarySamples load_phi(const RunConfig& c, const BoundaryGrid& grid, Expr* expr) {
  if (c.phi) {
    Expr e = resolve_phi(*c.phi, grid.domain());
    if (expr) *expr = e;
    return sample_boundary(e, grid);
  }
  return load_samples_csv(*c.phi_samples, grid);
}

json vec_json(const std::vector<Complex>& v) {
  json a = json::array();
  for (Complex c : v) a.push_back(complex_to_json(c));
  return a;
}

json check(const std::string& name, bool pass, json metrics) {
  return {{"name", name}, {"pass", pass}, {"metrics", std::move(metrics)}};
}

}  // namespace

void RunConfig::validate(bool phi_required) const {
  if (nodes % 2 != 0) throw Error(ErrorCode::ConfigInvalid, "--nodes must be even");
  if (!(tol_accept > 0.0) || !(tol_reject > 0.0))
    throw Error(ErrorCode::ConfigInvalid, "tolerances must be positive");
  if (tol_accept > tol_reject) throw Error(ErrorCode::ConfigInvalid, "--tol-accept must not exceed --tol-reject");
  if (phi && phi_samples) throw Error(ErrorCode::ConfigInvalid, "give only one of --phi and --phi-samples");
  if (phi_required && !phi && !phi_samples)
    throw Error(ErrorCode::ConfigInvalid, "one of --phi or --phi-samples is required");
  if (ptest < 0) throw Error(ErrorCode::ConfigInvalid, "--ptest must be non-negative");
}

CircleDomain RunConfig::domain() const { return domain_path ? load_domain(*domain_path) : make_annulus(0.5); }

CommandResult cmd_test(const RunConfig& config) {
  config.validate(true);
  const CircleDomain domain = config.domain();
  const BoundaryGrid grid(domain, config.nodes);
  const BoundarySamples phi = load_phi(config, grid, nullptr);
  const PeriodFields fields = compute_period_fields(grid, config.degree);
  Tolerances tol;
  tol.accept = config.tol_accept;
  tol.reject = config.tol_reject;
  const ExtendibilityReport report = extendibility_test(fields, phi, TestFamily::standard(domain, config.ptest), tol);

  CommandResult r;
  r.report = report_to_json(report);
  r.report["domain"] = domain_to_json(domain);
  r.report["nodes_per_circle"] = config.nodes;
  r.report["degree"] = config.degree;
  if (config.phi) r.report["phi"] = *config.phi;
  r.summary = "verdict " + std::string(to_string(report.verdict)) + " witness " + report.witness.describe() +
              " value " + num(report.witness.value) + " (max rho " + num(report.max_rho) + ", max cauchy " +
              num(report.max_cauchy) + ")\n";
  switch (report.verdict) {
    case Verdict::Extends: r.exit_code = kExitOk; break;
    case Verdict::NotExtends: r.exit_code = kExitNotExtends; break;
    case Verdict::Inconclusive: r.exit_code = kExitInconclusive; break;
  }
  return r;
}

CommandResult cmd_solve(const RunConfig& config) {
  config.validate(true);
  const CircleDomain domain = config.domain();
  const BoundaryGrid grid(domain, config.nodes);
  const BoundarySamples data = real_part(load_phi(config, grid, nullptr));
  const HarmonicRep rep = solve_dirichlet(grid, data, config.degree);

  CommandResult r;
  r.report = harmonic_to_json(rep);
  r.report["schema_version"] = kReportSchemaVersion;
  r.report["kind"] = "harmonic";
  r.report["domain"] = domain_to_json(domain);
  r.report["nodes_per_circle"] = config.nodes;
  std::ostringstream s;
  s << "residual " << num(rep.boundary_residual) << (rep.residual_ok ? "" : " (ResidualTooLarge)") << "\n";
  const auto periods = conjugate_periods(rep);
  for (std::size_t j = 0; j < periods.size(); ++j) s << "period hole " << j + 1 << " " << num(periods[j]) << "\n";
  r.summary = s.str();
  return r;
}

namespace {

json kernel_report(const BoundaryGrid& grid, const PeriodFields& fields, const SzegoSolver& solver,
                   const KernelField& szego, const SzegoZeros& zeros, bool& pass) {
  const KernelField garabedian = garabedian_field(szego, grid);
  const Complex measured = contour_integral(grid, garabedian.boundary()) / (2.0 * kPi * kI);
  const double residue_error = std::abs(measured - 1.0 / (2.0 * kPi));
  const SpanReport span = span_check(solver, szego, zeros, fields.w);
  const CommonZeroReport cz = common_zero_check(grid.domain(), fields.w);

  json w_zeros = json::array();
  for (const auto& zs : cz.zeros) w_zeros.push_back(vec_json(zs));
  pass = static_cast<std::size_t>(zeros.search.count) + 1 == grid.domain().m() && residue_error < kResidueTolerance &&
         span.w_onto_products < kSpanTolerance && span.products_onto_w < kSpanTolerance &&
         span.w_onto_szego_only > 1e-2 && cz.min_max_modulus > 0.0;
  const Complex saa = szego(szego.base_point());
  auto finite_or_null = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
  return {
      {"base_point", complex_to_json(szego.base_point())},
      {"szego_at_base", complex_to_json(saa)},
      {"szego_zero_count", zeros.search.count},
      {"szego_zeros", vec_json(zeros.zeros)},
      {"szego_zero_margins", zeros.margins},
      {"garabedian_residue", complex_to_json(measured)},
      {"garabedian_residue_error", residue_error},
      {"span_w_onto_products", span.w_onto_products},
      {"span_products_onto_w", span.products_onto_w},
      {"span_negative_control", span.w_onto_szego_only},
      {"w_zeros", w_zeros},
      {"common_zero_margin", cz.min_max_modulus},
      {"w_zero_separation", finite_or_null(cz.min_zero_separation)},
  };
}

}  // namespace

CommandResult cmd_kernels(const RunConfig& config) {
  config.validate(false);
  const CircleDomain domain = config.domain();
  const BoundaryGrid grid(domain, config.nodes);
  const PeriodFields fields = compute_period_fields(grid, config.degree);
  const SzegoSolver solver(grid);

  std::optional<KernelField> szego;
  std::optional<SzegoZeros> zeros;
  if (config.base_point) {
    szego.emplace(solver.solve(parse_constant(*config.base_point)));
    zeros.emplace(szego_zeros(*szego, domain));
  } else {
    auto [s, z] = szego_with_retry(solver);
    szego.emplace(std::move(s));
    zeros.emplace(std::move(z));
  }

  bool pass = false;
  CommandResult r;
  r.report = kernel_report(grid, fields, solver, *szego, *zeros, pass);
  r.report["schema_version"] = kReportSchemaVersion;
  r.report["kind"] = "kernels";
  r.report["domain"] = domain_to_json(domain);
  r.report["pass"] = pass;
  std::ostringstream s;
  s << "szego zeros " << zeros->search.count << ":";
  for (Complex z : zeros->zeros) s << " " << num(z.real()) << (z.imag() < 0 ? "" : "+") << num(z.imag()) << "i";
  s << "\nspan residuals " << num(r.report["span_w_onto_products"].get<double>()) << " / "
    << num(r.report["span_products_onto_w"].get<double>()) << ", common-zero margin "
    << num(r.report["common_zero_margin"].get<double>()) << "\n";
  r.summary = s.str();
  r.exit_code = pass ? kExitOk : kExitFailure;
  return r;
}

CommandResult cmd_verify(const RunConfig& config) {
  config.validate(false);
  const CircleDomain domain = config.domain();
  const BoundaryGrid grid(domain, config.nodes);
  const PeriodFields fields = compute_period_fields(grid, config.degree);
  const TestFamily family = TestFamily::standard(domain, config.ptest);
  Tolerances tol;
  tol.accept = config.tol_accept;
  tol.reject = config.tol_reject;

  json checks = json::array();

  // Forward direction: members of A(bD) pass both diagnostics.
  {
    Rng rng(config.seed);
    double max_rho = 0.0, max_cauchy = 0.0;
    bool all_extend = true;
    for (int t = 0; t < kForwardSamples; ++t) {
      const Expr phi = random_extendible(domain, rng);
      const ExtendibilityReport rep = extendibility_test(fields, sample_boundary(phi, grid), family, tol);
      max_rho = std::max(max_rho, rep.max_rho);
      max_cauchy = std::max(max_cauchy, rep.max_cauchy);
      all_extend = all_extend && rep.verdict == Verdict::Extends;
    }
    checks.push_back(check("forward_property",
                           all_extend && max_rho < kPropertyTolerance && max_cauchy < kPropertyTolerance,
                           {{"samples", kForwardSamples}, {"max_rho", max_rho}, {"max_cauchy", max_cauchy}}));
  }

  // Reverse direction: conj(z) is not in A(bD).
  {
    const ExtendibilityReport rep = extendibility_test(fields, sample_boundary(builtin::conj_z(), grid), family, tol);
    bool pass = rep.verdict == Verdict::NotExtends;
    json metrics = {{"verdict", std::string(to_string(rep.verdict))},
                    {"witness", rep.witness.describe()},
                    {"witness_period", rep.witness.value}};
    if (const auto R = unit_annulus_radius(domain)) {
      const double expected = annulus_example(*R, 1).period();
      const double got = rep.rho_at(1, 0);  // family member g = z
      metrics["n1_period"] = got;
      metrics["n1_expected"] = expected;
      pass = pass && rep.witness.g == "z" && std::abs(got - expected) <= 1e-8 * std::abs(expected);
    }
    checks.push_back(check("counterexample_conj_z", pass, metrics));
  }

  // Coefficient, flux and contour routes to the conjugate periods.
  {
    Rng rng(config.seed + 1);
    const DirichletSolver solver(grid, config.degree);
    std::vector<BoundarySamples> dn;
    for (std::size_t j = 0; j + 1 < domain.m(); ++j) dn.push_back(normal_derivative(*fields.measures[j], grid));
    double worst = 0.0;
    for (int t = 0; t < kThreeRouteSamples; ++t) {
      const BoundarySamples phi = random_smooth_data(grid, rng);
      const auto coef = conjugate_periods(solver.solve(phi));
      for (std::size_t j = 0; j < coef.size(); ++j) {
        const double pair = period_pairing(grid, phi, fields.w[j]);
        const double flux = flux_period(grid, phi, dn[j]);
        worst = std::max({worst, std::abs(coef[j] - pair), std::abs(coef[j] - flux), std::abs(pair - flux)});
      }
    }
    checks.push_back(check("three_route_periods", worst < kPropertyTolerance,
                           {{"samples", kThreeRouteSamples}, {"max_discrepancy", worst}}));
  }

  // Szego / Garabedian machinery and the no-common-zero conclusion.
  {
    bool pass = false;
    json metrics;
    try {
      const SzegoSolver solver(grid);
      auto [szego, zeros] = szego_with_retry(solver);
      metrics = kernel_report(grid, fields, solver, szego, zeros, pass);
    } catch (const Error& e) {
      metrics = {{"error", e.what()}};
      pass = false;
    }
    checks.push_back(check("kernels", pass, metrics));
  }

  CommandResult r;
  r.report = {{"schema_version", kReportSchemaVersion},
              {"kind", "verify"},
              {"domain", domain_to_json(domain)},
              {"seed", config.seed},
              {"nodes_per_circle", config.nodes},
              {"degree", config.degree},
              {"ptest", config.ptest},
              {"dirichlet_residual", fields.max_residual()},
              {"checks", checks}};
  std::ostringstream s;
  std::optional<std::string> first_failure;
  for (const auto& c : checks) {
    const bool pass = c["pass"].get<bool>();
    s << (pass ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "\n";
    if (!pass && !first_failure) first_failure = c["name"].get<std::string>();
  }
  r.report["pass"] = !first_failure.has_value();
  if (first_failure) {
    r.report["first_failure"] = *first_failure;
    r.exit_code = kExitFailure;
  }
  r.summary = s.str();
  return r;
}

CommandResult cmd_dump(const RunConfig& config, std::ostream& csv) {
  config.validate(false);
  if (config.lattice < 2) throw Error(ErrorCode::ConfigInvalid, "--lattice must be at least 2");
  const CircleDomain domain = config.domain();
  const BoundaryGrid grid(domain, config.nodes);
  const PeriodFields fields = compute_period_fields(grid, config.degree);
  const std::size_t m = domain.m();

  std::optional<ExtendibilityReport> report;
  BoundarySamples phi;
  if (config.phi || config.phi_samples) {
    phi = load_phi(config, grid, nullptr);
    Tolerances tol;
    tol.accept = config.tol_accept;
    tol.reject = config.tol_reject;
    report = extendibility_test(fields, phi, TestFamily::standard(domain, config.ptest), tol);
  }
  const bool reconstruct = report && report->verdict == Verdict::Extends;

  csv << "x,y,inside";
  for (std::size_t j = 1; j <= m; ++j) csv << ",h_" << j;
  for (std::size_t j = 1; j < m; ++j) csv << ",absW_" << j;
  csv << ",phi_re,phi_im\n";
  const Circle& o = domain.outer();
  const std::size_t L = config.lattice;
  char buf[64];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, ",%.17g", v);
    csv << buf;
  };
  std::size_t inside_count = 0;
  for (std::size_t iy = 0; iy < L; ++iy) {
    for (std::size_t ix = 0; ix < L; ++ix) {
      const double x = o.center.real() - o.radius + 2.0 * o.radius * static_cast<double>(ix) / (L - 1);
      const double y = o.center.imag() - o.radius + 2.0 * o.radius * static_cast<double>(iy) / (L - 1);
      const Complex z(x, y);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", x, y);
      csv << buf;
      if (!domain.contains(z)) {
        csv << ",0";
        for (std::size_t k = 0; k < 2 * m + 1; ++k) csv << ",NA";
        csv << "\n";
        continue;
      }
      ++inside_count;
      csv << ",1";
      for (std::size_t j = 0; j < m; ++j) put(fields.measures[j]->value(z));
      for (std::size_t j = 0; j + 1 < m; ++j) put(std::abs(fields.w[j](z)));
      if (reconstruct) {
        const Complex v = reconstruct_extension(fields, *report, phi, z);
        put(v.real());
        put(v.imag());
      } else {
        csv << ",NA,NA";
      }
      csv << "\n";
    }
  }

  CommandResult r;
  r.report = {{"schema_version", kReportSchemaVersion},
              {"kind", "dump"},
              {"lattice", L},
              {"inside_points", inside_count},
              {"reconstructed", reconstruct}};
  if (report) r.report["verdict"] = std::string(to_string(report->verdict));
  r.summary = "dumped " + std::to_string(L * L) + " lattice points (" + std::to_string(inside_count) + " inside)\n";
  return r;
}

namespace {

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--domain", c.domain_path, "domain JSON file (default: annulus 0.5<|z|<1)");
  sub->add_option("--nodes", c.nodes, "nodes per boundary circle (even, >= 16)");
  sub->add_option("--degree", c.degree, "Laurent degree P of the harmonic solver");
  sub->add_option("--json", c.json_path, "write the JSON report to this file");
}

void add_phi(CLI::App* sub, RunConfig& c) {
  sub->add_option("--phi", c.phi, "boundary function: expression in z, or conj_z / zpow N / runge K N");
  sub->add_option("--phi-samples", c.phi_samples, "boundary samples CSV (circle_index,theta,re,im)");
}

void add_tolerances(CLI::App* sub, RunConfig& c) {
  sub->add_option("--ptest", c.ptest, "test family truncation degree");
  sub->add_option("--tol-accept", c.tol_accept, "EXTENDS threshold");
  sub->add_option("--tol-reject", c.tol_reject, "NOT_EXTENDS threshold");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"conjp: single-valued conjugates and holomorphic extendibility on circle domains"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the full verification pipeline");
  add_common(verify, c);
  add_tolerances(verify, c);
  verify->add_option("--seed", c.seed, "seed for the random A(bD) members");

  auto* test = app.add_subcommand("test", "extendibility test of one boundary function");
  add_common(test, c);
  add_phi(test, c);
  add_tolerances(test, c);

  auto* solve = app.add_subcommand("solve", "Dirichlet solve with conjugate periods");
  add_common(solve, c);
  add_phi(solve, c);
  solve->add_option("--data", c.phi_samples, "real boundary data CSV (alias of --phi-samples)");

  auto* kernels = app.add_subcommand("kernels", "Szego/Garabedian kernels, zeros, span and common-zero checks");
  add_common(kernels, c);
  kernels->add_option("--a", c.base_point, "base point, e.g. \"0.85*exp(i*pi/7)\"");
  std::string which = "szego";
  kernels->add_option("kernel", which, "kernel family (szego)")->check(CLI::IsMember({"szego"}));

  auto* dump = app.add_subcommand("dump", "CSV of h_j, |W_j| and the reconstructed extension on a lattice");
  add_common(dump, c);
  add_phi(dump, c);
  add_tolerances(dump, c);
  dump->add_option("--lattice", c.lattice, "lattice points per axis");
  dump->add_option("--out", c.out_path, "CSV output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    CommandResult r;
    if (verify->parsed()) r = cmd_verify(c);
    else if (test->parsed()) r = cmd_test(c);
    else if (solve->parsed()) r = cmd_solve(c);
    else if (kernels->parsed()) r = cmd_kernels(c);
    else {
      if (c.out_path) {
        std::ofstream f(*c.out_path);
        if (!f) throw Error(ErrorCode::IoError, "cannot write " + *c.out_path);
        r = cmd_dump(c, f);
      } else {
        r = cmd_dump(c, out);
      }
    }

    if (c.json_path) {
      std::ofstream f(*c.json_path);
      if (!f) throw Error(ErrorCode::IoError, "cannot write " + *c.json_path);
      f << r.report.dump(2) << "\n";
      out << r.summary;
    } else if (!(dump->parsed() && !c.out_path)) {
      out << r.summary << r.report.dump(2) << "\n";
    }
    if (verify->parsed() && r.exit_code != kExitOk)
      err << "verify failed: " << r.report.value("first_failure", std::string("?")) << "\n";
    return r.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("conjp");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace conjp
