#include "conjp/extendibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "conjp/cauchy.hpp"
#include "conjp/error.hpp"
#include "conjp/parallel.hpp"

namespace conjp {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string fmt(Complex c) {
  if (c.imag() == 0.0) return fmt(c.real());
  return "(" + fmt(c.real()) + (c.imag() < 0 ? "-" : "+") + fmt(std::abs(c.imag())) + "i)";
}

std::string shifted(Complex c) {
  if (c == Complex{}) return "z";
  if (c.imag() == 0.0) return c.real() < 0 ? "z+" + fmt(-c.real()) : "z-" + fmt(c.real());
  return "z-" + fmt(c);
}

Verdict classify(double value, double accept, double reject) {
  if (value > reject) return Verdict::NotExtends;
  if (value < accept) return Verdict::Extends;
  return Verdict::Inconclusive;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Extends: return "EXTENDS";
    case Verdict::NotExtends: return "NOT_EXTENDS";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string Witness::describe() const {
  if (kind == Kind::Period) return "g=" + g + ", j=" + std::to_string(j);
  return "probe " + probe + " at " + fmt(point);
}

TestFamily TestFamily::standard(const CircleDomain& domain, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "test family degree must be non-negative");
  TestFamily f;
  f.degree = degree;
  const Circle& o = domain.outer();
  const bool unit = o.center == Complex{} && o.radius == 1.0;
  for (int n = 0; n <= degree; ++n) {
    std::string name;
    if (n == 0) name = "1";
    else if (unit) name = n == 1 ? "z" : "z^" + std::to_string(n);
    else name = "((" + shifted(o.center) + ")/" + fmt(o.radius) + ")^" + std::to_string(n);
    f.members.push_back({name, builtin::outer_pow(domain, n)});
  }
  for (std::size_t k = 1; k < domain.m(); ++k) {
    const Circle& h = domain.hole(k - 1);
    for (int n = 1; n <= degree; ++n) {
      std::string name = "(" + fmt(h.radius) + "/(" + shifted(h.center) + "))";
      if (n > 1) name += "^" + std::to_string(n);
      f.members.push_back({name, builtin::runge(domain, k, n)});
    }
  }
  return f;
}

Complex cauchy_transform(const BoundaryGrid& grid, const BoundarySamples& samples, Complex z,
                         std::optional<double> min_distance) {
  const CircleDomain& dom = grid.domain();
  const double limit = min_distance.value_or(0.05 * dom.outer().radius);
  if (std::abs(dom.signed_distance(z)) < limit) {
    throw Error(ErrorCode::ProbeTooCloseToBoundary,
                "probe at distance " + fmt(std::abs(dom.signed_distance(z))) + " from bD (limit " + fmt(limit) + ")");
  }
  return cauchy_integral(grid, samples, z);
}

std::vector<std::pair<Complex, std::string>> probe_points(const CircleDomain& domain) {
  std::vector<std::pair<Complex, std::string>> probes;
  for (std::size_t k = 0; k + 1 < domain.m(); ++k) {
    const Circle& h = domain.hole(k);
    const std::string tag = "hole " + std::to_string(k + 1);
    probes.emplace_back(h.center, tag + " centre");
    for (int q = 0; q < 8; ++q)
      probes.emplace_back(h.center + 0.5 * h.radius * std::polar(1.0, 2.0 * kPi * q / 8.0), tag + " ring");
  }
  const Circle& o = domain.outer();
  for (int q = 0; q < 8; ++q)
    probes.emplace_back(o.center + 2.0 * o.radius * std::polar(1.0, 2.0 * kPi * q / 8.0), "exterior ring");
  return probes;
}

ExtendibilityReport extendibility_test(const PeriodFields& fields, const BoundarySamples& phi,
                                       const TestFamily& family, Tolerances tol) {
  if (!(tol.accept > 0.0) || !(tol.reject > 0.0) || tol.accept > tol.reject)
    throw Error(ErrorCode::ConfigInvalid, "tolerances must be positive with accept <= reject");
  const BoundaryGrid& grid = fields.grid;
  if (phi.size() != grid.size()) throw Error(ErrorCode::GridMismatch, "Phi samples do not match the grid");

  ExtendibilityReport r;
  r.tolerances = tol;
  r.truncation_degree = family.degree;
  r.dirichlet_residual = fields.max_residual();
  r.threshold_scale = std::max(1.0, r.dirichlet_residual / tol.residual_reference);
  r.fields = fields.w.size();
  for (const auto& g : family.members) r.family.push_back(g.name);

  const double pairing_tol = tol.pairing_imag * r.threshold_scale;
  r.rho.assign(family.members.size() * r.fields, 0.0);
  parallel_for(family.members.size(), [&](std::size_t gi) {
    const std::vector<Complex> g = eval_expr(family.members[gi].expr, grid.nodes());
    BoundarySamples data;
    data.values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) data.values[i] = (g[i] * phi[i]).real();
    for (std::size_t j = 0; j < r.fields; ++j)
      r.rho[gi * r.fields + j] = period_pairing(grid, data, fields.w[j], pairing_tol);
  });

  const CircleDomain& dom = grid.domain();
  double min_hole = dom.outer().radius;
  for (const auto& h : dom.holes()) min_hole = std::min(min_hole, h.radius);
  const double probe_limit = std::min(0.05 * dom.outer().radius, 0.25 * min_hole);
  for (const auto& [z, label] : probe_points(dom)) r.probes.push_back({z, label, cauchy_transform(grid, phi, z, probe_limit)});

  for (std::size_t gi = 0; gi < family.members.size(); ++gi) {
    for (std::size_t j = 0; j < r.fields; ++j) {
      const double v = r.rho[gi * r.fields + j];
      if (std::abs(v) > r.max_rho || (gi == 0 && j == 0)) {
        r.max_rho = std::abs(v);
        r.period_witness = {Witness::Kind::Period, family.members[gi].name, j + 1, "", {}, v};
      }
    }
  }
  for (std::size_t p = 0; p < r.probes.size(); ++p) {
    const double v = std::abs(r.probes[p].value);
    if (v > r.max_cauchy || p == 0) {
      r.max_cauchy = v;
      r.cauchy_witness = {Witness::Kind::Cauchy, "", 0, r.probes[p].label, r.probes[p].point, v};
    }
  }

  const double accept = tol.accept * r.threshold_scale;
  const double reject = tol.reject * r.threshold_scale;
  r.period_verdict = classify(r.max_rho, accept, reject);
  r.cauchy_verdict = classify(r.max_cauchy, accept, reject);

  const bool any_reject = r.period_verdict == Verdict::NotExtends || r.cauchy_verdict == Verdict::NotExtends;
  const bool any_accept = r.period_verdict == Verdict::Extends || r.cauchy_verdict == Verdict::Extends;
  if (r.period_verdict == Verdict::Extends && r.cauchy_verdict == Verdict::Extends) r.verdict = Verdict::Extends;
  else if (any_reject && !any_accept) r.verdict = Verdict::NotExtends;
  else r.verdict = Verdict::Inconclusive;

  r.witness = (r.period_verdict == Verdict::NotExtends || r.cauchy_verdict != Verdict::NotExtends) ? r.period_witness
                                                                                                 : r.cauchy_witness;
  return r;
}

Complex reconstruct_extension(const PeriodFields& fields, const ExtendibilityReport& report,
                              const BoundarySamples& phi, Complex z, std::optional<std::size_t> j) {
  if (report.verdict != Verdict::Extends)
    throw Error(ErrorCode::NotCertifiedExtendible, "reconstruction needs an EXTENDS verdict");
  const BoundaryGrid& grid = fields.grid;
  if (!(grid.domain().signed_distance(z) > 1e-12))
    throw Error(ErrorCode::PointNotInterior, "reconstruction point is not interior to the domain");
  if (phi.size() != grid.size()) throw Error(ErrorCode::GridMismatch, "Phi samples do not match the grid");

  std::size_t best = 0;
  double best_mod = -1.0;
  for (std::size_t k = 0; k < fields.w.size(); ++k) {
    const double v = std::abs(fields.w[k](z));
    if (v > best_mod) {
      best_mod = v;
      best = k;
    }
  }
  if (best_mod < 1e-10)
    throw Error(ErrorCode::AllFieldsTinyAtPoint, "every W_j nearly vanishes at the reconstruction point");
  if (j) {
    if (*j < 1 || *j > fields.w.size()) throw Error(ErrorCode::InvalidArgument, "field index out of range");
    best = *j - 1;
  }

  const AnalyticEvaluator& w = fields.w[best];
  BoundarySamples product;
  product.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) product.values[i] = phi[i] * w(grid.node(i));
  const CauchyInterior h(grid, std::move(product));
  return h(z) / w(z);
}

}  // namespace conjp
