#include "conjp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "conjp/error.hpp"

namespace conjp {

namespace {

Circle circle_from_json(const nlohmann::json& j) {
  const auto& c = j.at("center");
  if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::InvalidArgument, "circle center must be [x,y]");
  return {Complex(c.at(0).get<double>(), c.at(1).get<double>()), j.at("radius").get<double>()};
}

nlohmann::json circle_to_json(const Circle& c) {
  return {{"center", {c.center.real(), c.center.imag()}}, {"radius", c.radius}};
}

}  // namespace

CircleDomain domain_from_json(const nlohmann::json& j) {
  std::vector<Circle> circles;
  try {
    circles.push_back(circle_from_json(j.at("outer")));
    if (j.contains("holes"))
      for (const auto& h : j.at("holes")) circles.push_back(circle_from_json(h));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed domain JSON: ") + e.what());
  }
  return make_domain(circles);
}

nlohmann::json domain_to_json(const CircleDomain& d) {
  nlohmann::json holes = nlohmann::json::array();
  for (const auto& h : d.holes()) holes.push_back(circle_to_json(h));
  return {{"outer", circle_to_json(d.outer())}, {"holes", holes}};
}

CircleDomain load_domain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open domain file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, "domain file " + path + " is not valid JSON: " + e.what());
  }
  return domain_from_json(j);
}

BoundarySamples read_samples_csv(std::istream& in, const BoundaryGrid& grid) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::GridMismatch, "empty samples file");
  if (line.rfind("circle_index", 0) != 0) throw Error(ErrorCode::InvalidArgument, "samples CSV needs a header row");

  BoundarySamples s;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::istringstream fields(line);
    std::string a, b, c, d;
    if (!std::getline(fields, a, ',') || !std::getline(fields, b, ',') || !std::getline(fields, c, ',') ||
        !std::getline(fields, d)) {
      throw Error(ErrorCode::InvalidArgument, "malformed samples row " + std::to_string(row + 2));
    }
    if (row >= grid.size()) throw Error(ErrorCode::GridMismatch, "samples file has more rows than grid nodes");
    const long circle = std::stol(a);
    const double theta = std::stod(b);
    if (circle != static_cast<long>(grid.circle_of(row) + 1) || std::abs(theta - grid.theta(row)) > 1e-9) {
      throw Error(ErrorCode::GridMismatch, "samples row " + std::to_string(row + 2) + " does not match grid node");
    }
    s.values.emplace_back(std::stod(c), std::stod(d));
    ++row;
  }
  if (row != grid.size()) {
    throw Error(ErrorCode::GridMismatch, "samples file has " + std::to_string(row) + " rows, grid has " +
                                             std::to_string(grid.size()) + " nodes");
  }
  return s;
}

BoundarySamples load_samples_csv(const std::string& path, const BoundaryGrid& grid) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open samples file " + path);
  return read_samples_csv(in, grid);
}

void write_samples_csv(std::ostream& out, const BoundaryGrid& grid, const BoundarySamples& samples) {
  if (samples.size() != grid.size()) throw Error(ErrorCode::GridMismatch, "samples do not match the grid");
  out << "circle_index,theta,re,im\n";
  char buf[160];
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", grid.circle_of(i) + 1, grid.theta(i),
                  samples[i].real(), samples[i].imag());
    out << buf;
  }
}

nlohmann::json complex_to_json(Complex c) { return {c.real(), c.imag()}; }

nlohmann::json harmonic_to_json(const HarmonicRep& rep) {
  nlohmann::json outer = nlohmann::json::array();
  for (Complex c : rep.laurent_outer) outer.push_back(complex_to_json(c));
  nlohmann::json holes = nlohmann::json::array();
  for (const auto& h : rep.laurent_hole) {
    nlohmann::json block = nlohmann::json::array();
    for (Complex c : h) block.push_back(complex_to_json(c));
    holes.push_back(block);
  }
  nlohmann::json periods = nlohmann::json::array();
  for (double p : conjugate_periods(rep)) periods.push_back(p);
  return {
      {"coefficients", {{"a0", rep.a0}, {"beta", rep.beta}, {"laurent_outer", outer}, {"laurent_hole", holes}}},
      {"degree", rep.degree},
      {"residual", rep.boundary_residual},
      {"residual_ok", rep.residual_ok},
      {"condition_estimate", rep.condition_estimate},
      {"rank", rep.rank},
      {"periods", periods},
  };
}

namespace {

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json j = {{"kind", w.kind == Witness::Kind::Period ? "period" : "cauchy"},
                      {"name", w.describe()},
                      {"value", w.value}};
  if (w.kind == Witness::Kind::Period) {
    j["g"] = w.g;
    j["j"] = w.j;
  } else {
    j["probe"] = w.probe;
    j["point"] = complex_to_json(w.point);
  }
  return j;
}

}  // namespace

nlohmann::json report_to_json(const ExtendibilityReport& r) {
  nlohmann::json probes = nlohmann::json::array();
  for (const auto& p : r.probes)
    probes.push_back({{"label", p.label}, {"point", complex_to_json(p.point)}, {"value", complex_to_json(p.value)},
                      {"abs", std::abs(p.value)}});
  return {
      {"schema_version", kReportSchemaVersion},
      {"kind", "extendibility"},
      {"verdict", std::string(to_string(r.verdict))},
      {"period_verdict", std::string(to_string(r.period_verdict))},
      {"cauchy_verdict", std::string(to_string(r.cauchy_verdict))},
      {"truncation_degree", r.truncation_degree},
      {"witness", witness_to_json(r.witness)},
      {"period_witness", witness_to_json(r.period_witness)},
      {"cauchy_witness", witness_to_json(r.cauchy_witness)},
      {"max_rho", r.max_rho},
      {"max_cauchy", r.max_cauchy},
      {"rho", {{"rows", r.family.size()}, {"cols", r.fields}, {"row_names", r.family}, {"data", r.rho}}},
      {"cauchy_probes", probes},
      {"tolerances",
       {{"accept", r.tolerances.accept},
        {"reject", r.tolerances.reject},
        {"residual_reference", r.tolerances.residual_reference},
        {"scale", r.threshold_scale}}},
      {"dirichlet_residual", r.dirichlet_residual},
  };
}

}  // namespace conjp
