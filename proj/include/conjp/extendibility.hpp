#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conjp/expr.hpp"
#include "conjp/geometry.hpp"
#include "conjp/harmonic.hpp"

namespace conjp {

struct TestFunction {
  std::string name;
  Expr expr;
};

/// Finite family of functions holomorphic on the closed domain:
/// ((z - c_m)/r_m)^n for 0 <= n <= degree and (r_k/(z - c_k))^n for
/// 1 <= n <= degree on every hole k.
struct TestFamily {
  std::vector<TestFunction> members;
  int degree = 0;

  static TestFamily standard(const CircleDomain& domain, int degree);
};

enum class Verdict { Extends, NotExtends, Inconclusive };
std::string_view to_string(Verdict v);

struct Tolerances {
  double accept = 1e-7;
  double reject = 1e-4;
  double residual_reference = 1e-9;  // thresholds scale by max(1, residual / reference)
  double pairing_imag = 1e-10;       // passed to period_pairing
};

struct CauchyProbe {
  Complex point;
  std::string label;  // "hole k centre", "hole k ring", "exterior ring"
  Complex value;
};

struct Witness {
  enum class Kind { Period, Cauchy } kind = Kind::Period;
  std::string g;        // test function name (period witness)
  std::size_t j = 0;    // hole index, 1-based (period witness)
  std::string probe;    // probe label (Cauchy witness)
  Complex point{};      // probe point (Cauchy witness)
  double value = 0.0;   // signed rho, or |Cauchy residual|

  std::string describe() const;
};

struct ExtendibilityReport {
  std::vector<std::string> family;
  std::size_t fields = 0;    // m - 1
  std::vector<double> rho;   // row-major, family.size() x fields
  std::vector<CauchyProbe> probes;

  Verdict verdict = Verdict::Inconclusive;
  Verdict period_verdict = Verdict::Inconclusive;
  Verdict cauchy_verdict = Verdict::Inconclusive;
  Witness witness;
  Witness period_witness;
  Witness cauchy_witness;
  double max_rho = 0.0;
  double max_cauchy = 0.0;

  Tolerances tolerances;
  double threshold_scale = 1.0;
  double dirichlet_residual = 0.0;
  int truncation_degree = 0;

  double rho_at(std::size_t g, std::size_t j) const { return rho[g * fields + j]; }
};

/// (1/2 pi i) * integral over bD of samples / (zeta - z). Throws
/// ProbeTooCloseToBoundary when z lies within min_distance of bD.
Complex cauchy_transform(const BoundaryGrid& grid, const BoundarySamples& samples, Complex z,
                         std::optional<double> min_distance = std::nullopt);

/// Fixed probe layout: every hole centre, an 8-point ring at half of each
/// hole radius, and an 8-point ring at twice the outer radius.
std::vector<std::pair<Complex, std::string>> probe_points(const CircleDomain& domain);

/// Period sweep rho(g, j) = pairing of Re(g Phi) with W_j, plus Cauchy
/// residuals at the probes. Verdict:
///   NotExtends  if a diagnostic exceeds reject * scale (and the other agrees or is inconclusive),
///   Extends     if both diagnostics stay below accept * scale,
///   Inconclusive otherwise (including disagreement between the two routes).
ExtendibilityReport extendibility_test(const PeriodFields& fields, const BoundarySamples& phi,
                                       const TestFamily& family, Tolerances tol = {});

/// Holomorphic extension of Phi at interior z from Phi = H_j / W_j, where
/// H_j is the Cauchy integral of Phi W_j. Uses j = argmax |W_j(z)| unless an
/// index (1-based) is given. Requires an Extends verdict.
Complex reconstruct_extension(const PeriodFields& fields, const ExtendibilityReport& report,
                              const BoundarySamples& phi, Complex z, std::optional<std::size_t> j = std::nullopt);

}  // namespace conjp
