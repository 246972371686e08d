#pragma once

#include <memory>
#include <vector>

#include "conjp/geometry.hpp"

namespace conjp {

/// Harmonic function on a circle domain in the form
///
///   u(z) = a0 + sum_k beta_k ln|z - c_k|
///            + Re[ sum_p alpha_out_p ((z - c_m)/r_m)^p
///                + sum_k sum_p alpha_k_p (r_k/(z - c_k))^p ].
///
/// Only the log terms have multivalued conjugates, so the conjugate period
/// around hole k (counter-clockwise) is exactly 2*pi*beta_k.
struct HarmonicRep {
  CircleDomain domain;
  int degree = 0;
  double a0 = 0.0;
  std::vector<double> beta;                        // one per hole
  std::vector<Complex> laurent_outer;              // p = 1..degree
  std::vector<std::vector<Complex>> laurent_hole;  // [hole][p-1]
  double boundary_residual = 0.0;                  // sup-norm fit error at the nodes
  double condition_estimate = 0.0;                 // after column equilibration
  std::size_t rank = 0;
  bool residual_ok = true;                         // boundary_residual <= tolerance

  /// Representation formula, no interior check.
  double value(Complex z) const;
  /// Derivative of the (multivalued) analytic completion u + i u*.
  Complex completion_derivative(Complex z) const;
  Complex completion_second_derivative(Complex z) const;
};

/// Single-valued holomorphic derivative f' of the completion of a HarmonicRep.
/// Its only singularities sit at hole centres (and at infinity).
class AnalyticEvaluator {
 public:
  AnalyticEvaluator() = default;
  explicit AnalyticEvaluator(std::shared_ptr<const HarmonicRep> rep) : rep_(std::move(rep)) {}

  Complex operator()(Complex z) const { return rep_->completion_derivative(z); }
  Complex derivative(Complex z) const { return rep_->completion_second_derivative(z); }
  const HarmonicRep& rep() const { return *rep_; }
  double boundary_residual() const { return rep_->boundary_residual; }

 private:
  std::shared_ptr<const HarmonicRep> rep_;
};

struct DirichletOptions {
  double tolerance = 1e-9;         // sup residual accepted as "solved"
  double truncation = 1e-12;       // relative singular value cut-off
  double max_condition = 1e14;     // beyond this the system is rejected
};

/// Least-squares fit of the HarmonicRep basis at the grid nodes. The
/// factorisation is computed once and reused for every right-hand side.
class DirichletSolver {
 public:
  DirichletSolver(const BoundaryGrid& grid, int degree, DirichletOptions options = {});
  ~DirichletSolver();
  DirichletSolver(DirichletSolver&&) noexcept;
  DirichletSolver& operator=(DirichletSolver&&) noexcept;

  /// Data must be real (imaginary parts are rejected above 1e-12).
  HarmonicRep solve(const BoundarySamples& data) const;

  std::size_t unknowns() const;
  double condition_estimate() const;
  const BoundaryGrid& grid() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

HarmonicRep solve_dirichlet(const BoundaryGrid& grid, const BoundarySamples& data, int degree,
                            DirichletOptions options = {});

/// Throws PointNotInterior within 1e-12 of bD or outside D.
double eval_harmonic(const HarmonicRep& rep, Complex z);

/// Harmonic measure of boundary component j (1-based, j = m is the outer circle).
HarmonicRep harmonic_measure(const BoundaryGrid& grid, std::size_t j, int degree, DirichletOptions options = {});

/// W_j = (h_j + i h_j*)' for hole j (1-based, 1 <= j <= m-1).
AnalyticEvaluator w_field(const BoundaryGrid& grid, std::size_t j, int degree, DirichletOptions options = {});

/// Conjugate periods 2*pi*beta_j, one per hole, counter-clockwise convention.
std::vector<double> conjugate_periods(const HarmonicRep& rep);

/// Real pairing of phi against iW dz over bD. The imaginary part of the
/// computed integral must stay below `imag_tolerance * max(1, sup|phi|)`,
/// otherwise NonRealPairing is thrown.
double period_pairing(const BoundaryGrid& grid, const BoundarySamples& phi, const AnalyticEvaluator& w,
                      double imag_tolerance = 1e-10);

/// Outward normal derivative du/dn at every node.
BoundarySamples normal_derivative(const HarmonicRep& rep, const BoundaryGrid& grid);

/// Flux route to the conjugate period of H(phi)* around hole j:
/// -sum phi * dh_j/dn * ds, with dn the outward normal derivative of h_j.
/// The minus sign converts the outward-flux integral to the
/// counter-clockwise period convention used everywhere else.
double flux_period(const BoundaryGrid& grid, const BoundarySamples& phi, const BoundarySamples& dn_measure);

/// All harmonic measures h_1..h_m and fields W_1..W_{m-1} on one grid.
struct PeriodFields {
  BoundaryGrid grid;
  int degree;
  std::vector<std::shared_ptr<const HarmonicRep>> measures;  // size m
  std::vector<AnalyticEvaluator> w;                          // size m-1

  double max_residual() const;
};

PeriodFields compute_period_fields(const BoundaryGrid& grid, int degree, DirichletOptions options = {});

}  // namespace conjp
