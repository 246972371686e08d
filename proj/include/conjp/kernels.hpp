#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <vector>

#include "conjp/cauchy.hpp"
#include "conjp/geometry.hpp"
#include "conjp/harmonic.hpp"
#include "conjp/zeros.hpp"

namespace conjp {

/// Boundary values of a kernel function together with its interior
/// extension. A Garabedian field additionally carries its simple pole at
/// the base point; the interior evaluator handles the regular part through
/// the Cauchy formula and adds the pole term explicitly.
class KernelField {
 public:
  enum class Kind { Szego, Garabedian };

  KernelField(Kind kind, const BoundaryGrid& grid, Complex base_point, BoundarySamples boundary,
              std::optional<Complex> residue = std::nullopt);

  Kind kind() const { return kind_; }
  Complex base_point() const { return a_; }
  const BoundarySamples& boundary() const { return boundary_; }
  std::optional<Complex> residue() const { return residue_; }

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  HolomorphicFunction as_function() const;

 private:
  Kind kind_;
  Complex a_;
  BoundarySamples boundary_;
  std::optional<Complex> residue_;
  CauchyInterior regular_;
};

/// Nystrom discretisation of the Kerzman-Stein equation
///
///   S(z,a) + integral A(z,w) S(w,a) ds_w = conj(H(a,z)),   z on bD,
///   A(z,w) = H(z,w) - conj(H(w,z)),   H(z,w) = T(w) / (2 pi i (w - z)).
///
/// A vanishes identically when z and w lie on the same circle, so only the
/// smooth cross-circle blocks enter. The system matrix does not depend on
/// the base point; it is factored once and reused for every a.
class SzegoSolver {
 public:
  explicit SzegoSolver(const BoundaryGrid& grid);
  ~SzegoSolver();
  SzegoSolver(SzegoSolver&&) noexcept;
  SzegoSolver& operator=(SzegoSolver&&) noexcept;

  /// Requires a in D with distance to bD above min_distance * outer radius.
  KernelField solve(Complex a, double min_distance = 0.02) const;

  /// Kernel matrix A(z_i, z_j) without quadrature weights (skew-hermitian).
  const Eigen::MatrixXcd& kernel_matrix() const;
  const BoundaryGrid& grid() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

KernelField kerzman_stein_solve(const BoundaryGrid& grid, Complex a);

/// Default base point c_m + factor * r_m * exp(i pi / 7).
Complex default_base_point(const CircleDomain& domain, double factor = 0.85);

struct SzegoZeros {
  Complex base_point;
  std::vector<Complex> zeros;
  std::vector<double> margins;  // |dS/dz| at each zero
  ZeroSearchResult search;
};

/// Exactly m-1 zeros are expected; otherwise WrongZeroCount.
SzegoZeros szego_zeros(const KernelField& szego, const CircleDomain& domain, ZeroSearchOptions options = {});

/// Tries the default base point at radial factors 0.85, 0.9, 0.95 until the
/// zero count is m-1. The last failure is rethrown.
std::pair<KernelField, SzegoZeros> szego_with_retry(const SzegoSolver& solver, ZeroSearchOptions options = {});

/// Garabedian kernel from the boundary identity L(z,a) = i conj(S(z,a) T(z)).
/// The residue at a is measured by the boundary contour integral; the sign
/// is pinned so that it equals 1/(2 pi). Throws ResidueCheckFailed if the
/// measured residue matches neither sign to 1e-5.
KernelField garabedian_field(const KernelField& szego, const BoundaryGrid& grid);

struct SpanReport {
  double w_onto_products = 0.0;   // max relative residual, W_j fitted by {L(.,a_k) S(.,a)}
  double products_onto_w = 0.0;   // max relative residual, products fitted by {W_j}
  double w_onto_szego_only = 0.0; // negative control: W_1 fitted by S(.,a) alone
};

SpanReport span_check(const SzegoSolver& solver, const KernelField& szego, const SzegoZeros& zeros,
                      const std::vector<AnalyticEvaluator>& w);

struct CommonZeroReport {
  std::vector<std::vector<Complex>> zeros;  // per W_j
  double min_max_modulus = 0.0;            // min over the lattice of max_j |W_j|
  double min_zero_separation = 0.0;        // between zero sets of different W_j (inf if none)
  double min_max_at_zeros = 0.0;           // min over all zeros b of max_j |W_j(b)| (inf if none)
  std::size_t lattice_points = 0;
};

/// Throws CommonZeroFound if some point is within 1e-8 of being a zero of
/// every W_j.
CommonZeroReport common_zero_check(const CircleDomain& domain, const std::vector<AnalyticEvaluator>& w,
                                   std::size_t lattice = 200, ZeroSearchOptions options = {});

HolomorphicFunction as_function(const AnalyticEvaluator& w);

}  // namespace conjp
