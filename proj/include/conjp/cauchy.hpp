#pragma once

#include "conjp/geometry.hpp"

namespace conjp {

/// Plain trapezoidal Cauchy integral (1/2 pi i) * contour integral of f/(zeta - z).
/// Accurate for z well away from bD.
Complex cauchy_integral(const BoundaryGrid& grid, const BoundarySamples& samples, Complex z);

/// Interior evaluation of the holomorphic extension of boundary data through
/// the quotient form of the Cauchy formula
///
///   f(z) = sum f_j c_j / (w_j - z)  /  sum c_j / (w_j - z),   c_j = T_j ds_j,
///
/// which uses the exact identity (1/2 pi i) * integral of 1/(zeta - z) = 1
/// for z in D and stays accurate close to the boundary.
class CauchyInterior {
 public:
  CauchyInterior() = default;
  CauchyInterior(const BoundaryGrid& grid, BoundarySamples samples);

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;

  const BoundarySamples& samples() const { return samples_; }

 private:
  std::vector<Complex> nodes_;
  std::vector<Complex> coeff_;
  BoundarySamples samples_;
};

}  // namespace conjp
