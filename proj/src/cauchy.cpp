#include "conjp/cauchy.hpp"

#include "conjp/error.hpp"

namespace conjp {

Complex cauchy_integral(const BoundaryGrid& grid, const BoundarySamples& samples, Complex z) {
  if (samples.size() != grid.size()) throw Error(ErrorCode::GridMismatch, "Cauchy samples do not match the grid");
  BoundarySamples integrand;
  integrand.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) integrand.values[i] = samples[i] / (grid.node(i) - z);
  return contour_integral(grid, integrand) / (2.0 * kPi * kI);
}

CauchyInterior::CauchyInterior(const BoundaryGrid& grid, BoundarySamples samples) : samples_(std::move(samples)) {
  if (samples_.size() != grid.size()) throw Error(ErrorCode::GridMismatch, "Cauchy samples do not match the grid");
  nodes_.assign(grid.nodes().begin(), grid.nodes().end());
  coeff_.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) coeff_[i] = grid.tangent(i) * grid.weight(i);
}

Complex CauchyInterior::operator()(Complex z) const {
  Complex num{}, den{};
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Complex d = nodes_[i] - z;
    if (d == Complex{}) return samples_[i];
    const Complex a = coeff_[i] / d;
    num += samples_[i] * a;
    den += a;
  }
  return num / den;
}

Complex CauchyInterior::derivative(Complex z) const {
  Complex num{}, den{}, dnum{}, dden{};
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Complex d = nodes_[i] - z;
    const Complex a = coeff_[i] / d;
    const Complex b = a / d;
    num += samples_[i] * a;
    den += a;
    dnum += samples_[i] * b;
    dden += b;
  }
  const Complex r = num / den;
  return (dnum - r * dden) / den;
}

}  // namespace conjp
