#pragma once

#include <functional>
#include <vector>

#include "conjp/geometry.hpp"

namespace conjp {

struct HolomorphicFunction {
  std::function<Complex(Complex)> value;
  std::function<Complex(Complex)> derivative;
};

struct ZeroSearchOptions {
  double shrink = 0.02;                  // contour offset relative to each radius
  std::size_t samples_per_circle = 1024;
  double newton_tolerance = 1e-14;       // relative step size
  int max_newton_steps = 60;
};

struct ZeroSearchResult {
  int count = 0;                         // winding number of f along the shrunken contour
  double count_defect = 0.0;             // |contour integral of f'/f / 2 pi i - count|
  double min_contour_modulus = 0.0;      // min |f| on the contour
  std::vector<Complex> zeros;
  std::vector<double> derivative_moduli;  // |f'| at each zero (simplicity margin)
};

/// Counts the zeros of f inside the contour made of the outer circle shrunk
/// and the hole circles grown by `shrink`, then locates them from the
/// contour moments of f'/f and polishes each by Newton's method.
///
/// Throws ZeroNearBoundary when a polished zero is not interior to D.
ZeroSearchResult find_zeros(const CircleDomain& domain, const HolomorphicFunction& f, ZeroSearchOptions options = {});

}  // namespace conjp
