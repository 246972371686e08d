#pragma once

#include <cstdint>
#include <random>

#include "conjp/expr.hpp"
#include "conjp/geometry.hpp"

namespace conjp {

/// Seeded generator with a portable uniform mapping, so a recorded seed
/// replays the same functions on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);
  /// Uniform in the square [-1,1]^2.
  Complex unit_square();

 private:
  std::mt19937_64 engine_;
};

/// Random member of A(bD): a rational function whose poles sit at the hole
/// centres (orders 1..3) and at 1 or 2 points at 2-4 times the outer radius.
Expr random_extendible(const CircleDomain& domain, Rng& rng);

/// Random real boundary data: on each circle a trigonometric polynomial in
/// the angle about that circle's centre, degree <= max_degree, with
/// coefficients in [-1,1]^2 damped by 1/(1+p).
BoundarySamples random_smooth_data(const BoundaryGrid& grid, Rng& rng, int max_degree = 4);

}  // namespace conjp
