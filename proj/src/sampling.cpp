#include "conjp/sampling.hpp"

#include <cmath>

namespace conjp {

double Rng::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int Rng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

Complex Rng::unit_square() {
  const double re = uniform(-1.0, 1.0);
  const double im = uniform(-1.0, 1.0);
  return {re, im};
}

Expr random_extendible(const CircleDomain& domain, Rng& rng) {
  Expr f = Expr::literal(rng.unit_square());
  for (std::size_t k = 1; k < domain.m(); ++k) {
    const int order = rng.integer(1, 3);
    for (int p = 1; p <= order; ++p) f = f + Expr::literal(rng.unit_square()) * builtin::runge(domain, k, p);
  }
  const Circle& o = domain.outer();
  const int far_poles = rng.integer(1, 2);
  for (int e = 0; e < far_poles; ++e) {
    const double s = rng.uniform(2.0, 4.0);
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const Complex q = o.center + o.radius * s * std::polar(1.0, phi);
    f = f + Expr::literal(rng.unit_square()) / (Expr::var() - Expr::literal(q));
  }
  return f;
}

BoundarySamples random_smooth_data(const BoundaryGrid& grid, Rng& rng, int max_degree) {
  const CircleDomain& dom = grid.domain();
  std::vector<std::vector<Complex>> coeff(dom.m());
  for (auto& c : coeff) {
    const int degree = rng.integer(1, max_degree);
    for (int p = 0; p <= degree; ++p) c.push_back(rng.unit_square() / (1.0 + p));
  }
  BoundarySamples s;
  s.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::size_t k = grid.circle_of(i);
    const Complex e = std::polar(1.0, grid.theta(i));
    Complex v{}, ep(1.0, 0.0);
    for (Complex a : coeff[k]) {
      v += a * ep;
      ep *= e;
    }
    s.values[i] = v.real();
  }
  return s;
}

}  // namespace conjp
