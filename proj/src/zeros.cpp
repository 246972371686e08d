#include "conjp/zeros.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <string>

#include "conjp/error.hpp"

namespace conjp {

namespace {

struct ContourSamples {
  std::vector<Complex> points;
  std::vector<Complex> dz;  // oriented, includes the trapezoid weight
  std::vector<Complex> f;
  double winding = 0.0;     // in turns
  bool resolved = true;
};

ContourSamples sample_contour(const CircleDomain& domain, const HolomorphicFunction& fn, double shrink,
                              std::size_t per_circle) {
  ContourSamples s;
  const std::size_t m = domain.m();
  for (std::size_t k = 0; k < m; ++k) {
    const Circle& c = domain.circle(k);
    const bool outer = domain.is_outer(k);
    const double rho = outer ? c.radius * (1.0 - shrink) : c.radius * (1.0 + shrink);
    const double sigma = outer ? 1.0 : -1.0;
    double turn = 0.0;
    Complex first{}, prev{};
    for (std::size_t i = 0; i < per_circle; ++i) {
      const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(per_circle);
      const Complex e = std::polar(1.0, t);
      const Complex z = c.center + rho * e;
      const Complex v = fn.value(z);
      s.points.push_back(z);
      s.dz.push_back(sigma * kI * rho * e * (2.0 * kPi / static_cast<double>(per_circle)));
      s.f.push_back(v);
      if (i == 0) {
        first = v;
      } else {
        const double step = std::arg(v / prev);
        if (std::abs(step) > kPi / 3.0) s.resolved = false;
        turn += step;
      }
      prev = v;
    }
    const double step = std::arg(first / prev);
    if (std::abs(step) > kPi / 3.0) s.resolved = false;
    turn += step;
    s.winding += sigma * turn / (2.0 * kPi);
  }
  return s;
}

Complex newton(const HolomorphicFunction& fn, Complex z, const ZeroSearchOptions& opt, double scale) {
  for (int it = 0; it < opt.max_newton_steps; ++it) {
    const Complex d = fn.derivative(z);
    if (d == Complex{}) break;
    const Complex step = fn.value(z) / d;
    z -= step;
    if (std::abs(step) <= opt.newton_tolerance * scale) break;
  }
  return z;
}

}  // namespace

ZeroSearchResult find_zeros(const CircleDomain& domain, const HolomorphicFunction& fn, ZeroSearchOptions options) {
  std::size_t per_circle = options.samples_per_circle;
  ContourSamples s = sample_contour(domain, fn, options.shrink, per_circle);
  while (!s.resolved && per_circle < 65536) {
    per_circle *= 2;
    s = sample_contour(domain, fn, options.shrink, per_circle);
  }

  ZeroSearchResult result;
  result.count = static_cast<int>(std::lround(s.winding));
  result.min_contour_modulus = std::numeric_limits<double>::infinity();
  for (Complex v : s.f) result.min_contour_modulus = std::min(result.min_contour_modulus, std::abs(v));
  if (result.count < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative winding count " + std::to_string(result.count) +
                                                ": the function has poles inside the contour");
  }

  // Power sums of the zeros in the scaled coordinate (z - c_m)/r_m.
  const Circle& o = domain.outer();
  const int K = result.count;
  std::vector<Complex> power(static_cast<std::size_t>(K) + 1);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const Complex q = fn.derivative(s.points[i]) / s.f[i] * s.dz[i] / (2.0 * kPi * kI);
    const Complex zeta = (s.points[i] - o.center) / o.radius;
    Complex zp(1.0, 0.0);
    for (int k = 0; k <= K; ++k, zp *= zeta) power[static_cast<std::size_t>(k)] += q * zp;
  }
  result.count_defect = std::abs(power[0] - static_cast<double>(K));
  if (K == 0) return result;

  // Newton's identities: power sums -> elementary symmetric functions.
  std::vector<Complex> e(static_cast<std::size_t>(K) + 1);
  e[0] = 1.0;
  for (int k = 1; k <= K; ++k) {
    Complex acc{};
    for (int i = 1; i <= k; ++i) {
      const double sign = (i % 2 == 1) ? 1.0 : -1.0;
      acc += sign * e[static_cast<std::size_t>(k - i)] * power[static_cast<std::size_t>(i)];
    }
    e[static_cast<std::size_t>(k)] = acc / static_cast<double>(k);
  }
  // Monic polynomial z^K - e1 z^(K-1) + e2 z^(K-2) - ...; companion matrix.
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(K, K);
  for (int i = 1; i < K; ++i) companion(i, i - 1) = 1.0;
  for (int k = 1; k <= K; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    companion(K - k, K - 1) = sign * e[static_cast<std::size_t>(k)];
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(companion, false);

  for (int k = 0; k < K; ++k) {
    const Complex seed = o.center + o.radius * eig.eigenvalues()(k);
    const Complex z = newton(fn, seed, options, o.radius);
    if (!domain.contains(z)) {
      throw Error(ErrorCode::ZeroNearBoundary, "zero refinement left the domain (seed " + std::to_string(seed.real()) +
                                                   "," + std::to_string(seed.imag()) + ")");
    }
    result.zeros.push_back(z);
    result.derivative_moduli.push_back(std::abs(fn.derivative(z)));
  }
  return result;
}

}  // namespace conjp
