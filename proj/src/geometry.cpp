#include "conjp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "conjp/error.hpp"

namespace conjp {

namespace {

std::string describe(const Circle& c) {
  return "(" + std::to_string(c.center.real()) + "," + std::to_string(c.center.imag()) +
         "; r=" + std::to_string(c.radius) + ")";
}

}  // namespace

double CircleDomain::signed_distance(Complex z) const {
  double d = outer_.radius - std::abs(z - outer_.center);
  for (const auto& h : holes_) d = std::min(d, std::abs(z - h.center) - h.radius);
  return d;
}

CircleDomain make_domain(std::span<const Circle> circles) {
  if (circles.size() < 2) {
    throw Error(ErrorCode::TooFewBoundaryComponents,
                "a circle domain needs at least 2 boundary circles, got " + std::to_string(circles.size()));
  }
  for (const auto& c : circles) {
    if (!(c.radius > 0.0) || !std::isfinite(c.radius) || !std::isfinite(c.center.real()) ||
        !std::isfinite(c.center.imag())) {
      throw Error(ErrorCode::InvalidArgument, "circle radius must be positive and finite: " + describe(c));
    }
  }

  std::size_t outer = 0;
  for (std::size_t k = 1; k < circles.size(); ++k)
    if (circles[k].radius > circles[outer].radius) outer = k;

  CircleDomain d;
  d.outer_ = circles[outer];
  for (std::size_t k = 0; k < circles.size(); ++k) {
    if (k == outer) continue;
    const Circle& h = circles[k];
    if (std::abs(h.center - d.outer_.center) + h.radius >= d.outer_.radius) {
      throw Error(ErrorCode::HoleOutsideOuter, "hole " + describe(h) + " is not strictly inside the outer circle " +
                                                   describe(d.outer_));
    }
    d.holes_.push_back(h);
  }
  for (std::size_t i = 0; i < d.holes_.size(); ++i) {
    for (std::size_t j = i + 1; j < d.holes_.size(); ++j) {
      const auto& a = d.holes_[i];
      const auto& b = d.holes_[j];
      if (std::abs(a.center - b.center) <= a.radius + b.radius) {
        throw Error(ErrorCode::OverlappingCircles, "holes " + describe(a) + " and " + describe(b) + " intersect");
      }
    }
  }
  return d;
}

CircleDomain make_annulus(double inner_radius) {
  const Circle circles[] = {{Complex(0, 0), 1.0}, {Complex(0, 0), inner_radius}};
  if (!(inner_radius > 0.0 && inner_radius < 1.0))
    throw Error(ErrorCode::InvalidArgument, "annulus inner radius must lie in (0,1)");
  return make_domain(circles);
}

BoundaryGrid::BoundaryGrid(const CircleDomain& domain, std::size_t nodes_per_circle)
    : domain_(domain), n_(nodes_per_circle) {
  if (n_ < 16) throw Error(ErrorCode::NTooSmall, "need at least 16 nodes per circle, got " + std::to_string(n_));
  if (n_ % 2 != 0) throw Error(ErrorCode::InvalidArgument, "nodes per circle must be even");

  const std::size_t m = domain_.m();
  nodes_.reserve(m * n_);
  tangents_.reserve(m * n_);
  weights_.reserve(m * n_);
  for (std::size_t k = 0; k < m; ++k) {
    const Circle& c = domain_.circle(k);
    const double sigma = orientation(k);
    const double w = 2.0 * kPi * c.radius / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n_);
      const Complex e = std::polar(1.0, t);
      nodes_.push_back(c.center + c.radius * e);
      tangents_.push_back(sigma * kI * e);
      weights_.push_back(w);
    }
  }
}

double BoundaryGrid::theta(std::size_t i) const {
  return 2.0 * kPi * static_cast<double>(i % n_) / static_cast<double>(n_);
}

bool BoundaryGrid::same_layout(const BoundaryGrid& other) const {
  if (n_ != other.n_ || domain_.m() != other.domain_.m()) return false;
  for (std::size_t k = 0; k < domain_.m(); ++k) {
    const auto& a = domain_.circle(k);
    const auto& b = other.domain_.circle(k);
    if (a.center != b.center || a.radius != b.radius) return false;
  }
  return true;
}

BoundarySamples sample_function(const BoundaryGrid& grid, const std::function<Complex(Complex)>& f) {
  BoundarySamples s;
  s.values.reserve(grid.size());
  for (Complex z : grid.nodes()) s.values.push_back(f(z));
  return s;
}

BoundarySamples real_part(const BoundarySamples& s) {
  BoundarySamples r;
  r.values.reserve(s.size());
  for (Complex v : s.values) r.values.emplace_back(v.real(), 0.0);
  return r;
}

namespace {

template <typename T>
T pairwise(std::span<const T> x) {
  if (x.size() <= 8) {
    T acc{};
    for (const T& v : x) acc += v;
    return acc;
  }
  const std::size_t half = x.size() / 2;
  return pairwise(x.first(half)) + pairwise(x.subspan(half));
}

}  // namespace

Complex pairwise_sum(std::span<const Complex> terms) { return pairwise(terms); }
double pairwise_sum(std::span<const double> terms) { return pairwise(terms); }

Complex contour_integral(const BoundaryGrid& grid, const BoundarySamples& samples) {
  if (samples.size() != grid.size()) {
    throw Error(ErrorCode::GridMismatch, "sample count " + std::to_string(samples.size()) +
                                             " does not match grid size " + std::to_string(grid.size()));
  }
  std::vector<Complex> terms(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) terms[i] = samples[i] * grid.tangent(i) * grid.weight(i);
  return pairwise_sum(std::span<const Complex>(terms));
}

Complex circle_integral_ccw(const BoundaryGrid& grid, std::size_t circle, const BoundarySamples& samples) {
  if (samples.size() != grid.size()) throw Error(ErrorCode::GridMismatch, "sample count does not match grid");
  const std::size_t n = grid.nodes_per_circle();
  const std::size_t first = grid.first_node(circle);
  const double sigma = grid.orientation(circle);
  std::vector<Complex> terms(n);
  for (std::size_t i = 0; i < n; ++i)
    terms[i] = samples[first + i] * sigma * grid.tangent(first + i) * grid.weight(first + i);
  return pairwise_sum(std::span<const Complex>(terms));
}

}  // namespace conjp
