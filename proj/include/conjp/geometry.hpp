#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace conjp {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

struct Circle {
  Complex center;
  double radius = 0.0;
};

/// Bounded circle domain: the outer circle minus m-1 closed hole discs.
///
/// Boundary components are numbered 1..m: holes first, in input order, the
/// outer circle last. Internally circle index k (0-based) is component k+1.
class CircleDomain {
 public:
  const std::vector<Circle>& holes() const { return holes_; }
  const Circle& outer() const { return outer_; }
  const Circle& hole(std::size_t k) const { return holes_.at(k); }

  /// Number of boundary components m.
  std::size_t m() const { return holes_.size() + 1; }

  /// Circle by 0-based index; index m-1 is the outer circle.
  const Circle& circle(std::size_t k) const { return k + 1 == m() ? outer_ : holes_.at(k); }
  bool is_outer(std::size_t k) const { return k + 1 == m(); }

  /// Signed distance to bD: positive inside D, negative outside the closure.
  double signed_distance(Complex z) const;
  bool contains(Complex z, double margin = 0.0) const { return signed_distance(z) > margin; }

 private:
  friend CircleDomain make_domain(std::span<const Circle> circles);
  std::vector<Circle> holes_;
  Circle outer_;
};

/// Validates the circle list and identifies the outer circle (the one that
/// contains all the others). Hole order follows the input order.
CircleDomain make_domain(std::span<const Circle> circles);

/// Annulus R < |z| < 1.
CircleDomain make_annulus(double inner_radius);

/// Equispaced trapezoidal nodes on every boundary circle.
///
/// Tangents carry the orientation: the outer circle runs counter-clockwise
/// and holes clockwise, so dz at node i is tangent(i) * weight(i).
class BoundaryGrid {
 public:
  BoundaryGrid(const CircleDomain& domain, std::size_t nodes_per_circle);

  const CircleDomain& domain() const { return domain_; }
  std::size_t nodes_per_circle() const { return n_; }
  std::size_t circle_count() const { return domain_.m(); }
  std::size_t size() const { return nodes_.size(); }

  std::span<const Complex> nodes() const { return nodes_; }
  std::span<const Complex> tangents() const { return tangents_; }
  std::span<const double> weights() const { return weights_; }

  Complex node(std::size_t i) const { return nodes_[i]; }
  Complex tangent(std::size_t i) const { return tangents_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  /// Outward unit normal of D at node i.
  Complex normal(std::size_t i) const { return -kI * tangents_[i]; }
  double theta(std::size_t i) const;
  std::size_t circle_of(std::size_t i) const { return i / n_; }
  /// +1 for counter-clockwise (outer), -1 for clockwise (holes).
  int orientation(std::size_t circle) const { return domain_.is_outer(circle) ? 1 : -1; }
  /// Node range [first, first + nodes_per_circle) of one circle.
  std::size_t first_node(std::size_t circle) const { return circle * n_; }

  bool same_layout(const BoundaryGrid& other) const;

 private:
  CircleDomain domain_;
  std::size_t n_;
  std::vector<Complex> nodes_;
  std::vector<Complex> tangents_;
  std::vector<double> weights_;
};

/// Complex function values at the nodes of one grid.
struct BoundarySamples {
  std::vector<Complex> values;

  std::size_t size() const { return values.size(); }
  Complex operator[](std::size_t i) const { return values[i]; }
};

BoundarySamples sample_function(const BoundaryGrid& grid, const std::function<Complex(Complex)>& f);
BoundarySamples real_part(const BoundarySamples& s);

/// Fixed-order pairwise summation; the result does not depend on thread count.
Complex pairwise_sum(std::span<const Complex> terms);
double pairwise_sum(std::span<const double> terms);

/// Trapezoidal approximation of the contour integral of the samples over the
/// positively oriented boundary.
Complex contour_integral(const BoundaryGrid& grid, const BoundarySamples& samples);

/// Contour integral over one circle only, traversed counter-clockwise.
Complex circle_integral_ccw(const BoundaryGrid& grid, std::size_t circle, const BoundarySamples& samples);

}  // namespace conjp
