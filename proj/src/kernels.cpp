#include "conjp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "conjp/error.hpp"
#include "conjp/parallel.hpp"

namespace conjp {

namespace {

// Cauchy kernel H(z,w) = T(w) / (2 pi i (w - z)).
Complex cauchy_kernel(Complex z, Complex w, Complex tw) { return tw / (2.0 * kPi * kI * (w - z)); }

BoundarySamples subtract_pole(const BoundaryGrid& grid, const BoundarySamples& values, Complex a, Complex residue) {
  BoundarySamples r = values;
  for (std::size_t i = 0; i < grid.size(); ++i) r.values[i] -= residue / (grid.node(i) - a);
  return r;
}

}  // namespace

KernelField::KernelField(Kind kind, const BoundaryGrid& grid, Complex base_point, BoundarySamples boundary,
                         std::optional<Complex> residue)
    : kind_(kind), a_(base_point), boundary_(std::move(boundary)), residue_(residue) {
  regular_ = residue_ ? CauchyInterior(grid, subtract_pole(grid, boundary_, a_, *residue_))
                      : CauchyInterior(grid, boundary_);
}

Complex KernelField::operator()(Complex z) const {
  Complex v = regular_(z);
  if (residue_) v += *residue_ / (z - a_);
  return v;
}

Complex KernelField::derivative(Complex z) const {
  Complex v = regular_.derivative(z);
  if (residue_) v -= *residue_ / ((z - a_) * (z - a_));
  return v;
}

HolomorphicFunction KernelField::as_function() const {
  return {[this](Complex z) { return (*this)(z); }, [this](Complex z) { return derivative(z); }};
}

struct SzegoSolver::Impl {
  BoundaryGrid grid;
  Eigen::MatrixXcd kernel;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu;
};

SzegoSolver::SzegoSolver(const BoundaryGrid& grid) : impl_(std::make_unique<Impl>(Impl{grid, {}, {}})) {
  const auto n = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXcd& A = impl_->kernel;
  A = Eigen::MatrixXcd::Zero(n, n);
  parallel_for(grid.size(), [&](std::size_t i) {
    const Complex z = grid.node(i);
    const Complex tz = grid.tangent(i);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      if (grid.circle_of(i) == grid.circle_of(j)) continue;
      const Complex w = grid.node(j);
      A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          cauchy_kernel(z, w, grid.tangent(j)) - std::conj(cauchy_kernel(w, z, tz));
    }
  });
  Eigen::MatrixXcd system = -A;
  for (Eigen::Index j = 0; j < n; ++j) system.col(j) *= grid.weight(static_cast<std::size_t>(j));
  system += Eigen::MatrixXcd::Identity(n, n);
  impl_->lu.compute(system);
  const double det_scale = impl_->lu.rcond();
  if (!(det_scale > 1e-12)) throw Error(ErrorCode::SolveFailed, "Kerzman-Stein system is numerically singular");
}

SzegoSolver::~SzegoSolver() = default;
SzegoSolver::SzegoSolver(SzegoSolver&&) noexcept = default;
SzegoSolver& SzegoSolver::operator=(SzegoSolver&&) noexcept = default;

const Eigen::MatrixXcd& SzegoSolver::kernel_matrix() const { return impl_->kernel; }
const BoundaryGrid& SzegoSolver::grid() const { return impl_->grid; }

KernelField SzegoSolver::solve(Complex a, double min_distance) const {
  const BoundaryGrid& grid = impl_->grid;
  const CircleDomain& dom = grid.domain();
  if (!(dom.signed_distance(a) > min_distance * dom.outer().radius)) {
    throw Error(ErrorCode::InvalidArgument, "Szego base point must lie in D at distance > " +
                                                std::to_string(min_distance) + " * outer radius");
  }
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i)
    rhs(static_cast<Eigen::Index>(i)) = std::conj(cauchy_kernel(a, grid.node(i), grid.tangent(i)));
  const Eigen::VectorXcd s = impl_->lu.solve(rhs);
  if (!s.allFinite()) throw Error(ErrorCode::SolveFailed, "Kerzman-Stein solve produced non-finite values");
  BoundarySamples values;
  values.values.assign(s.data(), s.data() + s.size());
  return KernelField(KernelField::Kind::Szego, grid, a, std::move(values));
}

KernelField kerzman_stein_solve(const BoundaryGrid& grid, Complex a) { return SzegoSolver(grid).solve(a); }

Complex default_base_point(const CircleDomain& domain, double factor) {
  const Circle& o = domain.outer();
  return o.center + factor * o.radius * std::polar(1.0, kPi / 7.0);
}

SzegoZeros szego_zeros(const KernelField& szego, const CircleDomain& domain, ZeroSearchOptions options) {
  SzegoZeros z;
  z.base_point = szego.base_point();
  z.search = find_zeros(domain, szego.as_function(), options);
  if (static_cast<std::size_t>(z.search.count) + 1 != domain.m()) {
    throw Error(ErrorCode::WrongZeroCount, "Szego kernel has " + std::to_string(z.search.count) +
                                               " zeros inside the contour, expected " +
                                               std::to_string(domain.m() - 1));
  }
  z.zeros = z.search.zeros;
  z.margins = z.search.derivative_moduli;
  return z;
}

std::pair<KernelField, SzegoZeros> szego_with_retry(const SzegoSolver& solver, ZeroSearchOptions options) {
  const CircleDomain& dom = solver.grid().domain();
  const double factors[] = {0.85, 0.9, 0.95};
  for (std::size_t t = 0;; ++t) {
    KernelField s = solver.solve(default_base_point(dom, factors[t]));
    try {
      SzegoZeros z = szego_zeros(s, dom, options);
      return {std::move(s), std::move(z)};
    } catch (const Error& e) {
      if (t + 1 == std::size(factors) ||
          (e.code() != ErrorCode::WrongZeroCount && e.code() != ErrorCode::ZeroNearBoundary))
        throw;
    }
  }
}

namespace {

BoundarySamples garabedian_boundary(const BoundarySamples& s, const BoundaryGrid& grid) {
  BoundarySamples l;
  l.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) l.values[i] = kI * std::conj(s[i] * grid.tangent(i));
  return l;
}

}  // namespace

KernelField garabedian_field(const KernelField& szego, const BoundaryGrid& grid) {
  BoundarySamples l = garabedian_boundary(szego.boundary(), grid);
  const Complex measured = contour_integral(grid, l) / (2.0 * kPi * kI);
  const double target = 1.0 / (2.0 * kPi);
  if (std::abs(measured + target) < 1e-5) {
    for (auto& v : l.values) v = -v;
  } else if (!(std::abs(measured - target) < 1e-5)) {
    throw Error(ErrorCode::ResidueCheckFailed,
                "Garabedian residue " + std::to_string(measured.real()) + "+" + std::to_string(measured.imag()) +
                    "i does not match +-1/(2 pi)");
  }
  return KernelField(KernelField::Kind::Garabedian, grid, szego.base_point(), std::move(l), Complex(target, 0.0));
}

namespace {

// max over columns of b of the relative least-squares residual onto span(a).
double relative_fit_residual(const Eigen::MatrixXcd& basis, const Eigen::MatrixXcd& targets) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(basis);
  double worst = 0.0;
  for (Eigen::Index c = 0; c < targets.cols(); ++c) {
    const Eigen::VectorXcd t = targets.col(c);
    const Eigen::VectorXcd coef = qr.solve(t);
    worst = std::max(worst, (basis * coef - t).norm() / t.norm());
  }
  return worst;
}

}  // namespace

SpanReport span_check(const SzegoSolver& solver, const KernelField& szego, const SzegoZeros& zeros,
                      const std::vector<AnalyticEvaluator>& w) {
  const BoundaryGrid& grid = solver.grid();
  const auto n = static_cast<Eigen::Index>(grid.size());
  const auto count = static_cast<Eigen::Index>(w.size());
  if (zeros.zeros.size() != w.size())
    throw Error(ErrorCode::InvalidArgument, "span check needs one Szego zero per W field");

  Eigen::MatrixXcd wm(n, count), products(n, count), szego_only(n, 1);
  for (Eigen::Index j = 0; j < count; ++j) {
    const KernelField sk = solver.solve(zeros.zeros[static_cast<std::size_t>(j)], 0.0);
    const KernelField lk = garabedian_field(sk, grid);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto ii = static_cast<std::size_t>(i);
      wm(i, j) = w[static_cast<std::size_t>(j)](grid.node(ii));
      products(i, j) = lk.boundary()[ii] * szego.boundary()[ii];
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) szego_only(i, 0) = szego.boundary()[static_cast<std::size_t>(i)];

  SpanReport r;
  r.w_onto_products = relative_fit_residual(products, wm);
  r.products_onto_w = relative_fit_residual(wm, products);
  r.w_onto_szego_only = relative_fit_residual(szego_only, wm.leftCols(1));
  return r;
}

HolomorphicFunction as_function(const AnalyticEvaluator& w) {
  return {[w](Complex z) { return w(z); }, [w](Complex z) { return w.derivative(z); }};
}

CommonZeroReport common_zero_check(const CircleDomain& domain, const std::vector<AnalyticEvaluator>& w,
                                   std::size_t lattice, ZeroSearchOptions options) {
  CommonZeroReport r;
  for (const auto& wj : w) r.zeros.push_back(find_zeros(domain, as_function(wj), options).zeros);

  auto max_modulus = [&](Complex z) {
    double v = 0.0;
    for (const auto& wj : w) v = std::max(v, std::abs(wj(z)));
    return v;
  };

  constexpr double inf = std::numeric_limits<double>::infinity();
  r.min_max_at_zeros = inf;
  for (const auto& zs : r.zeros)
    for (Complex b : zs) r.min_max_at_zeros = std::min(r.min_max_at_zeros, max_modulus(b));

  r.min_zero_separation = inf;
  for (std::size_t j = 0; j < r.zeros.size(); ++j)
    for (std::size_t k = j + 1; k < r.zeros.size(); ++k)
      for (Complex a : r.zeros[j])
        for (Complex b : r.zeros[k]) r.min_zero_separation = std::min(r.min_zero_separation, std::abs(a - b));

  const Circle& o = domain.outer();
  std::vector<double> row_min(lattice, inf);
  std::vector<std::size_t> row_count(lattice, 0);
  parallel_for(lattice, [&](std::size_t iy) {
    const double y = o.center.imag() - o.radius + 2.0 * o.radius * (static_cast<double>(iy) + 0.5) / lattice;
    for (std::size_t ix = 0; ix < lattice; ++ix) {
      const double x = o.center.real() - o.radius + 2.0 * o.radius * (static_cast<double>(ix) + 0.5) / lattice;
      const Complex z(x, y);
      if (!domain.contains(z, 1e-3 * o.radius)) continue;
      row_min[iy] = std::min(row_min[iy], max_modulus(z));
      ++row_count[iy];
    }
  });
  r.min_max_modulus = *std::min_element(row_min.begin(), row_min.end());
  for (std::size_t c : row_count) r.lattice_points += c;

  if (r.min_max_at_zeros < 1e-8 || r.min_max_modulus < 1e-8)
    throw Error(ErrorCode::CommonZeroFound, "the W fields share a zero to within 1e-8");
  return r;
}

}  // namespace conjp
