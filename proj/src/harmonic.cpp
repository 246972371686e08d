#include "conjp/harmonic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "conjp/error.hpp"

namespace conjp {

double HarmonicRep::value(Complex z) const {
  double u = a0;
  Complex f{};
  const Circle& o = domain.outer();
  const Complex w = (z - o.center) / o.radius;
  Complex wp = w;
  for (std::size_t p = 0; p < laurent_outer.size(); ++p, wp *= w) f += laurent_outer[p] * wp;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    const Circle& h = domain.hole(k);
    u += beta[k] * std::log(std::abs(z - h.center));
    const Complex v = h.radius / (z - h.center);
    Complex vp = v;
    for (std::size_t p = 0; p < laurent_hole[k].size(); ++p, vp *= v) f += laurent_hole[k][p] * vp;
  }
  return u + f.real();
}

Complex HarmonicRep::completion_derivative(Complex z) const {
  Complex d{};
  const Circle& o = domain.outer();
  const Complex w = (z - o.center) / o.radius;
  Complex wp(1.0, 0.0);  // w^(p-1)
  for (std::size_t p = 1; p <= laurent_outer.size(); ++p, wp *= w)
    d += laurent_outer[p - 1] * static_cast<double>(p) * wp / o.radius;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    const Circle& h = domain.hole(k);
    d += beta[k] / (z - h.center);
    const Complex v = h.radius / (z - h.center);
    Complex vp = v * v;  // v^(p+1)
    for (std::size_t p = 1; p <= laurent_hole[k].size(); ++p, vp *= v)
      d -= laurent_hole[k][p - 1] * static_cast<double>(p) * vp / h.radius;
  }
  return d;
}

Complex HarmonicRep::completion_second_derivative(Complex z) const {
  Complex d{};
  const Circle& o = domain.outer();
  const Complex w = (z - o.center) / o.radius;
  Complex wp(1.0, 0.0);  // w^(p-2)
  for (std::size_t p = 2; p <= laurent_outer.size(); ++p, wp *= w)
    d += laurent_outer[p - 1] * static_cast<double>(p * (p - 1)) * wp / (o.radius * o.radius);
  for (std::size_t k = 0; k < beta.size(); ++k) {
    const Circle& h = domain.hole(k);
    const Complex dz = z - h.center;
    d -= beta[k] / (dz * dz);
    const Complex v = h.radius / dz;
    Complex vp = v * v * v;  // v^(p+2)
    for (std::size_t p = 1; p <= laurent_hole[k].size(); ++p, vp *= v)
      d += laurent_hole[k][p - 1] * static_cast<double>(p * (p + 1)) * vp / (h.radius * h.radius);
  }
  return d;
}

struct DirichletSolver::Impl {
  BoundaryGrid grid;
  int degree;
  DirichletOptions options;
  Eigen::MatrixXd matrix;        // unscaled basis at nodes
  Eigen::VectorXd column_scale;  // 1 / column norm
  Eigen::MatrixXd pinv;          // truncated pseudo-inverse of the scaled matrix
  double condition = 0.0;
  std::size_t rank = 0;
};

namespace {

std::size_t unknown_count(std::size_t m, int degree) {
  return 1 + (m - 1) + 2 * static_cast<std::size_t>(degree) * m;
}

}  // namespace

DirichletSolver::DirichletSolver(const BoundaryGrid& grid, int degree, DirichletOptions options)
    : impl_(std::make_unique<Impl>(Impl{grid, degree, options, {}, {}, {}, 0.0, 0})) {
  if (degree < 4) throw Error(ErrorCode::InvalidArgument, "Laurent degree must be at least 4");
  const CircleDomain& dom = grid.domain();
  const std::size_t m = dom.m();
  const std::size_t cols = unknown_count(m, degree);
  const std::size_t rows = grid.size();
  if (rows < 2 * cols) {
    throw Error(ErrorCode::InvalidArgument, "need at least " + std::to_string(2 * cols) + " nodes for degree " +
                                                std::to_string(degree) + ", grid has " + std::to_string(rows));
  }

  Eigen::MatrixXd& A = impl_->matrix;
  A.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  const Circle& o = dom.outer();
  for (std::size_t i = 0; i < rows; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    const Complex z = grid.node(i);
    Eigen::Index c = 0;
    A(r, c++) = 1.0;
    for (std::size_t k = 0; k + 1 < m; ++k) A(r, c++) = std::log(std::abs(z - dom.hole(k).center));
    const Complex w = (z - o.center) / o.radius;
    Complex wp = w;
    for (int p = 1; p <= degree; ++p, wp *= w) {
      A(r, c++) = wp.real();
      A(r, c++) = -wp.imag();
    }
    for (std::size_t k = 0; k + 1 < m; ++k) {
      const Circle& h = dom.hole(k);
      const Complex v = h.radius / (z - h.center);
      Complex vp = v;
      for (int p = 1; p <= degree; ++p, vp *= v) {
        A(r, c++) = vp.real();
        A(r, c++) = -vp.imag();
      }
    }
  }

  impl_->column_scale = A.colwise().norm().cwiseInverse().transpose();
  const Eigen::MatrixXd scaled = A * impl_->column_scale.asDiagonal();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(scaled, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  impl_->condition = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  if (!(impl_->condition <= options.max_condition)) {
    throw Error(ErrorCode::IllConditioned,
                "least-squares condition estimate " + std::to_string(impl_->condition) + " exceeds limit");
  }
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > options.truncation * smax) {
      inv(k) = 1.0 / s(k);
      ++impl_->rank;
    }
  }
  impl_->pinv = svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

DirichletSolver::~DirichletSolver() = default;
DirichletSolver::DirichletSolver(DirichletSolver&&) noexcept = default;
DirichletSolver& DirichletSolver::operator=(DirichletSolver&&) noexcept = default;

std::size_t DirichletSolver::unknowns() const { return static_cast<std::size_t>(impl_->matrix.cols()); }
double DirichletSolver::condition_estimate() const { return impl_->condition; }
const BoundaryGrid& DirichletSolver::grid() const { return impl_->grid; }

HarmonicRep DirichletSolver::solve(const BoundarySamples& data) const {
  const BoundaryGrid& grid = impl_->grid;
  if (data.size() != grid.size()) throw Error(ErrorCode::GridMismatch, "Dirichlet data does not match the grid");
  Eigen::VectorXd b(static_cast<Eigen::Index>(data.size()));
  double scale = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) scale = std::max(scale, std::abs(data[i]));
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (std::abs(data[i].imag()) > 1e-12 * std::max(1.0, scale))
      throw Error(ErrorCode::InvalidArgument, "Dirichlet data must be real");
    b(static_cast<Eigen::Index>(i)) = data[i].real();
  }

  Eigen::VectorXd x = impl_->column_scale.asDiagonal() * (impl_->pinv * b);
  const double residual = (impl_->matrix * x - b).lpNorm<Eigen::Infinity>();

  const CircleDomain& dom = grid.domain();
  const std::size_t m = dom.m();
  HarmonicRep rep;
  rep.domain = dom;
  rep.degree = impl_->degree;
  Eigen::Index c = 0;
  rep.a0 = x(c++);
  for (std::size_t k = 0; k + 1 < m; ++k) rep.beta.push_back(x(c++));
  for (int p = 1; p <= impl_->degree; ++p, c += 2) rep.laurent_outer.emplace_back(x(c), x(c + 1));
  rep.laurent_hole.resize(m - 1);
  for (std::size_t k = 0; k + 1 < m; ++k)
    for (int p = 1; p <= impl_->degree; ++p, c += 2) rep.laurent_hole[k].emplace_back(x(c), x(c + 1));
  rep.boundary_residual = residual;
  rep.condition_estimate = impl_->condition;
  rep.rank = impl_->rank;
  rep.residual_ok = residual <= impl_->options.tolerance * std::max(1.0, scale);
  return rep;
}

HarmonicRep solve_dirichlet(const BoundaryGrid& grid, const BoundarySamples& data, int degree,
                            DirichletOptions options) {
  return DirichletSolver(grid, degree, options).solve(data);
}

double eval_harmonic(const HarmonicRep& rep, Complex z) {
  if (!(rep.domain.signed_distance(z) > 1e-12))
    throw Error(ErrorCode::PointNotInterior, "evaluation point is not interior to the domain");
  return rep.value(z);
}

namespace {

BoundarySamples indicator(const BoundaryGrid& grid, std::size_t j) {
  BoundarySamples s;
  s.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) s.values[i] = grid.circle_of(i) + 1 == j ? 1.0 : 0.0;
  return s;
}

}  // namespace

HarmonicRep harmonic_measure(const BoundaryGrid& grid, std::size_t j, int degree, DirichletOptions options) {
  if (j < 1 || j > grid.domain().m()) throw Error(ErrorCode::InvalidArgument, "boundary component index out of range");
  return solve_dirichlet(grid, indicator(grid, j), degree, options);
}

AnalyticEvaluator w_field(const BoundaryGrid& grid, std::size_t j, int degree, DirichletOptions options) {
  if (j < 1 || j >= grid.domain().m()) throw Error(ErrorCode::InvalidArgument, "W_j is defined for holes only");
  return AnalyticEvaluator(std::make_shared<const HarmonicRep>(harmonic_measure(grid, j, degree, options)));
}

std::vector<double> conjugate_periods(const HarmonicRep& rep) {
  std::vector<double> p;
  p.reserve(rep.beta.size());
  for (double b : rep.beta) p.push_back(2.0 * kPi * b);
  return p;
}

double period_pairing(const BoundaryGrid& grid, const BoundarySamples& phi, const AnalyticEvaluator& w,
                      double imag_tolerance) {
  if (phi.size() != grid.size()) throw Error(ErrorCode::GridMismatch, "pairing samples do not match the grid");
  BoundarySamples integrand;
  integrand.values.resize(grid.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (std::abs(phi[i].imag()) > 1e-12 * std::max(1.0, std::abs(phi[i])))
      throw Error(ErrorCode::InvalidArgument, "pairing data must be real");
    sup = std::max(sup, std::abs(phi[i].real()));
    integrand.values[i] = phi[i].real() * kI * w(grid.node(i));
  }
  const Complex value = contour_integral(grid, integrand);
  if (std::abs(value.imag()) > imag_tolerance * std::max(1.0, sup)) {
    throw Error(ErrorCode::NonRealPairing,
                "imaginary part " + std::to_string(value.imag()) + " of the period pairing exceeds tolerance");
  }
  return value.real();
}

BoundarySamples normal_derivative(const HarmonicRep& rep, const BoundaryGrid& grid) {
  BoundarySamples s;
  s.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    s.values[i] = (rep.completion_derivative(grid.node(i)) * grid.normal(i)).real();
  return s;
}

double flux_period(const BoundaryGrid& grid, const BoundarySamples& phi, const BoundarySamples& dn_measure) {
  if (phi.size() != grid.size() || dn_measure.size() != grid.size())
    throw Error(ErrorCode::GridMismatch, "flux samples do not match the grid");
  std::vector<double> terms(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) terms[i] = phi[i].real() * dn_measure[i].real() * grid.weight(i);
  return -pairwise_sum(std::span<const double>(terms));
}

double PeriodFields::max_residual() const {
  double r = 0.0;
  for (const auto& h : measures) r = std::max(r, h->boundary_residual);
  return r;
}

PeriodFields compute_period_fields(const BoundaryGrid& grid, int degree, DirichletOptions options) {
  DirichletSolver solver(grid, degree, options);
  PeriodFields f{grid, degree, {}, {}};
  const std::size_t m = grid.domain().m();
  for (std::size_t j = 1; j <= m; ++j) {
    auto rep = std::make_shared<const HarmonicRep>(solver.solve(indicator(grid, j)));
    f.measures.push_back(rep);
    if (j < m) f.w.emplace_back(rep);
  }
  return f;
}

}  // namespace conjp
