#include "conjp/oracles.hpp"

#include <cmath>
#include <string>

#include "conjp/error.hpp"

namespace conjp {

AnnulusExample::AnnulusExample(double R, int n) : R_(R), n_(n) {
  if (!(R > 0.0 && R < 1.0)) throw Error(ErrorCode::InvalidArgument, "annulus radius must lie in (0,1)");
  if (n != 1) {
    const double k = n - 1;
    coefficient_ = (std::pow(R, n + 1) - std::pow(R, k)) / (std::pow(R, k) - std::pow(R, -k));
  }
}

double AnnulusExample::u(Complex z) const {
  if (n_ == 1) return 1.0 + (R_ * R_ - 1.0) * std::log(std::abs(z)) / std::log(R_);
  const int k = n_ - 1;
  return (*coefficient_ * (std::pow(z, k) - std::pow(z, -k)) + std::pow(z, k)).real();
}

double AnnulusExample::conjugate(Complex z) const {
  if (n_ == 1) return (R_ * R_ - 1.0) * std::arg(z) / std::log(R_);
  const int k = n_ - 1;
  return (*coefficient_ * (std::pow(z, k) - std::pow(z, -k)) + std::pow(z, k)).imag();
}

double AnnulusExample::period() const {
  return n_ == 1 ? 2.0 * kPi * (R_ * R_ - 1.0) / std::log(R_) : 0.0;
}

double AnnulusExample::boundary_data(Complex z) const { return (std::pow(z, n_) * std::conj(z)).real(); }

AnnulusExample annulus_example(double R, int n) { return AnnulusExample(R, n); }

SeriesValue annulus_szego_series(double R, Complex z, Complex a, int M) {
  if (!(R > 0.0 && R < 1.0)) throw Error(ErrorCode::InvalidArgument, "annulus radius must lie in (0,1)");
  if (M < 50) throw Error(ErrorCode::InvalidArgument, "series truncation must be at least 50");
  const Complex q = z * std::conj(a);
  auto term = [&](int n) { return std::pow(q, n) / (2.0 * kPi * (1.0 + std::pow(R, 2 * n + 1))); };

  Complex sum = term(0);
  for (int n = 1; n <= M; ++n) sum += term(n) + term(-n);

  const double last_pos = std::abs(term(M));
  const double last_neg = std::abs(term(-M));
  if (last_pos > 1e-14 || last_neg > 1e-14) {
    throw Error(ErrorCode::TruncationInsufficient,
                "last series term " + std::to_string(std::max(last_pos, last_neg)) + " exceeds 1e-14 at M = " +
                    std::to_string(M));
  }
  const double rp = std::abs(q);
  const double rn = R * R / std::abs(q);
  double tail = 0.0;
  tail += rp < 1.0 ? last_pos * rp / (1.0 - rp) : last_pos;
  tail += rn < 1.0 ? last_neg * rn / (1.0 - rn) : last_neg;
  return {sum, tail};
}

}  // namespace conjp
