#pragma once

#include <optional>

#include "conjp/geometry.hpp"

namespace conjp {

/// Closed-form harmonic extension of Re(z^n conj(z)) on the annulus R < |z| < 1.
///
/// For n != 1 the extension is u = Re[C (z^(n-1) - z^(1-n)) + z^(n-1)] with
/// C = (R^(n+1) - R^(n-1)) / (R^(n-1) - R^(1-n)); its conjugate is the
/// imaginary part of the same Laurent polynomial, so the period is zero.
/// For n = 1 the data are 1 and R^2 on the two circles and the unique
/// solution is radial, u = 1 + (R^2 - 1) ln|z| / ln R.
class AnnulusExample {
 public:
  AnnulusExample(double R, int n);

  double R() const { return R_; }
  int n() const { return n_; }
  /// Undefined for n = 1.
  std::optional<double> coefficient() const { return coefficient_; }

  double u(Complex z) const;
  /// Conjugate; for n = 1 it uses the principal branch of arg z.
  double conjugate(Complex z) const;
  /// Counter-clockwise period of the conjugate around the hole.
  double period() const;
  /// Re(z^n conj(z)), the boundary data.
  double boundary_data(Complex z) const;

 private:
  double R_;
  int n_;
  std::optional<double> coefficient_;
};

AnnulusExample annulus_example(double R, int n);

struct SeriesValue {
  Complex value;
  double tail_bound;  // geometric estimate of the omitted terms
};

/// Szego kernel of the annulus for arclength measure, from the orthonormal
/// basis z^n / sqrt(2 pi (1 + R^(2n+1))):
///
///   S(z,a) = sum_{|n| <= M} (z conj(a))^n / (2 pi (1 + R^(2n+1))).
///
/// Throws TruncationInsufficient if a last included term exceeds 1e-14.
SeriesValue annulus_szego_series(double R, Complex z, Complex a, int M = 400);

}  // namespace conjp
