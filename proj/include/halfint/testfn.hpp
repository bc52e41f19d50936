#ifndef HALFINT_TESTFN_HPP
#define HALFINT_TESTFN_HPP

#include <complex>
#include <memory>
#include <vector>

namespace halfint {

// Smooth compactly supported weight on R_+: the canonical C-infinity bump
// exp(-1/(1-u^2)) reparametrized to [alpha, beta], optionally scaled.
class BumpWeight {
 public:
  BumpWeight(double alpha, double beta, double scale = 1.0);

  double operator()(double x) const;
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double scale() const { return scale_; }
  BumpWeight rescaled(double s) const { return BumpWeight(alpha_, beta_, scale_ * s); }

  // Mellin transform H(s) = int_0^inf h(x) x^{s-1} dx by adaptive quadrature;
  // reported error estimate < 1e-10 or an exception with the achieved error.
  std::complex<double> mellin(std::complex<double> s) const;

  // Fixed-order Gauss-Legendre oracle for the same integral (no adaptivity).
  std::complex<double> mellin_fixed_order(std::complex<double> s, int order) const;

 private:
  double alpha_, beta_, scale_;
};

// Band-limited even Schwartz majorant: F = c G^2 with G the inverse Fourier
// transform of a fixed smooth bump supported in (-1/4, 1/4), scaled so that
// min F on [-1,1] is exactly 1. Then supp(F^) is contained in (-1/2, 1/2),
// inside (-A, A) for every admitted A >= 2.
class BandlimitedMajorant {
 public:
  explicit BandlimitedMajorant(double A);

  double bandwidth() const { return A_; }
  double operator()(double x) const;  // fast table evaluation
  double fourier(double xi) const;    // F^(xi) by quadrature of the table
  double fourier_zero() const { return fhat0_; }

  // Table support radius: F is treated as 0 outside [-R, R]; the sup of the
  // true F beyond R is below 1e-14 of F(0).
  double table_radius() const { return radius_; }

 private:
  double g_value(double x) const;
  double A_;
  double scale_;   // c = 1 / min_{[-1,1]} G^2
  double radius_;
  double h_;
  double fhat0_;
  std::vector<double> g_, gd_;  // G and G' samples for Hermite interpolation
};

}  // namespace halfint

#endif
