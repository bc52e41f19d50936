#ifndef HALFINT_SPECIALFN_HPP
#define HALFINT_SPECIALFN_HPP

#include <complex>
#include <vector>

namespace halfint {

using cdbl = std::complex<double>;

// log Gamma (principal branch) and Gamma via Lanczos; reflection for
// Re z < 1/2. Accuracy ~1e-13 relative on the strips used here.
cdbl log_gamma(cdbl z);
cdbl gamma_c(cdbl z);

// Riemann zeta for complex s (s != 1): Borwein's alternating-series
// acceleration for Re s > 0, functional-equation reflection otherwise.
cdbl zeta_c(cdbl s);

// Completed zeta xi(s) = pi^{-s/2} Gamma(s/2) zeta(s).
cdbl xi_completed(cdbl s);

// Modified Bessel K_nu(x) for complex order, x > 0, via
// K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt.
cdbl bessel_k_c(cdbl nu, double x);

// Regularized upper incomplete gamma Q(k, x) = Gamma(k,x)/Gamma(k), integer k.
double upper_gamma_regularized(long k, double x);

// Whittaker W_{kappa, it}(y), real for real t, |kappa| < 1/2, y > 0.
double whittaker_w(double kappa, double t, double y);

// Mellin transform M_{kappa,it}(s) = int_0^inf W_{kappa,it}(y)^2 y^{s-2} dy.
// Builds a reusable W-grid; Re(s) > eps required.
class WhittakerMellin {
 public:
  WhittakerMellin(double kappa, double t, double sigma_min = 0.5);
  cdbl value(cdbl s) const;
  double kappa() const { return kappa_; }
  double t() const { return t_; }

 private:
  double kappa_, t_;
  double u_lo_, u_hi_, du_;
  std::vector<double> w2_;  // W(e^u)^2 on the grid
};

}  // namespace halfint

#endif
