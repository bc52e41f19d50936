#ifndef HALFINT_QUADRATURE_HPP
#define HALFINT_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace halfint {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  bool converged = true;
};

struct QuadResultC {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;
  bool converged = true;
};

// Adaptive Gauss–Kronrod (G7,K15) on [a,b]; Kahan-compensated accumulation.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-10, int max_depth = 28);

QuadResultC integrate_c(const std::function<std::complex<double>(double)>& f,
                        double a, double b, double tol = 1e-10, int max_depth = 28);

// Fixed-order Gauss-Legendre on [a,b] (orders 8, 16, 32, 64 supported).
// Used as an independent oracle against the adaptive routine.
double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      int order);
std::complex<double> gauss_legendre_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int order);

}  // namespace halfint

#endif
