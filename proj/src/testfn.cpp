#include "halfint/testfn.hpp"

#include <cmath>
#include <stdexcept>

#include "halfint/quadrature.hpp"

namespace halfint {

namespace {
const double kTwoPi = 6.28318530717958647692528676655900577;

// the canonical bump on (-1,1)
double bump01(double u) {
  if (u <= -1.0 || u >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - u * u));
}

// transform-side bump for the majorant, supported in (-w, w)
const double kGhatRadius = 0.25;
double ghat(double xi) { return bump01(xi / kGhatRadius); }
}  // namespace

BumpWeight::BumpWeight(double alpha, double beta, double scale)
    : alpha_(alpha), beta_(beta), scale_(scale) {
  if (!(0 < alpha && alpha < beta))
    throw std::invalid_argument("BumpWeight: need 0 < alpha < beta");
}

double BumpWeight::operator()(double x) const {
  if (x <= alpha_ || x >= beta_) return 0.0;
  double u = (2.0 * x - (alpha_ + beta_)) / (beta_ - alpha_);
  return scale_ * bump01(u);
}

std::complex<double> BumpWeight::mellin(std::complex<double> s) const {
  auto r = integrate_c(
      [&](double x) -> std::complex<double> {
        return (*this)(x)*std::exp((s - 1.0) * std::log(x));
      },
      alpha_, beta_, 1e-12);
  if (!r.converged || r.error > 1e-10)
    throw std::runtime_error("BumpWeight::mellin: quadrature error " +
                             std::to_string(r.error));
  return r.value;
}

std::complex<double> BumpWeight::mellin_fixed_order(std::complex<double> s,
                                                    int order) const {
  return gauss_legendre_c(
      [&](double x) -> std::complex<double> {
        return (*this)(x)*std::exp((s - 1.0) * std::log(x));
      },
      alpha_, beta_, order);
}

double BandlimitedMajorant::g_value(double x) const {
  // G(x) = 2 int_0^w ghat(xi) cos(2 pi xi x) dxi; ghat >= 0 and the phase
  // stays below pi/2 on |x| <= 1, so G > 0 there.
  auto r = integrate(
      [&](double xi) { return ghat(xi) * std::cos(kTwoPi * xi * x); }, 0.0,
      kGhatRadius, 1e-14);
  return 2.0 * r.value;
}

BandlimitedMajorant::BandlimitedMajorant(double A) : A_(A) {
  if (A < 2.0) throw std::invalid_argument("BandlimitedMajorant: A >= 2 required");
  radius_ = 64.0;
  h_ = 1.0 / 512.0;
  long n = static_cast<long>(radius_ / h_) + 1;
  g_.resize(n);
  gd_.resize(n);
  for (long i = 0; i < n; ++i) {
    double x = i * h_;
    g_[i] = g_value(x);
    auto rd = integrate(
        [&](double xi) {
          return ghat(xi) * xi * std::sin(kTwoPi * xi * x);
        },
        0.0, kGhatRadius, 1e-14);
    gd_[i] = -2.0 * kTwoPi * rd.value;
  }
  // c = 1 / min_{[-1,1]} G^2; G is even and decreasing in |x| up to the
  // first zero (beyond 1), so the minimum sits at x = 1. Confirm on a grid.
  double m = g_[0] * g_[0];
  long i1 = static_cast<long>(1.0 / h_);
  for (long i = 0; i <= i1; ++i) m = std::min(m, g_[i] * g_[i]);
  scale_ = 1.0 / m;
  auto rz = integrate([&](double x) { return (*this)(x); }, -radius_, radius_, 1e-12);
  fhat0_ = rz.value;
}

double BandlimitedMajorant::operator()(double x) const {
  x = std::abs(x);
  if (x >= radius_) return 0.0;
  double xi = x / h_;
  long i = static_cast<long>(xi);
  double u = xi - i;
  // cubic Hermite using exact endpoint derivatives
  double p0 = g_[i], p1 = g_[i + 1];
  double m0 = gd_[i] * h_, m1 = gd_[i + 1] * h_;
  double u2 = u * u, u3 = u2 * u;
  double g = (2 * u3 - 3 * u2 + 1) * p0 + (u3 - 2 * u2 + u) * m0 +
             (-2 * u3 + 3 * u2) * p1 + (u3 - u2) * m1;
  return scale_ * g * g;
}

double BandlimitedMajorant::fourier(double xi) const {
  // F real and even: F^(xi) = 2 int_0^R F(x) cos(2 pi xi x) dx
  double tol = 1e-12;
  auto r = integrate(
      [&](double x) { return (*this)(x)*std::cos(kTwoPi * xi * x); }, 0.0,
      radius_, tol);
  if (!r.converged)
    throw std::runtime_error("BandlimitedMajorant::fourier: quadrature failed");
  return 2.0 * r.value;
}

}  // namespace halfint
