#include "halfint/specialfn.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "halfint/quadrature.hpp"

namespace halfint {

namespace {
const double kPi = 3.14159265358979323846264338327950288;

// Lanczos, g = 607/128, 15 coefficients (Boost/Godfrey set).
const double kLanczosG = 4.7421875;
const double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

cdbl log_gamma_lanczos(cdbl z) {
  // valid for Re z > 0; caller reflects otherwise
  cdbl sum = kLanczos[0];
  for (int i = 1; i < 15; ++i) sum += kLanczos[i] / (z - 1.0 + double(i));
  cdbl t = z - 0.5 + kLanczosG;
  return 0.5 * std::log(2 * kPi) + (z - 0.5) * std::log(t) - t + std::log(sum);
}
}  // namespace

cdbl log_gamma(cdbl z) {
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z); keep the branch of
  // log sin continuous via the standard decomposition
  cdbl lg1 = log_gamma_lanczos(1.0 - z);
  cdbl s = std::sin(kPi * z);
  return std::log(kPi) - std::log(s) - lg1;
}

cdbl gamma_c(cdbl z) { return std::exp(log_gamma(z)); }

cdbl zeta_c(cdbl s) {
  if (s == cdbl(1.0, 0.0)) throw std::domain_error("zeta_c: pole at s = 1");
  if (s.real() < 0.0) {
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    cdbl t = 1.0 - s;
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
           gamma_c(t) * zeta_c(t);
  }
  // Borwein algorithm for eta(s), n chosen for ~1e-14 at |Im s| <= 60
  const int n = 100;
  static std::vector<double> d;
  if (d.empty()) {
    d.assign(n + 1, 0.0);
    double term = 1.0;  // i = 0: (n-1)! / n! ... using t_i ratios instead
    // t_i = (n+i-1)! 4^i / ((n-i)! (2i)!), t_0 = (n-1)!/n! = 1/n; d_k = n*sum_{i<=k} t_i
    term = 1.0 / n;
    double acc = term;
    std::vector<double> tsum(n + 1);
    tsum[0] = acc;
    for (int i = 1; i <= n; ++i) {
      term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i - 1) * (2.0 * i));
      acc += term;
      tsum[i] = acc;
    }
    for (int k = 0; k <= n; ++k) d[k] = n * tsum[k];
  }
  cdbl sum = 0.0;
  for (int k = 0; k < n; ++k) {
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * (d[k] - d[n]) * std::exp(-s * std::log(double(k + 1)));
  }
  cdbl eta_factor = 1.0 - std::pow(2.0, 1.0 - s);
  return -sum / (d[n] * eta_factor);
}

cdbl xi_completed(cdbl s) {
  return std::pow(kPi, -s / 2.0) * gamma_c(s / 2.0) * zeta_c(s);
}

cdbl bessel_k_c(cdbl nu, double x) {
  if (x <= 0) throw std::invalid_argument("bessel_k_c: x must be positive");
  // integrand e^{-x cosh t} cosh(nu t); truncate where the exponent is far gone
  double re = std::abs(nu.real());
  double T = 1.0;
  while (x * std::cosh(T) - re * T < 45.0 + x) T += 0.5;
  double freq = std::abs(nu.imag());
  double width = std::min(0.5, 4.0 / (1.0 + freq));
  std::complex<long double> acc = 0.0;
  for (double a = 0.0; a < T; a += width) {
    double b = std::min(T, a + width);
    cdbl v = gauss_legendre_c(
        [&](double t) -> cdbl {
          return std::exp(-x * std::cosh(t)) * std::cosh(nu * t);
        },
        a, b, 16);
    acc += std::complex<long double>(v.real(), v.imag());
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double upper_gamma_regularized(long k, double x) {
  if (k < 1) throw std::invalid_argument("upper_gamma_regularized: k >= 1");
  if (x <= 0) return 1.0;
  if (x > k + 60 + 12 * std::sqrt(double(k))) return 0.0;
  // Q(k,x) = e^{-x} sum_{j<k} x^j/j!; x stays <= ~k+200 here so e^{-x} does
  // not underflow
  double term = std::exp(-x);
  if (term == 0.0) throw std::domain_error("upper_gamma_regularized: x too large");
  double sum = term;
  for (long j = 1; j < k; ++j) {
    term *= x / double(j);
    sum += term;
  }
  return std::min(sum, 1.0);
}

double whittaker_w(double kappa, double t, double y) {
  if (y <= 0) throw std::invalid_argument("whittaker_w: y must be positive");
  // W_{kappa,mu}(y) = e^{-y/2} y^kappa / Gamma(1/2 - kappa + mu) *
  //   int_0^inf  u^{-kappa-1/2+mu} (1+u)^{kappa-1/2+mu} e^{-y u} du,  mu = it.
  // Substituting u = e^v fixes the oscillation frequency to t.
  cdbl mu(0.0, t);
  cdbl a = -kappa - 0.5 + mu;  // exponent of u
  cdbl b = kappa - 0.5 + mu;   // exponent of (1+u)
  double decay = 0.5 - kappa;  // |integrand| ~ e^{v(1/2-kappa)} as v -> -inf
  double vlo = -40.0 / decay;
  double vhi = std::log((46.0 + std::abs(kappa) + 1.0) / y) + 1.0;
  if (vhi < vlo + 1.0) vhi = vlo + 1.0;
  double freq = std::abs(t);
  double width = std::min(0.5, 4.0 / (1.0 + freq));
  std::complex<long double> acc = 0.0;
  for (double lo = vlo; lo < vhi; lo += width) {
    double hi = std::min(vhi, lo + width);
    cdbl v = gauss_legendre_c(
        [&](double w) -> cdbl {
          double u = std::exp(w);
          // u^{a+1} (1+u)^b e^{-yu} dv
          return std::exp((a + 1.0) * w + b * std::log1p(u) - y * u);
        },
        lo, hi, 16);
    acc += std::complex<long double>(v.real(), v.imag());
  }
  cdbl integral(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  cdbl pref = std::exp(-y / 2.0 + kappa * std::log(y) - log_gamma(0.5 - kappa + mu));
  cdbl w = pref * integral;
  return w.real();  // imaginary part vanishes (W symmetric in mu -> -mu)
}

WhittakerMellin::WhittakerMellin(double kappa, double t, double sigma_min)
    : kappa_(kappa), t_(t) {
  // W(y)^2 on a geometric grid y = e^u. Near y = 0 the integrand behaves
  // like e^{u s}, so the grid must reach far enough left for the smallest
  // Re(s) the caller will use.
  if (sigma_min < 0.05) sigma_min = 0.05;
  u_lo_ = -34.0 * std::max(1.0, 0.5 / sigma_min);
  u_hi_ = std::log(2.0 * (50.0 + 10.0 * std::abs(t)));
  du_ = 1.0 / 64.0;
  long n = static_cast<long>((u_hi_ - u_lo_) / du_) + 2;
  w2_.resize(n);
  for (long i = 0; i < n; ++i) {
    double y = std::exp(u_lo_ + i * du_);
    double w = whittaker_w(kappa_, t_, y);
    w2_[i] = w * w;
  }
}

cdbl WhittakerMellin::value(cdbl s) const {
  if (s.real() <= 0.02)
    throw std::domain_error("WhittakerMellin: Re(s) too small");
  // int W^2 y^{s-2} dy = int W(e^u)^2 e^{u(s-1)} du, composite Simpson on
  // the precomputed grid
  std::complex<long double> acc = 0.0;
  long n = static_cast<long>(w2_.size());
  for (long i = 0; i < n; ++i) {
    double u = u_lo_ + i * du_;
    double wgt = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    cdbl v = w2_[i] * std::exp((s - 1.0) * u) * wgt;
    acc += std::complex<long double>(v.real(), v.imag());
  }
  cdbl r(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  return r * du_;
}

}  // namespace halfint
