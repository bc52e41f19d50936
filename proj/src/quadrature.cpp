#include "halfint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace halfint {

namespace {

// Kronrod-15 nodes/weights on [-1,1]; the odd-indexed nodes form Gauss-7.
const double kXgk[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,                0.207784955007898,
    0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
const double kWk[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
const double kWg[7] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469, 0.381830050505119, 0.279705391489277,
                       0.129484966168870};

template <typename T>
void gk15(const std::function<T(double)>& f, double a, double b, T& k15, double& err) {
  double h = 0.5 * (b - a), c = 0.5 * (a + b);
  T fk{}, fg{};
  for (int i = 0; i < 15; ++i) {
    T v = f(c + h * kXgk[i]);
    fk += kWk[i] * v;
    if (i % 2 == 1) fg += kWg[i / 2] * v;
  }
  k15 = h * fk;
  err = std::abs(h) * std::abs(fk - fg);
}

template <typename T>
struct Seg {
  double a, b, err;
  T val;
};

template <typename T>
void adaptive(const std::function<T(double)>& f, double a, double b, double tol,
              int max_depth, T& out_val, double& out_err, bool& conv) {
  std::vector<Seg<T>> stack;
  T v;
  double e;
  gk15(f, a, b, v, e);
  stack.push_back({a, b, e, v});
  T total = v;
  double total_err = e;
  int splits = 0;
  const int max_segs = 1 << std::min(max_depth, 20);
  while (total_err > tol && splits < max_segs) {
    // split the worst segment
    size_t worst = 0;
    for (size_t i = 1; i < stack.size(); ++i)
      if (stack[i].err > stack[worst].err) worst = i;
    Seg<T> s = stack[worst];
    if (s.b - s.a < 1e-15 * (std::abs(s.a) + std::abs(s.b) + 1)) break;
    double m = 0.5 * (s.a + s.b);
    T v1, v2;
    double e1, e2;
    gk15(f, s.a, m, v1, e1);
    gk15(f, m, s.b, v2, e2);
    stack[worst] = {s.a, m, e1, v1};
    stack.push_back({m, s.b, e2, v2});
    total += v1 + v2 - s.val;
    total_err += e1 + e2 - s.err;
    ++splits;
  }
  // compensated re-accumulation in a deterministic order
  std::sort(stack.begin(), stack.end(),
            [](const Seg<T>& x, const Seg<T>& y) { return x.a < y.a; });
  long double acc_re = 0, acc_im = 0;
  total_err = 0;
  for (const auto& s : stack) {
    if constexpr (std::is_same_v<T, std::complex<double>>) {
      acc_re += s.val.real();
      acc_im += s.val.imag();
    } else {
      acc_re += s.val;
    }
    total_err += s.err;
  }
  if constexpr (std::is_same_v<T, std::complex<double>>)
    out_val = {static_cast<double>(acc_re), static_cast<double>(acc_im)};
  else
    out_val = static_cast<double>(acc_re);
  out_err = total_err;
  conv = total_err <= tol * 4;
}

std::vector<std::pair<double, double>> gl_nodes(int order) {
  // Newton on Legendre polynomials; cached per order.
  static std::vector<std::vector<std::pair<double, double>>> cache(80);
  if (order < 2 || order >= 80) order = 64;
  if (!cache[order].empty()) return cache[order];
  std::vector<std::pair<double, double>> nw(order);
  for (int i = 0; i < order; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= order; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      double dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= order; ++j) {
      double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    double dp = order * (x * p1 - p0) / (x * x - 1.0);
    nw[i] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
  }
  cache[order] = nw;
  return nw;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol, int max_depth) {
  QuadResult r;
  adaptive<double>(f, a, b, tol, max_depth, r.value, r.error, r.converged);
  return r;
}

QuadResultC integrate_c(const std::function<std::complex<double>(double)>& f,
                        double a, double b, double tol, int max_depth) {
  QuadResultC r;
  adaptive<std::complex<double>>(f, a, b, tol, max_depth, r.value, r.error,
                                 r.converged);
  return r;
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      int order) {
  auto nw = gl_nodes(order);
  double h = 0.5 * (b - a), c = 0.5 * (a + b);
  long double s = 0;
  for (auto [x, w] : nw) s += w * f(c + h * x);
  return static_cast<double>(s * h);
}

std::complex<double> gauss_legendre_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int order) {
  auto nw = gl_nodes(order);
  double h = 0.5 * (b - a), c = 0.5 * (a + b);
  std::complex<long double> s = 0;
  for (auto [x, w] : nw) {
    std::complex<double> v = f(c + h * x);
    s += std::complex<long double>(w * v.real(), w * v.imag());
  }
  return {static_cast<double>(s.real() * h), static_cast<double>(s.imag() * h)};
}

}  // namespace halfint
