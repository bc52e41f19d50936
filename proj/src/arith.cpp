#include "halfint/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace halfint {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  if (n < 0) n = -n;
  std::vector<std::pair<int64_t, int>> fac;
  for (int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      fac.push_back({p, e});
    }
  }
  if (n > 1) fac.push_back({n, 1});
  return fac;
}
}  // namespace

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm64(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::abs(a / std::gcd(a, b) * b);
}

int kronecker(int64_t a, int64_t n) {
  // (a/0) = 1 iff a = +-1
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) sign = -sign;  // (a/-1) = sign(a)
  }
  // strip factors of 2 from n; (a/2) = 0 for even a, 1 for a ≡ ±1 (mod 8),
  // -1 for a ≡ ±3 (mod 8)
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int64_t amod8 = ((a % 8) + 8) % 8;
    int k2 = (amod8 == 1 || amod8 == 7) ? 1 : -1;
    while (n % 2 == 0) {
      n /= 2;
      sign *= k2;
    }
  }
  // now n odd positive: Jacobi symbol by binary reciprocity
  a %= n;
  if (a < 0) {
    a += n;
    // (-1/n) already folded by taking residue: a mod n is what matters for odd n
  }
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      int64_t nmod8 = n % 8;
      if (nmod8 == 3 || nmod8 == 5) sign = -sign;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    a %= n;
  }
  return (n == 1) ? sign : 0;
}

int moebius(int64_t n) {
  if (n <= 0) throw std::invalid_argument("moebius: n must be positive");
  int m = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

int64_t euler_phi(int64_t n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  int64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int64_t divisor_count(int64_t n) {
  if (n <= 0) throw std::invalid_argument("divisor_count: n must be positive");
  int64_t d = 1;
  for (auto [p, e] : factorize(n)) d *= (e + 1);
  return d;
}

int64_t divisor_sum(int64_t n) {
  if (n <= 0) throw std::invalid_argument("divisor_sum: n must be positive");
  int64_t s = 1;
  for (auto [p, e] : factorize(n)) {
    int64_t pe = 1, geo = 1;
    for (int i = 0; i < e; ++i) { pe *= p; geo += pe; }
    s *= geo;
  }
  return s;
}

bool is_squarefree(int64_t n) {
  if (n == 0) return false;
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

std::vector<int64_t> primes_up_to(int64_t bound) {
  std::vector<int64_t> ps;
  if (bound < 2) return ps;
  std::vector<bool> sieve(bound + 1, true);
  for (int64_t i = 2; i <= bound; ++i) {
    if (sieve[i]) {
      ps.push_back(i);
      for (int64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
  }
  return ps;
}

std::vector<int64_t> divisors(int64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be nonzero");
  if (n < 0) n = -n;
  std::vector<int64_t> ds{1};
  for (auto [p, e] : factorize(n)) {
    size_t sz = ds.size();
    int64_t pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

int two_adic_valuation(int64_t ell) {
  if (ell == 0) throw std::invalid_argument("two_adic_valuation: ell = 0");
  if (ell < 0) ell = -ell;
  int v = 0;
  while (ell % 2 == 0) { ell /= 2; ++v; }
  return v;
}

int64_t ramanujan_sum(int64_t r, int64_t ell) {
  if (r < 1) throw std::invalid_argument("ramanujan_sum: r must be >= 1");
  int64_t g = (ell == 0) ? r : std::gcd(r, std::abs(ell));
  int64_t m = r / g;
  int mu = moebius(m);
  if (mu == 0) return 0;
  return mu * (euler_phi(r) / euler_phi(m));
}

std::complex<double> ramanujan_sum_direct(int64_t r, int64_t ell) {
  std::complex<double> s = 0.0;
  for (int64_t a = 1; a <= r; ++a) {
    if (std::gcd(a, r) != 1) continue;
    double arg = kTwoPi * static_cast<double>((a % r) * (((ell % r) + r) % r) % r) / double(r);
    s += std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return s;
}

std::complex<double> gauss_tau(int64_t v, int64_t r) {
  if (r < 1) throw std::invalid_argument("gauss_tau: r must be >= 1");
  std::complex<double> s = 0.0;
  int64_t vr = ((v % r) + r) % r;
  for (int64_t b = 0; b < r; ++b) {
    int chi = kronecker(b, r);
    if (chi == 0) continue;
    double arg = kTwoPi * double((vr * b) % r) / double(r);
    s += double(chi) * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return s;
}

std::complex<double> gauss_tau_closed_form(int64_t v, int64_t r) {
  const std::complex<double> I(0.0, 1.0);
  std::complex<double> eps =
      0.5 * (1.0 + I) + 0.5 * double(kronecker(-1, r)) * (1.0 - I);
  return eps * double(kronecker(v, r)) * std::sqrt(double(r));
}

bool is_fundamental_discriminant(int64_t d) {
  if (d == 1) return true;
  int64_t m4 = ((d % 4) + 4) % 4;
  if (m4 == 1) return is_squarefree(d);
  if (m4 == 0) {
    int64_t m = d / 4;
    int64_t mm4 = ((m % 4) + 4) % 4;
    return (mm4 == 2 || mm4 == 3) && is_squarefree(m);
  }
  return false;
}

FundamentalFactorization fund_disc_decompose(int64_t n) {
  if (n == 0) throw std::invalid_argument("fund_disc_decompose: n = 0");
  int64_t m4 = ((n % 4) + 4) % 4;
  if (m4 == 2 || m4 == 3)
    throw std::domain_error(
        "fund_disc_decompose: n ≡ 2,3 (mod 4) is never d*delta^2 with d fundamental");
  // squarefree kernel: |n| = s * t^2, s squarefree
  int64_t s = (n < 0) ? -1 : 1, t = 1;
  for (auto [p, e] : factorize(n)) {
    if (e % 2 == 1) s *= p;
    int64_t ph = 1;
    for (int i = 0; i < e / 2; ++i) ph *= p;
    t *= ph;
  }
  int64_t sm4 = ((s % 4) + 4) % 4;
  FundamentalFactorization ff;
  ff.n = n;
  if (sm4 == 1) {  // includes s = 1 (positive square n)
    ff.d = s;
    ff.delta = t;
  } else {
    // s ≡ 2,3 (mod 4): d = 4s, needs t even, guaranteed by n ≡ 0 (mod 4)
    if (t % 2 != 0)
      throw std::domain_error("fund_disc_decompose: no fundamental decomposition");
    ff.d = 4 * s;
    ff.delta = t / 2;
  }
  return ff;
}

std::vector<int64_t> fundamental_discriminants(int64_t bound, int sign) {
  std::vector<int64_t> out;
  for (int64_t a = 1; a <= bound; ++a) {
    int64_t d = sign >= 0 ? a : -a;
    if (is_fundamental_discriminant(d) && d != 1) out.push_back(d);
  }
  return out;
}

}  // namespace halfint
