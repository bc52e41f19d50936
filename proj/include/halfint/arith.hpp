#ifndef HALFINT_ARITH_HPP
#define HALFINT_ARITH_HPP

#include <complex>
#include <cstdint>
#include <vector>

// Exact integer and character primitives. Everything here is pure and
// thread-safe; see docs/conventions.md for the Kronecker symbol conventions
// used for even or non-positive bottom arguments.

namespace halfint {

using std::int64_t;

// Kronecker symbol (a/n), extended to all integers n.
// For odd n > 0 this is the Jacobi symbol.
int kronecker(int64_t a, int64_t n);

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);

// mu(n), n >= 1. 0 on non-squarefree input.
int moebius(int64_t n);

// Euler phi(n), n >= 1.
int64_t euler_phi(int64_t n);

// Number of divisors d(n) and divisor sum sigma(n), n >= 1.
int64_t divisor_count(int64_t n);
int64_t divisor_sum(int64_t n);

bool is_squarefree(int64_t n);

// Primes <= bound, increasing.
std::vector<int64_t> primes_up_to(int64_t bound);

std::vector<int64_t> divisors(int64_t n);

// Largest e with 2^e | ell. Rejects ell = 0.
int two_adic_valuation(int64_t ell);

// Ramanujan sum c_r(ell) = sum over (a,r)=1 of e(a ell / r), evaluated
// exactly as mu(r/g) phi(r) / phi(r/g) with g = (r, ell).
int64_t ramanujan_sum(int64_t r, int64_t ell);

// Same sum by direct complex summation; used as a cross-check oracle.
std::complex<double> ramanujan_sum_direct(int64_t r, int64_t ell);

// Gauss-type sum tau_v(r) = sum_{b mod r} (b/r) e(v b / r), direct summation.
std::complex<double> gauss_tau(int64_t v, int64_t r);

// Closed form for odd squarefree r with (v,r)=1:
//   ((1+i)/2 + (-1/r)(1-i)/2) * (v/r) * sqrt(r).
std::complex<double> gauss_tau_closed_form(int64_t v, int64_t r);

struct FundamentalFactorization {
  int64_t n;      // = d * delta^2
  int64_t d;      // fundamental discriminant (d = 1 for positive squares)
  int64_t delta;  // >= 1
};

bool is_fundamental_discriminant(int64_t d);

// Decompose n = d * delta^2 with d fundamental. Exists iff n ≡ 0,1 (mod 4)
// (and for the degenerate d=1 case, n a positive square); rejects other n.
FundamentalFactorization fund_disc_decompose(int64_t n);

// All fundamental discriminants d with 0 < |d| <= bound and the given sign.
std::vector<int64_t> fundamental_discriminants(int64_t bound, int sign);

}  // namespace halfint

#endif
