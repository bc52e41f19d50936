#ifndef HALFINT_MOMENTS_HPP
#define HALFINT_MOMENTS_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "halfint/testfn.hpp"

namespace halfint {

// Real coefficients a(p) at primes p, with |a(p)| <= p^{1/2-delta} enforced
// at insertion.
class PrimeCoefficients {
 public:
  explicit PrimeCoefficients(double delta = 0.05) : delta_(delta) {}
  void set(long p, double value);
  double at(long p) const;  // 0 if unset
  bool has(long p) const { return a_.count(p) > 0; }
  const std::map<long, double>& table() const { return a_; }
  double delta() const { return delta_; }

 private:
  double delta_;
  std::map<long, double> a_;
};

struct MomentStats {
  double B;  // (1/2) sum_{p<=x} a(p)^2/p
  double A;  // 1 + sum_{p|ell} a(p)^2/p
};

MomentStats moment_stats(const PrimeCoefficients& coeffs, double x, long ell);

// k-th moment of a standard normal: (2l)!/(l! 2^l) for k=2l, 0 for odd k.
mpq_class gaussian_moment(long k);
// C(k) = k! / (floor(k/2)! 2^{k/2}); for odd k the 2^{k/2} is interpreted via
// the integer floor pairing used in the source inequality, i.e. 2^{floor(k/2)}.
mpq_class moment_constant_C(long k);

struct MomentInterval {
  long lo, hi;  // primes p with lo <= p <= hi
  long power;   // exponent k_j
};

// Direct evaluation of
//   sum_{|m|<=10X} prod_j ( sum_{p in I_j} a(p)(m/p)/sqrt p )^{k_j} F(m/X).
double multilinear_moment_bruteforce(const PrimeCoefficients& coeffs,
                                     const std::vector<MomentInterval>& intervals,
                                     const BandlimitedMajorant& F, double X);

// Exact enumeration of pairs of fundamental discriminants a d1 = b d2 + ell,
// a|d1| <= X, of ( sum_{2<p<=x, p∤ab} a(p)(chi_{d1}(p)+chi_{d2}(p))/sqrt p )^{2k}.
// Discriminants of both signs are included.
double shifted_moment_bruteforce(const PrimeCoefficients& coeffs, long k,
                                 double x, double X, long a, long b, long ell,
                                 long* pair_count = nullptr);

// (2k)!/(2^k k!) (2B + c_slack*A)^k  per unit X/[a,b].
double moment_bound_rhs(long k, const MomentStats& stats, double c_slack);

// Sieve of fundamental discriminants: entry d (|d|<=bound) marked if d or -d
// is fundamental. Used by the enumeration loops.
struct FundamentalSieve {
  explicit FundamentalSieve(long bound);
  bool is_fundamental(long d) const;  // d any sign, |d| <= bound
  long bound;
  std::vector<bool> pos, neg;
};

}  // namespace halfint

#endif
