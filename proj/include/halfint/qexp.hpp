#ifndef HALFINT_QEXP_HPP
#define HALFINT_QEXP_HPP

#include <gmpxx.h>

#include <vector>

#include "halfint/quadfield.hpp"

namespace halfint {

// Dense truncated integer power series (coefficient of q^n at index n).
using ZSeries = std::vector<mpz_class>;

// Truncated product to order N (result has N+1 entries).
ZSeries zmul(const ZSeries& a, const ZSeries& b, long N);
ZSeries zpow(const ZSeries& a, long e, long N);

// Euler product prod_{n>=1} (1 - q^n) to order N, via the pentagonal number
// expansion (sparse).
ZSeries euler_product(long N);

// Integer generator series.
ZSeries theta_series(long N);       // 1 + 2q + 2q^4 + ...
ZSeries theta_half_series(long N);  // theta(z + 1/2) = 1 - 2q + 2q^4 - ...
ZSeries sigma_odd_series(long N);   // F = sum_{n odd} sigma(n) q^n
ZSeries eisenstein_series(int weight, long N);  // E4 or E6, integer normalization

// t-series (t = q^{1/4}) used for cusp expansions; index n is coeff of t^n.
ZSeries theta_t_series(long Nt);       // sum t^{4n^2}
ZSeries theta_half_t_series(long Nt);  // sum (-1)^n t^{4n^2}
ZSeries theta2_t_series(long Nt);      // 2 sum_{n>=0} t^{(2n+1)^2}

// Exact-coefficient truncated q-expansion. twice_weight holds 2*(weight), so
// integer-weight forms have even values and half-integral ones odd values.
class QExpansion {
 public:
  QExpansion() : twice_weight_(0), level_(1) {}
  QExpansion(int twice_weight, int level, long N)
      : twice_weight_(twice_weight), level_(level), c_(N + 1) {}
  QExpansion(int twice_weight, int level, std::vector<QuadRat> coeffs)
      : twice_weight_(twice_weight), level_(level), c_(std::move(coeffs)) {}
  static QExpansion from_integers(int twice_weight, int level, const ZSeries& z);

  int twice_weight() const { return twice_weight_; }
  int level() const { return level_; }
  long order() const { return static_cast<long>(c_.size()) - 1; }  // N

  // c(n), with the convention that anything outside [0, N] is 0. Querying
  // beyond the truncation is the caller's responsibility via order().
  const QuadRat& coef(long n) const;
  QuadRat& coef_mut(long n);

  // Index of the first nonzero coefficient; -1 for the zero series.
  long q_order() const;
  bool is_zero() const { return q_order() < 0; }

  QExpansion truncated(long M) const;

  QExpansion operator+(const QExpansion& o) const;
  QExpansion operator-(const QExpansion& o) const;
  QExpansion operator*(const QExpansion& o) const;  // N = min of operands
  QExpansion scaled(const QuadRat& s) const;

  bool operator==(const QExpansion& o) const;

 private:
  void check_add_compat(const QExpansion& o) const;
  int twice_weight_;
  int level_;
  std::vector<QuadRat> c_;
  static const QuadRat zero_;
};

}  // namespace halfint

#endif
