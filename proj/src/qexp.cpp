#include "halfint/qexp.hpp"

#include <stdexcept>

#include "halfint/arith.hpp"
#include "halfint/util.hpp"

namespace halfint {

ZSeries zmul(const ZSeries& a, const ZSeries& b, long N) {
  ZSeries c(N + 1);
  long na = static_cast<long>(a.size()) - 1;
  long nb = static_cast<long>(b.size()) - 1;
  parallel_for(0, N + 1, [&](long k) {
    mpz_class acc = 0;
    long ilo = std::max<long>(0, k - nb);
    long ihi = std::min<long>(na, k);
    for (long i = ilo; i <= ihi; ++i) {
      if (a[i] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
    }
    c[k] = acc;
  });
  return c;
}

ZSeries zpow(const ZSeries& a, long e, long N) {
  ZSeries r(N + 1);
  r[0] = 1;
  ZSeries base = a;
  base.resize(N + 1);
  while (e > 0) {
    if (e & 1) r = zmul(r, base, N);
    e >>= 1;
    if (e > 0) base = zmul(base, base, N);
  }
  return r;
}

ZSeries euler_product(long N) {
  ZSeries e(N + 1);
  // sum_k (-1)^k q^{k(3k-1)/2} over all integers k
  for (long k = -N; k <= N; ++k) {
    long g = k * (3 * k - 1) / 2;
    if (g >= 0 && g <= N) e[g] += (k % 2 == 0) ? 1 : -1;
  }
  return e;
}

ZSeries theta_series(long N) {
  ZSeries t(N + 1);
  t[0] = 1;
  for (long n = 1; n * n <= N; ++n) t[n * n] = 2;
  return t;
}

ZSeries theta_half_series(long N) {
  ZSeries t(N + 1);
  t[0] = 1;
  for (long n = 1; n * n <= N; ++n) t[n * n] = (n % 2 == 0) ? 2 : -2;
  return t;
}

ZSeries sigma_odd_series(long N) {
  ZSeries f(N + 1);
  for (long d = 1; d <= N; d += 2)
    for (long n = d; n <= N; n += 2 * d) f[n] += d;
  return f;
}

ZSeries eisenstein_series(int weight, long N) {
  if (weight != 4 && weight != 6)
    throw std::invalid_argument("eisenstein_series: only weights 4 and 6");
  ZSeries e(N + 1);
  for (long d = 1; d <= N; ++d) {
    mpz_class dp = (weight == 4) ? mpz_class(d) * d * d
                                 : mpz_class(d) * d * d * d * d;
    for (long n = d; n <= N; n += d) e[n] += dp;
  }
  long c = (weight == 4) ? 240 : -504;
  for (long n = 1; n <= N; ++n) e[n] *= c;
  e[0] = 1;
  return e;
}

ZSeries theta_t_series(long Nt) {
  ZSeries t(Nt + 1);
  t[0] = 1;
  for (long n = 1; 4 * n * n <= Nt; ++n) t[4 * n * n] = 2;
  return t;
}

ZSeries theta_half_t_series(long Nt) {
  ZSeries t(Nt + 1);
  t[0] = 1;
  for (long n = 1; 4 * n * n <= Nt; ++n) t[4 * n * n] = (n % 2 == 0) ? 2 : -2;
  return t;
}

ZSeries theta2_t_series(long Nt) {
  ZSeries t(Nt + 1);
  for (long n = 0; (2 * n + 1) * (2 * n + 1) <= Nt; ++n)
    t[(2 * n + 1) * (2 * n + 1)] = 2;
  return t;
}

const QuadRat QExpansion::zero_{};

QExpansion QExpansion::from_integers(int twice_weight, int level, const ZSeries& z) {
  std::vector<QuadRat> c(z.size());
  for (size_t i = 0; i < z.size(); ++i) c[i] = QuadRat(mpq_class(z[i]));
  return QExpansion(twice_weight, level, std::move(c));
}

const QuadRat& QExpansion::coef(long n) const {
  if (n < 0 || n >= static_cast<long>(c_.size())) return zero_;
  return c_[n];
}

QuadRat& QExpansion::coef_mut(long n) { return c_.at(n); }

long QExpansion::q_order() const {
  for (long n = 0; n < static_cast<long>(c_.size()); ++n)
    if (!c_[n].is_zero()) return n;
  return -1;
}

QExpansion QExpansion::truncated(long M) const {
  std::vector<QuadRat> c(c_.begin(), c_.begin() + std::min<long>(M + 1, c_.size()));
  c.resize(M + 1);
  return QExpansion(twice_weight_, level_, std::move(c));
}

void QExpansion::check_add_compat(const QExpansion& o) const {
  if (level_ != o.level_) throw std::invalid_argument("QExpansion: level mismatch");
  if (twice_weight_ != o.twice_weight_)
    throw std::invalid_argument("QExpansion: weight mismatch in +/-");
}

QExpansion QExpansion::operator+(const QExpansion& o) const {
  check_add_compat(o);
  long N = std::min(order(), o.order());
  QExpansion r(twice_weight_, level_, N);
  for (long n = 0; n <= N; ++n) r.c_[n] = c_[n] + o.c_[n];
  return r;
}

QExpansion QExpansion::operator-(const QExpansion& o) const {
  check_add_compat(o);
  long N = std::min(order(), o.order());
  QExpansion r(twice_weight_, level_, N);
  for (long n = 0; n <= N; ++n) r.c_[n] = c_[n] - o.c_[n];
  return r;
}

QExpansion QExpansion::operator*(const QExpansion& o) const {
  if (level_ != o.level_) throw std::invalid_argument("QExpansion: level mismatch");
  long N = std::min(order(), o.order());
  QExpansion r(twice_weight_ + o.twice_weight_, level_, N);
  std::vector<QuadRat>& c = r.c_;
  parallel_for(0, N + 1, [&](long k) {
    QuadRat acc;
    for (long i = 0; i <= k; ++i) {
      if (c_[i].is_zero() || o.c_[k - i].is_zero()) continue;
      acc += c_[i] * o.c_[k - i];
    }
    c[k] = acc;
  });
  return r;
}

QExpansion QExpansion::scaled(const QuadRat& s) const {
  QExpansion r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

bool QExpansion::operator==(const QExpansion& o) const {
  if (twice_weight_ != o.twice_weight_ || level_ != o.level_) return false;
  long N = std::min(order(), o.order());
  for (long n = 0; n <= N; ++n)
    if (coef(n) != o.coef(n)) return false;
  return true;
}

}  // namespace halfint
