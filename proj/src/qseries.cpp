#include "halfint/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "halfint/arith.hpp"
#include "halfint/experiment.hpp"

namespace halfint {

QExpansion delta_expansion(long N) {
  if (N < 1) throw std::invalid_argument("delta_expansion: N >= 1 required");
  ZSeries eta = euler_product(N);
  ZSeries e24 = zpow(eta, 24, N);
  ZSeries d(N + 1);
  for (long n = 1; n <= N; ++n) d[n] = e24[n - 1];  // multiply by q
  return QExpansion::from_integers(24, 1, d);
}

QExpansion e4_expansion(long N) {
  return QExpansion::from_integers(8, 1, eisenstein_series(4, N));
}

QExpansion e6_expansion(long N) {
  return QExpansion::from_integers(12, 1, eisenstein_series(6, N));
}

int dim_modular_forms(int two_k) {
  if (two_k < 0 || two_k % 2 != 0) return 0;
  if (two_k % 12 == 2) return two_k / 12;
  return two_k / 12 + 1;
}

int dim_cusp_forms(int two_k) {
  if (two_k < 12) return 0;
  int d = dim_modular_forms(two_k) - 1;
  return d < 0 ? 0 : d;
}

namespace {

// Echelonize rows by lowest q-order; pivots normalized to 1. Exact.
void echelonize(std::vector<QExpansion>& rows) {
  size_t done = 0;
  long N = rows.empty() ? 0 : rows[0].order();
  for (long col = 0; col <= N && done < rows.size(); ++col) {
    size_t piv = done;
    while (piv < rows.size() && rows[piv].coef(col).is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[done], rows[piv]);
    rows[done] = rows[done].scaled(rows[done].coef(col).inverse());
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == done) continue;
      const QuadRat& c = rows[r].coef(col);
      if (!c.is_zero()) rows[r] = rows[r] - rows[done].scaled(c);
    }
    ++done;
  }
  while (!rows.empty() && rows.back().is_zero()) rows.pop_back();
}

using Mat = std::vector<std::vector<mpq_class>>;

mpz_class scaled_to_integer(const mpq_class& q, const mpz_class& den) {
  mpq_class r = q * mpq_class(den);
  r.canonicalize();
  if (r.get_den() != 1) throw std::logic_error("scaled_to_integer: not integral");
  return r.get_num();
}

mpq_class det_rational(Mat a) {
  size_t n = a.size();
  mpq_class det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

// det(xI - A) by exact interpolation at x = 0..d.
std::vector<mpq_class> charpoly(const Mat& A) {
  size_t d = A.size();
  std::vector<mpq_class> xs(d + 1), ys(d + 1);
  for (size_t i = 0; i <= d; ++i) {
    xs[i] = mpq_class(static_cast<long>(i));
    Mat m(d, std::vector<mpq_class>(d));
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c < d; ++c) m[r][c] = (r == c ? xs[i] : mpq_class(0)) - A[r][c];
    ys[i] = det_rational(m);
  }
  // Newton's divided differences, then expand
  std::vector<mpq_class> dd = ys;
  for (size_t j = 1; j <= d; ++j)
    for (size_t i = d; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<mpq_class> poly{dd[d]};
  for (size_t i = d; i-- > 0;) {
    poly.insert(poly.begin(), mpq_class(0));
    for (size_t j = 0; j + 1 < poly.size(); ++j) poly[j] -= xs[i] * poly[j + 1];
    poly[0] += dd[i];
  }
  return poly;  // poly[j] = coefficient of x^j, poly[d] = 1
}

std::vector<mpq_class> rational_roots(std::vector<mpq_class> poly) {
  // clear denominators -> primitive integer polynomial
  mpz_class den = 1;
  for (auto& c : poly) den = den / gcd(den, c.get_den()) * c.get_den();
  std::vector<mpz_class> ip(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) ip[i] = scaled_to_integer(poly[i], den);
  std::vector<mpq_class> roots;
  if (ip.back() == 0) throw std::logic_error("charpoly not monic-like");
  mpz_class a0 = ip[0];
  if (a0 == 0) {
    roots.push_back(0);
    return roots;  // eigenvalue 0 not expected; caller deflates and retries
  }
  // For monic integer char polys the eigenvalues are algebraic integers, so
  // rational roots are integer divisors of the constant term.
  std::vector<mpz_class> cand;
  mpz_class aa = abs(a0);
  for (mpz_class t = 1; t * t <= aa; ++t) {
    if (aa % t == 0) {
      cand.push_back(t);
      cand.push_back(aa / t);
    }
  }
  auto eval = [&](const mpz_class& x) {
    mpz_class v = 0;
    for (size_t i = ip.size(); i-- > 0;) v = v * x + ip[i];
    return v;
  };
  for (const auto& t : cand) {
    if (eval(t) == 0) roots.push_back(mpq_class(t));
    if (eval(-t) == 0) roots.push_back(mpq_class(-t));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<mpq_class> deflate(const std::vector<mpq_class>& poly, const mpq_class& root) {
  std::vector<mpq_class> q(poly.size() - 1);
  mpq_class carry = poly.back();
  for (size_t i = poly.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = poly[i] + carry * root;
  }
  if (carry != 0) throw std::logic_error("deflate: not a root");
  return q;
}

// Kernel vector of (A - lambda I), lambda in Q(sqrt(D)). Exactly one
// dimension expected; defective spaces are reported.
std::vector<QuadRat> kernel_vector(const Mat& A, const QuadRat& lambda) {
  size_t d = A.size();
  std::vector<std::vector<QuadRat>> m(d, std::vector<QuadRat>(d));
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c) {
      m[r][c] = QuadRat(A[r][c]);
      if (r == c) m[r][c] -= lambda;
    }
  std::vector<long> pivot_col(d, -1);
  size_t rank = 0;
  for (size_t c = 0; c < d && rank < d; ++c) {
    size_t piv = rank;
    while (piv < d && m[piv][c].is_zero()) ++piv;
    if (piv == d) continue;
    std::swap(m[piv], m[rank]);
    QuadRat inv = m[rank][c].inverse();
    for (size_t j = 0; j < d; ++j) m[rank][j] *= inv;
    for (size_t r = 0; r < d; ++r) {
      if (r == rank) continue;
      QuadRat f = m[r][c];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < d; ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_col[rank] = static_cast<long>(c);
    ++rank;
  }
  if (rank != d - 1)
    throw std::runtime_error("eigenforms: defective or indistinguishable eigenspace");
  std::vector<bool> is_pivot(d, false);
  for (size_t r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
  size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<QuadRat> v(d);
  v[free_col] = QuadRat(1);
  for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free_col];
  return v;
}

}  // namespace

std::vector<QExpansion> cusp_basis(int two_k, long N) {
  if (two_k < 12) return {};
  std::vector<QExpansion> rows;
  QExpansion delta = delta_expansion(N);
  QExpansion e4 = e4_expansion(N), e6 = e6_expansion(N);
  int w = two_k - 12;
  for (int b = 0; 6 * b <= w; ++b) {
    if ((w - 6 * b) % 4 != 0) continue;
    int a = (w - 6 * b) / 4;
    QExpansion m = delta;
    for (int i = 0; i < a; ++i) m = m * e4;
    for (int i = 0; i < b; ++i) m = m * e6;
    rows.push_back(m);
  }
  echelonize(rows);
  if (static_cast<int>(rows.size()) != dim_cusp_forms(two_k))
    throw std::runtime_error("cusp_basis: rank does not match dimension formula");
  return rows;
}

QExpansion hecke_Tp(const QExpansion& f, long p) {
  long N = f.order() / p;
  if (N < 1) throw std::invalid_argument("hecke_Tp: truncation order too small");
  int two_k = f.twice_weight();
  mpz_class pw = 1;
  for (int i = 0; i < two_k - 1; ++i) pw *= p;
  QuadRat pk{mpq_class(pw)};
  QExpansion r(two_k, f.level(), N);
  for (long n = 0; n <= N; ++n) {
    QuadRat v = f.coef(p * n);
    if (n % p == 0) v += pk * f.coef(n / p);
    r.coef_mut(n) = v;
  }
  return r;
}

std::vector<HeckeEigenform> eigenforms(int two_k, long N) {
  int d = dim_cusp_forms(two_k);
  if (d == 0) return {};
  if (N < 3 * d) throw std::invalid_argument("eigenforms: N too small to separate");
  std::vector<QExpansion> basis = cusp_basis(two_k, N);
  // Matrix of T_2 in the echelon basis, read off at the pivot orders 1..d.
  Mat A(d, std::vector<mpq_class>(d));
  std::vector<QExpansion> images;
  for (int i = 0; i < d; ++i) {
    QExpansion t = hecke_Tp(basis[i], 2);
    for (int j = 0; j < d; ++j) {
      const QuadRat& c = t.coef(j + 1);
      if (!c.is_rational()) throw std::logic_error("eigenforms: basis not rational");
      A[j][i] = c.rat();
    }
    images.push_back(std::move(t));
  }
  // Residual check: T_2 b_i minus its basis expansion vanishes identically.
  for (int i = 0; i < d; ++i) {
    QExpansion resid = images[i];
    for (int j = 0; j < d; ++j) resid = resid - basis[j].scaled(QuadRat(A[j][i]));
    if (!resid.is_zero())
      throw std::logic_error("eigenforms: T_2 does not preserve the cusp space");
  }

  std::vector<mpq_class> poly = charpoly(A);
  std::vector<QuadRat> lambdas;
  bool numeric = false;

  std::vector<mpq_class> rroots = rational_roots(poly);
  std::vector<mpq_class> rem = poly;
  for (const auto& r : rroots) rem = deflate(rem, r);
  for (const auto& r : rroots) lambdas.push_back(QuadRat(r));
  if (rem.size() == 3) {
    // monic quadratic x^2 + b x + c over Q: exact quadratic-field roots
    mpq_class b = rem[1] / rem[2], c = rem[0] / rem[2];
    mpq_class disc = b * b - 4 * c;
    if (disc <= 0) throw std::runtime_error("eigenforms: non-real eigenvalues");
    mpz_class num = disc.get_num() * disc.get_den();
    auto [d0, f0] = squarefree_kernel(num);
    // sqrt(disc) = (f0 / den) sqrt(d0)
    mpq_class coef(f0, disc.get_den());
    QuadRat sq(mpq_class(0), coef, d0);
    lambdas.push_back((QuadRat(-b) + sq) * QuadRat(mpq_class(1, 2)));
    lambdas.push_back((QuadRat(-b) - sq) * QuadRat(mpq_class(1, 2)));
  } else if (rem.size() > 3) {
    // Irreducible factor of degree >= 3 (expected for 2k >= 36 under Maeda):
    // numeric roots of the exact polynomial, certified by residual below.
    numeric = true;
    std::vector<double> dp(rem.size());
    for (size_t i = 0; i < rem.size(); ++i) dp[i] = rem[i].get_d();
    std::vector<double> work = dp;
    auto evald = [](const std::vector<double>& q, double x) {
      double v = 0;
      for (size_t i = q.size(); i-- > 0;) v = v * x + q[i];
      return v;
    };
    while (work.size() > 1) {
      // Newton from a spread of starts; roots are real and distinct
      double x = 1.0;
      bool found = false;
      for (double start : {0.0, 1e3, -1e3, 1e5, -1e5, 1e7, -1e7, 1e9, -1e9}) {
        x = start;
        for (int it = 0; it < 200; ++it) {
          double fv = evald(work, x);
          double dv = 0;
          for (size_t i = work.size() - 1; i >= 1; --i)
            dv = dv * x + work[i] * static_cast<double>(i);
          if (dv == 0) break;
          double nx = x - fv / dv;
          if (std::abs(nx - x) <= 1e-12 * (1 + std::abs(nx))) {
            x = nx;
            found = true;
            break;
          }
          x = nx;
        }
        if (found) break;
      }
      if (!found) throw std::runtime_error("eigenforms: numeric root search failed");
      // polish on the full polynomial
      for (int it = 0; it < 100; ++it) {
        double fv = evald(dp, x), dv = 0;
        for (size_t i = dp.size() - 1; i >= 1; --i)
          dv = dv * x + dp[i] * static_cast<double>(i);
        if (dv == 0) break;
        double nx = x - fv / dv;
        if (nx == x) break;
        x = nx;
      }
      lambdas.push_back(QuadRat(mpq_class(x)));
      // synthetic division by (x - root) in doubles
      std::vector<double> q(work.size() - 1);
      double carry = work.back();
      for (size_t i = work.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = work[i] + carry * x;
      }
      work = q;
    }
  }
  if (static_cast<int>(lambdas.size()) != d)
    throw std::runtime_error("eigenforms: could not split characteristic polynomial");

  std::vector<HeckeEigenform> out;
  for (const auto& lam : lambdas) {
    std::vector<QuadRat> v;
    if (!numeric) {
      v = kernel_vector(A, lam);
    } else {
      // numeric nullspace via Gaussian elimination in doubles
      size_t n = A.size();
      std::vector<std::vector<double>> m(n, std::vector<double>(n));
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
          m[r][c] = A[r][c].get_d() - (r == c ? lam.to_double() : 0.0);
      std::vector<double> vv(n, 0.0);
      std::vector<long> pc(n, -1);
      size_t rank = 0;
      for (size_t c = 0; c < n && rank < n; ++c) {
        size_t piv = rank;
        for (size_t r = rank; r < n; ++r)
          if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (std::abs(m[piv][c]) < 1e-7 * (1 + std::abs(lam.to_double()))) continue;
        std::swap(m[piv], m[rank]);
        double inv = 1.0 / m[rank][c];
        for (size_t j = 0; j < n; ++j) m[rank][j] *= inv;
        for (size_t r = 0; r < n; ++r) {
          if (r == rank) continue;
          double f = m[r][c];
          for (size_t j = 0; j < n; ++j) m[r][j] -= f * m[rank][j];
        }
        pc[rank] = static_cast<long>(c);
        ++rank;
      }
      size_t fc = 0;
      std::vector<bool> isp(n, false);
      for (size_t r = 0; r < rank; ++r)
        if (pc[r] >= 0) isp[pc[r]] = true;
      while (fc < n && isp[fc]) ++fc;
      vv[fc] = 1.0;
      for (size_t r = 0; r < rank; ++r)
        if (pc[r] >= 0) vv[pc[r]] = -m[r][fc];
      for (size_t i = 0; i < n; ++i) v.push_back(QuadRat(mpq_class(vv[i])));
    }
    QExpansion f(two_k, 1, N);
    for (int i = 0; i < d; ++i) f = f + basis[i].scaled(v[i]);
    QuadRat a1 = f.coef(1);
    if (a1.is_zero()) throw std::logic_error("eigenforms: a(1) = 0");
    f = f.scaled(a1.inverse());
    HeckeEigenform hf;
    hf.form = std::move(f);
    hf.two_k = two_k;
    hf.numeric_only = numeric;
    out.push_back(std::move(hf));
  }

  // Simultaneity check: T_p f = a(p) f for p in {2,3,5,7}.
  for (const auto& hf : out) {
    for (long p : {2L, 3L, 5L, 7L}) {
      if (hf.form.order() / p < 1) continue;
      QExpansion t = hecke_Tp(hf.form, p);
      QExpansion diff = t - hf.form.scaled(hf.a(p)).truncated(t.order());
      if (!hf.numeric_only) {
        if (!diff.is_zero())
          throw std::logic_error("eigenforms: simultaneity check failed");
      } else {
        for (long n = 0; n <= diff.order(); ++n)
          if (std::abs(diff.coef(n).to_double()) >
              1e-6 * (1 + std::abs(t.coef(n).to_double())))
            throw std::logic_error("eigenforms: numeric residual too large");
      }
    }
  }
  return out;
}

PrimeCoefficients deligne_normalize(const HeckeEigenform& f, long pmax) {
  PrimeCoefficients pc(0.05);
  long lim = std::min<long>(pmax, f.form.order());
  for (long p : primes_up_to(lim)) {
    double ap = f.form.coef(p).to_double();
    double lam = ap / std::pow(static_cast<double>(p), (f.two_k - 1) / 2.0);
    if (std::abs(lam) > 2.0 + 1e-9)
      throw std::runtime_error("deligne_normalize: Deligne bound violated");
    pc.set(p, lam);
  }
  return pc;
}

std::vector<double> lambda_table(const HeckeEigenform& f, long M) {
  // lambda at primes from coefficients; prime powers by the Hecke recursion
  // lambda(p^{e+1}) = lambda(p) lambda(p^e) - lambda(p^{e-1}); multiplicative.
  std::vector<long> spf(M + 1, 0);
  for (long i = 2; i <= M; ++i)
    if (spf[i] == 0)
      for (long j = i; j <= M; j += i)
        if (spf[j] == 0) spf[j] = i;
  std::vector<double> lam(M + 1, 0.0);
  lam[1] = 1.0;
  for (long n = 2; n <= M; ++n) {
    long p = spf[n];
    long pe = p, e = 1;
    long m = n / p;
    while (m % p == 0) {
      m /= p;
      pe *= p;
      ++e;
    }
    if (m > 1) {
      lam[n] = lam[m] * lam[pe];
      continue;
    }
    if (e == 1) {
      if (p > f.form.order())
        throw std::invalid_argument("lambda_table: order too small for prime reach");
      lam[n] = f.form.coef(p).to_double() /
               std::pow(static_cast<double>(p), (f.two_k - 1) / 2.0);
    } else {
      lam[n] = lam[p] * lam[pe / p] - lam[pe / (p * p)];
    }
  }
  return lam;
}

void write_qexp_cache(const std::string& path, const QExpansion& f) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_qexp_cache: cannot open " + path);
  os << "QEXP v1 " << f.twice_weight() << " " << f.level() << " " << f.order() << "\n";
  for (long n = 0; n <= f.order(); ++n) {
    const QuadRat& c = f.coef(n);
    if (!c.is_rational())
      os << n << " " << c.rat().get_num() << " " << c.rat().get_den() << " "
         << c.irr().get_num() << " " << c.irr().get_den() << " " << c.disc() << "\n";
    else
      os << n << " " << c.rat().get_num() << " " << c.rat().get_den() << "\n";
  }
}

QExpansion read_qexp_cache(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_qexp_cache: cannot open " + path);
  std::string magic, ver;
  int tw, level;
  long N;
  is >> magic >> ver >> tw >> level >> N;
  if (magic != "QEXP" || ver != "v1") throw std::runtime_error("bad qexp cache header");
  QExpansion f(tw, level, N);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    long n;
    mpz_class an, ad, bn, bd, D;
    ls >> n >> an >> ad;
    if (ls >> bn >> bd >> D)
      f.coef_mut(n) = QuadRat(mpq_class(an, ad), mpq_class(bn, bd), D);
    else
      f.coef_mut(n) = QuadRat(mpq_class(an, ad));
  }
  return f;
}

const ZSeries& delta_coefficients(long M) {
  static std::mutex mu;
  static ZSeries cache;
  std::scoped_lock lk(mu);
  if (static_cast<long>(cache.size()) <= M) {
    std::string path = cache_file_path("qexp", "level1-w12-N" + std::to_string(M) + ".txt");
    bool loaded = false;
    if (!path.empty()) {
      std::ifstream probe(path);
      if (probe) {
        QExpansion d = read_qexp_cache(path);
        cache.assign(M + 1, 0);
        for (long n = 0; n <= M; ++n) cache[n] = d.coef(n).rat().get_num();
        loaded = true;
      }
    }
    if (!loaded) {
      QExpansion d = delta_expansion(M);
      cache.assign(M + 1, 0);
      for (long n = 0; n <= M; ++n) cache[n] = d.coef(n).rat().get_num();
      if (!path.empty()) write_qexp_cache(path, d);
    }
  }
  return cache;
}

}  // namespace halfint
