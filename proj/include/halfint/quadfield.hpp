#ifndef HALFINT_QUADFIELD_HPP
#define HALFINT_QUADFIELD_HPP

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace halfint {

// Element a + b*sqrt(D) of Q(sqrt(D)), D a fixed positive non-square integer.
// D == 1 encodes a plain rational (b must then be 0). Mixing two different
// irrational D's is an error; it never happens inside one weight's computation.
class QuadRat {
 public:
  QuadRat() : a_(0), b_(0), d_(1) {}
  QuadRat(const mpq_class& a) : a_(a), b_(0), d_(1) {}
  QuadRat(long a) : a_(a), b_(0), d_(1) {}
  QuadRat(const mpq_class& a, const mpq_class& b, const mpz_class& D)
      : a_(a), b_(b), d_(D) {
    if (b_ == 0) d_ = 1;
    if (d_ == 1 && b_ != 0) throw std::invalid_argument("QuadRat: D=1 with b!=0");
  }

  const mpq_class& rat() const { return a_; }
  const mpq_class& irr() const { return b_; }
  const mpz_class& disc() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadRat conj() const { return QuadRat(a_, -b_, d_); }

  QuadRat operator-() const { return QuadRat(-a_, -b_, d_); }

  QuadRat& operator+=(const QuadRat& o) {
    match(o);
    a_ += o.a_;
    b_ += o.b_;
    if (b_ == 0) d_ = 1;
    return *this;
  }
  QuadRat& operator-=(const QuadRat& o) {
    match(o);
    a_ -= o.a_;
    b_ -= o.b_;
    if (b_ == 0) d_ = 1;
    return *this;
  }
  QuadRat& operator*=(const QuadRat& o) {
    if (b_ == 0 && o.b_ == 0) {
      a_ *= o.a_;
      return *this;
    }
    match(o);
    mpq_class na = a_ * o.a_ + b_ * o.b_ * mpq_class(d_);
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    if (b_ == 0) d_ = 1;
    return *this;
  }

  friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
  friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }
  friend QuadRat operator*(QuadRat x, const QuadRat& y) { return x *= y; }

  QuadRat inverse() const {
    if (is_zero()) throw std::domain_error("QuadRat: division by zero");
    if (b_ == 0) return QuadRat(mpq_class(1) / a_);
    mpq_class nrm = a_ * a_ - b_ * b_ * mpq_class(d_);
    if (nrm == 0) throw std::domain_error("QuadRat: zero field norm (D a square?)");
    return QuadRat(a_ / nrm, -b_ / nrm, d_);
  }
  friend QuadRat operator/(const QuadRat& x, const QuadRat& y) {
    return x * y.inverse();
  }

  bool operator==(const QuadRat& o) const {
    if (b_ == 0 && o.b_ == 0) return a_ == o.a_;
    return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
  }
  bool operator!=(const QuadRat& o) const { return !(*this == o); }

  double to_double() const {
    double v = a_.get_d();
    if (b_ != 0) v += b_.get_d() * std::sqrt(d_.get_d());
    return v;
  }

  std::string str() const {
    if (b_ == 0) return a_.get_str();
    return a_.get_str() + " + (" + b_.get_str() + ")*sqrt(" + d_.get_str() + ")";
  }

 private:
  void match(const QuadRat& o) {
    if (b_ == 0 && o.b_ != 0) d_ = o.d_;
    if (b_ != 0 && o.b_ != 0 && d_ != o.d_)
      throw std::invalid_argument("QuadRat: mixed quadratic fields");
  }
  mpq_class a_, b_;
  mpz_class d_;
};

// Reduce D by its largest square divisor (trial division), returning
// (D0, f) with D = D0 * f^2.
std::pair<mpz_class, mpz_class> squarefree_kernel(const mpz_class& D);

}  // namespace halfint

#endif
