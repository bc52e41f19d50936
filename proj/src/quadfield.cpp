#include "halfint/quadfield.hpp"

namespace halfint {

std::pair<mpz_class, mpz_class> squarefree_kernel(const mpz_class& D) {
  mpz_class n = D, f = 1;
  for (mpz_class p = 2; p * p * p * p <= D && p < 100000; ++p) {
    mpz_class p2 = p * p;
    while (n % p2 == 0) {
      n /= p2;
      f *= p;
    }
  }
  // n may still contain a large square factor; check perfect-square remainder
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    f *= r;
    n = 1;
  }
  return {n, f};
}

}  // namespace halfint
