#ifndef HALFINT_QSERIES_HPP
#define HALFINT_QSERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "halfint/moments.hpp"
#include "halfint/qexp.hpp"

namespace halfint {

// Level-1 integer-weight machinery: Eisenstein series, Delta, cusp bases,
// Hecke operators and eigenforms. All coefficients exact.

QExpansion delta_expansion(long N);
QExpansion e4_expansion(long N);
QExpansion e6_expansion(long N);

int dim_cusp_forms(int two_k);     // dim S_{2k}(SL_2(Z))
int dim_modular_forms(int two_k);  // dim M_{2k}(SL_2(Z))

// Echelonized basis of S_{2k} (Miller-style: b_i = q^{i+1} + O(q^{dim+1})).
std::vector<QExpansion> cusp_basis(int two_k, long N);

// T_p on weight-2k level-1 forms: a(n) -> a(pn) + p^{2k-1} a(n/p).
QExpansion hecke_Tp(const QExpansion& f, long p);

struct HeckeEigenform {
  QExpansion form;  // normalized a(1) = 1
  int two_k = 0;
  bool numeric_only = false;  // dim >= 3 fallback: coefficients are floats in
                              // disguise (exact basis, numeric eigenvector)
  QuadRat a(long p) const { return form.coef(p); }
};

// Simultaneous T_p eigenbasis (verified for p in {2,3,5,7}), a(1)=1.
// Exact over Q or a real quadratic field for dim <= 2; certified-residual
// numeric eigenvectors for dim >= 3 with irreducible characteristic factors.
std::vector<HeckeEigenform> eigenforms(int two_k, long N);

// lambda(p) = a(p)/p^{(2k-1)/2} for p <= pmax, with the Deligne bound
// |lambda(p)| <= 2 checked (violation is a fatal correctness error).
PrimeCoefficients deligne_normalize(const HeckeEigenform& f, long pmax);

// lambda(n) for all n <= M by Hecke multiplicativity from the prime values.
std::vector<double> lambda_table(const HeckeEigenform& f, long M);

// Disk cache (text, header "QEXP v1 ..."): see docs/formats.md.
void write_qexp_cache(const std::string& path, const QExpansion& f);
QExpansion read_qexp_cache(const std::string& path);

// Cached Delta coefficients tau(n), n <= M, as doubles after Deligne
// normalization is applied by callers; exact mpz internally.
const ZSeries& delta_coefficients(long M);

}  // namespace halfint

#endif
