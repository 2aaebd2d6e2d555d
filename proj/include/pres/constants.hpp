#pragma once

#include <optional>
#include <vector>

#include "pres/fq.hpp"
#include "pres/matrix.hpp"
#include "pres/word.hpp"

namespace pres {

// Data for the rank-1 special linear presentation over F_q: a generator
// zeta of F_q^* and exponents k, l with zeta^{2k} = zeta^{2l} + 1 and
// F_q = F_p[zeta^{2k}], plus the minimal polynomial of zeta^{2d}.
struct Sl2Constants {
  long long q = 0, p = 0, e = 1;
  FieldPtr F;
  FqElement zeta;
  long long k = 0, l = 0, d = 1;
  std::vector<long long> m;  // minimal polynomial of zeta^{2d}, ascending

  FqElement base() const { return zeta.pow(2 * d); }
  // g with g(zeta^{2d}) = gamma, deg g < deg m
  std::vector<long long> gamma_poly(const FqElement& gamma) const {
    return coeff_poly(base(), gamma);
  }
};

Sl2Constants find_sl2_constants(long long q);

// Data for the unitary rank-1 presentation: zeta generates F_{q^2}^*,
// a = zeta^k and b = zeta^l satisfy a^{2q-1} + b^{2q-1} = 1 and
// a^{q+1} + b^{q+1} = 1, F_q = F_p[a^{q+1}], and F_p[a^{2q-1}] has the
// required degree (2e for q odd, e for q even).
struct Su3Constants {
  long long q = 0, p = 0, e = 1;  // q = p^e, field below is F_{q^2}
  FieldPtr F2;
  FqElement zeta;
  long long k = 0, l = 0, d = 1;
  FqElement a, b;
  FqElement Aprime;   // zeta^{(q+1)d}, the h^d action on the center
  FqElement Adouble;  // zeta^{(2q-1)d}, the h^d action mod center
  std::vector<long long> m_prime;   // minpoly of Aprime
  std::vector<long long> m_double;  // minpoly of Adouble
};

Su3Constants find_su3_constants(long long q);

// Element a of the upper-left SL(2,q) block of SL(3,q) of order q+1 such
// that <a, a^c> acts irreducibly on F_q^3 (c the 3-cycle permutation
// matrix).  Returned as a 3x3 matrix.
MatrixFq find_singer(long long q);

// Bruhat decomposition in the rank-1 groups: for g outside the Borel
// subgroup, g = u1 * h0 * t * u2 with u1, u2 unipotent upper triangular and
// h0 in the diagonal torus.  Throws if g is in the Borel.
struct Bruhat {
  MatrixFq u1, h0, u2;
};
Bruhat bruhat_sl2(const MatrixFq& g);
Bruhat bruhat_su3(const MatrixFq& g);

// SU(3,q) matrices for the fixed hermitian form (antidiagonal 1s, -1 center).
MatrixFq su3_u(const Su3Constants& c, const FqElement& alpha,
               const FqElement& beta);
MatrixFq su3_t(const Su3Constants& c);
MatrixFq su3_h(const Su3Constants& c);
bool su3_form_ok(const Su3Constants& c, const MatrixFq& g);
// Canonical base unipotent: alpha = 1, beta the smallest solution of
// beta + beta^q = -1.
MatrixFq su3_base_u(const Su3Constants& c);

// SL(2,q) generator matrices.
MatrixFq sl2_u(const Sl2Constants& c);
MatrixFq sl2_t(const Sl2Constants& c);
MatrixFq sl2_h(const Sl2Constants& c);

// Word over {u,t,h} evaluating to g in SL(2,q).
Word express_sl2(const Sl2Constants& c, const MatrixFq& g, const Symbol& u,
                 const Symbol& t, const Symbol& h);

// Word over {u,h} evaluating to an upper unitriangular target in SU(3,q):
// alpha coordinate solved as an F_p-linear combination of h-conjugates of
// u, central coordinate corrected with w-conjugates.
Word express_unipotent(const Su3Constants& c, const MatrixFq& target,
                       const Symbol& u, const Symbol& h);
// The word w with u = u^{h^k} u^{h^l} w.
Word su3_w_word(const Su3Constants& c, const Symbol& u, const Symbol& h);

}  // namespace pres
