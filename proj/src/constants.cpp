#include "pres/constants.hpp"

#include <numeric>
#include <stdexcept>

#include "pres/element.hpp"
#include "pres/numth.hpp"

namespace pres {

namespace {

long long isqrt_pow(long long q, long long* e_out) {
  // factor q = p^e
  for (long long p = 2; p * p <= q; p++) {
    if (q % p == 0) {
      long long e = 0, m = q;
      while (m % p == 0) {
        m /= p;
        e++;
      }
      if (m != 1) throw std::runtime_error("q is not a prime power");
      *e_out = e;
      return p;
    }
  }
  *e_out = 1;
  return q;
}

}  // namespace

Sl2Constants find_sl2_constants(long long q) {
  if (q < 4) throw std::runtime_error("find_sl2_constants: q must be >= 4");
  Sl2Constants c;
  c.q = q;
  c.p = isqrt_pow(q, &c.e);
  c.F = FqField::make(c.p, c.e);
  c.zeta = c.F->zeta();
  long long n = q - 1;
  for (long long k = 1; k <= n; k++) {
    FqElement zk = c.zeta.pow((2 * k) % n == 0 ? n : (2 * k) % n);
    if (subfield_degree(zk) != c.e) continue;
    FqElement want = zk - c.F->one();
    if (want.is_zero()) continue;
    for (long long l = 1; l <= n; l++) {
      if (l == k) continue;
      if (c.zeta.pow((2 * l) % n == 0 ? n : (2 * l) % n) == want) {
        c.k = k;
        c.l = l;
        c.d = std::gcd(k, l);
        c.m = minimal_polynomial(c.zeta.pow(2 * c.d));
        return c;
      }
    }
  }
  throw std::runtime_error("find_sl2_constants: none found for q=" +
                           std::to_string(q));
}

Su3Constants find_su3_constants(long long q) {
  if (q == 2 || q == 3 || q == 5)
    throw std::runtime_error("find_su3_constants: q in {2,3,5} excluded");
  Su3Constants c;
  c.q = q;
  c.p = isqrt_pow(q, &c.e);
  auto F2 = FqField::make(c.p, 2 * c.e);
  // mark the unitary conjugation x -> x^q on this field handle
  auto F2m = std::const_pointer_cast<FqField>(F2);
  F2m->unitary_q = q;
  c.F2 = F2;
  c.zeta = F2->zeta();
  long long n = q * q - 1;
  long long want_dbl_deg = (q % 2 == 1) ? 2 * c.e : c.e;
  for (long long k = 1; k < n; k++) {
    FqElement a = c.zeta.pow(k);
    FqElement a1 = a.pow(q + 1), a2 = a.pow(2 * q - 1);
    if (subfield_degree(a1) != c.e) continue;
    if (subfield_degree(a2) != want_dbl_deg) continue;
    FqElement needq1 = c.F2->one() - a1;   // b^{q+1}
    FqElement needq2 = c.F2->one() - a2;   // b^{2q-1}
    if (needq1.is_zero() || needq2.is_zero()) continue;
    for (long long l = 1; l < n; l++) {
      FqElement b = c.zeta.pow(l);
      if (!(b.pow(q + 1) == needq1)) continue;
      if (!(b.pow(2 * q - 1) == needq2)) continue;
      c.k = k;
      c.l = l;
      c.d = std::gcd(k, l);
      c.a = a;
      c.b = b;
      c.Aprime = c.zeta.pow(((q + 1) * c.d) % n);
      c.Adouble = c.zeta.pow(((2 * q - 1) * c.d) % n);
      c.m_prime = minimal_polynomial(c.Aprime);
      c.m_double = minimal_polynomial(c.Adouble);
      return c;
    }
  }
  throw std::runtime_error("find_su3_constants: none found for q=" +
                           std::to_string(q));
}

MatrixFq sl2_u(const Sl2Constants& c) {
  MatrixFq m = MatrixFq::identity(c.F, 2);
  m.at(0, 1) = c.F->one();
  return m;
}

MatrixFq sl2_t(const Sl2Constants& c) {
  MatrixFq m(c.F, 2);
  m.at(0, 1) = c.F->one();
  m.at(1, 0) = -c.F->one();
  return m;
}

MatrixFq sl2_h(const Sl2Constants& c) {
  MatrixFq m(c.F, 2);
  m.at(0, 0) = c.zeta.inverse();
  m.at(1, 1) = c.zeta;
  return m;
}

Bruhat bruhat_sl2(const MatrixFq& g) {
  auto F = g.field();
  const FqElement& cc = g.at(1, 0);
  if (cc.is_zero()) throw std::runtime_error("bruhat_sl2: g is in the Borel");
  // g = [[a,b],[c,d]] = u(x) h0 t u(y) with h0 = diag(lambda^-1, lambda),
  // lambda = -c, x = a/c... derived from u(x)*h0*t*u(y).
  FqElement lambda = -cc;
  FqElement x = g.at(0, 0) * cc.inverse();
  FqElement y = g.at(1, 1) * cc.inverse();
  Bruhat b{MatrixFq::identity(F, 2), MatrixFq(F, 2),
           MatrixFq::identity(F, 2)};
  b.u1.at(0, 1) = x;
  b.h0.at(0, 0) = lambda.inverse();
  b.h0.at(1, 1) = lambda;
  b.u2.at(0, 1) = y;
  return b;
}

MatrixFq su3_u(const Su3Constants& c, const FqElement& alpha,
               const FqElement& beta) {
  MatrixFq m = MatrixFq::identity(c.F2, 3);
  m.at(0, 1) = alpha;
  m.at(0, 2) = beta;
  m.at(1, 2) = -alpha.frobenius_q();
  return m;
}

MatrixFq su3_t(const Su3Constants& c) {
  MatrixFq m(c.F2, 3);
  m.at(0, 2) = c.F2->one();
  m.at(1, 1) = -c.F2->one();
  m.at(2, 0) = c.F2->one();
  return m;
}

MatrixFq su3_h(const Su3Constants& c) {
  MatrixFq m(c.F2, 3);
  FqElement zbar = c.zeta.frobenius_q();
  m.at(0, 0) = zbar.inverse();
  m.at(1, 1) = zbar * c.zeta.inverse();
  m.at(2, 2) = c.zeta;
  return m;
}

bool su3_form_ok(const Su3Constants& c, const MatrixFq& g) {
  // conj(g)^T J g = J for J with 1 at (0,2),(2,0) and -1 at (1,1)
  MatrixFq J(c.F2, 3);
  J.at(0, 2) = c.F2->one();
  J.at(2, 0) = c.F2->one();
  J.at(1, 1) = -c.F2->one();
  MatrixFq lhs = g.frobenius_q().transpose() * J * g;
  return lhs == J;
}

MatrixFq su3_base_u(const Su3Constants& c) {
  FqElement alpha = c.F2->one();
  // smallest beta with beta + beta^q = -alpha*alpha^q = -1
  for (const auto& beta : c.F2->all_elements()) {
    if ((beta + beta.frobenius_q()) == -c.F2->one()) {
      return su3_u(c, alpha, beta);
    }
  }
  throw std::runtime_error("su3_base_u: no beta found");
}

Bruhat bruhat_su3(const MatrixFq& g) {
  auto F = g.field();
  const FqElement& lam = g.at(2, 0);
  if (lam.is_zero()) throw std::runtime_error("bruhat_su3: g is in the Borel");
  // rows of h0*t*u2: (0,0,lbar^-1), (0,-lbar/l, lbar/l*a2bar), (l, l*a2, l*b2)
  FqElement alpha2 = g.at(2, 1) * lam.inverse();
  FqElement beta2 = g.at(2, 2) * lam.inverse();
  FqElement lbar = lam.frobenius_q();
  FqElement alpha1bar = -(g.at(1, 0) * lam.inverse());
  FqElement alpha1 = alpha1bar.frobenius_q();
  FqElement beta1 = g.at(0, 0) * lam.inverse();
  MatrixFq h0(F, 3);
  h0.at(0, 0) = lbar.inverse();
  h0.at(1, 1) = lbar * lam.inverse();
  h0.at(2, 2) = lam;
  MatrixFq u1 = MatrixFq::identity(F, 3);
  u1.at(0, 1) = alpha1;
  u1.at(0, 2) = beta1;
  u1.at(1, 2) = -alpha1bar;
  MatrixFq u2 = MatrixFq::identity(F, 3);
  u2.at(0, 1) = alpha2;
  u2.at(0, 2) = beta2;
  u2.at(1, 2) = -alpha2.frobenius_q();
  MatrixFq t(F, 3);
  t.at(0, 2) = F->one();
  t.at(1, 1) = -F->one();
  t.at(2, 0) = F->one();
  if (!(u1 * h0 * t * u2 == g))
    throw std::runtime_error("bruhat_su3: decomposition failed");
  return Bruhat{u1, h0, u2};
}

MatrixFq find_singer(long long q) {
  Sl2Constants c = find_sl2_constants(q);
  auto F = c.F;
  MatrixFq cmat(F, 3);
  cmat.at(0, 1) = F->one();
  cmat.at(1, 2) = F->one();
  cmat.at(2, 0) = F->one();
  // iterate SL(2,q) elements in deterministic order, embedded upper-left
  auto elems = F->all_elements();
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& cc : elems)
        for (const auto& d : elems) {
          if (!((a * d - b * cc).is_one())) continue;
          MatrixFq m = MatrixFq::identity(F, 3);
          m.at(0, 0) = a;
          m.at(0, 1) = b;
          m.at(1, 0) = cc;
          m.at(1, 1) = d;
          bool ok = true;
          // order exactly q+1
          MatrixFq pw = m;
          long long ord = 1;
          while (!pw.is_identity() && ord <= q + 1) {
            pw = pw * m;
            ord++;
          }
          if (ord != q + 1) continue;
          MatrixFq mc = m.conj(cmat);
          // no common invariant line: v with m v || v and mc v || v
          // collect projective fixed directions cheaply by eigenvector scan
          for (const auto& x0 : elems) {
            if (!ok) break;
            for (const auto& x1 : elems) {
              if (!ok) break;
              for (const auto& x2 : elems) {
                if (x0.is_zero() && x1.is_zero() && x2.is_zero()) continue;
                // normalize: first nonzero coordinate = 1
                if (!x0.is_zero() && !x0.is_one()) continue;
                if (x0.is_zero() && !x1.is_zero() && !x1.is_one()) continue;
                if (x0.is_zero() && x1.is_zero() && !x2.is_one()) continue;
                FqElement v[3] = {x0, x1, x2};
                auto prop = [&](const MatrixFq& M) {
                  FqElement w[3];
                  for (int i = 0; i < 3; i++) {
                    w[i] = F->zero();
                    for (int j = 0; j < 3; j++) w[i] = w[i] + M.at(i, j) * v[j];
                  }
                  // w || v ?
                  for (int i = 0; i < 3; i++)
                    for (int j = 0; j < 3; j++)
                      if (!((w[i] * v[j]) == (w[j] * v[i]))) return false;
                  return true;
                };
                if (prop(m) && prop(mc)) ok = false;  // common eigenvector
                // common invariant plane = common eigen-row: check transpose
                if (ok) {
                  auto propT = [&](const MatrixFq& M) {
                    FqElement w[3];
                    for (int j = 0; j < 3; j++) {
                      w[j] = F->zero();
                      for (int i = 0; i < 3; i++)
                        w[j] = w[j] + v[i] * M.at(i, j);
                    }
                    for (int i = 0; i < 3; i++)
                      for (int j = 0; j < 3; j++)
                        if (!((w[i] * v[j]) == (w[j] * v[i]))) return false;
                    return true;
                  };
                  if (propT(m) && propT(mc)) ok = false;
                }
              }
            }
          }
          if (ok) return m;
        }
  throw std::runtime_error("find_singer: no element found");
}

Word express_sl2(const Sl2Constants& c, const MatrixFq& g, const Symbol& u,
                 const Symbol& t, const Symbol& h) {
  auto F = c.F;
  auto upoly = [&](const FqElement& lambda) -> Word {
    if (lambda.is_zero()) return Word();
    return poly_word(u, h, c.gamma_poly(lambda), c.p, c.d);
  };
  auto hpow = [&](const FqElement& lambda) -> Word {
    // h^e with diag(zeta^-e, zeta^e); lambda = zeta^e on the (1,1) spot
    long long e = c.F->dlog(lambda);
    return Word::gen(h, e);
  };
  if (g.at(1, 0).is_zero()) {
    // Borel: g = h^e * u(x) with zeta^-e = g00
    FqElement lambda = g.at(0, 0).inverse();  // zeta^e
    FqElement x = g.at(0, 1) * g.at(0, 0).inverse();
    Word w = concat(hpow(lambda), upoly(x));
    return w;
  }
  Bruhat b = bruhat_sl2(g);
  Word w = upoly(b.u1.at(0, 1));
  w = concat(w, hpow(b.h0.at(1, 1)));
  w = concat(w, Word::gen(t));
  w = concat(w, upoly(b.u2.at(0, 1)));
  return w;
}

Word su3_w_word(const Su3Constants& c, const Symbol& u, const Symbol& h) {
  // w := (u^{h^k} u^{h^l})^-1 u
  Word uk = conjugate(Word::gen(u), Word::gen(h, c.k));
  Word ul = conjugate(Word::gen(u), Word::gen(h, c.l));
  return concat(invert(concat(uk, ul)), Word::gen(u));
}

Word express_unipotent(const Su3Constants& c, const MatrixFq& target,
                       const Symbol& u, const Symbol& h) {
  auto F = c.F2;
  // validate unitriangular shape
  for (int i = 0; i < 3; i++) {
    if (!target.at(i, i).is_one())
      throw std::runtime_error("express_unipotent: not unitriangular");
    for (int j = 0; j < i; j++)
      if (!target.at(i, j).is_zero())
        throw std::runtime_error("express_unipotent: not unitriangular");
  }
  MatrixFq u0 = su3_base_u(c);
  FqElement alpha0 = u0.at(0, 1);
  FqElement alpha = target.at(0, 1);
  long long p = c.p;
  long long dim = 2 * c.e;  // F_{q^2} over F_p

  // Solve alpha = sum c_j alpha0 * zeta^{(2q-1) j} over F_p, greedily over
  // consecutive h-powers j = 0, 1, 2, ...
  FqElement zdbl = c.zeta.pow(2 * c.q - 1);
  Word word;
  {
    // gather pivot js until alpha is in the span (it always is: the span
    // reaches all of F_{q^2} within 2e consecutive powers at most 4e tries)
    std::vector<std::vector<long long>> rows;
    std::vector<long long> pivot_j;
    for (long long j = 0; j < 8 * dim && (long long)pivot_j.size() < dim;
         j++) {
      FqElement v = alpha0 * zdbl.pow(j);
      rows.push_back(v.coeffs());
      pivot_j.push_back(j);
      // check rank increase by re-eliminating from scratch (small sizes)
      // build the matrix
      long long rank = 0;
      {
        auto m = rows;
        for (size_t col = 0; col < (size_t)dim && rank < (long long)m.size();
             col++) {
          long long piv = -1;
          for (long long r = rank; r < (long long)m.size(); r++)
            if (m[r][col] % p != 0) {
              piv = r;
              break;
            }
          if (piv < 0) continue;
          std::swap(m[rank], m[piv]);
          long long il = mod_inverse(m[rank][col], p);
          for (auto& x : m[rank]) x = (x * il) % p;
          for (long long r = 0; r < (long long)m.size(); r++) {
            if (r == rank) continue;
            long long cc = m[r][col] % p;
            if (cc == 0) continue;
            for (size_t jj = 0; jj < m[r].size(); jj++)
              m[r][jj] = ((m[r][jj] - cc * m[rank][jj]) % p + p) % p;
          }
          rank++;
        }
      }
      if (rank < (long long)rows.size()) {
        rows.pop_back();
        pivot_j.pop_back();
      }
    }
    // solve for coefficients via Gaussian elimination with augmented target
    long long nvar = (long long)rows.size();
    std::vector<std::vector<long long>> m(dim,
                                          std::vector<long long>(nvar + 1, 0));
    for (long long r = 0; r < dim; r++) {
      for (long long cidx = 0; cidx < nvar; cidx++) m[r][cidx] = rows[cidx][r];
      m[r][nvar] = alpha.coeffs()[r];
    }
    std::vector<long long> where(nvar, -1);
    long long rank = 0;
    for (long long col = 0; col < nvar && rank < dim; col++) {
      long long piv = -1;
      for (long long r = rank; r < dim; r++)
        if (m[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[rank], m[piv]);
      long long il = mod_inverse(m[rank][col], p);
      for (auto& x : m[rank]) x = ((x * il) % p + p) % p;
      for (long long r = 0; r < dim; r++) {
        if (r == rank || m[r][col] == 0) continue;
        long long cc = m[r][col];
        for (long long jj = 0; jj <= nvar; jj++)
          m[r][jj] = ((m[r][jj] - cc * m[rank][jj]) % p + p) % p;
      }
      where[col] = rank;
      rank++;
    }
    for (long long r = rank; r < dim; r++)
      if (m[r][nvar] != 0)
        throw std::runtime_error("express_unipotent: alpha not reachable");
    std::vector<long long> sol(nvar, 0);
    for (long long cidx = 0; cidx < nvar; cidx++)
      if (where[cidx] >= 0) sol[cidx] = m[where[cidx]][nvar];
    // word: product over pivots of (u^{sol_j})^{h^j}
    for (long long idx = 0; idx < nvar; idx++) {
      if (sol[idx] == 0) continue;
      Word f = conjugate(power(Word::gen(u), sol[idx]),
                         Word::gen(h, pivot_j[idx]));
      word = concat(word, f);
    }
  }
  // central correction with w-conjugates
  MatrixFq hmat = su3_h(c);
  Assignment phi;
  phi.set(u, ConcreteElement(u0));
  phi.set(h, ConcreteElement(hmat));
  MatrixFq got = evaluate(word, phi).matrix();
  MatrixFq rem = got.inverse() * target;
  if (!rem.at(0, 1).is_zero())
    throw std::runtime_error("express_unipotent: alpha stage failed");
  FqElement gamma = rem.at(0, 2);
  if (!gamma.is_zero()) {
    Word wword = su3_w_word(c, u, h);
    MatrixFq w0 = evaluate(wword, phi).matrix();
    FqElement gamma0 = w0.at(0, 2);
    // gamma / gamma0 lies in F_p[Aprime] = F_q
    std::vector<long long> g = coeff_poly(c.Aprime, gamma * gamma0.inverse());
    word = concat(word, poly_word_base(wword, Word::gen(h), g, c.p, c.d));
  }
  // verify
  if (!(evaluate(word, phi).matrix() == target))
    throw std::runtime_error("express_unipotent: verification failed");
  return word;
}

}  // namespace pres
