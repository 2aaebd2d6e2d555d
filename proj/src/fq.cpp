#include "pres/fq.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pres {

namespace {

long long mod(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

long long inv_mod(long long a, long long p) {
  long long t = 0, newt = 1, r = p, newr = mod(a, p);
  while (newr != 0) {
    long long qt = r / newr;
    std::swap(t, newt);
    newt -= qt * t;
    std::swap(r, newr);
    newr -= qt * r;
  }
  if (r != 1) throw std::runtime_error("inv_mod: not invertible");
  return mod(t, p);
}

using Poly = std::vector<long long>;  // ascending

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++)
      c[i + j] = mod(c[i + j] + a[i] * b[j], p);
  return trim(c);
}

// a mod f, f monic
Poly poly_rem(Poly a, const Poly& f, long long p) {
  a = trim(a);
  long long df = (long long)f.size() - 1;
  while ((long long)a.size() - 1 >= df && !a.empty()) {
    long long d = (long long)a.size() - 1;
    long long c = a.back();
    for (long long i = 0; i <= df; i++)
      a[d - df + i] = mod(a[d - df + i] - c * f[i], p);
    a = trim(a);
  }
  return a;
}

Poly poly_powmod(Poly base, long long n, const Poly& f, long long p) {
  Poly r = {1};
  base = poly_rem(base, f, p);
  while (n > 0) {
    if (n & 1) r = poly_rem(poly_mul_mod(r, base, p), f, p);
    base = poly_rem(poly_mul_mod(base, base, p), f, p);
    n >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, long long p) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    // make b monic
    long long lc = b.back();
    if (lc != 1) {
      long long il = inv_mod(lc, p);
      for (auto& c : b) c = mod(c * il, p);
    }
    Poly r = poly_rem(a, b, p);
    a = b;
    b = r;
  }
  return a;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> f;
  for (long long d = 2; d * d <= n; d++)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

bool poly_irreducible(const Poly& f, long long p) {
  long long e = (long long)f.size() - 1;
  if (e <= 0) return false;
  // x^{p^e} == x (mod f) and gcd(x^{p^{e/l}} - x, f) = 1 for prime l | e.
  Poly x = {0, 1};
  Poly xq = x;
  for (long long i = 0; i < e; i++) xq = poly_powmod(xq, p, f, p);
  Poly diff = xq;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = mod(diff[1] - 1, p);
  if (!trim(diff).empty()) return false;
  for (long long l : prime_factors(e)) {
    Poly xi = x;
    for (long long i = 0; i < e / l; i++) xi = poly_powmod(xi, p, f, p);
    Poly d = xi;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = mod(d[1] - 1, p);
    d = trim(d);
    if (d.empty()) return false;
    Poly g = poly_gcd(f, d, p);
    if ((long long)g.size() - 1 >= 1) return false;
  }
  return true;
}

std::vector<long long> smallest_irreducible(long long p, long long e) {
  if (e == 1) return {0, 1};  // x (unused; degree-1 fields need no modulus)
  // iterate constant-first lexicographic over monic degree-e polynomials
  std::vector<long long> c(e, 0);
  while (true) {
    Poly f = c;
    f.push_back(1);
    if (poly_irreducible(f, p)) return f;
    // increment
    size_t i = 0;
    while (i < c.size()) {
      c[i]++;
      if (c[i] < p) break;
      c[i] = 0;
      i++;
    }
    if (i == c.size()) throw std::runtime_error("no irreducible found");
  }
}

FqElement::FqElement(FieldPtr f, std::vector<long long> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
  c_.resize(f_->e, 0);
  for (auto& x : c_) x = mod(x, f_->p);
}

bool FqElement::is_zero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

bool FqElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); i++)
    if (c_[i] != 0) return false;
  return true;
}

bool FqElement::operator==(const FqElement& o) const { return c_ == o.c_; }

FqElement FqElement::operator+(const FqElement& o) const {
  std::vector<long long> r(c_.size());
  for (size_t i = 0; i < c_.size(); i++) r[i] = mod(c_[i] + o.c_[i], f_->p);
  return FqElement(f_, r);
}

FqElement FqElement::operator-(const FqElement& o) const {
  std::vector<long long> r(c_.size());
  for (size_t i = 0; i < c_.size(); i++) r[i] = mod(c_[i] - o.c_[i], f_->p);
  return FqElement(f_, r);
}

FqElement FqElement::operator-() const {
  std::vector<long long> r(c_.size());
  for (size_t i = 0; i < c_.size(); i++) r[i] = mod(-c_[i], f_->p);
  return FqElement(f_, r);
}

FqElement FqElement::operator*(const FqElement& o) const {
  Poly prod = poly_mul_mod(c_, o.c_, f_->p);
  if (f_->e > 1) prod = poly_rem(prod, f_->modulus, f_->p);
  prod.resize(f_->e, 0);
  return FqElement(f_, prod);
}

FqElement FqElement::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  FqElement r = f_->one();
  FqElement b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

FqElement FqElement::inverse() const {
  if (is_zero()) throw std::runtime_error("FqElement: inverse of zero");
  return pow(f_->q - 2);
}

FqElement FqElement::frobenius_q() const {
  if (f_->unitary_q == 0)
    throw std::runtime_error("frobenius_q: not a quadratic extension field");
  return pow(f_->unitary_q);
}

long long FqElement::order() const {
  if (is_zero()) throw std::runtime_error("order of zero");
  long long n = f_->q - 1;
  long long ord = n;
  for (long long d : prime_factors(n))
    while (ord % d == 0 && pow(ord / d).is_one()) ord /= d;
  return ord;
}

std::string FqElement::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); i++) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "]";
  return os.str();
}

FieldPtr FqField::make(long long p, long long e) {
  return make_with_modulus(p, e, e == 1 ? Poly{0, 1} : smallest_irreducible(p, e));
}

FieldPtr FqField::make_with_modulus(long long p, long long e, Poly m) {
  auto f = std::make_shared<FqField>();
  f->p = p;
  f->e = e;
  f->q = 1;
  for (long long i = 0; i < e; i++) f->q *= p;
  f->modulus = std::move(m);
  if (e > 1 && !poly_irreducible(f->modulus, p))
    throw std::runtime_error("FqField: modulus not irreducible");
  f->init_zeta();
  return f;
}

void FqField::init_zeta() {
  // smallest generator of the multiplicative group in coefficient order
  for (const auto& a : all_elements()) {
    if (a.is_zero()) continue;
    if (a.order() == q - 1) {
      zeta_ = a;
      return;
    }
  }
  throw std::runtime_error("FqField: no generator found");
}

FqElement FqField::zero() const {
  return FqElement(shared_from_this(), std::vector<long long>(e, 0));
}

FqElement FqField::one() const { return from_int(1); }

FqElement FqField::from_int(long long n) const {
  std::vector<long long> c(e, 0);
  c[0] = mod(n, p);
  return FqElement(shared_from_this(), c);
}

FqElement FqField::x() const {
  std::vector<long long> c(e, 0);
  if (e == 1)
    c[0] = 0;
  else
    c[1] = 1;
  return FqElement(shared_from_this(), c);
}

FqElement FqField::element(std::vector<long long> coeffs) const {
  return FqElement(shared_from_this(), std::move(coeffs));
}

long long FqField::dlog(const FqElement& a) const {
  FqElement cur = one();
  for (long long i = 0; i < q - 1; i++) {
    if (cur == a) return i;
    cur = cur * zeta_;
  }
  throw std::runtime_error("dlog: not in the multiplicative group");
}

std::vector<FqElement> FqField::all_elements() const {
  std::vector<FqElement> out;
  out.reserve(q);
  std::vector<long long> c(e, 0);
  auto self = shared_from_this();
  while (true) {
    out.push_back(FqElement(self, c));
    size_t i = 0;
    while (i < c.size()) {
      c[i]++;
      if (c[i] < p) break;
      c[i] = 0;
      i++;
    }
    if (i == c.size()) break;
  }
  return out;
}

std::vector<long long> minimal_polynomial(const FqElement& a) {
  const auto& f = a.field();
  long long p = f->p, e = f->e;
  // Find the least d with 1, a, ..., a^d linearly dependent over F_p;
  // solve for the monic dependency.
  std::vector<std::vector<long long>> powers;  // coefficient vectors
  FqElement cur = f->one();
  for (long long d = 0; d <= e; d++) {
    powers.push_back(cur.coeffs());
    // Gaussian elimination on powers[0..d] as rows
    std::vector<std::vector<long long>> m;
    for (long long i = 0; i <= d; i++) {
      // row: e coords then 1-hot tag of which power combination (augmented)
      std::vector<long long> row = powers[i];
      row.resize(e + d + 1, 0);
      row[e + i] = 1;
      m.push_back(row);
    }
    // eliminate on the first e columns
    long long rank = 0;
    for (long long col = 0; col < e && rank < (long long)m.size(); col++) {
      long long piv = -1;
      for (long long r = rank; r < (long long)m.size(); r++)
        if (m[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[rank], m[piv]);
      long long il = inv_mod(m[rank][col], p);
      for (auto& x : m[rank]) x = mod(x * il, p);
      for (long long r = 0; r < (long long)m.size(); r++) {
        if (r == rank || m[r][col] == 0) continue;
        long long c = m[r][col];
        for (size_t j = 0; j < m[r].size(); j++)
          m[r][j] = mod(m[r][j] - c * m[rank][j], p);
      }
      rank++;
    }
    if (rank <= d) {
      // some row below rank has zero coords: read off the combination
      for (long long r = rank; r < (long long)m.size(); r++) {
        bool zero = true;
        for (long long col = 0; col < e; col++)
          if (m[r][col] != 0) zero = false;
        if (!zero) continue;
        std::vector<long long> dep(d + 1, 0);
        for (long long i = 0; i <= d; i++) dep[i] = m[r][e + i];
        dep = trim(dep);
        long long lc = dep.back();
        if (lc != 1) {
          long long il = inv_mod(lc, p);
          for (auto& x : dep) x = mod(x * il, p);
        }
        return dep;
      }
    }
    cur = cur * a;
  }
  throw std::runtime_error("minimal_polynomial: not found");
}

long long subfield_degree(const FqElement& a) {
  return (long long)minimal_polynomial(a).size() - 1;
}

std::vector<long long> coeff_poly(const FqElement& base,
                                  const FqElement& target) {
  const auto& f = base.field();
  long long p = f->p, e = f->e;
  long long deg = subfield_degree(base);
  // Solve sum c_i base^i = target over F_p, deg terms.
  std::vector<std::vector<long long>> cols;
  FqElement cur = f->one();
  for (long long i = 0; i < deg; i++) {
    cols.push_back(cur.coeffs());
    cur = cur * base;
  }
  // Gaussian elimination: e equations, deg unknowns, augmented with target.
  std::vector<std::vector<long long>> m(e, std::vector<long long>(deg + 1, 0));
  for (long long r = 0; r < e; r++) {
    for (long long c = 0; c < deg; c++) m[r][c] = cols[c][r];
    m[r][deg] = target.coeffs()[r];
  }
  std::vector<long long> where(deg, -1);
  long long rank = 0;
  for (long long col = 0; col < deg && rank < e; col++) {
    long long piv = -1;
    for (long long r = rank; r < e; r++)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    long long il = inv_mod(m[rank][col], p);
    for (auto& x : m[rank]) x = mod(x * il, p);
    for (long long r = 0; r < e; r++) {
      if (r == rank || m[r][col] == 0) continue;
      long long c = m[r][col];
      for (long long j = 0; j <= deg; j++)
        m[r][j] = mod(m[r][j] - c * m[rank][j], p);
    }
    where[col] = rank;
    rank++;
  }
  for (long long r = rank; r < e; r++)
    if (m[r][deg] != 0)
      throw std::runtime_error("coeff_poly: target outside F_p[base]");
  std::vector<long long> sol(deg, 0);
  for (long long c = 0; c < deg; c++)
    if (where[c] >= 0) sol[c] = m[where[c]][deg];
  // verify
  FqElement acc = f->zero();
  FqElement pw = f->one();
  for (long long i = 0; i < deg; i++) {
    acc = acc + pw * f->from_int(sol[i]);
    pw = pw * base;
  }
  if (!(acc == target)) throw std::runtime_error("coeff_poly: solve failed");
  return sol;
}

}  // namespace pres
