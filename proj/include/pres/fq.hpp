#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pres {

class FqField;
using FieldPtr = std::shared_ptr<const FqField>;

// Element of F_{p^e}: coefficient vector of length e over F_p, ascending
// powers of the field generator x (the class of x modulo the modulus).
class FqElement {
 public:
  FqElement() = default;
  FqElement(FieldPtr f, std::vector<long long> coeffs);

  const FieldPtr& field() const { return f_; }
  const std::vector<long long>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  FqElement operator+(const FqElement& o) const;
  FqElement operator-(const FqElement& o) const;
  FqElement operator*(const FqElement& o) const;
  FqElement operator-() const;
  FqElement inverse() const;
  FqElement pow(long long n) const;
  FqElement frobenius_q() const;  // x -> x^q over the base subfield F_q of F_{q^2}
  bool operator==(const FqElement& o) const;
  bool operator!=(const FqElement& o) const { return !(*this == o); }
  // Deterministic total order: lexicographic on the coefficient vector.
  bool operator<(const FqElement& o) const { return c_ < o.c_; }

  // Multiplicative order (0 is an error).
  long long order() const;
  std::string str() const;

 private:
  FieldPtr f_;
  std::vector<long long> c_;
};

// F_{p^e} with an explicit monic irreducible modulus and a fixed generator
// zeta of the multiplicative group.
class FqField : public std::enable_shared_from_this<FqField> {
 public:
  long long p = 0;
  long long e = 1;
  long long q = 0;                   // p^e
  std::vector<long long> modulus;    // length e+1, monic, ascending
  // For F_{q^2} built over F_q (unitary case) this records q; otherwise 0.
  long long unitary_q = 0;

  static FieldPtr make(long long p, long long e);
  // Explicit modulus (ascending coefficients, monic of degree e).
  static FieldPtr make_with_modulus(long long p, long long e,
                                    std::vector<long long> modulus);

  FqElement zero() const;
  FqElement one() const;
  FqElement from_int(long long n) const;
  FqElement x() const;  // the class of x
  FqElement element(std::vector<long long> coeffs) const;
  const FqElement& zeta() const { return zeta_; }
  // Discrete log base zeta; brute force, intended for small fields.
  long long dlog(const FqElement& a) const;

  // All field elements in deterministic (lexicographic) order.
  std::vector<FqElement> all_elements() const;

 private:
  FqElement zeta_;
  void init_zeta();
  friend class FqElement;
};

// Polynomial utilities over F_p (ascending coefficient vectors).
bool poly_irreducible(const std::vector<long long>& f, long long p);
std::vector<long long> smallest_irreducible(long long p, long long e);

// Minimal polynomial of a over F_p (monic, ascending).
std::vector<long long> minimal_polynomial(const FqElement& a);
// Degree of F_p[a] over F_p.
long long subfield_degree(const FqElement& a);
// Unique polynomial g over F_p with deg g < deg(minpoly(base)) and
// g(base) = target.  Throws if target is outside F_p[base].
std::vector<long long> coeff_poly(const FqElement& base,
                                  const FqElement& target);

}  // namespace pres
