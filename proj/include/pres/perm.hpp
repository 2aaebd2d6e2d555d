#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pres {

// Permutation of an arbitrary finite set of integers (points may be
// non-positive).  Points outside the stored domain are fixed.  Products
// act left-to-right: x^(a*b) = (x^a)^b.
class Permutation {
 public:
  Permutation() = default;
  // mapping[i] = image of domain[i]; domain need not be sorted on input.
  static Permutation from_map(const std::map<int, int>& images);
  static Permutation cycle(const std::vector<int>& pts);
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles);
  static Permutation identity() { return Permutation(); }

  int apply(int x) const;
  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  Permutation pow(long long n) const;
  // conjugate by g: g^-1 * this * g  (support transported through g)
  Permutation conj(const Permutation& g) const;

  bool is_identity() const { return dom_.empty(); }
  bool operator==(const Permutation& o) const;
  int sign() const;  // +1 or -1
  long long order() const;
  std::vector<int> support() const { return dom_; }
  std::vector<std::vector<int>> cycles() const;
  std::string str() const;
  std::string key() const;

 private:
  // sorted support points and their images; fixed points are dropped
  std::vector<int> dom_;
  std::vector<int> img_;
  void strip_fixed();
  friend struct PermHash;
};

// Monomial +-1 matrix: basis vector e_i -> sign_i * e_{perm(i)}, on {1..n}.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(int n, Permutation perm, std::vector<int> signs);
  static SignedPermutation identity(int n);

  int n() const { return n_; }
  const Permutation& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  SignedPermutation operator*(const SignedPermutation& o) const;
  SignedPermutation inverse() const;
  bool is_identity() const;
  bool operator==(const SignedPermutation& o) const;
  int determinant() const;  // sign(perm) * product of signs
  std::string key() const;

 private:
  int n_ = 0;
  Permutation perm_;
  std::vector<int> signs_;  // length n, entries +-1
};

}  // namespace pres
