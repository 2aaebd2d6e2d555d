#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>

#include "pres/matrix.hpp"
#include "pres/perm.hpp"
#include "pres/word.hpp"

namespace pres {

// Tagged union of the concrete realizations: permutation, signed
// permutation, matrix over F_q, and direct-product pair.
class ConcreteElement {
 public:
  ConcreteElement() : v_(Permutation()) {}
  ConcreteElement(Permutation p) : v_(std::move(p)) {}
  ConcreteElement(SignedPermutation p) : v_(std::move(p)) {}
  ConcreteElement(MatrixFq m) : v_(std::move(m)) {}
  static ConcreteElement pair(ConcreteElement a, ConcreteElement b);

  bool is_perm() const { return std::holds_alternative<Permutation>(v_); }
  bool is_signed() const {
    return std::holds_alternative<SignedPermutation>(v_);
  }
  bool is_matrix() const { return std::holds_alternative<MatrixFq>(v_); }
  bool is_pair() const;

  const Permutation& perm() const { return std::get<Permutation>(v_); }
  const SignedPermutation& signed_perm() const {
    return std::get<SignedPermutation>(v_);
  }
  const MatrixFq& matrix() const { return std::get<MatrixFq>(v_); }
  const ConcreteElement& first() const;
  const ConcreteElement& second() const;

  ConcreteElement operator*(const ConcreteElement& o) const;
  ConcreteElement inverse() const;
  ConcreteElement pow(long long n) const;
  ConcreteElement conj(const ConcreteElement& g) const;
  bool is_identity() const;
  bool operator==(const ConcreteElement& o) const;
  long long order(long long bound = 1 << 22) const;
  std::string key() const;
  std::string str() const;

 private:
  struct Pair {
    std::shared_ptr<ConcreteElement> a, b;
  };
  std::variant<Permutation, SignedPermutation, MatrixFq, Pair> v_;
};

// Epimorphism witness: concrete images of the generator symbols.
struct Assignment {
  std::map<std::string, ConcreteElement> images;

  void set(const Symbol& s, ConcreteElement e) {
    images[s.name] = std::move(e);
  }
  const ConcreteElement& get(const Symbol& s) const;
  bool covers(const Symbol& s) const { return images.count(s.name) > 0; }
};

ConcreteElement evaluate(const Word& w, const Assignment& phi);

}  // namespace pres
