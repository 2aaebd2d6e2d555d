#include "pres/element.hpp"

#include <stdexcept>

namespace pres {

ConcreteElement ConcreteElement::pair(ConcreteElement a, ConcreteElement b) {
  ConcreteElement e;
  e.v_ = Pair{std::make_shared<ConcreteElement>(std::move(a)),
              std::make_shared<ConcreteElement>(std::move(b))};
  return e;
}

bool ConcreteElement::is_pair() const {
  return std::holds_alternative<Pair>(v_);
}

const ConcreteElement& ConcreteElement::first() const {
  return *std::get<Pair>(v_).a;
}

const ConcreteElement& ConcreteElement::second() const {
  return *std::get<Pair>(v_).b;
}

ConcreteElement ConcreteElement::operator*(const ConcreteElement& o) const {
  if (v_.index() != o.v_.index())
    throw std::runtime_error("ConcreteElement: tag mismatch in product");
  if (is_perm()) return ConcreteElement(perm() * o.perm());
  if (is_signed()) return ConcreteElement(signed_perm() * o.signed_perm());
  if (is_matrix()) return ConcreteElement(matrix() * o.matrix());
  return pair(first() * o.first(), second() * o.second());
}

ConcreteElement ConcreteElement::inverse() const {
  if (is_perm()) return ConcreteElement(perm().inverse());
  if (is_signed()) return ConcreteElement(signed_perm().inverse());
  if (is_matrix()) return ConcreteElement(matrix().inverse());
  return pair(first().inverse(), second().inverse());
}

ConcreteElement ConcreteElement::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  if (is_perm()) return ConcreteElement(perm().pow(n));
  if (is_matrix()) return ConcreteElement(matrix().pow(n));
  ConcreteElement r = *this;
  // identity of the right shape
  r = r * r.inverse();
  ConcreteElement b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

ConcreteElement ConcreteElement::conj(const ConcreteElement& g) const {
  return g.inverse() * (*this) * g;
}

bool ConcreteElement::is_identity() const {
  if (is_perm()) return perm().is_identity();
  if (is_signed()) return signed_perm().is_identity();
  if (is_matrix()) return matrix().is_identity();
  return first().is_identity() && second().is_identity();
}

bool ConcreteElement::operator==(const ConcreteElement& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (is_perm()) return perm() == o.perm();
  if (is_signed()) return signed_perm() == o.signed_perm();
  if (is_matrix()) return matrix() == o.matrix();
  return first() == o.first() && second() == o.second();
}

long long ConcreteElement::order(long long bound) const {
  if (is_perm()) return perm().order();
  ConcreteElement m = *this;
  for (long long k = 1; k <= bound; k++) {
    if (m.is_identity()) return k;
    m = m * (*this);
  }
  throw std::runtime_error("ConcreteElement: order exceeds bound");
}

std::string ConcreteElement::key() const {
  if (is_perm()) return "P" + perm().key();
  if (is_signed()) return "S" + signed_perm().key();
  if (is_matrix()) return "M" + matrix().key();
  return "(" + first().key() + "," + second().key() + ")";
}

std::string ConcreteElement::str() const {
  if (is_perm()) return perm().str();
  if (is_signed()) return signed_perm().key();
  if (is_matrix()) return matrix().str();
  return "(" + first().str() + ", " + second().str() + ")";
}

const ConcreteElement& Assignment::get(const Symbol& s) const {
  auto it = images.find(s.name);
  if (it == images.end())
    throw std::runtime_error("Assignment: no image for " + s.name);
  return it->second;
}

ConcreteElement evaluate(const Word& w, const Assignment& phi) {
  if (phi.images.empty())
    throw std::runtime_error("evaluate: empty assignment");
  ConcreteElement acc;
  bool have = false;
  for (const auto& s : w.syllables()) {
    ConcreteElement x = phi.get(s.sym).pow(s.exp);
    acc = have ? acc * x : x;
    have = true;
  }
  if (!have) {
    // identity in the target: image * image^-1 of any generator
    const ConcreteElement& any = phi.images.begin()->second;
    return any * any.inverse();
  }
  return acc;
}

}  // namespace pres
