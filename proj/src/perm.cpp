#include "pres/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pres {

void Permutation::strip_fixed() {
  std::vector<int> d, m;
  for (size_t i = 0; i < dom_.size(); i++)
    if (dom_[i] != img_[i]) {
      d.push_back(dom_[i]);
      m.push_back(img_[i]);
    }
  dom_ = std::move(d);
  img_ = std::move(m);
}

Permutation Permutation::from_map(const std::map<int, int>& images) {
  Permutation p;
  std::set<int> seen;
  for (auto [x, y] : images) {
    p.dom_.push_back(x);
    p.img_.push_back(y);
    if (!seen.insert(y).second)
      throw std::runtime_error("Permutation: not a bijection");
  }
  for (auto [x, y] : images)
    if (!images.count(y))
      throw std::runtime_error("Permutation: image outside domain");
  p.strip_fixed();
  return p;
}

Permutation Permutation::cycle(const std::vector<int>& pts) {
  std::map<int, int> m;
  if (pts.size() < 2) return Permutation();
  for (size_t i = 0; i < pts.size(); i++)
    m[pts[i]] = pts[(i + 1) % pts.size()];
  return from_map(m);
}

Permutation Permutation::from_cycles(
    const std::vector<std::vector<int>>& cycles) {
  Permutation p;
  for (const auto& c : cycles) p = p * cycle(c);
  return p;
}

int Permutation::apply(int x) const {
  auto it = std::lower_bound(dom_.begin(), dom_.end(), x);
  if (it == dom_.end() || *it != x) return x;
  return img_[it - dom_.begin()];
}

Permutation Permutation::operator*(const Permutation& o) const {
  std::map<int, int> m;
  std::set<int> pts(dom_.begin(), dom_.end());
  pts.insert(o.dom_.begin(), o.dom_.end());
  for (int x : pts) m[x] = o.apply(apply(x));
  return from_map(m);
}

Permutation Permutation::inverse() const {
  std::map<int, int> m;
  for (size_t i = 0; i < dom_.size(); i++) m[img_[i]] = dom_[i];
  return from_map(m);
}

Permutation Permutation::pow(long long n) const {
  Permutation base = n < 0 ? inverse() : *this;
  long long m = n < 0 ? -n : n;
  Permutation r;
  while (m > 0) {
    if (m & 1) r = r * base;
    base = base * base;
    m >>= 1;
  }
  return r;
}

Permutation Permutation::conj(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

bool Permutation::operator==(const Permutation& o) const {
  return dom_ == o.dom_ && img_ == o.img_;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (int x : dom_) {
    if (seen.count(x)) continue;
    std::vector<int> c;
    int y = x;
    do {
      c.push_back(y);
      seen.insert(y);
      y = apply(y);
    } while (y != x);
    if (c.size() > 1) out.push_back(c);
  }
  return out;
}

int Permutation::sign() const {
  int s = 1;
  for (const auto& c : cycles())
    if (c.size() % 2 == 0) s = -s;
  return s;
}

long long Permutation::order() const {
  long long o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, (long long)c.size());
  return o;
}

std::string Permutation::str() const {
  if (is_identity()) return "()";
  std::ostringstream os;
  for (const auto& c : cycles()) {
    os << "(";
    for (size_t i = 0; i < c.size(); i++) {
      if (i) os << ",";
      os << c[i];
    }
    os << ")";
  }
  return os.str();
}

std::string Permutation::key() const {
  std::ostringstream os;
  for (size_t i = 0; i < dom_.size(); i++)
    os << dom_[i] << ">" << img_[i] << ";";
  return os.str();
}

SignedPermutation::SignedPermutation(int n, Permutation perm,
                                     std::vector<int> signs)
    : n_(n), perm_(std::move(perm)), signs_(std::move(signs)) {
  if ((int)signs_.size() != n)
    throw std::runtime_error("SignedPermutation: bad sign vector");
  for (int s : signs_)
    if (s != 1 && s != -1)
      throw std::runtime_error("SignedPermutation: signs must be +-1");
  for (int x : perm_.support())
    if (x < 1 || x > n)
      throw std::runtime_error("SignedPermutation: perm outside 1..n");
}

SignedPermutation SignedPermutation::identity(int n) {
  return SignedPermutation(n, Permutation(), std::vector<int>(n, 1));
}

SignedPermutation SignedPermutation::operator*(
    const SignedPermutation& o) const {
  if (n_ != o.n_) throw std::runtime_error("SignedPermutation: size mismatch");
  std::vector<int> s(n_);
  for (int i = 1; i <= n_; i++)
    s[i - 1] = signs_[i - 1] * o.signs_[perm_.apply(i) - 1];
  return SignedPermutation(n_, perm_ * o.perm_, s);
}

SignedPermutation SignedPermutation::inverse() const {
  Permutation pi = perm_.inverse();
  std::vector<int> s(n_);
  for (int i = 1; i <= n_; i++) s[perm_.apply(i) - 1] = signs_[i - 1];
  return SignedPermutation(n_, pi, s);
}

bool SignedPermutation::is_identity() const {
  if (!perm_.is_identity()) return false;
  for (int s : signs_)
    if (s != 1) return false;
  return true;
}

bool SignedPermutation::operator==(const SignedPermutation& o) const {
  return n_ == o.n_ && perm_ == o.perm_ && signs_ == o.signs_;
}

int SignedPermutation::determinant() const {
  int d = perm_.sign();
  for (int s : signs_) d *= s;
  return d;
}

std::string SignedPermutation::key() const {
  std::ostringstream os;
  os << perm_.key() << "|";
  for (int s : signs_) os << (s > 0 ? "+" : "-");
  return os.str();
}

}  // namespace pres
