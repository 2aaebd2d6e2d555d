#include "pres/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace pres {

MatrixFq::MatrixFq(FieldPtr f, int dim) : f_(std::move(f)), dim_(dim) {
  a_.assign(dim_ * dim_, f_->zero());
}

MatrixFq MatrixFq::identity(FieldPtr f, int dim) {
  MatrixFq m(f, dim);
  for (int i = 0; i < dim; i++) m.at(i, i) = f->one();
  return m;
}

MatrixFq MatrixFq::operator*(const MatrixFq& o) const {
  if (dim_ != o.dim_) throw std::runtime_error("MatrixFq: dim mismatch");
  MatrixFq r(f_, dim_);
  for (int i = 0; i < dim_; i++)
    for (int k = 0; k < dim_; k++) {
      const FqElement& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < dim_; j++)
        r.at(i, j) = r.at(i, j) + x * o.at(k, j);
    }
  return r;
}

MatrixFq MatrixFq::inverse() const {
  int n = dim_;
  MatrixFq m = *this;
  MatrixFq inv = identity(f_, n);
  for (int col = 0; col < n; col++) {
    int piv = -1;
    for (int r = col; r < n; r++)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("MatrixFq: singular");
    for (int j = 0; j < n; j++) {
      std::swap(m.at(col, j), m.at(piv, j));
      std::swap(inv.at(col, j), inv.at(piv, j));
    }
    FqElement il = m.at(col, col).inverse();
    for (int j = 0; j < n; j++) {
      m.at(col, j) = m.at(col, j) * il;
      inv.at(col, j) = inv.at(col, j) * il;
    }
    for (int r = 0; r < n; r++) {
      if (r == col || m.at(r, col).is_zero()) continue;
      FqElement c = m.at(r, col);
      for (int j = 0; j < n; j++) {
        m.at(r, j) = m.at(r, j) - c * m.at(col, j);
        inv.at(r, j) = inv.at(r, j) - c * inv.at(col, j);
      }
    }
  }
  return inv;
}

MatrixFq MatrixFq::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  MatrixFq r = identity(f_, dim_);
  MatrixFq b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

MatrixFq MatrixFq::conj(const MatrixFq& g) const {
  return g.inverse() * (*this) * g;
}

MatrixFq MatrixFq::transpose() const {
  MatrixFq r(f_, dim_);
  for (int i = 0; i < dim_; i++)
    for (int j = 0; j < dim_; j++) r.at(j, i) = at(i, j);
  return r;
}

MatrixFq MatrixFq::frobenius_q() const {
  MatrixFq r(f_, dim_);
  for (int i = 0; i < dim_; i++)
    for (int j = 0; j < dim_; j++) r.at(i, j) = at(i, j).frobenius_q();
  return r;
}

FqElement MatrixFq::det() const {
  MatrixFq m = *this;
  int n = dim_;
  FqElement d = f_->one();
  for (int col = 0; col < n; col++) {
    int piv = -1;
    for (int r = col; r < n; r++)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return f_->zero();
    if (piv != col) {
      for (int j = 0; j < n; j++) std::swap(m.at(col, j), m.at(piv, j));
      d = -d;
    }
    d = d * m.at(col, col);
    FqElement il = m.at(col, col).inverse();
    for (int r = col + 1; r < n; r++) {
      if (m.at(r, col).is_zero()) continue;
      FqElement c = m.at(r, col) * il;
      for (int j = col; j < n; j++) m.at(r, j) = m.at(r, j) - c * m.at(col, j);
    }
  }
  return d;
}

bool MatrixFq::is_identity() const {
  for (int i = 0; i < dim_; i++)
    for (int j = 0; j < dim_; j++) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

bool MatrixFq::is_scalar() const {
  const FqElement& d = at(0, 0);
  if (d.is_zero()) return false;
  for (int i = 0; i < dim_; i++)
    for (int j = 0; j < dim_; j++) {
      if (i == j && !(at(i, j) == d)) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

bool MatrixFq::operator==(const MatrixFq& o) const {
  if (dim_ != o.dim_) return false;
  for (int i = 0; i < dim_ * dim_; i++)
    if (!(a_[i] == o.a_[i])) return false;
  return true;
}

long long MatrixFq::order(long long bound) const {
  MatrixFq m = *this;
  for (long long k = 1; k <= bound; k++) {
    if (m.is_identity()) return k;
    m = m * (*this);
  }
  throw std::runtime_error("MatrixFq: order exceeds bound");
}

std::string MatrixFq::key() const {
  std::ostringstream os;
  for (const auto& e : a_) os << e.str();
  return os.str();
}

std::string MatrixFq::str() const {
  std::ostringstream os;
  for (int i = 0; i < dim_; i++) {
    os << (i ? "; " : "[");
    for (int j = 0; j < dim_; j++) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

}  // namespace pres
