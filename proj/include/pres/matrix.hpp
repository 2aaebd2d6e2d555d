#pragma once

#include <string>
#include <vector>

#include "pres/fq.hpp"

namespace pres {

// Square matrix over F_q, row-major.
class MatrixFq {
 public:
  MatrixFq() = default;
  MatrixFq(FieldPtr f, int dim);  // zero matrix
  static MatrixFq identity(FieldPtr f, int dim);

  int dim() const { return dim_; }
  const FieldPtr& field() const { return f_; }
  FqElement& at(int i, int j) { return a_[i * dim_ + j]; }
  const FqElement& at(int i, int j) const { return a_[i * dim_ + j]; }

  MatrixFq operator*(const MatrixFq& o) const;
  MatrixFq inverse() const;
  MatrixFq pow(long long n) const;
  MatrixFq conj(const MatrixFq& g) const;  // g^-1 * this * g
  MatrixFq transpose() const;
  MatrixFq frobenius_q() const;  // entrywise x -> x^q
  FqElement det() const;
  bool is_identity() const;
  bool is_scalar() const;
  bool operator==(const MatrixFq& o) const;
  long long order(long long bound = 1 << 22) const;
  std::string key() const;
  std::string str() const;

 private:
  FieldPtr f_;
  int dim_ = 0;
  std::vector<FqElement> a_;
};

}  // namespace pres
