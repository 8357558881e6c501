#pragma once

#include <array>
#include <vector>

#include "blb/linalg.hpp"

namespace blb {

// Order-3 tensor over Q(i), flat storage with index (i,j,k) -> (i*n2+j)*n3+k.
class Tensor3 {
 public:
  struct Entry {
    Index i, j, k;
    Scalar value;
  };

  Tensor3() = default;
  Tensor3(Index n1, Index n2, Index n3);

  Index dim(int axis) const { return dims_[static_cast<std::size_t>(axis)]; }
  const std::array<Index, 3>& dims() const { return dims_; }

  Scalar& operator()(Index i, Index j, Index k) { return data_[offset(i, j, k)]; }
  const Scalar& operator()(Index i, Index j, Index k) const { return data_[offset(i, j, k)]; }

  bool is_zero() const;
  std::vector<Entry> nonzeros() const;

  // Fixed first index as an n2×n3 matrix, and the inverse operation.
  Matrix slice(Index i) const;
  void set_slice(Index i, const Matrix& m);

  // n2·n3 × n1 matrix whose column i is the flattened slice i.
  Matrix unfold() const;
  static Tensor3 fold(const Matrix& columns, Index n2, Index n3);

  Tensor3 operator-() const;
  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  Tensor3& operator*=(const Scalar& s);

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.dims_ == b.dims_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

  // Cyclic rotation of factors: out(b,c,a) = t(a,b,c).
  Tensor3 rotated() const;

 private:
  std::size_t offset(Index i, Index j, Index k) const {
    return static_cast<std::size_t>((i * dims_[1] + j) * dims_[2] + k);
  }
  std::array<Index, 3> dims_{0, 0, 0};
  std::vector<Scalar> data_;
};

}  // namespace blb
