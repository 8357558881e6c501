#include "blb/tensor.hpp"

#include "blb/errors.hpp"

namespace blb {

Tensor3::Tensor3(Index n1, Index n2, Index n3)
    : dims_{n1, n2, n3}, data_(static_cast<std::size_t>(n1 * n2 * n3)) {
  if (n1 < 0 || n2 < 0 || n3 < 0) throw InputError("negative tensor dimension");
}

bool Tensor3::is_zero() const {
  for (const Scalar& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<Tensor3::Entry> Tensor3::nonzeros() const {
  std::vector<Entry> out;
  for (Index i = 0; i < dims_[0]; ++i)
    for (Index j = 0; j < dims_[1]; ++j)
      for (Index k = 0; k < dims_[2]; ++k) {
        const Scalar& s = (*this)(i, j, k);
        if (!s.is_zero()) out.push_back({i, j, k, s});
      }
  return out;
}

Matrix Tensor3::slice(Index i) const {
  Matrix m(dims_[1], dims_[2]);
  for (Index j = 0; j < dims_[1]; ++j)
    for (Index k = 0; k < dims_[2]; ++k) m(j, k) = (*this)(i, j, k);
  return m;
}

void Tensor3::set_slice(Index i, const Matrix& m) {
  if (m.rows() != dims_[1] || m.cols() != dims_[2]) throw InputError("slice shape mismatch");
  for (Index j = 0; j < dims_[1]; ++j)
    for (Index k = 0; k < dims_[2]; ++k) (*this)(i, j, k) = m(j, k);
}

Matrix Tensor3::unfold() const {
  Matrix m(dims_[1] * dims_[2], dims_[0]);
  for (Index i = 0; i < dims_[0]; ++i)
    for (Index j = 0; j < dims_[1]; ++j)
      for (Index k = 0; k < dims_[2]; ++k) m(j * dims_[2] + k, i) = (*this)(i, j, k);
  return m;
}

Tensor3 Tensor3::fold(const Matrix& columns, Index n2, Index n3) {
  if (columns.rows() != n2 * n3) throw InputError("fold shape mismatch");
  Tensor3 t(columns.cols(), n2, n3);
  for (Index i = 0; i < columns.cols(); ++i)
    for (Index j = 0; j < n2; ++j)
      for (Index k = 0; k < n3; ++k) t(i, j, k) = columns(j * n3 + k, i);
  return t;
}

Tensor3 Tensor3::operator-() const {
  Tensor3 out = *this;
  for (Scalar& s : out.data_)
    if (!s.is_zero()) s = -s;
  return out;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (dims_ != o.dims_) throw InputError("tensor shape mismatch");
  for (std::size_t n = 0; n < data_.size(); ++n)
    if (!o.data_[n].is_zero()) data_[n] += o.data_[n];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (dims_ != o.dims_) throw InputError("tensor shape mismatch");
  for (std::size_t n = 0; n < data_.size(); ++n)
    if (!o.data_[n].is_zero()) data_[n] -= o.data_[n];
  return *this;
}

Tensor3& Tensor3::operator*=(const Scalar& s) {
  for (Scalar& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Tensor3 Tensor3::rotated() const {
  Tensor3 out(dims_[1], dims_[2], dims_[0]);
  for (Index a = 0; a < dims_[0]; ++a)
    for (Index b = 0; b < dims_[1]; ++b)
      for (Index c = 0; c < dims_[2]; ++c) out(b, c, a) = (*this)(a, b, c);
  return out;
}

}  // namespace blb
