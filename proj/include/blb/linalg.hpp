#pragma once

#include <Eigen/Core>
#include <optional>
#include <utility>
#include <vector>

#include "blb/modular.hpp"
#include "blb/scalar.hpp"

namespace blb {

using Index = Eigen::Index;

template <typename S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Scalar>;
using Vector = VectorX<Scalar>;

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r)
      if (!is_zero(m.coeff(r, c))) return false;
  return true;
}

template <typename Derived>
Index count_nonzero(const Eigen::MatrixBase<Derived>& m) {
  Index n = 0;
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r)
      if (!is_zero(m.coeff(r, c))) ++n;
  return n;
}

// Product that skips zero entries of the left factor; structure-constant
// matrices are sparse and exact multiplication is not cheap.
template <typename DA, typename DB>
MatrixX<typename DA::Scalar> product(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  MatrixX<S> out = MatrixX<S>::Zero(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k) {
    for (Index r = 0; r < a.rows(); ++r) {
      const S& x = a.coeff(r, k);
      if (is_zero(x)) continue;
      for (Index c = 0; c < b.cols(); ++c) {
        const S& y = b.coeff(k, c);
        if (!is_zero(y)) out(r, c) += x * y;
      }
    }
  }
  return out;
}

// Kronecker product with (a⊗b)(i*p+k, j*q+l) = a(i,j) b(k,l), matching the
// index map v⊗w -> v*dim(W)+w used for all tensors.
template <typename DA, typename DB>
MatrixX<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  MatrixX<S> out = MatrixX<S>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      const S& x = a.coeff(i, j);
      if (is_zero(x)) continue;
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l) {
          const S& y = b.coeff(k, l);
          if (!is_zero(y)) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return out;
}

// Element of V⊗W stored as a dim V × dim W matrix; the flip is transposition.
template <typename Derived>
MatrixX<typename Derived::Scalar> tensor_flip(const Eigen::MatrixBase<Derived>& t) {
  return t.transpose();
}

// Permutation of V⊗V exchanging the two factors.
template <typename S = Scalar>
MatrixX<S> swap_matrix(Index m) {
  MatrixX<S> p = MatrixX<S>::Zero(m * m, m * m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) p(b * m + a, a * m + b) = S(1);
  return p;
}

// Row-major flattening of an element of V⊗W and its inverse.
template <typename Derived>
VectorX<typename Derived::Scalar> flatten(const Eigen::MatrixBase<Derived>& t) {
  VectorX<typename Derived::Scalar> v(t.rows() * t.cols());
  for (Index a = 0; a < t.rows(); ++a)
    for (Index b = 0; b < t.cols(); ++b) v(a * t.cols() + b) = t.coeff(a, b);
  return v;
}

template <typename Derived>
MatrixX<typename Derived::Scalar> unflatten(const Eigen::MatrixBase<Derived>& v, Index rows, Index cols) {
  MatrixX<typename Derived::Scalar> t(rows, cols);
  for (Index a = 0; a < rows; ++a)
    for (Index b = 0; b < cols; ++b) t(a, b) = v.coeff(a * cols + b);
  return t;
}

template <typename S>
struct RowEchelon {
  MatrixX<S> reduced;
  std::vector<Index> pivots;
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
template <typename Derived>
RowEchelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  RowEchelon<S> out{m, {}};
  MatrixX<S>& a = out.reduced;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = row;
    while (pivot < a.rows() && is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    S inv = S(1) / a(row, col);
    for (Index c = col; c < a.cols(); ++c)
      if (!is_zero(a(row, c))) a(row, c) *= inv;
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      S factor = a(r, col);
      for (Index c = col; c < a.cols(); ++c)
        if (!is_zero(a(row, c))) a(r, c) -= factor * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Index matrix_rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(row_reduce(m).pivots.size());
}

// Null-space basis as the columns of a matrix, one per free column of the
// reduced echelon form.
template <typename Derived>
MatrixX<typename Derived::Scalar> kernel_matrix(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  RowEchelon<S> e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : e.pivots) is_pivot[p] = true;
  MatrixX<S> basis = MatrixX<S>::Zero(m.cols(), m.cols() - static_cast<Index>(e.pivots.size()));
  Index k = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, free);
    ++k;
  }
  return basis;
}

template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> matrix_kernel(const Eigen::MatrixBase<Derived>& m) {
  auto basis = kernel_matrix(m);
  std::vector<VectorX<typename Derived::Scalar>> out;
  for (Index c = 0; c < basis.cols(); ++c) out.push_back(basis.col(c));
  return out;
}

// Some X with a X = b, or nothing if the system is inconsistent.
template <typename DA, typename DB>
std::optional<MatrixX<typename DA::Scalar>> solve(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  MatrixX<S> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  RowEchelon<S> e = row_reduce(aug);
  MatrixX<S> x = MatrixX<S>::Zero(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;
    x.row(e.pivots[r]) = e.reduced.row(static_cast<Index>(r)).tail(b.cols());
  }
  return x;
}

template <typename Derived>
std::optional<MatrixX<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  if (a.rows() != a.cols()) return std::nullopt;
  if (matrix_rank(a) != a.rows()) return std::nullopt;
  return solve(a, MatrixX<S>::Identity(a.rows(), a.rows()));
}

// Elementwise reduction modulo the certificate prime.
std::optional<MatrixX<Modular>> reduce_mod(const Matrix& m);

// Incrementally maintained row-echelon basis of a subspace, used for span
// closures (algebra generation, ideal generation).
template <typename S>
class SpanBuilder {
 public:
  explicit SpanBuilder(Index ambient) : ambient_(ambient) {}

  Index dim() const { return static_cast<Index>(rows_.size()); }
  Index ambient() const { return ambient_; }

  // Adds v if independent of the current span; returns whether it was added.
  bool insert(VectorX<S> v) {
    reduce(v);
    Index lead = 0;
    while (lead < ambient_ && is_zero(v(lead))) ++lead;
    if (lead == ambient_) return false;
    S inv = S(1) / v(lead);
    for (Index c = lead; c < ambient_; ++c)
      if (!is_zero(v(c))) v(c) *= inv;
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

  bool contains(VectorX<S> v) const {
    reduce(v);
    return is_zero(v);
  }

 private:
  void reduce(VectorX<S>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Index lead = leads_[r];
      if (is_zero(v(lead))) continue;
      S factor = v(lead);
      const VectorX<S>& row = rows_[r];
      for (Index c = lead; c < ambient_; ++c)
        if (!is_zero(row(c))) v(c) -= factor * row(c);
    }
  }

  Index ambient_;
  std::vector<VectorX<S>> rows_;
  std::vector<Index> leads_;
};

}  // namespace blb
