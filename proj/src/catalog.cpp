#include "blb/catalog.hpp"

namespace blb {

namespace {

QuasiTriangularStructure with_coboundary(LieAlgebra g, Matrix r) {
  Tensor3 d = coboundary_cobracket(g, r);
  return QuasiTriangularStructure(LieBialgebra(std::move(g), std::move(d)), std::move(r));
}

Index require_label(const LieAlgebra& g, const std::string& label) {
  Index i = g.find(label);
  if (i < 0) throw InputError("algebra has no basis vector '" + label + "'");
  return i;
}

}  // namespace

QuasiTriangularStructure su2_standard() {
  enum { h, xp, xm };
  Tensor3 c(3, 3, 3);
  c(h, xp, xp) = 2, c(xp, h, xp) = -2;
  c(h, xm, xm) = -2, c(xm, h, xm) = 2;
  c(xp, xm, h) = 1, c(xm, xp, h) = -1;
  Matrix r = Matrix::Zero(3, 3);
  r(h, h) = Scalar::fraction(1, 4);
  r(xp, xm) = 1;
  return with_coboundary(LieAlgebra({"H", "X+", "X-"}, std::move(c)), std::move(r));
}

QuasiTriangularStructure so3_vector_basis() {
  Tensor3 c(3, 3, 3);
  for (Index i = 0; i < 3; ++i) {
    Index j = (i + 1) % 3, k = (i + 2) % 3;
    c(i, j, k) = 1;
    c(j, i, k) = -1;
  }
  Matrix r = -Matrix::Identity(3, 3);
  r(0, 1) = Scalar::i();
  r(1, 0) = -Scalar::i();
  return with_coboundary(LieAlgebra({"e1", "e2", "e3"}, std::move(c)), std::move(r));
}

QuasiTriangularStructure triangular_borel() {
  Tensor3 c(2, 2, 2);
  c(0, 1, 1) = 1, c(1, 0, 1) = -1;
  Matrix r = Matrix::Zero(2, 2);
  r(0, 1) = 1, r(1, 0) = -1;
  return with_coboundary(LieAlgebra({"h", "x"}, std::move(c)), std::move(r));
}

Representation su2_fundamental(const LieAlgebra& host) {
  std::vector<Matrix> action(static_cast<std::size_t>(host.dim()), Matrix::Zero(2, 2));
  Matrix& h = action[static_cast<std::size_t>(require_label(host, "H"))];
  h(0, 0) = 1, h(1, 1) = -1;
  action[static_cast<std::size_t>(require_label(host, "X+"))](0, 1) = 1;
  action[static_cast<std::size_t>(require_label(host, "X-"))](1, 0) = 1;
  return Representation(host, std::move(action));
}

Representation so3_vector(const LieAlgebra& host) {
  LieAlgebra so3 = so3_vector_basis().algebra();
  std::vector<Matrix> action(static_cast<std::size_t>(host.dim()), Matrix::Zero(3, 3));
  for (Index i = 0; i < 3; ++i)
    action[static_cast<std::size_t>(require_label(host, so3.labels()[static_cast<std::size_t>(i)]))] = so3.ad(i);
  return Representation(host, std::move(action));
}

BraidedLieBialgebra zero_braided(const ModuleContext& context, std::vector<std::string> labels) {
  Index m = static_cast<Index>(labels.size());
  return BraidedLieBialgebra(std::move(labels), Tensor3(m, m, m), Tensor3(m, m, m), context);
}

}  // namespace blb
