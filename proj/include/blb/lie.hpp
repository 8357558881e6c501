#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blb/check.hpp"
#include "blb/tensor.hpp"

namespace blb {

// Lie algebra by structure constants: [e_i, e_j] = sum_k c(i,j,k) e_k.
// Copies share the immutable data.
class LieAlgebra {
 public:
  LieAlgebra();
  LieAlgebra(std::vector<std::string> labels, Tensor3 bracket);

  static LieAlgebra abelian(Index n);
  static LieAlgebra abelian(std::vector<std::string> labels);

  Index dim() const;
  const std::vector<std::string>& labels() const;
  const Tensor3& structure() const;

  // (ad_a)(k, j) = c(a, j, k).
  const Matrix& ad(Index a) const;
  Matrix ad(const Vector& x) const;

  Vector bracket(Index i, Index j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  // Index of the label, or -1.
  Index find(const std::string& label) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);
  friend bool operator!=(const LieAlgebra& a, const LieAlgebra& b) { return !(a == b); }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

// Lie algebra with cobracket: delta(e_i) = sum_{j,k} d(i,j,k) e_j⊗e_k.
class LieBialgebra {
 public:
  LieBialgebra() = default;
  LieBialgebra(LieAlgebra algebra, Tensor3 cobracket);

  const LieAlgebra& algebra() const { return algebra_; }
  Index dim() const { return algebra_.dim(); }
  const std::vector<std::string>& labels() const { return algebra_.labels(); }
  const Tensor3& cobracket() const { return cobracket_; }

  // delta of a basis vector or general vector as a dim×dim matrix.
  Matrix delta(Index i) const { return cobracket_.slice(i); }
  Matrix delta(const Vector& x) const;

  friend bool operator==(const LieBialgebra& a, const LieBialgebra& b) {
    return a.algebra_ == b.algebra_ && a.cobracket_ == b.cobracket_;
  }
  friend bool operator!=(const LieBialgebra& a, const LieBialgebra& b) { return !(a == b); }

 private:
  LieAlgebra algebra_;
  Tensor3 cobracket_;
};

// r = sum r(a,b) e_a⊗e_b on a Lie bialgebra.
class QuasiTriangularStructure {
 public:
  QuasiTriangularStructure() = default;
  QuasiTriangularStructure(LieBialgebra host, Matrix r);

  const LieBialgebra& host() const { return host_; }
  const LieAlgebra& algebra() const { return host_.algebra(); }
  Index dim() const { return host_.dim(); }
  const Matrix& r() const { return r_; }
  // 2r_+ = r + flip(r).
  Matrix two_r_plus() const { return r_ + r_.transpose(); }

  friend bool operator==(const QuasiTriangularStructure& a, const QuasiTriangularStructure& b) {
    return a.host_ == b.host_ && a.r_ == b.r_;
  }
  friend bool operator!=(const QuasiTriangularStructure& a, const QuasiTriangularStructure& b) {
    return !(a == b);
  }

 private:
  LieBialgebra host_;
  Matrix r_;
};

// e_a acts on V by the matrix action[a].
class Representation {
 public:
  Representation() = default;
  Representation(LieAlgebra host, std::vector<Matrix> action);

  const LieAlgebra& host() const { return host_; }
  Index space_dim() const { return space_dim_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& rho(Index a) const { return action_[static_cast<std::size_t>(a)]; }
  Matrix rho(const Vector& x) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.host_ == b.host_ && a.space_dim_ == b.space_dim_ && a.action_ == b.action_;
  }
  friend bool operator!=(const Representation& a, const Representation& b) { return !(a == b); }

 private:
  LieAlgebra host_;
  Index space_dim_ = 0;
  std::vector<Matrix> action_;
};

struct LinearMap {
  Matrix matrix;
  Index source_dim() const { return matrix.cols(); }
  Index target_dim() const { return matrix.rows(); }
  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.matrix == b.matrix; }
};

// matrix(s, t) = <phi_s, x_t> with phi on the left.
struct Pairing {
  Matrix matrix;
  Index left_dim() const { return matrix.rows(); }
  Index right_dim() const { return matrix.cols(); }
};

// Derivation extension of a linear operator to V⊗V: a t + t a^T.
Matrix act_on_tensor(const Matrix& a, const Matrix& t);

// Axiom checks. Each returns the first failure in basis order.
CheckResult check_bracket_antisymmetry(const LieAlgebra& g);
CheckResult check_cobracket_antisymmetry(const LieBialgebra& b);
CheckResult check_jacobi(const LieAlgebra& g);
CheckResult check_cojacobi(const LieBialgebra& b);
CheckResult check_cocycle(const LieBialgebra& b);
CheckResult check_cybe(const LieAlgebra& g, const Matrix& r);
CheckResult check_coboundary(const QuasiTriangularStructure& q);
CheckResult check_r_plus_ad_invariant(const QuasiTriangularStructure& q);
CheckResult check_representation(const Representation& v);
bool is_factorisable(const QuasiTriangularStructure& q);

// Full suites: algebra, bialgebra, quasitriangular (the latter two include
// the former).
CheckReport check_lie_algebra(const LieAlgebra& g);
CheckReport check_lie_bialgebra(const LieBialgebra& b);
CheckReport check_quasitriangular(const QuasiTriangularStructure& q);

// Bracket and cobracket of the dual, by transposition of structure tensors.
LieBialgebra dualise(const LieBialgebra& b);

// Chevalley-Eilenberg differentials with values in a representation W of g.
// A 1-cochain is a dim W × n matrix; a 2-cochain a dim W × n² matrix with
// column i*n+j holding phi(e_i, e_j); a 3-cochain likewise with n³ columns.
Matrix cochain_differential_1(const LieAlgebra& g, const Representation& w, const Matrix& phi);
Matrix cochain_differential_2(const LieAlgebra& g, const Representation& w, const Matrix& phi);

// Nonabelian with zero center and an ad-generated associative algebra of full
// dimension n².
bool is_simple(const LieAlgebra& g);
Matrix center_basis(const LieAlgebra& g);

// c = r_+^(1) r_+^(2) acting on V.
struct CasimirOutcome {
  std::optional<Scalar> eigenvalue;
  Matrix casimir;
};
CasimirOutcome casimir_eigenvalue(const QuasiTriangularStructure& q, const Representation& v);

// Standard representations.
Representation adjoint_representation(const LieAlgebra& g);
Representation trivial_representation(const LieAlgebra& g, Index m);
Representation tensor_square(const Representation& v);
Representation exterior_square(const Representation& v);
Representation dual_representation(const Representation& v);

// Maps between bialgebras, given by a target_dim × source_dim matrix.
CheckResult check_bracket_map(const LieAlgebra& source, const LieAlgebra& target, const Matrix& m);
CheckResult check_cobracket_map(const LieBialgebra& source, const LieBialgebra& target, const Matrix& m);

// The structure pushed forward along an invertible change of coordinates t
// (new = t * old).
LieAlgebra transport(const LieAlgebra& g, const Matrix& t, std::vector<std::string> labels);
LieBialgebra transport(const LieBialgebra& b, const Matrix& t, std::vector<std::string> labels);
QuasiTriangularStructure transport(const QuasiTriangularStructure& q, const Matrix& t,
                                   std::vector<std::string> labels);

// Sub-bialgebra on the listed basis vectors; throws InputError if not closed.
LieBialgebra restrict_to_basis(const LieBialgebra& b, const std::vector<Index>& basis);

// Cobracket delta = dr for a candidate r on a Lie algebra.
Tensor3 coboundary_cobracket(const LieAlgebra& g, const Matrix& r);

}  // namespace blb
