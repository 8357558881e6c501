#pragma once

#include <string>
#include <vector>

#include "blb/constructions.hpp"

namespace blb {

// Integer matrix with a(i,j) = alpha_j(H_i). Construction validates the
// generalized Cartan axioms and symmetrizability.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(std::vector<std::vector<int>> entries);

  // "A3", "B2", "C3", "D4", "E6", "F4", "G2". Products such as A1×A1 have
  // no name here; build them from entries.
  static CartanMatrix of_type(const std::string& type);

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  // Minimal positive integers with d_i a(i,j) = d_j a(j,i) on each component.
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  // (alpha_i, alpha_j) = d_i a(i,j).
  int inner(int i, int j) const { return symmetrizer_[static_cast<std::size_t>(i)] * (*this)(i, j); }
  bool is_connected() const;
  Matrix as_matrix() const;

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<std::vector<int>> entries_;
  std::vector<int> symmetrizer_;
};

using Root = std::vector<int>;

// Positive roots as coefficient vectors over the simple roots, ordered by
// height and then by decreasing coefficients; simple roots come first.
struct RootSystem {
  std::vector<Root> positive_roots;
  // d_alpha = (alpha, alpha) / 2.
  std::vector<int> lengths;

  Index size() const { return static_cast<Index>(positive_roots.size()); }
  // Position in positive_roots, or -1.
  Index index_of(const Root& root) const;
};

RootSystem build_root_system(const CartanMatrix& cm, Index cap = 200);

// Inner product (alpha, beta) for integer combinations of simple roots.
int root_inner(const CartanMatrix& cm, const Root& a, const Root& b);

// Basis [X_alpha (positive roots in order), H_1..H_r, X_-alpha (same order)]
// with [X_a, X_-a] = H_a, extraspecial-pair structure constants and the
// Drinfeld-Sklyanin r.
struct ChevalleyBasis {
  CartanMatrix cartan;
  RootSystem roots;
  QuasiTriangularStructure q;

  const LieBialgebra& algebra() const { return q.host(); }
  Index positive(Index root) const { return root; }
  Index cartan_index(Index i) const { return roots.size() + i; }
  Index negative(Index root) const { return roots.size() + cartan.rank() + root; }
  // Accepts "H2", "X+12", "X-2221" with digits in any order.
  Index position(const std::string& label) const;
};

// Label of a root vector: "X+" or "X-" followed by the simple-root indices
// (1-based) repeated by multiplicity, sorted. Rank at most 9.
std::string root_label(const Root& root, bool positive);
struct ParsedLabel {
  enum Kind { positive, negative, cartan } kind;
  Root root;       // for root vectors
  int index = -1;  // for H_i, 0-based
};
ParsedLabel parse_basis_label(const std::string& label, int rank);

ChevalleyBasis build_chevalley_basis(const CartanMatrix& cm);
// Runs the quasitriangular suite on the result and throws ConsistencyError
// carrying the first failure. Rejects disconnected diagrams.
ChevalleyBasis build_simple(const CartanMatrix& cm);
QuasiTriangularStructure build_simple_lie_bialgebra(const CartanMatrix& cm);

// big = negative Borel [H_1..H_r, X_-alpha in root order]; small drops the
// root vectors whose root contains the deleted node (0-based here).
SplitProjection parabolic_split(const ChevalleyBasis& basis, int deleted);

// The Cartan element commuting with the retained Levi factor, normalized by
// alpha_deleted(sigma) = 1; coordinates in the full basis.
Vector central_commutant(const ChevalleyBasis& basis, int deleted);

// Cartan matrix of g from a toral subalgebra (columns of toral) whose adjoint
// action is diagonal in g's basis. Positivity uses a lexicographic order on
// the weights; simple roots are ordered by first appearance in the basis.
CartanMatrix recover_cartan_matrix(const LieAlgebra& g, const Matrix& toral);

}  // namespace blb
