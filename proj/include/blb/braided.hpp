#pragma once

#include <variant>

#include "blb/lie.hpp"

namespace blb {

// Simultaneous module and comodule over a Lie bialgebra f. The coaction is
// an (n·m)×m matrix: column v holds beta(v) in f⊗V with index a*m+k.
class CrossedModule {
 public:
  CrossedModule() = default;
  CrossedModule(Representation action, LieBialgebra host, Matrix coaction);

  const LieBialgebra& host() const { return host_; }
  const Representation& action() const { return action_; }
  const Matrix& coaction() const { return coaction_; }
  Index space_dim() const { return action_.space_dim(); }

  // Component of beta along e_a, as an m×m matrix: beta(v) = sum_a e_a⊗B_a v.
  Matrix coaction_component(Index a) const;

  friend bool operator==(const CrossedModule& a, const CrossedModule& b) {
    return a.host_ == b.host_ && a.action_ == b.action_ && a.coaction_ == b.coaction_;
  }

 private:
  Representation action_;
  LieBialgebra host_;
  Matrix coaction_;
};

struct ModuleContext {
  QuasiTriangularStructure q;
  Representation action;
  friend bool operator==(const ModuleContext& a, const ModuleContext& b) {
    return a.q == b.q && a.action == b.action;
  }
};

struct CrossedContext {
  CrossedModule module;
  friend bool operator==(const CrossedContext& a, const CrossedContext& b) { return a.module == b.module; }
};

using AmbientContext = std::variant<ModuleContext, CrossedContext>;

// Lie algebra and Lie coalgebra B living in a module category of a
// quasitriangular Lie bialgebra, or in crossed modules over a Lie bialgebra.
class BraidedLieBialgebra {
 public:
  BraidedLieBialgebra() = default;
  BraidedLieBialgebra(std::vector<std::string> labels, Tensor3 bracket, Tensor3 cobracket, AmbientContext context);

  Index space_dim() const { return algebra_.dim(); }
  const std::vector<std::string>& labels() const { return algebra_.labels(); }
  const Tensor3& bracket() const { return algebra_.structure(); }
  const Tensor3& cobracket() const { return cobracket_; }
  const AmbientContext& context() const { return context_; }

  // B's own bracket as a Lie algebra, and (bracket, cobracket) as a pair.
  const LieAlgebra& as_algebra() const { return algebra_; }
  LieBialgebra as_bialgebra() const { return LieBialgebra(algebra_, cobracket_); }

  bool is_crossed() const { return std::holds_alternative<CrossedContext>(context_); }
  const ModuleContext& module_context() const;
  const CrossedContext& crossed_context() const;
  // Action of the ambient Lie algebra (g or f) on B.
  const Representation& ambient_action() const;

  friend bool operator==(const BraidedLieBialgebra& a, const BraidedLieBialgebra& b) {
    return a.algebra_ == b.algebra_ && a.cobracket_ == b.cobracket_ && a.context_ == b.context_;
  }

 private:
  LieAlgebra algebra_;
  Tensor3 cobracket_;
  AmbientContext context_;
};

// psi = k ▷ (id - flip) on V⊗V for a symmetric element k of g⊗g; the
// quasitriangular case uses k = 2r_+.
Matrix braiding_from_element(const Matrix& k, const Representation& v);
Matrix infinitesimal_braiding(const QuasiTriangularStructure& q, const Representation& v);
Matrix crossed_infinitesimal_braiding(const CrossedModule& cm);
Matrix braiding_of(const BraidedLieBialgebra& b);

// The braided cobracket as a 1-cochain B -> B⊗B (m²×m, column i = delta(e_i)).
Matrix cobracket_cochain(const Tensor3& cobracket);
// Coboundary of the cobracket for the adjoint action of B on B⊗B.
Matrix braided_coboundary(const BraidedLieBialgebra& b);

CheckReport check_coaction(const CrossedModule& cm);
CheckReport check_braided_lie_bialgebra(const BraidedLieBialgebra& b);

// Transmutation along a bialgebra map i: g -> f (target_dim f × dim g).
BraidedLieBialgebra transmute(const QuasiTriangularStructure& q, const LieBialgebra& f, const LinearMap& i);
BraidedLieBialgebra transmute(const QuasiTriangularStructure& q);

BraidedLieBialgebra braided_dual(const BraidedLieBialgebra& b);
BraidedLieBialgebra op_cop(const BraidedLieBialgebra& b);

// beta(v) = r^(2) ⊗ r^(1)▷v.
CrossedModule induced_coaction(const QuasiTriangularStructure& q, const Representation& v);
// Same structure viewed in crossed modules over the host of q.
BraidedLieBialgebra to_crossed(const BraidedLieBialgebra& b);

}  // namespace blb
