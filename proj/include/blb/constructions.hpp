#pragma once

#include "blb/braided.hpp"
#include "blb/errors.hpp"

namespace blb {

// Lie bialgebra projection pi: big -> small split by incl, pi∘incl = id.
struct SplitProjection {
  LieBialgebra big;
  LieBialgebra small;
  LinearMap proj;
  LinearMap incl;
};

CheckReport check_split_projection(const SplitProjection& sp);

// Semidirect bialgebra on [B, g] for b in a module category of q.
LieBialgebra bosonise(const BraidedLieBialgebra& b);

// Semidirect bialgebra on [B, f] with delta(x) picking up (id - flip)∘beta(x).
// A module-context input is first moved to crossed modules by its induced
// coaction.
LieBialgebra bisum_compose(const BraidedLieBialgebra& b);

// b lives on ker pi; iso = [kernel basis | incl] carries bisum_compose(b)
// coordinates to big coordinates.
struct Decomposition {
  BraidedLieBialgebra braided;
  LinearMap iso;
};
Decomposition bisum_decompose(const SplitProjection& sp);

// Basis [e_a, f^a] with r = sum_a f^a⊗e_a.
QuasiTriangularStructure drinfeld_double(const LieBialgebra& f);

// D(g) -> g sending f^a to -r^(2)<f^a, r^(1)>, split by the inclusion of g.
SplitProjection double_projection(const QuasiTriangularStructure& q);

// theta: D(g) -> bosonise(braided_dual(transmute(q))), identity on g and
// phi -> phi - r^(2)<phi, r^(1)>.
LinearMap theta_double_iso(const QuasiTriangularStructure& q);

// Basis [B, g, C]. The pairing matrix has entry (t, s) = <c_t, b_s> and must
// be invertible; C's bracket enters with opposite sign.
QuasiTriangularStructure double_bosonise(const BraidedLieBialgebra& b, const BraidedLieBialgebra& c,
                                         const Pairing& pairing);
// c = braided_dual(b) with the canonical pairing.
QuasiTriangularStructure double_bosonise(const BraidedLieBialgebra& b);

// Raised when a Casimir is not scalar; carries the offending matrix.
class HypothesisError : public PreconditionError {
 public:
  HypothesisError(const std::string& what, Matrix casimir) : PreconditionError(what), casimir_(std::move(casimir)) {}
  const Matrix& casimir() const { return casimir_; }

 private:
  Matrix casimir_;
};

struct CentralExtension {
  QuasiTriangularStructure base;
  QuasiTriangularStructure extended;
  Scalar lambda;
  Index dilaton_index = 0;
};

struct ExtendedModule {
  CentralExtension extension;
  // Zero bracket and cobracket on V over the extension, dilaton acting as 1.
  BraidedLieBialgebra braided;
};

ExtendedModule central_extend(const QuasiTriangularStructure& q, const Representation& v);

// V as a module of D(f): e_a acts by the f action, f^a by the coaction
// component B_a. double_host must be drinfeld_double(cm.host()).
Representation double_module(const CrossedModule& cm, const QuasiTriangularStructure& double_host);

}  // namespace blb
