#pragma once

#include "blb/constructions.hpp"

namespace blb {

// su2 on [H, X+, X-] with [H, X±] = ±2X±, [X+, X-] = H and the standard
// r = 1/4 H⊗H + X+⊗X-; the cobracket is dr.
QuasiTriangularStructure su2_standard();

// so3 on [e1, e2, e3] with [e1, e2] = e3 cyclically and
// r = -sum e_i⊗e_i + i(e1⊗e2 - e2⊗e1).
QuasiTriangularStructure so3_vector_basis();

// Two-dimensional nonabelian [h, x] = x with the triangular r = h⊗x - x⊗h.
QuasiTriangularStructure triangular_borel();

// Defining representation of any algebra containing basis labels H, X+, X-
// (other generators act by zero): X+ = E12, X- = E21, H = diag(1, -1).
Representation su2_fundamental(const LieAlgebra& host);

// Vector representation of any algebra containing e1, e2, e3, acting by the
// so3 adjoint matrices.
Representation so3_vector(const LieAlgebra& host);

// Zero bracket and cobracket on the space of v with the given labels.
BraidedLieBialgebra zero_braided(const ModuleContext& context, std::vector<std::string> labels);

}  // namespace blb
