#include <doctest.h>

#include "support.hpp"

using namespace blb;

namespace {

// Defining su2 representation plus a trivial line: the Casimir is not scalar.
Representation fundamental_plus_trivial(const LieAlgebra& host) {
  Representation v = su2_fundamental(host);
  std::vector<Matrix> action;
  for (const Matrix& m : v.action()) {
    Matrix big = Matrix::Zero(3, 3);
    big.topLeftCorner(2, 2) = m;
    action.push_back(big);
  }
  return Representation(host, action);
}

// Split projection of a bisum [B, f] onto f.
SplitProjection bisum_split(const LieBialgebra& total, Index m, const LieBialgebra& f) {
  Index n = f.dim();
  Matrix proj = Matrix::Zero(n, m + n);
  proj.rightCols(n) = Matrix::Identity(n, n);
  Matrix incl = Matrix::Zero(m + n, n);
  incl.bottomRows(n) = Matrix::Identity(n, n);
  return SplitProjection{total, f, LinearMap{proj}, LinearMap{incl}};
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("bosonisations are Lie bialgebras") {
    for (const auto& q : {su2_standard(), so3_vector_basis(), triangular_borel()}) {
      BraidedLieBialgebra b = transmute(q);
      LieBialgebra bos = bosonise(b);
      CHECK(bos.dim() == 2 * q.dim());
      CHECK(all_passed(check_lie_bialgebra(bos)));
    }
  }

  TEST_CASE("bosonisation and bisum agree in the module case") {
    BraidedLieBialgebra b = transmute(su2_standard());
    CHECK(bosonise(b) == bisum_compose(b));
  }

  TEST_CASE("bisum decomposition inverts composition") {
    for (const auto& q : {su2_standard(), triangular_borel()}) {
      BraidedLieBialgebra b = to_crossed(braided_dual(transmute(q)));
      LieBialgebra total = bisum_compose(b);
      REQUIRE(all_passed(check_lie_bialgebra(total)));
      SplitProjection sp = bisum_split(total, b.space_dim(), q.host());
      CHECK(all_passed(check_split_projection(sp)));
      Decomposition dec = bisum_decompose(sp);
      CHECK(all_passed(check_braided_lie_bialgebra(dec.braided)));
      CHECK(dec.iso.matrix == Matrix::Identity(total.dim(), total.dim()));
      CHECK(dec.braided.bracket() == b.bracket());
      CHECK(dec.braided.cobracket() == b.cobracket());
      CHECK(dec.braided.crossed_context().module.coaction() == b.crossed_context().module.coaction());
    }
  }

  TEST_CASE("a projection that does not split is rejected") {
    SplitProjection sp = double_projection(su2_standard());
    sp.incl.matrix = Scalar(2) * sp.incl.matrix;
    CHECK(test::first_failure_name(check_split_projection(sp)) == "projection_splits");
    CHECK_THROWS_AS(bisum_decompose(sp), PreconditionError);
  }

  TEST_CASE("Drinfeld doubles are factorisable quasitriangular") {
    for (const auto& q : {su2_standard(), so3_vector_basis(), triangular_borel()}) {
      QuasiTriangularStructure d = drinfeld_double(q.host());
      CHECK(d.dim() == 2 * q.dim());
      CHECK(all_passed(check_quasitriangular(d)));
      CHECK(is_factorisable(d));
      CHECK(d.algebra().labels()[static_cast<std::size_t>(q.dim())] == q.host().labels()[0] + "*");
    }
    // Any Lie bialgebra, not just quasitriangular ones.
    LieBialgebra dual = dualise(su2_standard().host());
    CHECK(all_passed(check_quasitriangular(drinfeld_double(dual))));
  }

  TEST_CASE("the double of a zero cobracket is the coadjoint semidirect product") {
    LieAlgebra g = su2_standard().algebra();
    QuasiTriangularStructure d = drinfeld_double(LieBialgebra(g, Tensor3(3, 3, 3)));
    CHECK(all_passed(check_quasitriangular(d)));
    for (Index a = 3; a < 6; ++a)
      for (Index b = 3; b < 6; ++b) CHECK(is_zero(d.algebra().bracket(a, b)));
  }

  TEST_CASE("theta is a bialgebra isomorphism") {
    for (const auto& q : {su2_standard(), so3_vector_basis(), triangular_borel()}) {
      QuasiTriangularStructure d = drinfeld_double(q.host());
      LinearMap theta = theta_double_iso(q);
      LieBialgebra target = bosonise(braided_dual(transmute(q)));
      CHECK(inverse(theta.matrix).has_value());
      CHECK(check_bracket_map(d.algebra(), target.algebra(), theta.matrix).passed);
      CHECK(check_cobracket_map(d.host(), target, theta.matrix).passed);
    }
  }

  TEST_CASE("crossed modules become modules of the double") {
    QuasiTriangularStructure q = su2_standard();
    QuasiTriangularStructure d = drinfeld_double(q.host());
    for (const auto& v : {su2_fundamental(q.algebra()), adjoint_representation(q.algebra())}) {
      Representation w = double_module(induced_coaction(q, v), d);
      CHECK(check_representation(w).passed);
    }
  }

  TEST_CASE("central extension eigenvalues") {
    QuasiTriangularStructure su2 = su2_standard();
    ExtendedModule c2 = central_extend(su2, su2_fundamental(su2.algebra()));
    CHECK(c2.extension.lambda == Scalar::fraction(-3, 2));
    CHECK(c2.extension.extended.dim() == 4);
    CHECK(c2.extension.extended.algebra().labels().back() == "sigma");
    CHECK(all_passed(check_quasitriangular(c2.extension.extended)));
    CHECK(all_passed(check_braided_lie_bialgebra(c2.braided)));
    // The extension cancels the braiding on the exterior square.
    CHECK(is_zero(braiding_of(c2.braided)));

    QuasiTriangularStructure so3 = so3_vector_basis();
    ExtendedModule c3 = central_extend(so3, so3_vector(so3.algebra()));
    CHECK(c3.extension.lambda == Scalar(-2));
    CHECK(all_passed(check_braided_lie_bialgebra(c3.braided)));
  }

  TEST_CASE("a non-scalar Casimir raises a hypothesis error carrying it") {
    QuasiTriangularStructure su2 = su2_standard();
    try {
      central_extend(su2, fundamental_plus_trivial(su2.algebra()));
      FAIL("expected a hypothesis error");
    } catch (const HypothesisError& e) {
      CHECK(e.casimir().rows() == 3);
      CHECK(e.casimir()(0, 0) == Scalar::fraction(3, 4));
      CHECK(e.casimir()(2, 2) == Scalar(0));
    }
  }

  TEST_CASE("double-bosonisation") {
    QuasiTriangularStructure su2 = su2_standard();
    ExtendedModule c2 = central_extend(su2, su2_fundamental(su2.algebra()));
    QuasiTriangularStructure db = double_bosonise(c2.braided);
    CHECK(db.dim() == 8);
    CHECK(all_passed(check_quasitriangular(db)));
    CHECK(is_simple(db.algebra()));

    // Same result with the dual and the identity pairing spelled out.
    BraidedLieBialgebra c = braided_dual(c2.braided);
    CHECK(double_bosonise(c2.braided, c, Pairing{Matrix::Identity(2, 2)}) == db);

    // A rescaled pairing is still equivariant but no longer intertwines.
    CHECK_THROWS_AS(double_bosonise(transmute(su2), braided_dual(transmute(su2)),
                                    Pairing{Matrix(Scalar(2) * Matrix::Identity(3, 3))}),
                    PreconditionError);
    CHECK_THROWS_AS(double_bosonise(c2.braided, c, Pairing{Matrix::Zero(2, 2)}), InputError);
    // A pairing that is not equivariant names the offending generator.
    Matrix skew = Matrix::Identity(2, 2);
    skew(0, 1) = 1;
    CHECK_THROWS_WITH_AS(double_bosonise(c2.braided, c, Pairing{skew}), doctest::Contains("equivariant"),
                         PreconditionError);
  }

  TEST_CASE("transmuted double-bosonisation is quasitriangular") {
    for (const auto& q : {su2_standard(), triangular_borel()}) {
      QuasiTriangularStructure db = double_bosonise(transmute(q));
      CHECK(db.dim() == 3 * q.dim());
      CHECK(all_passed(check_quasitriangular(db)));
    }
  }

  TEST_CASE("the vector-representation cobracket with x2∧e2 is not a cocycle") {
    QuasiTriangularStructure so3 = so3_vector_basis();
    ExtendedModule c3 = central_extend(so3, so3_vector(so3.algebra()));
    LieBialgebra bos = bosonise(c3.braided);
    REQUIRE(all_passed(check_lie_bialgebra(bos)));
    // Basis [x1, x2, x3, e1, e2, e3, sigma]: swap x2∧e3 for x2∧e2 in delta x1.
    Tensor3 d = bos.cobracket();
    Matrix slice = d.slice(0);
    CHECK(slice(1, 5) == Scalar(1));
    slice(1, 5) = 0, slice(5, 1) = 0;
    slice(1, 4) = 1, slice(4, 1) = -1;
    d.set_slice(0, slice);
    CHECK_FALSE(check_cocycle(LieBialgebra(bos.algebra(), d)).passed);
  }
}
