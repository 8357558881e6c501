#include "blb/scenarios.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "blb/cartan.hpp"
#include "blb/catalog.hpp"

namespace blb {

namespace {

// A failed predicate reports the indicator residual 1.
CheckResult violated(const std::string& name) { return CheckResult::fail(name, {}, {ResidualEntry{{}, Scalar(1)}}); }

CheckResult expect(const std::string& name, bool ok) { return ok ? CheckResult::pass(name) : violated(name); }

CheckResult expect_equal(const std::string& name, const Matrix& actual, const Matrix& expected) {
  if (actual.rows() != expected.rows() || actual.cols() != expected.cols()) return violated(name);
  Matrix r = actual - expected;
  return is_zero(r) ? CheckResult::pass(name) : CheckResult::fail(name, {}, sparse_entries(r));
}

CheckResult expect_equal(const std::string& name, const Tensor3& actual, const Tensor3& expected) {
  if (actual.dims() != expected.dims()) return violated(name);
  Tensor3 r = actual - expected;
  return r.is_zero() ? CheckResult::pass(name) : CheckResult::fail(name, {}, sparse_entries(r));
}

CheckResult expect_equal(const std::string& name, const Scalar& actual, const Scalar& expected) {
  if (actual == expected) return CheckResult::pass(name);
  return CheckResult::fail(name, {}, {ResidualEntry{{}, actual - expected}});
}

void add_prefixed(CheckReport& into, const std::string& prefix, const CheckReport& from) {
  for (CheckResult c : from) {
    c.name = prefix + "." + c.name;
    into.push_back(std::move(c));
  }
}

void add_prefixed(CheckReport& into, const std::string& prefix, CheckResult c) {
  add_prefixed(into, prefix, CheckReport{std::move(c)});
}

Vector unit(Index n, Index i) {
  Vector v = Vector::Zero(n);
  v(i) = 1;
  return v;
}

// slice(of) += coef (a⊗b - b⊗a).
void add_wedge(Tensor3& d, Index of, const Vector& a, const Vector& b, const Scalar& coef = 1) {
  Matrix t = product(Matrix(a), Matrix(b.transpose()));
  d.set_slice(of, d.slice(of) + coef * (t - t.transpose()));
}

void set_bracket(Tensor3& c, Index i, Index j, const Vector& value) {
  for (Index k = 0; k < value.size(); ++k) {
    c(i, j, k) = value(k);
    c(j, i, k) = -value(k);
  }
}

Matrix bracket_matrix(const Tensor3& c) {
  Index m = c.dim(0);
  Matrix out = Matrix::Zero(m, m * m);
  for (const auto& e : c.nonzeros()) out(e.k, e.i * m + e.j) = e.value;
  return out;
}

// d psi for psi a 2-cochain on the Lie algebra b valued in b⊗b.
Matrix braiding_differential(const LieAlgebra& b, const Matrix& psi) {
  return cochain_differential_2(b, tensor_square(adjoint_representation(b)), psi);
}

// Identification of the su2/C² double-bosonisation with su3 built from its
// Cartan matrix, in the double-bosonisation basis [x, y, H, X+, X-, sigma,
// phi, psi].
Matrix su3_identification(const ChevalleyBasis& su3) {
  const LieAlgebra& g = su3.algebra().algebra();
  Index n = g.dim();
  auto at = [&](const std::string& label) { return unit(n, su3.position(label)); };
  std::vector<Vector> images = {
      at("X-2"),
      g.bracket(at("X-1"), at("X-2")),
      at("H1"),
      at("X+1"),
      at("X-1"),
      Vector(Scalar::fraction(-1, 3) * at("H1") + Scalar::fraction(-2, 3) * at("H2")),
      at("X+2"),
      Vector(-g.bracket(at("X+1"), at("X+2"))),
  };
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) m.col(i) = images[static_cast<std::size_t>(i)];
  return m;
}

struct DoubleExample {
  ExtendedModule extension;
  BraidedLieBialgebra braided;
  LieBialgebra bosonisation;
  QuasiTriangularStructure double_bosonisation;
};

DoubleExample su2_fundamental_example() {
  QuasiTriangularStructure su2 = su2_standard();
  ExtendedModule ext = central_extend(su2, su2_fundamental(su2.algebra()));
  BraidedLieBialgebra b = zero_braided(ext.braided.module_context(), {"x", "y"});
  return DoubleExample{ext, b, bosonise(b), double_bosonise(b)};
}

DoubleExample so3_vector_example() {
  QuasiTriangularStructure so3 = so3_vector_basis();
  ExtendedModule ext = central_extend(so3, so3_vector(so3.algebra()));
  BraidedLieBialgebra b = zero_braided(ext.braided.module_context(), {"x1", "x2", "x3"});
  return DoubleExample{ext, b, bosonise(b), double_bosonise(b)};
}

CheckReport run_su3() {
  CheckReport out;
  DoubleExample ex = su2_fundamental_example();
  add_prefixed(out, "su3", expect_equal("lambda", ex.extension.extension.lambda, Scalar::fraction(-3, 2)));
  add_prefixed(out, "su3.braided", check_braided_lie_bialgebra(ex.braided));

  // Bosonisation basis [x, y, H, X+, X-, sigma].
  enum { x, y, h, xp, xm, s };
  const Index n = 6;
  const LieBialgebra& bos = ex.bosonisation;
  add_prefixed(out, "su3.bosonisation", check_lie_bialgebra(bos));
  Tensor3 bracket(n, n, n);
  set_bracket(bracket, h, xp, Vector(Scalar(2) * unit(n, xp)));
  set_bracket(bracket, h, xm, Vector(Scalar(-2) * unit(n, xm)));
  set_bracket(bracket, xp, xm, unit(n, h));
  set_bracket(bracket, xp, y, unit(n, x));
  set_bracket(bracket, xm, x, unit(n, y));
  set_bracket(bracket, h, x, unit(n, x));
  set_bracket(bracket, h, y, Vector(-unit(n, y)));
  set_bracket(bracket, s, x, unit(n, x));
  set_bracket(bracket, s, y, unit(n, y));
  add_prefixed(out, "su3", expect_equal("bosonisation_bracket", bos.algebra().structure(), bracket));

  // delta X± = 1/2 X±∧H, delta sigma = 0, delta x = 1/2 x∧h with
  // h = -1/2 H - 3/2 sigma.
  Vector small_h = Scalar::fraction(-1, 2) * unit(n, h) + Scalar::fraction(-3, 2) * unit(n, s);
  Tensor3 expected(n, n, n);
  add_wedge(expected, xp, unit(n, xp), unit(n, h), Scalar::fraction(1, 2));
  add_wedge(expected, xm, unit(n, xm), unit(n, h), Scalar::fraction(1, 2));
  add_wedge(expected, x, unit(n, x), small_h, Scalar::fraction(1, 2));
  for (Index g : {Index(x), Index(xp), Index(xm), Index(s)})
    add_prefixed(out, "su3", expect_equal("bosonisation_cobracket_" + bos.labels()[static_cast<std::size_t>(g)],
                                          bos.delta(g), expected.slice(g)));

  // Double-bosonisation basis [x, y, H, X+, X-, sigma, phi, psi].
  const QuasiTriangularStructure& db = ex.double_bosonisation;
  const LieAlgebra& dg = db.algebra();
  const Index m = 8;
  enum { phi = 6, psi = 7 };
  add_prefixed(out, "su3", expect("dimension_8", dg.dim() == m));
  add_prefixed(out, "su3.double_bosonisation", check_quasitriangular(db));
  add_prefixed(out, "su3", expect("is_simple", is_simple(dg)));
  add_prefixed(out, "su3", expect("is_factorisable", is_factorisable(db)));
  Vector minus_h = Scalar::fraction(1, 2) * unit(m, h) + Scalar::fraction(3, 2) * unit(m, s);
  add_prefixed(out, "su3", expect_equal("x_phi_is_minus_h", Matrix(dg.bracket(x, phi)), Matrix(minus_h)));
  struct Expected {
    Index a, b;
    Vector value;
  };
  std::vector<Expected> dual_side = {
      {phi, psi, Vector::Zero(m)},      {xp, phi, Vector(-unit(m, psi))}, {xp, psi, Vector::Zero(m)},
      {xm, phi, Vector::Zero(m)},       {xm, psi, Vector(-unit(m, phi))}, {h, phi, Vector(-unit(m, phi))},
      {h, psi, unit(m, psi)},           {s, phi, Vector(-unit(m, phi))},  {s, psi, Vector(-unit(m, psi))},
  };
  for (const auto& e : dual_side)
    add_prefixed(out, "su3",
                 expect_equal("bracket_" + dg.labels()[static_cast<std::size_t>(e.a)] + "_" +
                                  dg.labels()[static_cast<std::size_t>(e.b)],
                              Matrix(dg.bracket(e.a, e.b)), Matrix(e.value)));

  Matrix toral = Matrix::Zero(m, 2);
  toral(h, 0) = 1;
  toral(s, 1) = 1;
  CartanMatrix recovered = recover_cartan_matrix(dg, toral);
  add_prefixed(out, "su3", expect("recovered_cartan_matrix_A2", recovered == CartanMatrix::of_type("A2")));

  ChevalleyBasis su3 = build_simple(CartanMatrix::of_type("A2"));
  Matrix iso = su3_identification(su3);
  add_prefixed(out, "su3", expect("identification_invertible", inverse(iso).has_value()));
  add_prefixed(out, "su3.identification", check_bracket_map(dg, su3.algebra().algebra(), iso));
  add_prefixed(out, "su3.identification", check_cobracket_map(db.host(), su3.algebra(), iso));
  add_prefixed(out, "su3",
               expect_equal("identification_carries_r", product(iso, product(db.r(), Matrix(iso.transpose()))),
                            su3.q.r()));
  return out;
}

CheckReport run_so5() {
  CheckReport out;
  DoubleExample ex = so3_vector_example();
  add_prefixed(out, "so5", expect_equal("lambda", ex.extension.extension.lambda, Scalar(-2)));
  add_prefixed(out, "so5.braided", check_braided_lie_bialgebra(ex.braided));

  // Bosonisation basis [x1, x2, x3, e1, e2, e3, sigma].
  const Index n = 7;
  const Index e0 = 3, s = 6;
  const LieBialgebra& bos = ex.bosonisation;
  add_prefixed(out, "so5.bosonisation", check_lie_bialgebra(bos));
  Tensor3 bracket(n, n, n);
  for (Index i = 0; i < 3; ++i) {
    Index j = (i + 1) % 3, k = (i + 2) % 3;
    set_bracket(bracket, e0 + i, e0 + j, unit(n, e0 + k));
    set_bracket(bracket, e0 + i, j, unit(n, k));
    set_bracket(bracket, e0 + j, i, Vector(-unit(n, k)));
    set_bracket(bracket, s, i, unit(n, i));
  }
  add_prefixed(out, "so5", expect_equal("bosonisation_bracket", bos.algebra().structure(), bracket));

  auto e = [&](Index i) { return unit(n, e0 + i - 1); };
  auto xv = [&](Index i) { return unit(n, i - 1); };
  const Scalar i_ = Scalar::i();
  Vector ie1_e2 = i_ * e(1) + e(2);
  Vector e1_ie2 = e(1) - i_ * e(2);
  Tensor3 expected(n, n, n);
  add_wedge(expected, e0 + 0, e(1), e(3), i_);
  add_wedge(expected, e0 + 1, e(2), e(3), i_);
  // delta x1 with x2∧e3 (the printed x2∧e2 fails the cocycle identity).
  add_wedge(expected, 0, ie1_e2, xv(3));
  add_wedge(expected, 0, xv(2), e(3));
  add_wedge(expected, 0, unit(n, s), xv(1));
  add_wedge(expected, 1, xv(3), e1_ie2);
  add_wedge(expected, 1, e(3), xv(1));
  add_wedge(expected, 1, unit(n, s), xv(2));
  add_wedge(expected, 2, e1_ie2, xv(2));
  add_wedge(expected, 2, xv(1), ie1_e2);
  add_wedge(expected, 2, unit(n, s), xv(3));
  for (Index g = 0; g < n; ++g)
    add_prefixed(out, "so5", expect_equal("bosonisation_cobracket_" + bos.labels()[static_cast<std::size_t>(g)],
                                          bos.delta(g), expected.slice(g)));

  const QuasiTriangularStructure& db = ex.double_bosonisation;
  add_prefixed(out, "so5", expect("dimension_10", db.dim() == 10));
  add_prefixed(out, "so5.double_bosonisation", check_quasitriangular(db));
  add_prefixed(out, "so5", expect("is_simple", is_simple(db.algebra())));
  add_prefixed(out, "so5", expect("is_factorisable", is_factorisable(db)));
  return out;
}

CheckReport run_prop311() {
  CheckReport out;
  std::vector<std::pair<std::string, DoubleExample>> cases = {{"su3", su2_fundamental_example()},
                                                              {"so5", so3_vector_example()}};
  for (const auto& [name, ex] : cases) {
    const QuasiTriangularStructure& db = ex.double_bosonisation;
    std::string prefix = "prop311." + name;
    add_prefixed(out, prefix, check_coboundary(db));
    add_prefixed(out, prefix, check_cybe(db.algebra(), db.r()));
    add_prefixed(out, prefix, check_r_plus_ad_invariant(db));
    add_prefixed(out, prefix, expect("ambient_factorisable", is_factorisable(ex.extension.extension.extended)));
    add_prefixed(out, prefix, expect("factorisable", is_factorisable(db)));
  }
  return out;
}

CheckReport run_ex39() {
  CheckReport out;
  std::vector<std::pair<std::string, QuasiTriangularStructure>> cases = {{"su2", su2_standard()},
                                                                         {"triangular", triangular_borel()}};
  for (const auto& [name, q] : cases) {
    std::string prefix = "ex39." + name;
    QuasiTriangularStructure d = drinfeld_double(q.host());
    add_prefixed(out, prefix + ".double", check_quasitriangular(d));
    add_prefixed(out, prefix, expect("double_factorisable", is_factorisable(d)));
    add_prefixed(out, prefix, expect("double_rank", matrix_rank(d.two_r_plus()) == 2 * q.dim()));
    LinearMap theta = theta_double_iso(q);
    LieBialgebra target = bosonise(braided_dual(transmute(q)));
    add_prefixed(out, prefix, expect("theta_bijective", inverse(theta.matrix).has_value()));
    add_prefixed(out, prefix + ".theta", check_bracket_map(d.algebra(), target.algebra(), theta.matrix));
    add_prefixed(out, prefix + ".theta", check_cobracket_map(d.host(), target, theta.matrix));

    SplitProjection sp = double_projection(q);
    add_prefixed(out, prefix + ".projection", check_split_projection(sp));
    Decomposition dec = bisum_decompose(sp);
    add_prefixed(out, prefix + ".kernel", check_braided_lie_bialgebra(dec.braided));
    LieBialgebra composed = bisum_compose(dec.braided);
    add_prefixed(out, prefix,
                 expect("bisum_roundtrip", transport(composed, dec.iso.matrix, sp.big.labels()) == sp.big));
    BraidedLieBialgebra dual = braided_dual(transmute(q));
    add_prefixed(out, prefix, expect_equal("kernel_bracket_is_dual", dec.braided.bracket(), dual.bracket()));
    add_prefixed(out, prefix, expect_equal("kernel_cobracket_is_dual", dec.braided.cobracket(), dual.cobracket()));
  }
  return out;
}

CheckReport run_ex33() {
  CheckReport out;
  QuasiTriangularStructure q = su2_standard();
  const LieAlgebra& g = q.algebra();
  Index n = g.dim();
  BraidedLieBialgebra b = transmute(q);
  BraidedLieBialgebra dual = braided_dual(b);
  add_prefixed(out, "ex33.transmuted", check_braided_lie_bialgebra(b));
  add_prefixed(out, "ex33.dual", check_braided_lie_bialgebra(dual));

  Matrix k = q.two_r_plus();
  // delta(x) = (id ⊗ ad_x) 2r_+.
  for (Index x = 0; x < n; ++x)
    add_prefixed(out, "ex33",
                 expect_equal("corollary_form_" + g.labels()[static_cast<std::size_t>(x)], b.cobracket().slice(x),
                              product(k, Matrix(g.ad(x).transpose()))));

  Matrix kk = kron(k, k);
  add_prefixed(out, "ex33",
               expect_equal("self_dual_bracket", product(k, bracket_matrix(dual.bracket())),
                            product(bracket_matrix(b.bracket()), kk)));
  add_prefixed(out, "ex33",
               expect_equal("self_dual_cobracket", product(kk, cobracket_cochain(dual.cobracket())),
                            product(cobracket_cochain(b.cobracket()), k)));
  for (Index a = 0; a < n; ++a)
    add_prefixed(out, "ex33",
                 expect_equal("self_dual_action_" + g.labels()[static_cast<std::size_t>(a)],
                              product(k, dual.ambient_action().rho(a)), product(b.ambient_action().rho(a), k)));

  auto k_inv = inverse(k);
  add_prefixed(out, "ex33", expect("factorisable", k_inv.has_value()));
  if (k_inv) {
    Matrix kirillov = product(Matrix(kron(*k_inv, *k_inv)), product(cobracket_cochain(b.cobracket()), k));
    Matrix expected(n * n, n);
    for (Index a = 0; a < n; ++a)
      for (Index c = 0; c < n; ++c)
        for (Index e = 0; e < n; ++e) expected(a * n + c, e) = g.structure()(a, c, e);
    add_prefixed(out, "ex33", expect_equal("kirillov_kostant", kirillov, expected));
  }
  return out;
}

Matrix random_matrix(std::mt19937& rng, Index n, bool symmetric) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      long re = dist(rng);
      long im = dist(rng);
      m(i, j) = Scalar::fraction(re, 1, im, 2);
    }
  if (symmetric) m = m + Matrix(m.transpose());
  return m;
}

CheckReport run_lemma21() {
  CheckReport out;
  std::mt19937 rng(20250101);
  std::uniform_int_distribution<int> coef(1, 9);
  auto random_fraction = [&] {
    long num = coef(rng);
    long den = coef(rng);
    return Scalar::fraction(num, den);
  };
  auto check_psi = [&](const std::string& name, const LieAlgebra& b, const Matrix& psi) {
    Matrix d = braiding_differential(b, psi);
    add_prefixed(out, "lemma21", expect_equal(name, d, Matrix::Zero(d.rows(), d.cols())));
  };

  // Adjoint modules: B = g with K = 2r_+, a random multiple of it, and a
  // random element of g⊗g.
  std::vector<std::pair<std::string, QuasiTriangularStructure>> adjoint = {
      {"su2", su2_standard()},
      {"so3", so3_vector_basis()},
      {"su3", build_chevalley_basis(CartanMatrix::of_type("A2")).q},
      {"triangular", triangular_borel()}};
  for (const auto& [name, q] : adjoint) {
    Representation ad = adjoint_representation(q.algebra());
    check_psi(name + "_adjoint", q.algebra(), infinitesimal_braiding(q, ad));
    Matrix scaled = random_fraction() * q.two_r_plus();
    check_psi(name + "_adjoint_scaled_invariant", q.algebra(), braiding_from_element(scaled, ad));
    check_psi(name + "_adjoint_random_element", q.algebra(),
              braiding_from_element(random_matrix(rng, q.dim(), false), ad));
  }

  // gl2 = su2 ⊕ center: invariant elements a·2r_+ + b·z⊗z.
  {
    QuasiTriangularStructure su2 = su2_standard();
    Tensor3 c(4, 4, 4);
    for (const auto& e : su2.algebra().structure().nonzeros()) c(e.i, e.j, e.k) = e.value;
    LieAlgebra gl2({"H", "X+", "X-", "z"}, c);
    Representation ad = adjoint_representation(gl2);
    for (int trial = 0; trial < 3; ++trial) {
      Matrix k = Matrix::Zero(4, 4);
      k.topLeftCorner(3, 3) = random_fraction() * su2.two_r_plus();
      k(3, 3) = random_fraction();
      check_psi("gl2_random_invariant_" + std::to_string(trial), gl2, braiding_from_element(k, ad));
    }
  }

  // Zero brackets on modules of the extended algebras.
  for (const auto& [name, ext] : std::vector<std::pair<std::string, ExtendedModule>>{
           {"su2_fundamental", central_extend(su2_standard(), su2_fundamental(su2_standard().algebra()))},
           {"so3_vector", central_extend(so3_vector_basis(), so3_vector(so3_vector_basis().algebra()))}}) {
    const ModuleContext& mc = ext.braided.module_context();
    check_psi(name, ext.braided.as_algebra(), infinitesimal_braiding(mc.q, mc.action));
    check_psi(name + "_random_element", ext.braided.as_algebra(),
              braiding_from_element(random_matrix(rng, mc.q.dim(), true), mc.action));
  }

  // Parabolic kernels in crossed modules, and with random elements of f⊗f.
  for (const auto& [type, node] : std::vector<std::pair<std::string, int>>{{"G2", 0}, {"C3", 0}, {"A3", 0}}) {
    ChevalleyBasis basis = build_chevalley_basis(CartanMatrix::of_type(type));
    Decomposition dec = bisum_decompose(parabolic_split(basis, node));
    const BraidedLieBialgebra& b = dec.braided;
    check_psi(type + "_kernel_crossed", b.as_algebra(), braiding_of(b));
    const Representation& action = b.ambient_action();
    check_psi(type + "_kernel_random_element", b.as_algebra(),
              braiding_from_element(random_matrix(rng, action.host().dim(), false), action));
  }
  return out;
}

struct KernelExpectation {
  std::string type;
  std::string first_left, first_right;
  Scalar first_stated;
  std::string second_left, second_right;
  Scalar second_stated;
  std::string target;
  std::vector<std::pair<std::string, Scalar>> commutant;
};

CheckReport run_parabolic(const std::string& prefix, const KernelExpectation& want) {
  CheckReport out;
  ChevalleyBasis basis = build_simple(CartanMatrix::of_type(want.type));
  add_prefixed(out, prefix + ".algebra", check_quasitriangular(basis.q));
  add_prefixed(out, prefix, expect("is_simple", is_simple(basis.algebra().algebra())));
  add_prefixed(out, prefix, expect("is_factorisable", is_factorisable(basis.q)));

  SplitProjection sp = parabolic_split(basis, 0);
  add_prefixed(out, prefix + ".split", check_split_projection(sp));
  Decomposition dec = bisum_decompose(sp);
  const BraidedLieBialgebra& b = dec.braided;
  add_prefixed(out, prefix + ".kernel", check_braided_lie_bialgebra(b));
  add_prefixed(out, prefix, expect("kernel_dim_5", b.space_dim() == 5));
  LieBialgebra composed = bisum_compose(b);
  add_prefixed(out, prefix, expect("bisum_roundtrip", transport(composed, dec.iso.matrix, sp.big.labels()) == sp.big));

  // Kernel labels are the big-algebra labels of the root vectors.
  auto find = [&](const std::string& label) {
    ParsedLabel p = parse_basis_label(label, basis.cartan.rank());
    return b.as_algebra().find(root_label(p.root, false));
  };
  Index l1 = find(want.first_left), r1 = find(want.first_right);
  Index l2 = find(want.second_left), r2 = find(want.second_right), z = find(want.target);
  if (std::min({l1, r1, l2, r2, z}) < 0) {
    add_prefixed(out, prefix, expect("kernel_labels_present", false));
    return out;
  }
  std::set<std::pair<Index, Index>> nonzero;
  for (const auto& e : b.bracket().nonzeros())
    if (e.i < e.j) nonzero.insert({e.i, e.j});
  std::set<std::pair<Index, Index>> stated = {{std::min(l1, r1), std::max(l1, r1)},
                                              {std::min(l2, r2), std::max(l2, r2)}};
  add_prefixed(out, prefix, expect("kernel_bracket_support", nonzero == stated));
  Vector first = b.as_algebra().bracket(l1, r1);
  Vector second = b.as_algebra().bracket(l2, r2);
  Scalar c1 = first(z), c2 = second(z);
  bool targets_ok = !c1.is_zero() && !c2.is_zero() && count_nonzero(first) == 1 && count_nonzero(second) == 1;
  add_prefixed(out, prefix, expect("kernel_bracket_targets", targets_ok));
  // Rescale X_first_left by p1/c1 and X_second_left by p2/c2; all other root
  // vectors fixed. Needs the four factors distinct from each other and z.
  std::set<Index> factors = {l1, r1, l2, r2};
  bool rescalable = targets_ok && factors.size() == 4 && !factors.count(z);
  if (rescalable) {
    Vector scale = Vector::Constant(b.space_dim(), Scalar(1));
    scale(l1) = want.first_stated / c1;
    scale(l2) = want.second_stated / c2;
    rescalable = scale(l1) * scale(r1) * c1 / scale(z) == want.first_stated &&
                 scale(l2) * scale(r2) * c2 / scale(z) == want.second_stated;
  }
  add_prefixed(out, prefix, expect("kernel_bracket_matches_up_to_rescaling", rescalable));
  add_prefixed(out, prefix, expect("braiding_nonzero", !is_zero(braiding_of(b))));
  add_prefixed(out, prefix, expect("braided_cobracket_nonzero", !b.cobracket().is_zero()));

  Vector sigma = central_commutant(basis, 0);
  Vector expected = Vector::Zero(basis.algebra().dim());
  for (const auto& [label, value] : want.commutant) expected(basis.position(label)) = value;
  add_prefixed(out, prefix, expect_equal("central_commutant", Matrix(sigma), Matrix(expected)));
  // sigma acts by one eigenvalue of modulus 1 on the roots containing the
  // deleted simple root once.
  Matrix ad_sigma = basis.algebra().algebra().ad(sigma);
  std::set<std::string> eigenvalues;
  for (Index a = 0; a < basis.roots.size(); ++a)
    if (basis.roots.positive_roots[static_cast<std::size_t>(a)][0] == 1) {
      Index v = basis.negative(a);
      eigenvalues.insert(to_string(ad_sigma(v, v)));
    }
  add_prefixed(out, prefix, expect("commutant_unit_eigenvalue", eigenvalues.size() == 1 &&
                                                                    (*eigenvalues.begin() == "1" ||
                                                                     *eigenvalues.begin() == "-1")));
  return out;
}

CheckReport run_g2() {
  return run_parabolic("g2", KernelExpectation{"G2", "X-1", "X-2221", Scalar(1), "X-221", "X-21", Scalar(1),
                                               "X-12221", {{"H1", Scalar(2)}, {"H2", Scalar(1)}}});
}

CheckReport run_sp6() {
  return run_parabolic("sp6", KernelExpectation{"C3", "X-12", "X-123", Scalar::fraction(1, 2), "X-1", "X-1223",
                                                Scalar(1), "X-11223",
                                                {{"H1", Scalar(1)}, {"H2", Scalar(1)}, {"H3", Scalar(1)}}});
}

}  // namespace

const std::vector<Scenario>& scenarios() {
  static const std::vector<Scenario> all = {
      {"lemma21", "the infinitesimal braiding is a 2-cocycle for any element of g⊗g", run_lemma21},
      {"ex33", "transmuted su2 is self-dual and its dual carries the Kirillov-Kostant cobracket", run_ex33},
      {"ex39", "theta identifies the Drinfeld double with the bosonised braided dual", run_ex39},
      {"prop311", "double-bosonisations are quasitriangular and factorisable", run_prop311},
      {"su3", "su2 with its fundamental representation double-bosonises to su3", run_su3},
      {"so5", "so3 with its vector representation double-bosonises to so5", run_so5},
      {"g2", "g2 maximal parabolic kernel over su2", run_g2},
      {"sp6", "sp6 maximal parabolic kernel over sp4", run_sp6},
  };
  return all;
}

CheckReport run_scenario(const std::string& name) {
  for (const Scenario& s : scenarios())
    if (s.name == name) return s.run();
  throw InputError("unknown scenario '" + name + "'");
}

}  // namespace blb
