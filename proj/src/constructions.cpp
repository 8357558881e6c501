#include "blb/constructions.hpp"

#include <utility>

namespace blb {

namespace {

void require(const CheckReport& report, const std::string& what) {
  if (const CheckResult* f = first_failure(report))
    throw PreconditionError(what + ": " + f->name + " fails");
}

// Structure tensors of a semidirect sum [B, g] where g acts on B by rho.
// The cobracket is left zero.
Tensor3 semidirect_bracket(const Tensor3& b_bracket, const LieAlgebra& g, const Representation& rho) {
  Index m = b_bracket.dim(0);
  Index n = g.dim();
  Tensor3 c(m + n, m + n, m + n);
  for (const auto& e : b_bracket.nonzeros()) c(e.i, e.j, e.k) = e.value;
  for (const auto& e : g.structure().nonzeros()) c(m + e.i, m + e.j, m + e.k) = e.value;
  for (Index a = 0; a < n; ++a) {
    const Matrix& act = rho.rho(a);
    for (Index s = 0; s < m; ++s)
      for (Index t = 0; t < m; ++t)
        if (const Scalar& v = act(t, s); !v.is_zero()) {
          c(m + a, s, t) = v;
          c(s, m + a, t) = -v;
        }
  }
  return c;
}

std::vector<std::string> concat_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Adds sum_ab r_ab (e_b⊗rho_a x - rho_a x⊗e_b) for x = basis vector s of the
// block at `block`, with g at offset `g_offset`.
void add_r_twist(Tensor3& d, const Matrix& r, const Representation& rho, Index block, Index g_offset, Index s) {
  Index n = r.rows();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Scalar& rab = r(a, b);
      if (rab.is_zero()) continue;
      const Matrix& act = rho.rho(a);
      for (Index t = 0; t < act.rows(); ++t)
        if (const Scalar& v = act(t, s); !v.is_zero()) {
          Scalar w = rab * v;
          d(block + s, g_offset + b, block + t) += w;
          d(block + s, block + t, g_offset + b) -= w;
        }
    }
}

Matrix bracket_matrix(const Tensor3& c) {
  Index m = c.dim(0);
  Matrix out = Matrix::Zero(m, m * m);
  for (const auto& e : c.nonzeros()) out(e.k, e.i * m + e.j) = e.value;
  return out;
}

}  // namespace

CheckReport check_split_projection(const SplitProjection& sp) {
  Index big = sp.big.dim();
  Index small = sp.small.dim();
  if (sp.proj.matrix.rows() != small || sp.proj.matrix.cols() != big || sp.incl.matrix.rows() != big ||
      sp.incl.matrix.cols() != small)
    throw InputError("split projection maps have the wrong shape");
  CheckReport out;
  Matrix r = product(sp.proj.matrix, sp.incl.matrix) - Matrix::Identity(small, small);
  out.push_back(is_zero(r) ? CheckResult::pass("projection_splits")
                           : CheckResult::fail("projection_splits", {}, sparse_entries(r)));
  CheckResult c = check_bracket_map(sp.big.algebra(), sp.small.algebra(), sp.proj.matrix);
  c.name = "projection_bracket_map";
  out.push_back(c);
  c = check_cobracket_map(sp.big, sp.small, sp.proj.matrix);
  c.name = "projection_cobracket_map";
  out.push_back(c);
  c = check_bracket_map(sp.small.algebra(), sp.big.algebra(), sp.incl.matrix);
  c.name = "inclusion_bracket_map";
  out.push_back(c);
  c = check_cobracket_map(sp.small, sp.big, sp.incl.matrix);
  c.name = "inclusion_cobracket_map";
  out.push_back(c);
  return out;
}

LieBialgebra bosonise(const BraidedLieBialgebra& b) {
  const ModuleContext& mc = b.module_context();
  require(check_braided_lie_bialgebra(b), "bosonise");
  const LieBialgebra& g = mc.q.host();
  Index m = b.space_dim();
  Index n = g.dim();
  Tensor3 c = semidirect_bracket(b.bracket(), g.algebra(), mc.action);
  Tensor3 d(m + n, m + n, m + n);
  for (const auto& e : b.cobracket().nonzeros()) d(e.i, e.j, e.k) = e.value;
  for (const auto& e : g.cobracket().nonzeros()) d(m + e.i, m + e.j, m + e.k) = e.value;
  for (Index s = 0; s < m; ++s) add_r_twist(d, mc.q.r(), mc.action, 0, m, s);
  return LieBialgebra(LieAlgebra(concat_labels(b.labels(), g.labels()), std::move(c)), std::move(d));
}

LieBialgebra bisum_compose(const BraidedLieBialgebra& input) {
  BraidedLieBialgebra b = to_crossed(input);
  require(check_braided_lie_bialgebra(b), "bisum_compose");
  const CrossedModule& cm = b.crossed_context().module;
  const LieBialgebra& f = cm.host();
  Index m = b.space_dim();
  Index n = f.dim();
  Tensor3 c = semidirect_bracket(b.bracket(), f.algebra(), cm.action());
  Tensor3 d(m + n, m + n, m + n);
  for (const auto& e : b.cobracket().nonzeros()) d(e.i, e.j, e.k) = e.value;
  for (const auto& e : f.cobracket().nonzeros()) d(m + e.i, m + e.j, m + e.k) = e.value;
  for (Index a = 0; a < n; ++a) {
    Matrix beta = cm.coaction_component(a);
    for (Index s = 0; s < m; ++s)
      for (Index k = 0; k < m; ++k)
        if (const Scalar& v = beta(k, s); !v.is_zero()) {
          d(s, m + a, k) += v;
          d(s, k, m + a) -= v;
        }
  }
  return LieBialgebra(LieAlgebra(concat_labels(b.labels(), f.labels()), std::move(c)), std::move(d));
}

Decomposition bisum_decompose(const SplitProjection& sp) {
  require(check_split_projection(sp), "bisum_decompose");
  const LieBialgebra& big = sp.big;
  const LieBialgebra& f = sp.small;
  const Matrix& pi = sp.proj.matrix;
  const Matrix& incl = sp.incl.matrix;
  Matrix kernel = kernel_matrix(pi);
  Index m = kernel.cols();
  Index n = f.dim();
  Index total = big.dim();

  Matrix iso(total, m + n);
  iso << kernel, incl;
  auto inv = inverse(iso);
  if (!inv) throw ConsistencyError("kernel and image of the inclusion do not span");
  // Rows of the inverse above the f block project onto ker pi along i(f).
  Matrix left = inv->topRows(m);

  std::vector<std::string> labels;
  for (Index s = 0; s < m; ++s) {
    Index unit = -1;
    if (count_nonzero(kernel.col(s)) == 1)
      for (Index j = 0; j < total; ++j)
        if (kernel(j, s) == Scalar(1)) unit = j;
    labels.push_back(unit >= 0 ? big.labels()[static_cast<std::size_t>(unit)] : "k" + std::to_string(s + 1));
  }

  Tensor3 bracket(m, m, m);
  for (Index s = 0; s < m; ++s)
    for (Index t = 0; t < m; ++t) {
      Matrix w = product(left, Matrix(big.algebra().bracket(Vector(kernel.col(s)), Vector(kernel.col(t)))));
      for (Index k = 0; k < m; ++k) bracket(s, t, k) = w(k, 0);
    }

  std::vector<Matrix> action;
  for (Index a = 0; a < n; ++a)
    action.push_back(product(left, product(big.algebra().ad(Vector(incl.col(a))), kernel)));

  Tensor3 cobracket(m, m, m);
  Matrix coaction = Matrix::Zero(n * m, m);
  Matrix left_t = left.transpose();
  for (Index s = 0; s < m; ++s) {
    Matrix delta = big.delta(Vector(kernel.col(s)));
    cobracket.set_slice(s, product(left, product(delta, left_t)));
    Matrix beta = product(pi, product(delta, left_t));
    for (Index a = 0; a < n; ++a)
      for (Index k = 0; k < m; ++k) coaction(a * m + k, s) = beta(a, k);
  }

  CrossedModule cm(Representation(f.algebra(), std::move(action)), f, std::move(coaction));
  BraidedLieBialgebra b(std::move(labels), std::move(bracket), std::move(cobracket), CrossedContext{cm});
  return Decomposition{std::move(b), LinearMap{iso}};
}

QuasiTriangularStructure drinfeld_double(const LieBialgebra& f) {
  require(check_lie_bialgebra(f), "drinfeld_double");
  Index n = f.dim();
  const Tensor3& c = f.algebra().structure();
  const Tensor3& d = f.cobracket();
  Tensor3 bracket(2 * n, 2 * n, 2 * n);
  Tensor3 cobracket(2 * n, 2 * n, 2 * n);
  for (const auto& e : c.nonzeros()) {
    bracket(e.i, e.j, e.k) = e.value;
    // [e_j, f^k] gains c(i,j,k) f^i; delta f^k gains c(i,j,k) f^i⊗f^j.
    bracket(e.j, n + e.k, n + e.i) += e.value;
    bracket(n + e.k, e.j, n + e.i) -= e.value;
    cobracket(n + e.k, n + e.i, n + e.j) = e.value;
  }
  for (const auto& e : d.nonzeros()) {
    bracket(n + e.j, n + e.k, n + e.i) = -e.value;
    // [e_i, f^k] gains d(i,j,k) e_j.
    bracket(e.i, n + e.k, e.j) += e.value;
    bracket(n + e.k, e.i, e.j) -= e.value;
    cobracket(e.i, e.j, e.k) = e.value;
  }
  std::vector<std::string> labels = f.labels();
  for (const auto& l : f.labels()) labels.push_back(l + "*");
  Matrix r = Matrix::Zero(2 * n, 2 * n);
  for (Index a = 0; a < n; ++a) r(n + a, a) = 1;
  return QuasiTriangularStructure(LieBialgebra(LieAlgebra(std::move(labels), std::move(bracket)), std::move(cobracket)),
                                  std::move(r));
}

SplitProjection double_projection(const QuasiTriangularStructure& q) {
  Index n = q.dim();
  Matrix pi = Matrix::Zero(n, 2 * n);
  pi.leftCols(n) = Matrix::Identity(n, n);
  pi.rightCols(n) = -q.r().transpose();
  Matrix incl = Matrix::Zero(2 * n, n);
  incl.topRows(n) = Matrix::Identity(n, n);
  return SplitProjection{drinfeld_double(q.host()).host(), q.host(), LinearMap{pi}, LinearMap{incl}};
}

LinearMap theta_double_iso(const QuasiTriangularStructure& q) {
  Index n = q.dim();
  Matrix theta = Matrix::Zero(2 * n, 2 * n);
  for (Index a = 0; a < n; ++a) {
    theta(n + a, a) = 1;
    theta(a, n + a) = 1;
    for (Index b = 0; b < n; ++b) theta(n + b, n + a) = -q.r()(a, b);
  }
  return LinearMap{theta};
}

QuasiTriangularStructure double_bosonise(const BraidedLieBialgebra& b, const BraidedLieBialgebra& c,
                                         const Pairing& pairing) {
  const ModuleContext& mb = b.module_context();
  const ModuleContext& mc = c.module_context();
  if (mb.q != mc.q) throw InputError("double_bosonise: b and c live over different quasitriangular structures");
  const Matrix& p = pairing.matrix;
  Index m = b.space_dim();
  Index mp = c.space_dim();
  if (p.rows() != mp || p.cols() != m) throw InputError("pairing has the wrong shape");
  auto dual_basis = inverse(p);
  if (!dual_basis) throw InputError("pairing is degenerate");
  require(check_braided_lie_bialgebra(b), "double_bosonise (b)");
  require(check_braided_lie_bialgebra(c), "double_bosonise (c)");

  const QuasiTriangularStructure& q = mb.q;
  const LieBialgebra& g = q.host();
  Index n = g.dim();
  for (Index a = 0; a < n; ++a) {
    Matrix r = product(Matrix(mc.action.rho(a).transpose()), p) + product(p, mb.action.rho(a));
    if (!is_zero(r))
      throw PreconditionError("pairing is not equivariant under " + g.labels()[static_cast<std::size_t>(a)]);
  }
  // <phi, [x,y]> = <delta phi, x⊗y> and <phi⊗chi, delta x> = <[phi,chi], x>.
  Matrix pp = kron(p, p);
  if (product(p, bracket_matrix(b.bracket())) != product(Matrix(cobracket_cochain(c.cobracket()).transpose()), pp))
    throw PreconditionError("pairing does not carry the bracket of b to the cobracket of c");
  if (product(Matrix(cobracket_cochain(b.cobracket()).transpose()), Matrix(pp.transpose())) !=
      product(Matrix(p.transpose()), bracket_matrix(c.bracket())))
    throw PreconditionError("pairing does not carry the cobracket of b to the bracket of c");

  Index total = m + n + mp;
  Index cc = m + n;
  Tensor3 bracket(total, total, total);
  Tensor3 cobracket(total, total, total);
  Tensor3 bg = semidirect_bracket(b.bracket(), g.algebra(), mb.action);
  for (const auto& e : bg.nonzeros()) bracket(e.i, e.j, e.k) = e.value;
  for (const auto& e : c.bracket().nonzeros()) bracket(cc + e.i, cc + e.j, cc + e.k) = -e.value;
  for (Index a = 0; a < n; ++a)
    for (Index s = 0; s < mp; ++s)
      for (Index t = 0; t < mp; ++t)
        if (const Scalar& v = mc.action.rho(a)(t, s); !v.is_zero()) {
          bracket(m + a, cc + s, cc + t) = v;
          bracket(cc + s, m + a, cc + t) = -v;
        }

  Matrix k = q.two_r_plus();
  for (Index s = 0; s < m; ++s)
    for (Index t = 0; t < mp; ++t) {
      Vector w = Vector::Zero(total);
      for (Index u = 0; u < m; ++u)
        for (Index v = 0; v < m; ++v)
          if (const Scalar& d = b.cobracket()(s, u, v); !d.is_zero()) w(u) += d * p(t, v);
      for (Index u = 0; u < mp; ++u)
        for (Index v = 0; v < mp; ++v)
          if (const Scalar& d = c.cobracket()(t, u, v); !d.is_zero()) w(cc + u) += d * p(v, s);
      for (Index bb = 0; bb < n; ++bb) {
        Scalar pairing_value = product(Matrix(p.row(t)), Matrix(mb.action.rho(bb).col(s)))(0, 0);
        if (pairing_value.is_zero()) continue;
        for (Index a = 0; a < n; ++a)
          if (!k(a, bb).is_zero()) w(m + a) += k(a, bb) * pairing_value;
      }
      for (Index z = 0; z < total; ++z)
        if (!w(z).is_zero()) {
          bracket(s, cc + t, z) = w(z);
          bracket(cc + t, s, z) = -w(z);
        }
    }

  for (const auto& e : b.cobracket().nonzeros()) cobracket(e.i, e.j, e.k) = e.value;
  for (const auto& e : g.cobracket().nonzeros()) cobracket(m + e.i, m + e.j, m + e.k) = e.value;
  for (const auto& e : c.cobracket().nonzeros()) cobracket(cc + e.i, cc + e.j, cc + e.k) = e.value;
  for (Index s = 0; s < m; ++s) add_r_twist(cobracket, q.r(), mb.action, 0, m, s);
  // delta phi gains sum_ab r_ab (rho_b phi⊗e_a - e_a⊗rho_b phi): the twist
  // above with r transposed and opposite sign.
  Matrix neg_rt = -q.r().transpose();
  for (Index s = 0; s < mp; ++s) add_r_twist(cobracket, neg_rt, mc.action, cc, m, s);

  Matrix r_new = Matrix::Zero(total, total);
  r_new.block(m, m, n, n) = q.r();
  Matrix dual = dual_basis->transpose();
  for (Index t = 0; t < mp; ++t)
    for (Index a = 0; a < m; ++a) r_new(cc + t, a) = dual(t, a);

  std::vector<std::string> labels = concat_labels(concat_labels(b.labels(), g.labels()), c.labels());
  return QuasiTriangularStructure(LieBialgebra(LieAlgebra(std::move(labels), std::move(bracket)), std::move(cobracket)),
                                  std::move(r_new));
}

QuasiTriangularStructure double_bosonise(const BraidedLieBialgebra& b) {
  Index m = b.space_dim();
  return double_bosonise(b, braided_dual(b), Pairing{Matrix::Identity(m, m)});
}

ExtendedModule central_extend(const QuasiTriangularStructure& q, const Representation& v) {
  CasimirOutcome single = casimir_eigenvalue(q, v);
  if (!single.eigenvalue) throw HypothesisError("Casimir is not scalar on V", single.casimir);
  CasimirOutcome pair = casimir_eigenvalue(q, exterior_square(v));
  if (!pair.eigenvalue) throw HypothesisError("Casimir is not scalar on the exterior square of V", pair.casimir);
  Scalar lambda = *pair.eigenvalue - Scalar(2) * *single.eigenvalue;

  const LieBialgebra& g = q.host();
  Index n = g.dim();
  Tensor3 c(n + 1, n + 1, n + 1);
  Tensor3 d(n + 1, n + 1, n + 1);
  for (const auto& e : g.algebra().structure().nonzeros()) c(e.i, e.j, e.k) = e.value;
  for (const auto& e : g.cobracket().nonzeros()) d(e.i, e.j, e.k) = e.value;
  std::vector<std::string> labels = g.labels();
  labels.push_back("sigma");
  Matrix r = Matrix::Zero(n + 1, n + 1);
  r.topLeftCorner(n, n) = q.r();
  r(n, n) = -lambda / Scalar(2);
  LieAlgebra extended_algebra(std::move(labels), std::move(c));
  QuasiTriangularStructure extended(LieBialgebra(extended_algebra, std::move(d)), std::move(r));

  Index m = v.space_dim();
  std::vector<Matrix> action = v.action();
  action.push_back(Matrix::Identity(m, m));
  Representation rep(extended_algebra, std::move(action));
  std::vector<std::string> space_labels;
  for (Index i = 0; i < m; ++i) space_labels.push_back("v" + std::to_string(i + 1));
  BraidedLieBialgebra braided(std::move(space_labels), Tensor3(m, m, m), Tensor3(m, m, m),
                              ModuleContext{extended, rep});
  return ExtendedModule{CentralExtension{q, std::move(extended), lambda, n}, std::move(braided)};
}

Representation double_module(const CrossedModule& cm, const QuasiTriangularStructure& double_host) {
  Index n = cm.host().dim();
  if (double_host.dim() != 2 * n) throw InputError("double has the wrong dimension");
  std::vector<Matrix> action = cm.action().action();
  for (Index a = 0; a < n; ++a) action.push_back(cm.coaction_component(a));
  return Representation(double_host.algebra(), std::move(action));
}

}  // namespace blb
