#include "blb/braided.hpp"

#include <utility>

#include "blb/errors.hpp"

namespace blb {

namespace {

Matrix coaction_from_components(const std::vector<Matrix>& components, Index m) {
  Index n = static_cast<Index>(components.size());
  Matrix beta = Matrix::Zero(n * m, m);
  for (Index a = 0; a < n; ++a) beta.block(a * m, 0, m, m) = components[static_cast<std::size_t>(a)];
  return beta;
}

// m × m² matrix of the bracket map B⊗B -> B.
Matrix bracket_matrix(const Tensor3& c) {
  Index m = c.dim(0);
  Matrix out = Matrix::Zero(m, m * m);
  for (const auto& e : c.nonzeros()) out(e.k, e.i * m + e.j) = e.value;
  return out;
}

Matrix unit_column(Index n, Index a) {
  Matrix e = Matrix::Zero(n, 1);
  e(a, 0) = 1;
  return e;
}

Matrix derivation_on_square(const Matrix& rho) {
  Matrix id = Matrix::Identity(rho.rows(), rho.rows());
  return kron(rho, id) + kron(id, rho);
}

}  // namespace

CrossedModule::CrossedModule(Representation action, LieBialgebra host, Matrix coaction)
    : action_(std::move(action)), host_(std::move(host)), coaction_(std::move(coaction)) {
  if (action_.host().dim() != host_.dim()) throw InputError("crossed module action host mismatch");
  Index m = action_.space_dim();
  if (coaction_.rows() != host_.dim() * m || coaction_.cols() != m)
    throw InputError("coaction must be (n·m)×m");
}

Matrix CrossedModule::coaction_component(Index a) const {
  Index m = space_dim();
  return coaction_.block(a * m, 0, m, m);
}

BraidedLieBialgebra::BraidedLieBialgebra(std::vector<std::string> labels, Tensor3 bracket, Tensor3 cobracket,
                                         AmbientContext context)
    : algebra_(std::move(labels), std::move(bracket)), cobracket_(std::move(cobracket)), context_(std::move(context)) {
  Index m = algebra_.dim();
  if (cobracket_.dim(0) != m || cobracket_.dim(1) != m || cobracket_.dim(2) != m)
    throw InputError("braided cobracket must be m×m×m");
  if (ambient_action().space_dim() != m && !(m == 0 && ambient_action().action().empty()))
    throw InputError("ambient action does not act on the braided space");
  if (auto* mc = std::get_if<ModuleContext>(&context_))
    if (mc->action.host().dim() != mc->q.dim()) throw InputError("ambient action host does not match r");
}

const ModuleContext& BraidedLieBialgebra::module_context() const {
  if (auto* mc = std::get_if<ModuleContext>(&context_)) return *mc;
  throw InputError("braided object lives in crossed modules, not a module category");
}

const CrossedContext& BraidedLieBialgebra::crossed_context() const {
  if (auto* cc = std::get_if<CrossedContext>(&context_)) return *cc;
  throw InputError("braided object lives in a module category, not crossed modules");
}

const Representation& BraidedLieBialgebra::ambient_action() const {
  if (auto* mc = std::get_if<ModuleContext>(&context_)) return mc->action;
  return std::get<CrossedContext>(context_).module.action();
}

Matrix braiding_from_element(const Matrix& k, const Representation& v) {
  Index m = v.space_dim();
  Index n = v.host().dim();
  if (k.rows() != n || k.cols() != n) throw InputError("element of g⊗g has the wrong dimension");
  Matrix acting = Matrix::Zero(m * m, m * m);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (!k(a, b).is_zero()) acting += k(a, b) * kron(v.rho(a), v.rho(b));
  Matrix antisym = Matrix::Identity(m * m, m * m) - swap_matrix(m);
  return product(acting, antisym);
}

Matrix infinitesimal_braiding(const QuasiTriangularStructure& q, const Representation& v) {
  if (v.host().dim() != q.dim()) throw InputError("representation host does not match r");
  return braiding_from_element(q.two_r_plus(), v);
}

Matrix crossed_infinitesimal_braiding(const CrossedModule& cm) {
  Index m = cm.space_dim();
  Matrix sum = Matrix::Zero(m * m, m * m);
  for (Index a = 0; a < cm.host().dim(); ++a) {
    Matrix beta = cm.coaction_component(a);
    if (is_zero(beta)) continue;
    const Matrix& rho = cm.action().rho(a);
    sum += kron(rho, beta) + kron(beta, rho);
  }
  Matrix antisym = Matrix::Identity(m * m, m * m) - swap_matrix(m);
  return product(antisym, sum);
}

Matrix braiding_of(const BraidedLieBialgebra& b) {
  if (b.is_crossed()) return crossed_infinitesimal_braiding(b.crossed_context().module);
  const ModuleContext& mc = b.module_context();
  return infinitesimal_braiding(mc.q, mc.action);
}

Matrix cobracket_cochain(const Tensor3& cobracket) { return cobracket.unfold(); }

Matrix braided_coboundary(const BraidedLieBialgebra& b) {
  const LieAlgebra& algebra = b.as_algebra();
  return cochain_differential_1(algebra, tensor_square(adjoint_representation(algebra)),
                                cobracket_cochain(b.cobracket()));
}

CheckReport check_coaction(const CrossedModule& cm) {
  CheckReport out;
  out.push_back(check_representation(cm.action()));
  const LieBialgebra& f = cm.host();
  Index n = f.dim();
  Index m = cm.space_dim();
  const Matrix& beta = cm.coaction();
  auto coef = [&](Index a, Index k, Index v) -> const Scalar& { return beta(a * m + k, v); };

  CheckResult axiom = CheckResult::pass("coaction_axiom");
  for (Index v = 0; v < m && axiom.passed; ++v) {
    Tensor3 lhs(n, n, m);
    Tensor3 t(n, n, m);
    for (Index c = 0; c < n; ++c)
      for (Index l = 0; l < m; ++l) {
        const Scalar& x = coef(c, l, v);
        if (x.is_zero()) continue;
        for (Index a = 0; a < n; ++a)
          for (Index b = 0; b < n; ++b)
            if (const Scalar& d = f.cobracket()(c, a, b); !d.is_zero()) lhs(a, b, l) += x * d;
      }
    for (Index a = 0; a < n; ++a)
      for (Index k = 0; k < m; ++k) {
        const Scalar& x = coef(a, k, v);
        if (x.is_zero()) continue;
        for (Index b = 0; b < n; ++b)
          for (Index l = 0; l < m; ++l)
            if (const Scalar& y = coef(b, l, k); !y.is_zero()) t(a, b, l) += x * y;
      }
    Tensor3 r = lhs;
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index l = 0; l < m; ++l) r(a, b, l) -= t(a, b, l) - t(b, a, l);
    if (!r.is_zero()) axiom = CheckResult::fail("coaction_axiom", {v}, sparse_entries(r));
  }
  out.push_back(axiom);

  CheckResult compat = CheckResult::pass("crossed_compatibility");
  Matrix id_m = Matrix::Identity(m, m);
  Matrix id_n = Matrix::Identity(n, n);
  for (Index c = 0; c < n; ++c) {
    const Matrix& rho = cm.action().rho(c);
    Matrix rhs = product(Matrix(kron(f.algebra().ad(c), id_m) + kron(id_n, rho)), beta);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (const Scalar& d = f.cobracket()(c, a, b); !d.is_zero())
          rhs += d * kron(unit_column(n, a), cm.action().rho(b));
    Matrix r = product(beta, rho) - rhs;
    if (!is_zero(r)) {
      compat = CheckResult::fail("crossed_compatibility", {c}, sparse_entries(r));
      break;
    }
  }
  out.push_back(compat);
  return out;
}

CheckReport check_braided_lie_bialgebra(const BraidedLieBialgebra& b) {
  CheckReport out;
  const LieAlgebra& algebra = b.as_algebra();
  LieBialgebra pair = b.as_bialgebra();
  Index m = b.space_dim();

  if (b.is_crossed()) {
    const CrossedModule& cm = b.crossed_context().module;
    append(out, check_lie_bialgebra(cm.host()));
    append(out, check_coaction(cm));
  } else {
    const ModuleContext& mc = b.module_context();
    append(out, check_quasitriangular(mc.q));
    out.push_back(check_representation(mc.action));
  }

  out.push_back(check_bracket_antisymmetry(algebra));
  if (out.back()) out.push_back(check_jacobi(algebra));
  out.push_back(check_cobracket_antisymmetry(pair));
  if (out.back()) out.push_back(check_cojacobi(pair));

  const Representation& action = b.ambient_action();
  Matrix bracket = bracket_matrix(b.bracket());
  Matrix delta = cobracket_cochain(b.cobracket());

  CheckResult bracket_cov = CheckResult::pass("bracket_covariance");
  CheckResult cobracket_cov = CheckResult::pass("cobracket_covariance");
  for (Index a = 0; a < action.host().dim(); ++a) {
    const Matrix& rho = action.rho(a);
    Matrix on_square = derivation_on_square(rho);
    if (bracket_cov.passed) {
      Matrix r = product(rho, bracket) - product(bracket, on_square);
      if (!is_zero(r)) bracket_cov = CheckResult::fail("bracket_covariance", {a}, sparse_entries(r));
    }
    if (cobracket_cov.passed) {
      Matrix r = product(on_square, delta) - product(delta, rho);
      if (!is_zero(r)) cobracket_cov = CheckResult::fail("cobracket_covariance", {a}, sparse_entries(r));
    }
  }
  out.push_back(bracket_cov);
  out.push_back(cobracket_cov);

  if (b.is_crossed()) {
    const CrossedModule& cm = b.crossed_context().module;
    Index n = cm.host().dim();
    Matrix id_m = Matrix::Identity(m, m);
    Matrix on_pair = Matrix::Zero(n * m, m * m);
    Matrix on_square = Matrix::Zero(n * m * m, m * m);
    for (Index a = 0; a < n; ++a) {
      Matrix ba = cm.coaction_component(a);
      if (is_zero(ba)) continue;
      Matrix lifted = derivation_on_square(ba);
      on_pair += kron(unit_column(n, a), product(bracket, lifted));
      on_square += kron(unit_column(n, a), lifted);
    }
    Matrix r1 = product(cm.coaction(), bracket) - on_pair;
    out.push_back(is_zero(r1) ? CheckResult::pass("bracket_coaction_covariance")
                              : CheckResult::fail("bracket_coaction_covariance", {}, sparse_entries(r1)));
    Matrix r2 = product(on_square, delta) - product(Matrix(kron(Matrix::Identity(n, n), delta)), cm.coaction());
    out.push_back(is_zero(r2) ? CheckResult::pass("cobracket_coaction_covariance")
                              : CheckResult::fail("cobracket_coaction_covariance", {}, sparse_entries(r2)));
  }

  if (all_passed(out)) {
    Matrix r = braided_coboundary(b) - braiding_of(b);
    CheckResult cocycle = CheckResult::pass("braided_cocycle");
    for (Index i = 0; i < m && cocycle.passed; ++i)
      for (Index j = 0; j < m; ++j) {
        Matrix col = r.col(i * m + j);
        if (!is_zero(col)) {
          cocycle = CheckResult::fail("braided_cocycle", {i, j}, sparse_entries(unflatten(col, m, m)));
          break;
        }
      }
    out.push_back(cocycle);
  }
  return out;
}

BraidedLieBialgebra transmute(const QuasiTriangularStructure& q, const LieBialgebra& f, const LinearMap& i) {
  const LieAlgebra& g = q.algebra();
  if (i.source_dim() != g.dim() || i.target_dim() != f.dim()) throw InputError("map i has the wrong shape");
  if (CheckResult c = check_bracket_map(g, f.algebra(), i.matrix); !c)
    throw PreconditionError("transmute: i does not preserve brackets");
  if (CheckResult c = check_cobracket_map(q.host(), f, i.matrix); !c)
    throw PreconditionError("transmute: i does not preserve cobrackets");

  std::vector<Matrix> action;
  for (Index a = 0; a < g.dim(); ++a) action.push_back(f.algebra().ad(Vector(i.matrix.col(a))));
  Representation rep(g, action);

  Index m = f.dim();
  Tensor3 d = f.cobracket();
  for (Index x = 0; x < m; ++x) {
    Matrix extra = Matrix::Zero(m, m);
    for (Index a = 0; a < g.dim(); ++a)
      for (Index b = 0; b < g.dim(); ++b) {
        const Scalar& r = q.r()(a, b);
        if (r.is_zero()) continue;
        Matrix acted = action[static_cast<std::size_t>(a)].col(x);
        Matrix image = i.matrix.col(b);
        Matrix t = product(acted, Matrix(image.transpose()));
        extra += r * (t - t.transpose());
      }
    Matrix slice = d.slice(x) + extra;
    d.set_slice(x, slice);
  }
  return BraidedLieBialgebra(f.labels(), f.algebra().structure(), std::move(d), ModuleContext{q, rep});
}

BraidedLieBialgebra transmute(const QuasiTriangularStructure& q) {
  return transmute(q, q.host(), LinearMap{Matrix::Identity(q.dim(), q.dim())});
}

BraidedLieBialgebra braided_dual(const BraidedLieBialgebra& b) {
  Index m = b.space_dim();
  Tensor3 bracket(m, m, m);
  Tensor3 cobracket(m, m, m);
  for (const auto& e : b.cobracket().nonzeros()) bracket(e.j, e.k, e.i) = e.value;
  for (const auto& e : b.bracket().nonzeros()) cobracket(e.k, e.i, e.j) = e.value;
  std::vector<std::string> labels;
  for (const auto& l : b.labels()) labels.push_back(l + "*");
  Representation action = dual_representation(b.ambient_action());
  if (b.is_crossed()) {
    const CrossedModule& cm = b.crossed_context().module;
    std::vector<Matrix> components;
    for (Index a = 0; a < cm.host().dim(); ++a) components.push_back(-cm.coaction_component(a).transpose());
    CrossedModule dual(action, cm.host(), coaction_from_components(components, m));
    return BraidedLieBialgebra(std::move(labels), std::move(bracket), std::move(cobracket), CrossedContext{dual});
  }
  return BraidedLieBialgebra(std::move(labels), std::move(bracket), std::move(cobracket),
                             ModuleContext{b.module_context().q, action});
}

BraidedLieBialgebra op_cop(const BraidedLieBialgebra& b) {
  return BraidedLieBialgebra(b.labels(), -b.bracket(), -b.cobracket(), b.context());
}

CrossedModule induced_coaction(const QuasiTriangularStructure& q, const Representation& v) {
  if (v.host().dim() != q.dim()) throw InputError("representation host does not match r");
  Index n = q.dim();
  Index m = v.space_dim();
  std::vector<Matrix> components(static_cast<std::size_t>(n), Matrix::Zero(m, m));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (const Scalar& r = q.r()(a, b); !r.is_zero()) components[static_cast<std::size_t>(b)] += r * v.rho(a);
  return CrossedModule(v, q.host(), coaction_from_components(components, m));
}

BraidedLieBialgebra to_crossed(const BraidedLieBialgebra& b) {
  if (b.is_crossed()) return b;
  const ModuleContext& mc = b.module_context();
  return BraidedLieBialgebra(b.labels(), b.bracket(), b.cobracket(),
                             CrossedContext{induced_coaction(mc.q, mc.action)});
}

}  // namespace blb
