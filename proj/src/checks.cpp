#include <chrono>
#include <deque>

#include "blb/errors.hpp"
#include "blb/lie.hpp"

namespace blb {

CheckResult CheckResult::pass(std::string name) { return CheckResult{std::move(name), true, {}, {}}; }

CheckResult CheckResult::fail(std::string name, std::vector<Index> where, std::vector<ResidualEntry> residual) {
  return CheckResult{std::move(name), false, std::move(where), std::move(residual)};
}

bool all_passed(const CheckReport& report) { return first_failure(report) == nullptr; }

const CheckResult* first_failure(const CheckReport& report) {
  for (const auto& r : report)
    if (!r.passed) return &r;
  return nullptr;
}

void append(CheckReport& into, const CheckReport& from) { into.insert(into.end(), from.begin(), from.end()); }

std::vector<ResidualEntry> sparse_entries(const Vector& v) {
  std::vector<ResidualEntry> out;
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) out.push_back({{i}, v(i)});
  return out;
}

std::vector<ResidualEntry> sparse_entries(const Matrix& m) {
  std::vector<ResidualEntry> out;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out.push_back({{i, j}, m(i, j)});
  return out;
}

std::vector<ResidualEntry> sparse_entries(const Tensor3& t) {
  std::vector<ResidualEntry> out;
  for (const auto& e : t.nonzeros()) out.push_back({{e.i, e.j, e.k}, e.value});
  return out;
}

namespace {

// Nonzero (j,k,value) entries of each slice t(i,·,·).
using SliceEntries = std::vector<std::vector<Tensor3::Entry>>;

SliceEntries slices_of(const Tensor3& t) {
  SliceEntries out(static_cast<std::size_t>(t.dim(0)));
  for (const auto& e : t.nonzeros()) out[static_cast<std::size_t>(e.i)].push_back(e);
  return out;
}

}  // namespace

CheckResult check_bracket_antisymmetry(const LieAlgebra& g) {
  const Tensor3& c = g.structure();
  for (Index i = 0; i < g.dim(); ++i)
    for (Index j = i; j < g.dim(); ++j) {
      Vector r(g.dim());
      for (Index k = 0; k < g.dim(); ++k) r(k) = c(i, j, k) + c(j, i, k);
      if (!is_zero(r)) return CheckResult::fail("bracket_antisymmetry", {i, j}, sparse_entries(r));
    }
  return CheckResult::pass("bracket_antisymmetry");
}

CheckResult check_cobracket_antisymmetry(const LieBialgebra& b) {
  for (Index i = 0; i < b.dim(); ++i) {
    Matrix d = b.delta(i);
    Matrix r = d + d.transpose();
    if (!is_zero(r)) return CheckResult::fail("cobracket_antisymmetry", {i}, sparse_entries(r));
  }
  return CheckResult::pass("cobracket_antisymmetry");
}

CheckResult check_jacobi(const LieAlgebra& g) {
  if (!check_bracket_antisymmetry(g)) throw PreconditionError("Jacobi check needs an antisymmetric bracket");
  Index n = g.dim();
  auto bracket_with = [&](const Vector& v, Index k) {
    Vector out = Vector::Zero(n);
    for (Index a = 0; a < n; ++a)
      if (!v(a).is_zero()) out += v(a) * g.ad(a).col(k);
    return out;
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        Vector r = bracket_with(g.bracket(i, j), k) + bracket_with(g.bracket(j, k), i) +
                   bracket_with(g.bracket(k, i), j);
        if (!is_zero(r)) return CheckResult::fail("jacobi", {i, j, k}, sparse_entries(r));
      }
  return CheckResult::pass("jacobi");
}

CheckResult check_cojacobi(const LieBialgebra& b) {
  if (!check_cobracket_antisymmetry(b))
    throw PreconditionError("coJacobi check needs an antisymmetric cobracket");
  Index n = b.dim();
  SliceEntries rows = slices_of(b.cobracket());
  for (Index x = 0; x < n; ++x) {
    // t(a,b,c) = sum_k d(x,a,k) d(k,b,c), i.e. (id⊗delta)delta(e_x).
    Tensor3 t(n, n, n);
    for (const auto& outer : rows[static_cast<std::size_t>(x)])
      for (const auto& inner : rows[static_cast<std::size_t>(outer.k)])
        t(outer.j, inner.j, inner.k) += outer.value * inner.value;
    Tensor3 once = t.rotated();
    Tensor3 r = t + once + once.rotated();
    if (!r.is_zero()) return CheckResult::fail("cojacobi", {x}, sparse_entries(r));
  }
  return CheckResult::pass("cojacobi");
}

CheckResult check_cocycle(const LieBialgebra& b) {
  Index n = b.dim();
  const LieAlgebra& g = b.algebra();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Matrix r = b.delta(g.bracket(i, j)) - act_on_tensor(g.ad(i), b.delta(j)) + act_on_tensor(g.ad(j), b.delta(i));
      if (!is_zero(r)) return CheckResult::fail("cocycle", {i, j}, sparse_entries(r));
    }
  return CheckResult::pass("cocycle");
}

CheckResult check_cybe(const LieAlgebra& g, const Matrix& r) {
  Index n = g.dim();
  if (r.rows() != n || r.cols() != n) throw InputError("r must be n×n for the CYBE check");
  const Tensor3& c = g.structure();
  std::vector<Tensor3::Entry> terms;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (!r(a, b).is_zero()) terms.push_back({a, b, 0, r(a, b)});
  Tensor3 t(n, n, n);
  for (const auto& x : terms)
    for (const auto& y : terms) {
      Scalar w = x.value * y.value;
      for (Index k = 0; k < n; ++k) {
        if (const Scalar& s = c(x.i, y.i, k); !s.is_zero()) t(k, x.j, y.j) += w * s;
        if (const Scalar& s = c(x.j, y.i, k); !s.is_zero()) t(x.i, k, y.j) += w * s;
        if (const Scalar& s = c(x.j, y.j, k); !s.is_zero()) t(x.i, y.i, k) += w * s;
      }
    }
  if (!t.is_zero()) {
    auto entries = sparse_entries(t);
    return CheckResult::fail("cybe", entries.front().index, entries);
  }
  return CheckResult::pass("cybe");
}

CheckResult check_coboundary(const QuasiTriangularStructure& q) {
  const LieAlgebra& g = q.algebra();
  for (Index i = 0; i < g.dim(); ++i) {
    Matrix r = q.host().delta(i) - act_on_tensor(g.ad(i), q.r());
    if (!is_zero(r)) return CheckResult::fail("coboundary", {i}, sparse_entries(r));
  }
  return CheckResult::pass("coboundary");
}

CheckResult check_r_plus_ad_invariant(const QuasiTriangularStructure& q) {
  Matrix k = q.two_r_plus();
  for (Index a = 0; a < q.dim(); ++a) {
    Matrix r = act_on_tensor(q.algebra().ad(a), k);
    if (!is_zero(r)) return CheckResult::fail("r_plus_ad_invariant", {a}, sparse_entries(r));
  }
  return CheckResult::pass("r_plus_ad_invariant");
}

CheckResult check_representation(const Representation& v) {
  const LieAlgebra& g = v.host();
  for (Index a = 0; a < g.dim(); ++a)
    for (Index b = a + 1; b < g.dim(); ++b) {
      Matrix r = v.rho(g.bracket(a, b)) - (product(v.rho(a), v.rho(b)) - product(v.rho(b), v.rho(a)));
      if (!is_zero(r)) return CheckResult::fail("representation", {a, b}, sparse_entries(r));
    }
  return CheckResult::pass("representation");
}

bool is_factorisable(const QuasiTriangularStructure& q) { return matrix_rank(q.two_r_plus()) == q.dim(); }

CheckReport check_lie_algebra(const LieAlgebra& g) {
  CheckReport out{check_bracket_antisymmetry(g)};
  if (out.back()) out.push_back(check_jacobi(g));
  return out;
}

CheckReport check_lie_bialgebra(const LieBialgebra& b) {
  CheckReport out = check_lie_algebra(b.algebra());
  out.push_back(check_cobracket_antisymmetry(b));
  if (out.back()) out.push_back(check_cojacobi(b));
  if (all_passed(out)) out.push_back(check_cocycle(b));
  return out;
}

CheckReport check_quasitriangular(const QuasiTriangularStructure& q) {
  CheckReport out = check_lie_bialgebra(q.host());
  out.push_back(check_coboundary(q));
  out.push_back(check_cybe(q.algebra(), q.r()));
  out.push_back(check_r_plus_ad_invariant(q));
  return out;
}

Matrix cochain_differential_1(const LieAlgebra& g, const Representation& w, const Matrix& phi) {
  Index n = g.dim();
  if (phi.rows() != w.space_dim() || phi.cols() != n) throw InputError("1-cochain shape mismatch");
  Matrix out(w.space_dim(), n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      out.col(i * n + j) = product(w.rho(i), Matrix(phi.col(j))) - product(w.rho(j), Matrix(phi.col(i))) -
                           product(phi, Matrix(g.bracket(i, j)));
  return out;
}

Matrix cochain_differential_2(const LieAlgebra& g, const Representation& w, const Matrix& phi) {
  Index n = g.dim();
  if (phi.rows() != w.space_dim() || phi.cols() != n * n) throw InputError("2-cochain shape mismatch");
  auto at = [&](Index i, Index j) { return Matrix(phi.col(i * n + j)); };
  // phi(u, e_k) for u a vector.
  auto at_vec = [&](const Vector& u, Index k) {
    Matrix out = Matrix::Zero(w.space_dim(), 1);
    for (Index a = 0; a < n; ++a)
      if (!u(a).is_zero()) out += u(a) * phi.col(a * n + k);
    return out;
  };
  Matrix out(w.space_dim(), n * n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        Matrix v = product(w.rho(i), at(j, k)) - product(w.rho(j), at(i, k)) + product(w.rho(k), at(i, j)) -
                   at_vec(g.bracket(i, j), k) + at_vec(g.bracket(i, k), j) - at_vec(g.bracket(j, k), i);
        out.col((i * n + j) * n + k) = v;
      }
  return out;
}

Matrix center_basis(const LieAlgebra& g) {
  Index n = g.dim();
  Matrix stacked(n * n, n);
  for (Index a = 0; a < n; ++a) stacked.block(a * n, 0, n, n) = g.ad(a);
  return kernel_matrix(stacked);
}

namespace {

// Dimension of the unital associative algebra generated by the matrices,
// stopping early once it reaches n².
template <typename S>
Index generated_algebra_dim(const std::vector<MatrixX<S>>& gens, Index n) {
  SpanBuilder<S> span(n * n);
  std::deque<MatrixX<S>> queue;
  MatrixX<S> id = MatrixX<S>::Identity(n, n);
  span.insert(flatten(id));
  queue.push_back(id);
  while (!queue.empty() && span.dim() < n * n) {
    MatrixX<S> m = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : gens) {
      MatrixX<S> p = product(a, m);
      if (span.insert(flatten(p))) queue.push_back(std::move(p));
      if (span.dim() == n * n) break;
    }
  }
  return span.dim();
}

}  // namespace

bool is_simple(const LieAlgebra& g) {
  Index n = g.dim();
  if (n == 0 || g.structure().is_zero()) return false;
  if (center_basis(g).cols() != 0) return false;
  std::vector<MatrixX<Modular>> mod_gens;
  bool reducible = true;
  for (Index a = 0; a < n && reducible; ++a) {
    auto m = reduce_mod(g.ad(a));
    if (m) {
      mod_gens.push_back(*m);
    } else {
      reducible = false;
    }
  }
  // Full dimension modulo P certifies full dimension over Q(i).
  if (reducible && generated_algebra_dim(mod_gens, n) == n * n) return true;
  std::vector<Matrix> gens;
  for (Index a = 0; a < n; ++a) gens.push_back(g.ad(a));
  return generated_algebra_dim(gens, n) == n * n;
}

CasimirOutcome casimir_eigenvalue(const QuasiTriangularStructure& q, const Representation& v) {
  if (v.host().dim() != q.dim()) throw InputError("representation host does not match r");
  Index m = v.space_dim();
  Matrix k = q.two_r_plus();
  Matrix c = Matrix::Zero(m, m);
  for (Index a = 0; a < q.dim(); ++a)
    for (Index b = 0; b < q.dim(); ++b)
      if (!k(a, b).is_zero()) c += (k(a, b) / Scalar(2)) * product(v.rho(a), v.rho(b));
  CasimirOutcome out{std::nullopt, c};
  if (m == 0) {
    out.eigenvalue = Scalar(0);
    return out;
  }
  Scalar lambda = c(0, 0);
  if (c == lambda * Matrix::Identity(m, m)) out.eigenvalue = lambda;
  return out;
}

}  // namespace blb
