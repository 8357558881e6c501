#include "blb/lie.hpp"

#include <utility>

#include "blb/errors.hpp"

namespace blb {

struct LieAlgebra::Data {
  std::vector<std::string> labels;
  Tensor3 c;
  std::vector<Matrix> ad;
};

namespace {

std::vector<std::string> default_labels(Index n) {
  std::vector<std::string> out;
  for (Index i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra() : LieAlgebra({}, Tensor3(0, 0, 0)) {}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, Tensor3 bracket) {
  Index n = bracket.dim(0);
  if (bracket.dim(1) != n || bracket.dim(2) != n) throw InputError("bracket tensor must be n×n×n");
  if (labels.empty() && n > 0) labels = default_labels(n);
  if (static_cast<Index>(labels.size()) != n) throw InputError("label count does not match dimension");
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  data->ad.assign(static_cast<std::size_t>(n), Matrix::Zero(n, n));
  for (const auto& e : bracket.nonzeros()) data->ad[static_cast<std::size_t>(e.i)](e.k, e.j) = e.value;
  data->c = std::move(bracket);
  d_ = std::move(data);
}

LieAlgebra LieAlgebra::abelian(Index n) { return LieAlgebra(default_labels(n), Tensor3(n, n, n)); }

LieAlgebra LieAlgebra::abelian(std::vector<std::string> labels) {
  Index n = static_cast<Index>(labels.size());
  return LieAlgebra(std::move(labels), Tensor3(n, n, n));
}

Index LieAlgebra::dim() const { return d_->c.dim(0); }
const std::vector<std::string>& LieAlgebra::labels() const { return d_->labels; }
const Tensor3& LieAlgebra::structure() const { return d_->c; }
const Matrix& LieAlgebra::ad(Index a) const { return d_->ad[static_cast<std::size_t>(a)]; }

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (Index a = 0; a < dim(); ++a)
    if (!x(a).is_zero()) out += x(a) * ad(a);
  return out;
}

Vector LieAlgebra::bracket(Index i, Index j) const { return ad(i).col(j); }

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out = Vector::Zero(dim());
  for (Index a = 0; a < dim(); ++a) {
    if (x(a).is_zero()) continue;
    for (Index b = 0; b < dim(); ++b) {
      if (y(b).is_zero()) continue;
      Scalar w = x(a) * y(b);
      for (Index k = 0; k < dim(); ++k) {
        const Scalar& c = d_->c(a, b, k);
        if (!c.is_zero()) out(k) += w * c;
      }
    }
  }
  return out;
}

Index LieAlgebra::find(const std::string& label) const {
  for (std::size_t i = 0; i < d_->labels.size(); ++i)
    if (d_->labels[i] == label) return static_cast<Index>(i);
  return -1;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.d_ == b.d_) return true;
  return a.labels() == b.labels() && a.structure() == b.structure();
}

LieBialgebra::LieBialgebra(LieAlgebra algebra, Tensor3 cobracket)
    : algebra_(std::move(algebra)), cobracket_(std::move(cobracket)) {
  Index n = algebra_.dim();
  if (cobracket_.dim(0) != n || cobracket_.dim(1) != n || cobracket_.dim(2) != n)
    throw InputError("cobracket tensor must be n×n×n");
}

Matrix LieBialgebra::delta(const Vector& x) const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i)
    if (!x(i).is_zero()) out += x(i) * cobracket_.slice(i);
  return out;
}

QuasiTriangularStructure::QuasiTriangularStructure(LieBialgebra host, Matrix r)
    : host_(std::move(host)), r_(std::move(r)) {
  if (r_.rows() != host_.dim() || r_.cols() != host_.dim()) throw InputError("r must be n×n");
}

Representation::Representation(LieAlgebra host, std::vector<Matrix> action)
    : host_(std::move(host)), action_(std::move(action)) {
  if (static_cast<Index>(action_.size()) != host_.dim())
    throw InputError("representation needs one matrix per basis vector");
  space_dim_ = action_.empty() ? 0 : action_.front().rows();
  for (const Matrix& m : action_)
    if (m.rows() != space_dim_ || m.cols() != space_dim_)
      throw InputError("representation matrices must be square of equal size");
}

Matrix Representation::rho(const Vector& x) const {
  Matrix out = Matrix::Zero(space_dim_, space_dim_);
  for (Index a = 0; a < host_.dim(); ++a)
    if (!x(a).is_zero()) out += x(a) * rho(a);
  return out;
}

Matrix act_on_tensor(const Matrix& a, const Matrix& t) {
  Matrix at = a.transpose();
  return product(a, t) + product(t, at);
}

LieBialgebra dualise(const LieBialgebra& b) {
  Index n = b.dim();
  Tensor3 bracket(n, n, n);
  Tensor3 cobracket(n, n, n);
  for (const auto& e : b.cobracket().nonzeros()) bracket(e.j, e.k, e.i) = e.value;
  for (const auto& e : b.algebra().structure().nonzeros()) cobracket(e.k, e.i, e.j) = e.value;
  std::vector<std::string> labels;
  for (const auto& l : b.labels()) labels.push_back(l + "*");
  return LieBialgebra(LieAlgebra(std::move(labels), std::move(bracket)), std::move(cobracket));
}

Representation adjoint_representation(const LieAlgebra& g) {
  std::vector<Matrix> action;
  for (Index a = 0; a < g.dim(); ++a) action.push_back(g.ad(a));
  return Representation(g, std::move(action));
}

Representation trivial_representation(const LieAlgebra& g, Index m) {
  return Representation(g, std::vector<Matrix>(static_cast<std::size_t>(g.dim()), Matrix::Zero(m, m)));
}

Representation tensor_square(const Representation& v) {
  Index m = v.space_dim();
  Matrix id = Matrix::Identity(m, m);
  std::vector<Matrix> action;
  for (const Matrix& rho : v.action()) action.push_back(kron(rho, id) + kron(id, rho));
  return Representation(v.host(), std::move(action));
}

Representation exterior_square(const Representation& v) {
  Index m = v.space_dim();
  Index n2 = m * (m - 1) / 2;
  Matrix embed = Matrix::Zero(m * m, n2);
  Matrix project = Matrix::Zero(n2, m * m);
  Index p = 0;
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j, ++p) {
      embed(i * m + j, p) = 1;
      embed(j * m + i, p) = -1;
      project(p, i * m + j) = 1;
    }
  Representation sq = tensor_square(v);
  std::vector<Matrix> action;
  for (const Matrix& rho : sq.action()) action.push_back(product(project, product(rho, embed)));
  if (n2 == 0) action.assign(static_cast<std::size_t>(v.host().dim()), Matrix(0, 0));
  return Representation(v.host(), std::move(action));
}

Representation dual_representation(const Representation& v) {
  std::vector<Matrix> action;
  for (const Matrix& rho : v.action()) action.push_back(-rho.transpose());
  return Representation(v.host(), std::move(action));
}

CheckResult check_bracket_map(const LieAlgebra& source, const LieAlgebra& target, const Matrix& m) {
  const std::string name = "bracket_map";
  if (m.rows() != target.dim() || m.cols() != source.dim()) throw InputError("map shape mismatch");
  for (Index i = 0; i < source.dim(); ++i)
    for (Index j = i + 1; j < source.dim(); ++j) {
      Vector lhs = product(m, Matrix(source.bracket(i, j)));
      Vector rhs = target.bracket(Vector(m.col(i)), Vector(m.col(j)));
      if (lhs != rhs) return CheckResult::fail(name, {i, j}, sparse_entries(Vector(lhs - rhs)));
    }
  return CheckResult::pass(name);
}

CheckResult check_cobracket_map(const LieBialgebra& source, const LieBialgebra& target, const Matrix& m) {
  const std::string name = "cobracket_map";
  if (m.rows() != target.dim() || m.cols() != source.dim()) throw InputError("map shape mismatch");
  Matrix mt = m.transpose();
  for (Index i = 0; i < source.dim(); ++i) {
    Matrix lhs = product(m, product(source.delta(i), mt));
    Matrix rhs = target.delta(Vector(m.col(i)));
    if (lhs != rhs) return CheckResult::fail(name, {i}, sparse_entries(Matrix(lhs - rhs)));
  }
  return CheckResult::pass(name);
}

LieAlgebra transport(const LieAlgebra& g, const Matrix& t, std::vector<std::string> labels) {
  auto s = inverse(t);
  if (!s) throw InputError("transport needs an invertible change of coordinates");
  Index n = g.dim();
  Tensor3 c(n, n, n);
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v) {
      Vector w = product(t, Matrix(g.bracket(Vector(s->col(u)), Vector(s->col(v)))));
      for (Index k = 0; k < n; ++k) c(u, v, k) = w(k);
    }
  return LieAlgebra(std::move(labels), std::move(c));
}

LieBialgebra transport(const LieBialgebra& b, const Matrix& t, std::vector<std::string> labels) {
  auto s = inverse(t);
  if (!s) throw InputError("transport needs an invertible change of coordinates");
  Index n = b.dim();
  Matrix tt = t.transpose();
  Tensor3 d(n, n, n);
  for (Index u = 0; u < n; ++u) d.set_slice(u, product(t, product(b.delta(Vector(s->col(u))), tt)));
  return LieBialgebra(transport(b.algebra(), t, std::move(labels)), std::move(d));
}

QuasiTriangularStructure transport(const QuasiTriangularStructure& q, const Matrix& t,
                                   std::vector<std::string> labels) {
  Matrix tt = t.transpose();
  return QuasiTriangularStructure(transport(q.host(), t, std::move(labels)), product(t, product(q.r(), tt)));
}

LieBialgebra restrict_to_basis(const LieBialgebra& b, const std::vector<Index>& basis) {
  Index n = b.dim();
  Index m = static_cast<Index>(basis.size());
  std::vector<Index> position(static_cast<std::size_t>(n), -1);
  for (Index p = 0; p < m; ++p) position[static_cast<std::size_t>(basis[p])] = p;
  auto pos = [&](Index old) {
    Index p = position[static_cast<std::size_t>(old)];
    if (p < 0) throw InputError("basis subset is not closed under bracket and cobracket");
    return p;
  };
  Tensor3 c(m, m, m);
  Tensor3 d(m, m, m);
  std::vector<std::string> labels;
  for (Index p = 0; p < m; ++p) {
    labels.push_back(b.labels()[static_cast<std::size_t>(basis[p])]);
    for (Index q = 0; q < m; ++q)
      for (Index k = 0; k < n; ++k) {
        const Scalar& v = b.algebra().structure()(basis[p], basis[q], k);
        if (!v.is_zero()) c(p, q, pos(k)) = v;
      }
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const Scalar& v = b.cobracket()(basis[p], j, k);
        if (!v.is_zero()) d(p, pos(j), pos(k)) = v;
      }
  }
  return LieBialgebra(LieAlgebra(std::move(labels), std::move(c)), std::move(d));
}

Tensor3 coboundary_cobracket(const LieAlgebra& g, const Matrix& r) {
  Index n = g.dim();
  if (r.rows() != n || r.cols() != n) throw InputError("r must be n×n");
  Tensor3 d(n, n, n);
  for (Index i = 0; i < n; ++i) d.set_slice(i, act_on_tensor(g.ad(i), r));
  return d;
}

}  // namespace blb
