#include "blb/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

namespace blb {

namespace {

bool is_positive(const Root& r) {
  for (int c : r)
    if (c != 0) return c > 0;
  return false;
}

Root negate(Root r) {
  for (int& c : r) c = -c;
  return r;
}

Root add(const Root& a, const Root& b) {
  Root out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Root sub(const Root& a, const Root& b) { return add(a, negate(b)); }

int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

// beta(H_i) = sum_j n_j a(i, j).
int pairing_with_coroot(const CartanMatrix& cm, const Root& beta, int i) {
  int out = 0;
  for (int j = 0; j < cm.rank(); ++j) out += beta[static_cast<std::size_t>(j)] * cm(i, j);
  return out;
}

std::vector<std::vector<int>> named_entries(const std::string& type) {
  if (type.size() < 2) throw InputError("unknown Cartan type '" + type + "'");
  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  int n = 0;
  std::size_t used = 0;
  try {
    n = std::stoi(type.substr(1), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != type.size() - 1) throw InputError("unknown Cartan type '" + type + "'");
  if (n < 1) throw InputError("Cartan type rank must be positive");
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v; };
  for (int i = 0; i < n; ++i) set(i, i, 2);
  auto chain = [&](int last) {
    for (int i = 0; i + 1 <= last; ++i) {
      set(i, i + 1, -1);
      set(i + 1, i, -1);
    }
  };
  switch (family) {
    case 'A':
      chain(n - 1);
      break;
    case 'B':
      if (n < 2) throw InputError("B_n needs n >= 2");
      chain(n - 1);
      set(n - 1, n - 2, -2);
      break;
    case 'C':
      if (n < 2) throw InputError("C_n needs n >= 2");
      chain(n - 1);
      set(n - 2, n - 1, -2);
      break;
    case 'D':
      if (n < 4) throw InputError("D_n needs n >= 4");
      chain(n - 2);
      set(n - 3, n - 1, -1);
      set(n - 1, n - 3, -1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw InputError("E_n needs 6 <= n <= 8");
      // 1-3-4-5-...-n with 2 attached to 4.
      set(0, 2, -1), set(2, 0, -1);
      set(1, 3, -1), set(3, 1, -1);
      for (int i = 2; i + 1 < n; ++i) set(i, i + 1, -1), set(i + 1, i, -1);
      break;
    case 'F':
      if (n != 4) throw InputError("F_n exists only for n = 4");
      chain(3);
      set(1, 2, -2);
      break;
    case 'G':
      if (n != 2) throw InputError("G_n exists only for n = 2");
      set(0, 1, -1);
      set(1, 0, -3);
      break;
    default:
      throw InputError("unknown Cartan type '" + type + "'");
  }
  return a;
}

}  // namespace

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  std::size_t n = entries_.size();
  if (n == 0) throw InputError("Cartan matrix must be nonempty");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw InputError("Cartan matrix must be square");
    if (entries_[i][i] != 2) throw InputError("Cartan matrix needs 2 on the diagonal");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries_[i][j] > 0) throw InputError("off-diagonal Cartan entries must be <= 0");
      if ((entries_[i][j] == 0) != (entries_[j][i] == 0))
        throw InputError("Cartan entries a(i,j) and a(j,i) must vanish together");
    }

  // Rational symmetrizer per component, propagated along edges, then scaled
  // to the smallest integers.
  std::vector<mpq_class> d(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<std::size_t> component{start};
    for (std::size_t head = 0; head < component.size(); ++head) {
      std::size_t i = component[head];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || entries_[i][j] == 0) continue;
        mpq_class want = d[i] * entries_[i][j] / entries_[j][i];
        if (d[j] == 0) {
          d[j] = want;
          component.push_back(j);
        } else if (d[j] != want) {
          throw InputError("Cartan matrix is not symmetrizable");
        }
      }
    }
    mpz_class den = 1;
    for (std::size_t i : component) den = lcm(den, mpz_class(d[i].get_den()));
    mpz_class num = 0;
    for (std::size_t i : component) num = gcd(num, mpz_class(d[i] * den));
    for (std::size_t i : component) d[i] = d[i] * den / num;
  }
  for (std::size_t i = 0; i < n; ++i) symmetrizer_.push_back(static_cast<int>(d[i].get_num().get_si()));
}

CartanMatrix CartanMatrix::of_type(const std::string& type) { return CartanMatrix(named_entries(type)); }

bool CartanMatrix::is_connected() const {
  std::vector<bool> seen(entries_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < entries_.size(); ++j)
      if (!seen[j] && entries_[i][j] != 0) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
  }
  return count == entries_.size();
}

Matrix CartanMatrix::as_matrix() const {
  Matrix out(rank(), rank());
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) out(i, j) = (*this)(i, j);
  return out;
}

Index RootSystem::index_of(const Root& root) const {
  auto it = std::find(positive_roots.begin(), positive_roots.end(), root);
  return it == positive_roots.end() ? -1 : static_cast<Index>(it - positive_roots.begin());
}

int root_inner(const CartanMatrix& cm, const Root& a, const Root& b) {
  int out = 0;
  for (int i = 0; i < cm.rank(); ++i)
    for (int j = 0; j < cm.rank(); ++j)
      out += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] * cm.inner(i, j);
  return out;
}

RootSystem build_root_system(const CartanMatrix& cm, Index cap) {
  int r = cm.rank();
  std::vector<Root> roots;
  std::map<Root, bool> known;
  for (int i = 0; i < r; ++i) {
    Root s(static_cast<std::size_t>(r), 0);
    s[static_cast<std::size_t>(i)] = 1;
    roots.push_back(s);
    known[s] = true;
  }
  // Breadth-first by height: beta + alpha_i is a root iff the alpha_i-string
  // through beta extends upward, q = p - beta(H_i) > 0.
  for (std::size_t head = 0; head < roots.size(); ++head) {
    Root beta = roots[head];
    for (int i = 0; i < r; ++i) {
      Root alpha(static_cast<std::size_t>(r), 0);
      alpha[static_cast<std::size_t>(i)] = 1;
      if (beta == alpha) continue;
      int p = 0;
      for (Root down = sub(beta, alpha); is_positive(down) && known.count(down); down = sub(down, alpha)) ++p;
      int q = p - pairing_with_coroot(cm, beta, i);
      if (q <= 0) continue;
      Root up = add(beta, alpha);
      if (known.count(up)) continue;
      known[up] = true;
      roots.push_back(up);
      if (static_cast<Index>(roots.size()) > cap)
        throw InputError("root enumeration exceeded " + std::to_string(cap) + " positive roots; not of finite type");
    }
  }
  std::stable_sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  RootSystem out;
  out.positive_roots = roots;
  for (const Root& a : roots) out.lengths.push_back(root_inner(cm, a, a) / 2);
  return out;
}

std::string root_label(const Root& root, bool positive) {
  std::string out = positive ? "X+" : "X-";
  for (std::size_t i = 0; i < root.size(); ++i)
    for (int k = 0; k < root[i]; ++k) out += static_cast<char>('1' + i);
  return out;
}

ParsedLabel parse_basis_label(const std::string& label, int rank) {
  ParsedLabel out{ParsedLabel::cartan, {}, -1};
  auto bad = [&]() { return InputError("'" + label + "' is not a Chevalley basis label"); };
  if (label.size() >= 2 && label[0] == 'H') {
    for (std::size_t i = 1; i < label.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(label[i]))) throw bad();
    out.index = std::stoi(label.substr(1)) - 1;
    if (out.index < 0 || out.index >= rank) throw bad();
    return out;
  }
  if (label.size() < 3 || label[0] != 'X' || (label[1] != '+' && label[1] != '-')) throw bad();
  out.kind = label[1] == '+' ? ParsedLabel::positive : ParsedLabel::negative;
  out.root.assign(static_cast<std::size_t>(rank), 0);
  for (std::size_t i = 2; i < label.size(); ++i) {
    int d = label[i] - '1';
    if (d < 0 || d >= rank) throw bad();
    ++out.root[static_cast<std::size_t>(d)];
  }
  return out;
}

Index ChevalleyBasis::position(const std::string& label) const {
  ParsedLabel p = parse_basis_label(label, cartan.rank());
  if (p.kind == ParsedLabel::cartan) return cartan_index(p.index);
  Index i = roots.index_of(p.root);
  if (i < 0) throw InputError("'" + label + "' is not a root of this system");
  return p.kind == ParsedLabel::positive ? positive(i) : negative(i);
}

ChevalleyBasis build_chevalley_basis(const CartanMatrix& cm) {
  RootSystem rs = build_root_system(cm);
  int r = cm.rank();
  Index np = rs.size();
  Index n = 2 * np + r;
  ChevalleyBasis basis{cm, rs, {}};

  std::map<Root, Index> index;
  for (Index a = 0; a < np; ++a) index[rs.positive_roots[static_cast<std::size_t>(a)]] = a;
  auto is_root = [&](const Root& x) { return index.count(is_positive(x) ? x : negate(x)) > 0; };
  auto position = [&](const Root& x) {
    return is_positive(x) ? basis.positive(index.at(x)) : basis.negative(index.at(negate(x)));
  };

  // Extraspecial pair of xi: (alpha_i, xi - alpha_i) with i minimal.
  auto extraspecial = [&](const Root& xi) {
    for (int i = 0; i < r; ++i) {
      Root alpha(static_cast<std::size_t>(r), 0);
      alpha[static_cast<std::size_t>(i)] = 1;
      Root rest = sub(xi, alpha);
      if (is_positive(rest) && index.count(rest)) return std::make_pair(alpha, rest);
    }
    throw ConsistencyError("no extraspecial pair");
  };
  auto string_below = [&](const Root& alpha, const Root& beta) {
    int p = 0;
    for (Root down = sub(beta, alpha); is_root(down); down = sub(down, alpha)) ++p;
    return p;
  };
  auto norm = [&](const Root& x) { return Scalar(root_inner(cm, x, x)); };

  std::map<std::pair<Root, Root>, Scalar> memo;
  std::function<Scalar(const Root&, const Root&)> structure = [&](const Root& a, const Root& b) -> Scalar {
    auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Scalar value;
    bool pa = is_positive(a), pb = is_positive(b);
    if (pa && pb) {
      if (index.at(a) > index.at(b)) {
        value = -structure(b, a);
      } else {
        Root xi = add(a, b);
        auto [a1, b1] = extraspecial(xi);
        if (a == a1) {
          value = Scalar(string_below(a, b) + 1);
        } else {
          Scalar sum = 0;
          if (Root t = sub(b1, a); is_root(t))
            sum += structure(b1, negate(a)) * structure(a1, negate(b)) / norm(t);
          if (Root t = sub(a1, a); is_root(t))
            sum += structure(negate(a), a1) * structure(b1, negate(b)) / norm(t);
          value = norm(xi) / structure(a1, b1) * sum;
        }
      }
    } else if (!pa && !pb) {
      value = -structure(negate(a), negate(b));
    } else {
      Root g = negate(add(a, b));
      if (is_positive(g) == pb)
        value = norm(g) / norm(a) * structure(b, g);
      else
        value = norm(g) / norm(b) * structure(g, a);
    }
    memo[key] = value;
    return value;
  };

  Tensor3 c(n, n, n);
  std::vector<Root> signed_roots;
  for (const Root& a : rs.positive_roots) signed_roots.push_back(a);
  for (const Root& a : rs.positive_roots) signed_roots.push_back(negate(a));
  for (const Root& a : signed_roots) {
    Index pa = position(a);
    for (int i = 0; i < r; ++i) {
      int w = pairing_with_coroot(cm, a, i);
      if (w == 0) continue;
      c(basis.cartan_index(i), pa, pa) = w;
      c(pa, basis.cartan_index(i), pa) = -w;
    }
    for (const Root& b : signed_roots) {
      Root s = add(a, b);
      Index pb = position(b);
      if (std::all_of(s.begin(), s.end(), [](int x) { return x == 0; })) {
        // [X_a, X_-a] = H_a = sum_i n_i (d_i / d_a) H_i, with sign for a < 0.
        Root pos = is_positive(a) ? a : negate(a);
        int sign = is_positive(a) ? 1 : -1;
        Scalar da(root_inner(cm, pos, pos) / 2);
        for (int i = 0; i < r; ++i)
          if (pos[static_cast<std::size_t>(i)] != 0)
            c(pa, pb, basis.cartan_index(i)) =
                Scalar(sign * pos[static_cast<std::size_t>(i)] * cm.symmetrizer()[static_cast<std::size_t>(i)]) / da;
      } else if (is_root(s)) {
        c(pa, pb, position(s)) = structure(a, b);
      }
    }
  }

  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (Index a = 0; a < np; ++a) {
    const Root& root = rs.positive_roots[static_cast<std::size_t>(a)];
    labels[static_cast<std::size_t>(basis.positive(a))] = root_label(root, true);
    labels[static_cast<std::size_t>(basis.negative(a))] = root_label(root, false);
  }
  for (int i = 0; i < r; ++i) labels[static_cast<std::size_t>(basis.cartan_index(i))] = "H" + std::to_string(i + 1);
  LieAlgebra g(std::move(labels), std::move(c));

  // r = sum_alpha d_alpha X_alpha⊗X_-alpha + 1/2 sum A_ij H_i⊗H_j with
  // A = D a^-1.
  Matrix rm = Matrix::Zero(n, n);
  for (Index a = 0; a < np; ++a) rm(basis.positive(a), basis.negative(a)) = rs.lengths[static_cast<std::size_t>(a)];
  auto a_inv = inverse(cm.as_matrix());
  if (!a_inv) throw InputError("Cartan matrix is singular; not of finite type");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      rm(basis.cartan_index(i), basis.cartan_index(j)) =
          Scalar(cm.symmetrizer()[static_cast<std::size_t>(i)]) * (*a_inv)(i, j) / Scalar(2);
  Tensor3 d = coboundary_cobracket(g, rm);
  basis.q = QuasiTriangularStructure(LieBialgebra(g, std::move(d)), std::move(rm));
  return basis;
}

ChevalleyBasis build_simple(const CartanMatrix& cm) {
  if (!cm.is_connected()) throw InputError("Cartan matrix has a disconnected diagram; the algebra is not simple");
  ChevalleyBasis basis = build_chevalley_basis(cm);
  CheckReport report = check_quasitriangular(basis.q);
  if (const CheckResult* f = first_failure(report)) {
    std::string where;
    for (Index w : f->where) where += " " + std::to_string(w);
    throw ConsistencyError("Chevalley construction fails " + f->name + " at" + where);
  }
  return basis;
}

QuasiTriangularStructure build_simple_lie_bialgebra(const CartanMatrix& cm) { return build_simple(cm).q; }

SplitProjection parabolic_split(const ChevalleyBasis& basis, int deleted) {
  const CartanMatrix& cm = basis.cartan;
  int r = cm.rank();
  if (deleted < 0 || deleted >= r) throw InputError("node " + std::to_string(deleted + 1) + " is out of range");
  if (r > 1) {
    std::vector<std::vector<int>> rest;
    for (int i = 0; i < r; ++i) {
      if (i == deleted) continue;
      std::vector<int> row;
      for (int j = 0; j < r; ++j)
        if (j != deleted) row.push_back(cm(i, j));
      rest.push_back(row);
    }
    if (!CartanMatrix(rest).is_connected())
      throw InputError("deleting node " + std::to_string(deleted + 1) + " disconnects the diagram; unsupported");
  }
  std::vector<Index> big_basis;
  std::vector<Index> small_basis;
  for (int i = 0; i < r; ++i) {
    big_basis.push_back(basis.cartan_index(i));
    small_basis.push_back(basis.cartan_index(i));
  }
  for (Index a = 0; a < basis.roots.size(); ++a) {
    big_basis.push_back(basis.negative(a));
    if (basis.roots.positive_roots[static_cast<std::size_t>(a)][static_cast<std::size_t>(deleted)] == 0)
      small_basis.push_back(basis.negative(a));
  }
  LieBialgebra big = restrict_to_basis(basis.algebra(), big_basis);
  LieBialgebra small = restrict_to_basis(basis.algebra(), small_basis);
  Matrix pi = Matrix::Zero(static_cast<Index>(small_basis.size()), static_cast<Index>(big_basis.size()));
  for (std::size_t p = 0; p < small_basis.size(); ++p) {
    auto it = std::find(big_basis.begin(), big_basis.end(), small_basis[p]);
    pi(static_cast<Index>(p), static_cast<Index>(it - big_basis.begin())) = 1;
  }
  Matrix incl = pi.transpose();
  return SplitProjection{std::move(big), std::move(small), LinearMap{pi}, LinearMap{incl}};
}

Vector central_commutant(const ChevalleyBasis& basis, int deleted) {
  const CartanMatrix& cm = basis.cartan;
  int r = cm.rank();
  if (deleted < 0 || deleted >= r) throw InputError("node " + std::to_string(deleted + 1) + " is out of range");
  // alpha_j(sum_i c_i H_i) = sum_i c_i a(i, j) = 0 for retained j.
  Matrix system(r - 1, r);
  Index row = 0;
  for (int j = 0; j < r; ++j) {
    if (j == deleted) continue;
    for (int i = 0; i < r; ++i) system(row, i) = cm(i, j);
    ++row;
  }
  Matrix kernel = kernel_matrix(system);
  if (kernel.cols() != 1) throw ConsistencyError("commutant of the Levi factor is not one-dimensional");
  Scalar value = 0;
  for (int i = 0; i < r; ++i) value += kernel(i, 0) * Scalar(cm(i, deleted));
  if (value.is_zero()) throw ConsistencyError("commutant element vanishes on the deleted simple root");
  Vector out = Vector::Zero(basis.algebra().dim());
  for (int i = 0; i < r; ++i) out(basis.cartan_index(i)) = kernel(i, 0) / value;
  return out;
}

CartanMatrix recover_cartan_matrix(const LieAlgebra& g, const Matrix& toral) {
  Index n = g.dim();
  Index r = toral.cols();
  if (toral.rows() != n || r == 0) throw InputError("toral basis has the wrong shape");
  std::vector<Matrix> ads;
  for (Index k = 0; k < r; ++k) {
    ads.push_back(g.ad(Vector(toral.col(k))));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (i != j && !ads.back()(i, j).is_zero())
          throw InputError("toral element does not act diagonally in the given basis");
  }
  std::vector<Vector> weight(static_cast<std::size_t>(n), Vector::Zero(r));
  for (Index v = 0; v < n; ++v)
    for (Index k = 0; k < r; ++k) weight[static_cast<std::size_t>(v)](k) = ads[static_cast<std::size_t>(k)](v, v);

  auto positive = [&](const Vector& w) {
    for (Index k = 0; k < r; ++k)
      if (w(k).re() != 0) return w(k).re() > 0;
    for (Index k = 0; k < r; ++k)
      if (w(k).im() != 0) return w(k).im() > 0;
    return false;
  };
  std::vector<Index> positive_roots;
  for (Index v = 0; v < n; ++v)
    if (!is_zero(weight[static_cast<std::size_t>(v)]) && positive(weight[static_cast<std::size_t>(v)]))
      positive_roots.push_back(v);
  auto find_weight = [&](const Vector& w) -> Index {
    Index found = -1;
    for (Index v = 0; v < n; ++v)
      if (weight[static_cast<std::size_t>(v)] == w) {
        if (found >= 0) throw InputError("root space of dimension > 1; not a split simple algebra");
        found = v;
      }
    return found;
  };
  std::vector<Index> simple;
  for (Index v : positive_roots) {
    bool decomposable = false;
    for (Index u : positive_roots)
      for (Index t : positive_roots)
        if (weight[static_cast<std::size_t>(u)] + weight[static_cast<std::size_t>(t)] ==
            weight[static_cast<std::size_t>(v)])
          decomposable = true;
    if (!decomposable) simple.push_back(v);
  }
  if (static_cast<Index>(simple.size()) != r) throw InputError("number of simple roots differs from the toral rank");

  std::vector<std::vector<int>> a(simple.size(), std::vector<int>(simple.size(), 0));
  for (std::size_t i = 0; i < simple.size(); ++i) {
    const Vector& alpha = weight[static_cast<std::size_t>(simple[i])];
    Index minus = find_weight(Vector(-alpha));
    if (minus < 0) throw InputError("negative of a simple root is not a weight");
    Matrix h = g.bracket(simple[i], minus);
    auto coords = solve(toral, h);
    if (!coords) throw InputError("[X_alpha, X_-alpha] is not in the toral subalgebra");
    Vector c = coords->col(0);
    Scalar alpha_h = 0;
    for (Index k = 0; k < r; ++k) alpha_h += c(k) * alpha(k);
    if (alpha_h.is_zero()) throw InputError("simple root vanishes on its coroot");
    for (std::size_t j = 0; j < simple.size(); ++j) {
      const Vector& beta = weight[static_cast<std::size_t>(simple[j])];
      Scalar value = 0;
      for (Index k = 0; k < r; ++k) value += c(k) * beta(k);
      value = Scalar(2) * value / alpha_h;
      if (!value.is_real() || value.re().get_den() != 1) throw InputError("recovered Cartan entry is not an integer");
      a[i][j] = static_cast<int>(value.re().get_num().get_si());
    }
  }
  return CartanMatrix(a);
}

}  // namespace blb
