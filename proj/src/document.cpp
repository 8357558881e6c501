#include "blb/document.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

namespace blb {

namespace {

const char* const kSchemaVersion = "1";

struct KindName {
  std::string operator()(const LieAlgebra&) const { return "lie_algebra"; }
  std::string operator()(const LieBialgebra&) const { return "lie_bialgebra"; }
  std::string operator()(const QuasiTriangularStructure&) const { return "quasitriangular"; }
  std::string operator()(const Representation&) const { return "representation"; }
  std::string operator()(const CrossedModule&) const { return "crossed"; }
  std::string operator()(const BraidedLieBialgebra&) const { return "braided"; }
  std::string operator()(const LinearMap&) const { return "linear_map"; }
  std::string operator()(const SplitProjection&) const { return "split_projection"; }
};

Json header(const std::string& kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

Json tensor_entries(const Tensor3& t) {
  Json out = Json::array();
  for (const auto& e : t.nonzeros()) out.push_back(Json::array({e.i, e.j, e.k, to_string(e.value)}));
  return out;
}

Json matrix_entries(const Matrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out.push_back(Json::array({i, j, to_string(m(i, j))}));
  return out;
}

// Entries [a, row, col, s] for a list of equally sized matrices.
Json stacked_entries(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (Index i = 0; i < ms[a].rows(); ++i)
      for (Index j = 0; j < ms[a].cols(); ++j)
        if (!ms[a](i, j).is_zero()) out.push_back(Json::array({static_cast<Index>(a), i, j, to_string(ms[a](i, j))}));
  return out;
}

Json algebra_json(const LieAlgebra& g) {
  Json j = header("lie_algebra");
  j["dim"] = g.dim();
  j["basis"] = g.labels();
  j["bracket"] = tensor_entries(g.structure());
  return j;
}

Json bialgebra_json(const LieBialgebra& b, const std::string& kind = "lie_bialgebra") {
  Json j = header(kind);
  j["dim"] = b.dim();
  j["basis"] = b.labels();
  j["bracket"] = tensor_entries(b.algebra().structure());
  j["cobracket"] = tensor_entries(b.cobracket());
  return j;
}

Json quasitriangular_json(const QuasiTriangularStructure& q) {
  Json j = bialgebra_json(q.host(), "quasitriangular");
  j["r"] = matrix_entries(q.r());
  return j;
}

Json representation_json(const Representation& v) {
  Json j = header("representation");
  j["algebra"] = algebra_json(v.host());
  j["space_dim"] = v.space_dim();
  j["action"] = stacked_entries(v.action());
  return j;
}

Json crossed_json(const CrossedModule& cm) {
  Json j = header("crossed");
  j["host"] = bialgebra_json(cm.host());
  j["space_dim"] = cm.space_dim();
  j["action"] = stacked_entries(cm.action().action());
  std::vector<Matrix> components;
  for (Index a = 0; a < cm.host().dim(); ++a) components.push_back(cm.coaction_component(a));
  j["coaction"] = stacked_entries(components);
  return j;
}

Json linear_map_json(const LinearMap& m) {
  Json j = header("linear_map");
  j["rows"] = m.matrix.rows();
  j["cols"] = m.matrix.cols();
  j["entries"] = matrix_entries(m.matrix);
  return j;
}

Json braided_json(const BraidedLieBialgebra& b) {
  Json j = header("braided");
  j["space_dim"] = b.space_dim();
  j["basis"] = b.labels();
  j["bracket"] = tensor_entries(b.bracket());
  j["cobracket"] = tensor_entries(b.cobracket());
  Json context;
  if (b.is_crossed()) {
    context["type"] = "crossed";
    context["crossed"] = crossed_json(b.crossed_context().module);
  } else {
    const ModuleContext& mc = b.module_context();
    context["type"] = "module";
    context["quasitriangular"] = quasitriangular_json(mc.q);
    context["action"] = stacked_entries(mc.action.action());
  }
  j["context"] = context;
  return j;
}

Json split_json(const SplitProjection& sp) {
  Json j = header("split_projection");
  j["big"] = bialgebra_json(sp.big);
  j["small"] = bialgebra_json(sp.small);
  j["proj"] = linear_map_json(sp.proj);
  j["incl"] = linear_map_json(sp.incl);
  return j;
}

// Reading. Every helper takes the JSON path of its argument for messages.

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

const Json& field(const Json& j, const std::string& path, const std::string& name) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(path, "missing field '" + name + "'");
  return *it;
}

Index read_count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return static_cast<Index>(j.get<long long>());
}

Index read_index(const Json& j, const std::string& path, Index bound) {
  Index i = read_count(j, path);
  if (i >= bound) fail(path, "index " + std::to_string(i) + " out of range (< " + std::to_string(bound) + ")");
  return i;
}

Scalar read_scalar(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a scalar string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

void check_header(const Json& j, const std::string& path, const std::string& kind) {
  const Json& version = field(j, path, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion)
    fail(path + ".schema_version", "unsupported schema version (expected \"1\")");
  const Json& k = field(j, path, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) fail(path + ".kind", "expected kind '" + kind + "'");
}

// Sparse entries with `arity` indices bounded by `bounds`, then a scalar.
template <typename Sink>
void read_entries(const Json& j, const std::string& path, const std::vector<Index>& bounds, Sink sink) {
  if (!j.is_array()) fail(path, "expected an array of entries");
  std::set<std::vector<Index>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    std::string here = path + "[" + std::to_string(e) + "]";
    const Json& entry = j[e];
    if (!entry.is_array() || entry.size() != bounds.size() + 1)
      fail(here, "expected " + std::to_string(bounds.size()) + " indices and a scalar");
    std::vector<Index> idx;
    for (std::size_t k = 0; k < bounds.size(); ++k)
      idx.push_back(read_index(entry[k], here + "[" + std::to_string(k) + "]", bounds[k]));
    if (!seen.insert(idx).second) fail(here, "duplicate entry");
    sink(idx, read_scalar(entry[bounds.size()], here + "[" + std::to_string(bounds.size()) + "]"));
  }
}

Tensor3 read_tensor(const Json& j, const std::string& path, Index n) {
  Tensor3 t(n, n, n);
  read_entries(j, path, {n, n, n}, [&](const std::vector<Index>& i, Scalar s) { t(i[0], i[1], i[2]) = std::move(s); });
  return t;
}

Matrix read_matrix(const Json& j, const std::string& path, Index rows, Index cols) {
  Matrix m = Matrix::Zero(rows, cols);
  read_entries(j, path, {rows, cols}, [&](const std::vector<Index>& i, Scalar s) { m(i[0], i[1]) = std::move(s); });
  return m;
}

std::vector<Matrix> read_stacked(const Json& j, const std::string& path, Index count, Index rows, Index cols) {
  std::vector<Matrix> out(static_cast<std::size_t>(count), Matrix::Zero(rows, cols));
  read_entries(j, path, {count, rows, cols},
               [&](const std::vector<Index>& i, Scalar s) {
                 out[static_cast<std::size_t>(i[0])](i[1], i[2]) = std::move(s);
               });
  return out;
}

std::vector<std::string> read_labels(const Json& j, const std::string& path, Index n) {
  if (!j.is_array() || static_cast<Index>(j.size()) != n) fail(path, "expected " + std::to_string(n) + " labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

// Wraps library constructors so shape errors point at the document.
template <typename F>
auto guarded(const std::string& path, F f) {
  try {
    return f();
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

LieAlgebra read_algebra(const Json& j, const std::string& path, const std::string& kind = "lie_algebra") {
  check_header(j, path, kind);
  Index n = read_count(field(j, path, "dim"), path + ".dim");
  auto labels = read_labels(field(j, path, "basis"), path + ".basis", n);
  Tensor3 c = read_tensor(field(j, path, "bracket"), path + ".bracket", n);
  return guarded(path, [&] { return LieAlgebra(labels, c); });
}

LieBialgebra read_bialgebra(const Json& j, const std::string& path, const std::string& kind = "lie_bialgebra") {
  LieAlgebra g = read_algebra(j, path, kind);
  Tensor3 d = read_tensor(field(j, path, "cobracket"), path + ".cobracket", g.dim());
  return LieBialgebra(g, std::move(d));
}

QuasiTriangularStructure read_quasitriangular(const Json& j, const std::string& path) {
  LieBialgebra b = read_bialgebra(j, path, "quasitriangular");
  Matrix r = read_matrix(field(j, path, "r"), path + ".r", b.dim(), b.dim());
  return QuasiTriangularStructure(b, std::move(r));
}

Representation read_action(const Json& j, const std::string& path, const LieAlgebra& host, Index m) {
  auto action = read_stacked(j, path, host.dim(), m, m);
  return guarded(path, [&] { return Representation(host, action); });
}

Representation read_representation(const Json& j, const std::string& path) {
  check_header(j, path, "representation");
  LieAlgebra g = read_algebra(field(j, path, "algebra"), path + ".algebra");
  Index m = read_count(field(j, path, "space_dim"), path + ".space_dim");
  return read_action(field(j, path, "action"), path + ".action", g, m);
}

CrossedModule read_crossed(const Json& j, const std::string& path) {
  check_header(j, path, "crossed");
  LieBialgebra f = read_bialgebra(field(j, path, "host"), path + ".host");
  Index m = read_count(field(j, path, "space_dim"), path + ".space_dim");
  Representation action = read_action(field(j, path, "action"), path + ".action", f.algebra(), m);
  auto components = read_stacked(field(j, path, "coaction"), path + ".coaction", f.dim(), m, m);
  Matrix beta = Matrix::Zero(f.dim() * m, m);
  for (Index a = 0; a < f.dim(); ++a) beta.block(a * m, 0, m, m) = components[static_cast<std::size_t>(a)];
  return guarded(path, [&] { return CrossedModule(action, f, beta); });
}

LinearMap read_linear_map(const Json& j, const std::string& path) {
  check_header(j, path, "linear_map");
  Index rows = read_count(field(j, path, "rows"), path + ".rows");
  Index cols = read_count(field(j, path, "cols"), path + ".cols");
  return LinearMap{read_matrix(field(j, path, "entries"), path + ".entries", rows, cols)};
}

BraidedLieBialgebra read_braided(const Json& j, const std::string& path) {
  check_header(j, path, "braided");
  Index m = read_count(field(j, path, "space_dim"), path + ".space_dim");
  auto labels = read_labels(field(j, path, "basis"), path + ".basis", m);
  Tensor3 c = read_tensor(field(j, path, "bracket"), path + ".bracket", m);
  Tensor3 d = read_tensor(field(j, path, "cobracket"), path + ".cobracket", m);
  std::string cpath = path + ".context";
  const Json& context = field(j, path, "context");
  const Json& type = field(context, cpath, "type");
  if (type == "module") {
    QuasiTriangularStructure q =
        read_quasitriangular(field(context, cpath, "quasitriangular"), cpath + ".quasitriangular");
    Representation action = read_action(field(context, cpath, "action"), cpath + ".action", q.algebra(), m);
    return guarded(path, [&] { return BraidedLieBialgebra(labels, c, d, ModuleContext{q, action}); });
  }
  if (type == "crossed") {
    CrossedModule cm = read_crossed(field(context, cpath, "crossed"), cpath + ".crossed");
    if (cm.space_dim() != m) fail(cpath + ".crossed.space_dim", "does not match the braided space");
    return guarded(path, [&] { return BraidedLieBialgebra(labels, c, d, CrossedContext{cm}); });
  }
  fail(cpath + ".type", "expected \"module\" or \"crossed\"");
}

SplitProjection read_split(const Json& j, const std::string& path) {
  check_header(j, path, "split_projection");
  SplitProjection sp{read_bialgebra(field(j, path, "big"), path + ".big"),
                     read_bialgebra(field(j, path, "small"), path + ".small"),
                     read_linear_map(field(j, path, "proj"), path + ".proj"),
                     read_linear_map(field(j, path, "incl"), path + ".incl")};
  if (sp.proj.target_dim() != sp.small.dim() || sp.proj.source_dim() != sp.big.dim())
    fail(path + ".proj", "shape does not match big -> small");
  if (sp.incl.target_dim() != sp.big.dim() || sp.incl.source_dim() != sp.small.dim())
    fail(path + ".incl", "shape does not match small -> big");
  return sp;
}

}  // namespace

std::string kind_of(const Object& object) { return std::visit(KindName{}, object); }

Json to_json(const Object& object) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, LieAlgebra>) return algebra_json(x);
        else if constexpr (std::is_same_v<T, LieBialgebra>) return bialgebra_json(x);
        else if constexpr (std::is_same_v<T, QuasiTriangularStructure>) return quasitriangular_json(x);
        else if constexpr (std::is_same_v<T, Representation>) return representation_json(x);
        else if constexpr (std::is_same_v<T, CrossedModule>) return crossed_json(x);
        else if constexpr (std::is_same_v<T, BraidedLieBialgebra>) return braided_json(x);
        else if constexpr (std::is_same_v<T, LinearMap>) return linear_map_json(x);
        else return split_json(x);
      },
      object);
}

Object from_json(const Json& doc) {
  const std::string path = "$";
  const Json& kind = field(doc, path, "kind");
  if (!kind.is_string()) fail("$.kind", "expected a string");
  std::string k = kind.get<std::string>();
  if (k == "lie_algebra") return read_algebra(doc, path);
  if (k == "lie_bialgebra") return read_bialgebra(doc, path);
  if (k == "quasitriangular") return read_quasitriangular(doc, path);
  if (k == "representation") return read_representation(doc, path);
  if (k == "crossed") return read_crossed(doc, path);
  if (k == "braided") return read_braided(doc, path);
  if (k == "linear_map") return read_linear_map(doc, path);
  if (k == "split_projection") return read_split(doc, path);
  fail("$.kind", "unknown kind '" + k + "'");
}

Object parse_document(const std::string& text, const std::string& source) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    return from_json(doc);
  } catch (const ParseError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

Object load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open for reading");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), path);
}

namespace {

bool is_flat_array(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const Json& e : j)
    if (e.is_structured()) return false;
  return true;
}

// Like dump(2), except that arrays of scalars (index triples, label lists)
// stay on one line so each tensor entry reads as one diff line.
void write_json(std::string& out, const Json& j, int indent) {
  std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      write_json(out, it.value(), indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_flat_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write_json(out, j[i], indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else if (is_flat_array(j)) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_document(const Json& doc) {
  std::string out;
  write_json(out, doc, 0);
  return out + "\n";
}

void store_document(const std::string& path, const Object& object, const std::string& notes) {
  Json doc = to_json(object);
  if (!notes.empty()) doc["notes"] = notes;
  std::string text = dump_document(doc);
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError(path + ": cannot open for writing");
    out << text;
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw InputError(path + ": write failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw InputError(path + ": cannot move temporary file into place");
  }
}

}  // namespace blb
