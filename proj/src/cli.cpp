#include "blb/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "blb/cartan.hpp"
#include "blb/scenarios.hpp"

namespace blb::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string index_list(const std::vector<Index>& index) {
  std::string s = "[";
  for (std::size_t i = 0; i < index.size(); ++i) s += (i ? ", " : "") + std::to_string(index[i]);
  return s + "]";
}

Json record_of(const CheckResult& c) {
  Json j;
  j["check"] = c.name;
  j["passed"] = c.passed;
  if (!c.passed) {
    j["where"] = c.where;
    Json residual = Json::array();
    for (const ResidualEntry& e : c.residual) {
      Json entry = Json::array();
      for (Index i : e.index) entry.push_back(i);
      entry.push_back(to_string(e.value));
      residual.push_back(std::move(entry));
    }
    j["residual"] = std::move(residual);
  }
  return j;
}

template <typename T>
T expect_kind(const Object& object, const std::string& path, const std::string& wanted) {
  if (const T* value = std::get_if<T>(&object)) return *value;
  throw InputError(path + ": expected a " + wanted + " document, found " + kind_of(object));
}

template <typename T>
T load_as(const std::string& path, const std::string& wanted) {
  return expect_kind<T>(load_document(path), path, wanted);
}

// A quasitriangular document also serves where only its bialgebra is needed.
LieBialgebra load_bialgebra(const std::string& path) {
  Object object = load_document(path);
  if (const auto* q = std::get_if<QuasiTriangularStructure>(&object)) return q->host();
  return expect_kind<LieBialgebra>(object, path, "lie_bialgebra");
}

// "2,-1;-1,2": rows separated by ';', entries by ','.
CartanMatrix parse_cartan(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream all(text);
  std::string row;
  while (std::getline(all, row, ';')) {
    std::vector<int> entries;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(cell, &used);
      } catch (const std::exception&) {
        throw InputError("--cartan: '" + cell + "' is not an integer");
      }
      if (cell.find_first_not_of(" \t", used) != std::string::npos)
        throw InputError("--cartan: '" + cell + "' is not an integer");
      entries.push_back(value);
    }
    rows.push_back(std::move(entries));
  }
  return CartanMatrix(std::move(rows));
}

struct CartanChoice {
  std::string type;
  std::string entries;

  void attach(CLI::App* app) {
    auto* t = app->add_option("--type", type, "Dynkin type such as A2, C3, G2");
    auto* c = app->add_option("--cartan", entries, "Cartan matrix rows, e.g. \"2,-1;-1,2\"");
    t->excludes(c);
  }

  CartanMatrix get() const {
    if (type.empty() && entries.empty()) throw InputError("one of --type or --cartan is required");
    return type.empty() ? parse_cartan(entries) : CartanMatrix::of_type(type);
  }
};

struct ConstructOptions {
  std::string output;
  std::string format = "human";
  std::string qt, target, map;                // transmute, central-extend
  std::string b, c, ambient, pairing;         // dual, bosonise, double-bosonise
  std::string bialgebra;                      // double
  std::string split, big, small, proj, incl;  // decompose
  std::string rep;                            // central-extend
  CartanChoice cartan;                        // build-simple, parabolic
  int deleted = 0;                            // parabolic, 1-based
};

// Braided input for double-bosonise: a braided document, or a representation
// of the ambient algebra carrying zero bracket and cobracket.
BraidedLieBialgebra load_braided_or_module(const std::string& path, const std::string& ambient) {
  Object object = load_document(path);
  if (const auto* rep = std::get_if<Representation>(&object)) {
    if (ambient.empty()) throw InputError(path + ": a representation needs --ambient for its quasitriangular host");
    QuasiTriangularStructure q = load_as<QuasiTriangularStructure>(ambient, "quasitriangular");
    if (rep->host() != q.algebra())
      throw InputError(path + ": representation host does not match the algebra of " + ambient);
    std::vector<std::string> labels;
    for (Index i = 0; i < rep->space_dim(); ++i) labels.push_back("v" + std::to_string(i + 1));
    Index m = rep->space_dim();
    return BraidedLieBialgebra(labels, Tensor3(m, m, m), Tensor3(m, m, m), ModuleContext{q, *rep});
  }
  if (!ambient.empty()) throw InputError("--ambient applies only when --b is a representation");
  return expect_kind<BraidedLieBialgebra>(object, path, "braided");
}

// Notes name inputs by file name so output does not depend on directories.
std::string name_of(const std::string& path) { return std::filesystem::path(path).filename().string(); }

struct Built {
  Object object;
  std::string notes;
};

Built construct(const std::string& verb, const ConstructOptions& o) {
  if (verb == "transmute") {
    QuasiTriangularStructure q = load_as<QuasiTriangularStructure>(o.qt, "quasitriangular");
    if (o.target.empty() != o.map.empty()) throw InputError("transmute: --target and --map go together");
    if (o.target.empty()) return {transmute(q), "transmutation of " + name_of(o.qt)};
    LieBialgebra f = load_bialgebra(o.target);
    LinearMap i = load_as<LinearMap>(o.map, "linear_map");
    return {transmute(q, f, i), "transmutation of " + name_of(o.qt) + " along " + name_of(o.map)};
  }
  if (verb == "dual")
    return {braided_dual(load_as<BraidedLieBialgebra>(o.b, "braided")), "braided dual of " + name_of(o.b)};
  if (verb == "bosonise")
    return {bosonise(load_as<BraidedLieBialgebra>(o.b, "braided")), "bosonisation of " + name_of(o.b)};
  if (verb == "double-bosonise") {
    BraidedLieBialgebra b = load_braided_or_module(o.b, o.ambient);
    if (o.c.empty() != o.pairing.empty()) throw InputError("double-bosonise: --c and --pairing go together");
    if (o.c.empty()) return {double_bosonise(b), "double-bosonisation of " + name_of(o.b)};
    BraidedLieBialgebra c = load_as<BraidedLieBialgebra>(o.c, "braided");
    Pairing p{load_as<LinearMap>(o.pairing, "linear_map").matrix};
    return {double_bosonise(b, c, p), "double-bosonisation of " + name_of(o.b) + " with " + name_of(o.c)};
  }
  if (verb == "double")
    return {drinfeld_double(load_bialgebra(o.bialgebra)), "Drinfeld double of " + name_of(o.bialgebra)};
  if (verb == "decompose") {
    SplitProjection sp;
    if (!o.split.empty()) {
      sp = load_as<SplitProjection>(o.split, "split_projection");
    } else {
      if (o.big.empty()) throw InputError("decompose: give --split or all of --big, --small, --proj, --incl");
      sp = SplitProjection{load_bialgebra(o.big), load_bialgebra(o.small), load_as<LinearMap>(o.proj, "linear_map"),
                           load_as<LinearMap>(o.incl, "linear_map")};
    }
    return {bisum_decompose(sp).braided, "kernel of a split projection"};
  }
  if (verb == "central-extend") {
    QuasiTriangularStructure q = load_as<QuasiTriangularStructure>(o.qt, "quasitriangular");
    Representation v = load_as<Representation>(o.rep, "representation");
    ExtendedModule ext = central_extend(q, v);
    return {ext.braided, "central extension of " + name_of(o.qt) + " by " + name_of(o.rep) + "; lambda = " +
                             to_string(ext.extension.lambda)};
  }
  if (verb == "build-simple") return {build_simple(o.cartan.get()).q, "simple Lie bialgebra from a Cartan matrix"};
  if (verb == "parabolic") {
    ChevalleyBasis basis = build_simple(o.cartan.get());
    if (o.deleted < 1 || o.deleted > basis.cartan.rank())
      throw InputError("--delete must lie in 1.." + std::to_string(basis.cartan.rank()));
    return {parabolic_split(basis, o.deleted - 1), "parabolic split deleting node " + std::to_string(o.deleted)};
  }
  throw InputError("unknown construction '" + verb + "'");
}

Index dimension_of(const Object& object) {
  return std::visit(
      [](const auto& v) -> Index {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LieAlgebra> || std::is_same_v<T, LieBialgebra> ||
                      std::is_same_v<T, QuasiTriangularStructure>)
          return v.dim();
        else if constexpr (std::is_same_v<T, LinearMap>)
          return v.source_dim();
        else if constexpr (std::is_same_v<T, SplitProjection>)
          return v.big.dim();
        else
          return v.space_dim();
      },
      object);
}

Format parse_format(const std::string& s) { return s == "records" ? Format::records : Format::human; }

int report_exit(const CheckReport& report) { return all_passed(report) ? ok : violation; }

}  // namespace

CheckReport check_object(const Object& object) {
  return std::visit(
      [](const auto& v) -> CheckReport {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LieAlgebra>) {
          return check_lie_algebra(v);
        } else if constexpr (std::is_same_v<T, LieBialgebra>) {
          return check_lie_bialgebra(v);
        } else if constexpr (std::is_same_v<T, QuasiTriangularStructure>) {
          return check_quasitriangular(v);
        } else if constexpr (std::is_same_v<T, Representation>) {
          CheckReport r = check_lie_algebra(v.host());
          r.push_back(check_representation(v));
          return r;
        } else if constexpr (std::is_same_v<T, CrossedModule>) {
          CheckReport r = check_lie_bialgebra(v.host());
          append(r, check_coaction(v));
          return r;
        } else if constexpr (std::is_same_v<T, BraidedLieBialgebra>) {
          return check_braided_lie_bialgebra(v);
        } else if constexpr (std::is_same_v<T, SplitProjection>) {
          return check_split_projection(v);
        } else {
          return {};  // a bare linear map has no axioms
        }
      },
      object);
}

void print_report(std::ostream& out, const CheckReport& report, Format format, double elapsed_ms) {
  std::size_t failures = 0;
  for (const CheckResult& c : report)
    if (!c.passed) ++failures;
  if (format == Format::records) {
    for (const CheckResult& c : report) out << record_of(c).dump() << '\n';
    Json summary;
    summary["summary"] = failures == 0 ? "pass" : "fail";
    summary["checks"] = report.size();
    summary["failures"] = failures;
    summary["elapsed_ms"] = elapsed_ms;
    out << summary.dump() << '\n';
    return;
  }
  for (const CheckResult& c : report) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) {
      if (!c.where.empty()) out << " at " << index_list(c.where);
      out << " residual";
      for (const ResidualEntry& e : c.residual) out << ' ' << index_list(e.index) << '=' << to_string(e.value);
    }
    out << '\n';
  }
  out << (failures == 0 ? "all " + std::to_string(report.size()) + " checks passed"
                        : std::to_string(failures) + " of " + std::to_string(report.size()) + " checks failed")
      << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie bialgebra and braided Lie bialgebra toolkit", "blb"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"human", "records"};

  std::string check_file, check_format = "human";
  CLI::App* check = app.add_subcommand("check", "Run every checker applicable to a document");
  check->add_option("FILE", check_file, "Document to check")->required();
  check->add_option("--format", check_format, "Report format")->check(CLI::IsMember(formats));

  ConstructOptions co;
  CLI::App* construct_cmd = app.add_subcommand("construct", "Build an object and write it as a document");
  construct_cmd->require_subcommand(1);
  auto verb = [&](const std::string& name, const std::string& help) {
    CLI::App* v = construct_cmd->add_subcommand(name, help);
    v->add_option("-o,--output", co.output, "Output document")->required();
    v->add_option("--format", co.format, "Report format for the re-check")->check(CLI::IsMember(formats));
    return v;
  };
  CLI::App* v_transmute = verb("transmute", "Braided Lie bialgebra from a quasitriangular one");
  v_transmute->add_option("--qt", co.qt, "Quasitriangular document")->required();
  v_transmute->add_option("--target", co.target, "Target bialgebra (default: the algebra itself)");
  v_transmute->add_option("--map", co.map, "Bialgebra map into the target, as a linear_map");
  CLI::App* v_dual = verb("dual", "Braided dual");
  v_dual->add_option("--b", co.b, "Braided document")->required();
  CLI::App* v_bosonise = verb("bosonise", "Bosonisation of a braided Lie bialgebra in a module category");
  v_bosonise->add_option("--b", co.b, "Braided document")->required();
  CLI::App* v_double_bos = verb("double-bosonise", "Double-bosonisation with its quasitriangular structure");
  v_double_bos->add_option("--b", co.b, "Braided or representation document")->required();
  v_double_bos->add_option("--ambient", co.ambient, "Quasitriangular host when --b is a representation");
  v_double_bos->add_option("--c", co.c, "Dually paired braided document (default: braided dual)");
  v_double_bos->add_option("--pairing", co.pairing, "Pairing matrix <c_t, b_s> as a linear_map");
  CLI::App* v_double = verb("double", "Drinfeld double");
  v_double->add_option("--bialgebra", co.bialgebra, "Lie bialgebra or quasitriangular document")->required();
  CLI::App* v_decompose = verb("decompose", "Braided kernel of a split projection");
  auto* split_opt = v_decompose->add_option("--split", co.split, "split_projection document");
  auto* big_opt = v_decompose->add_option("--big", co.big, "Source bialgebra");
  auto* small_opt = v_decompose->add_option("--small", co.small, "Target bialgebra");
  auto* proj_opt = v_decompose->add_option("--proj", co.proj, "Projection as a linear_map");
  auto* incl_opt = v_decompose->add_option("--incl", co.incl, "Splitting as a linear_map");
  for (auto* part : {big_opt, small_opt, proj_opt, incl_opt}) {
    split_opt->excludes(part);
    for (auto* other : {big_opt, small_opt, proj_opt, incl_opt})
      if (other != part) part->needs(other);
  }
  CLI::App* v_central = verb("central-extend", "Dilaton extension and the module as a braided Lie bialgebra");
  v_central->add_option("--qt", co.qt, "Quasitriangular document")->required();
  v_central->add_option("--rep", co.rep, "Representation with a scalar Casimir")->required();
  CLI::App* v_simple = verb("build-simple", "Simple Lie bialgebra from a Cartan matrix");
  co.cartan.attach(v_simple);
  CLI::App* v_parabolic = verb("parabolic", "Maximal parabolic split projection");
  co.cartan.attach(v_parabolic);
  v_parabolic->add_option("--delete", co.deleted, "Deleted node, 1-based")->required();

  std::string scenario, verify_format = "human";
  std::vector<std::string> names;
  for (const Scenario& s : scenarios()) names.push_back(s.name);
  CLI::App* verify = app.add_subcommand("verify-paper", "Run a built-in regression scenario");
  verify->add_option("NAME", scenario, "Scenario name")->required()->check(CLI::IsMember(names));
  verify->add_option("--format", verify_format, "Report format")->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (check->parsed()) {
      Object object = load_document(check_file);
      auto start = Clock::now();
      CheckReport report = check_object(object);
      print_report(out, report, parse_format(check_format), elapsed_since(start));
      return report_exit(report);
    }
    if (verify->parsed()) {
      auto start = Clock::now();
      CheckReport report = run_scenario(scenario);
      print_report(out, report, parse_format(verify_format), elapsed_since(start));
      return report_exit(report);
    }
    CLI::App* chosen = construct_cmd->get_subcommands().front();
    auto start = Clock::now();
    Built built = construct(chosen->get_name(), co);
    CheckReport report = check_object(built.object);
    Format format = parse_format(co.format);
    print_report(out, report, format, elapsed_since(start));
    if (!all_passed(report)) {
      err << "error: constructed " << kind_of(built.object) << " failed its checks; nothing written\n";
      return violation;
    }
    store_document(co.output, built.object, built.notes);
    if (format == Format::human)
      out << "wrote " << co.output << " (" << kind_of(built.object) << ", dim " << dimension_of(built.object)
          << ")\n";
    return ok;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << "\ncasimir:";
    for (const ResidualEntry& entry : sparse_entries(e.casimir()))
      err << ' ' << index_list(entry.index) << '=' << to_string(entry.value);
    err << '\n';
    return violation;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return violation;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return violation;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return usage;
  }
}

}  // namespace blb::cli
