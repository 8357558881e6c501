#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "blb/document.hpp"
#include "support.hpp"

using namespace blb;

namespace {

bool same_object(const Object& a, const Object& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, SplitProjection>)
          return x.big == y.big && x.small == y.small && x.proj == y.proj && x.incl == y.incl;
        else
          return x == y;
      },
      a);
}

std::vector<Object> corpus() {
  QuasiTriangularStructure su2 = su2_standard();
  QuasiTriangularStructure so3 = so3_vector_basis();
  ChevalleyBasis g2 = build_simple(CartanMatrix::of_type("G2"));
  SplitProjection g2_split = parabolic_split(g2, 0);
  ExtendedModule c2 = central_extend(su2, su2_fundamental(su2.algebra()));
  return {su2.algebra(),
          su2.host(),
          su2,
          so3,
          su2_fundamental(su2.algebra()),
          induced_coaction(su2, su2_fundamental(su2.algebra())),
          transmute(su2),
          braided_dual(transmute(so3)),
          c2.braided,
          double_bosonise(c2.braided),
          bisum_decompose(g2_split).braided,
          theta_double_iso(su2),
          g2_split,
          double_projection(su2)};
}

Json su2_json() { return to_json(Object(su2_standard())); }

std::string parse_error_of(const Json& doc) {
  try {
    from_json(doc);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("document") {
  TEST_CASE("store then load is the identity on the corpus") {
    for (const Object& object : corpus()) {
      CAPTURE(kind_of(object));
      Json j = to_json(object);
      CHECK(j["schema_version"] == "1");
      CHECK(j["kind"] == kind_of(object));
      Object back = from_json(j);
      CHECK(same_object(back, object));
      std::string text = dump_document(j);
      CHECK(dump_document(to_json(parse_document(text))) == text);
    }
  }

  TEST_CASE("files are written atomically and reread exactly") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "blb_document_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const Object& object : corpus()) {
      std::string path = (dir / (kind_of(object) + ".json")).string();
      store_document(path, object, "corpus entry");
      CHECK(same_object(load_document(path), object));
    }
    for (const auto& entry : fs::directory_iterator(dir)) CHECK(entry.path().extension() == ".json");
    fs::remove_all(dir);
  }

  TEST_CASE("entries are sorted and scalars canonical") {
    Json j = su2_json();
    const Json& bracket = j["bracket"];
    for (std::size_t e = 1; e < bracket.size(); ++e) {
      std::vector<Index> prev = {bracket[e - 1][0], bracket[e - 1][1], bracket[e - 1][2]};
      std::vector<Index> cur = {bracket[e][0], bracket[e][1], bracket[e][2]};
      CHECK(prev < cur);
    }
    CHECK(j["r"][0][2] == "1/4");
  }

  TEST_CASE("one-line index tuples in the text form") {
    std::string text = dump_document(su2_json());
    CHECK(text.find("[0, 1, 1, \"2\"]") != std::string::npos);
    CHECK(text.back() == '\n');
  }

  TEST_CASE("parse errors name the JSON path") {
    Json j = su2_json();
    j["bracket"][0][3] = "1/x";
    CHECK(parse_error_of(j).find("$.bracket[0][3]") != std::string::npos);

    j = su2_json();
    j["bracket"][1][0] = 7;
    CHECK(parse_error_of(j).find("$.bracket[1][0]") != std::string::npos);

    j = su2_json();
    j["bracket"].push_back(j["bracket"][0]);
    CHECK(parse_error_of(j).find("duplicate") != std::string::npos);

    j = su2_json();
    j.erase("r");
    CHECK(parse_error_of(j).find("r") != std::string::npos);

    j = su2_json();
    j["schema_version"] = "2";
    CHECK(parse_error_of(j).find("$.schema_version") != std::string::npos);

    j = su2_json();
    j["kind"] = "lie_superalgebra";
    CHECK(parse_error_of(j).find("$.kind") != std::string::npos);

    j = su2_json();
    j["basis"] = Json::array({"H", "X+"});
    CHECK(parse_error_of(j).find("$.basis") != std::string::npos);

    j = su2_json();
    j["r"][0][2] = 0.25;
    CHECK(parse_error_of(j).find("$.r[0][2]") != std::string::npos);
  }

  TEST_CASE("nested documents report nested paths") {
    QuasiTriangularStructure su2 = su2_standard();
    Json j = to_json(Object(transmute(su2)));
    j["context"]["quasitriangular"]["cobracket"][0][0] = -1;
    CHECK(parse_error_of(j).find("$.context.quasitriangular.cobracket[0][0]") != std::string::npos);
  }

  TEST_CASE("malformed text and missing files") {
    CHECK_THROWS_AS(parse_document("{\"kind\": ", "broken.json"), ParseError);
    CHECK_THROWS_WITH(parse_document("[1, 2]", "list.json"), doctest::Contains("list.json"));
    CHECK_THROWS_AS(load_document("/nonexistent/blb.json"), InputError);
  }

  TEST_CASE("a corrupted bracket still loads so the checker can report it") {
    Json j = su2_json();
    for (auto& entry : j["bracket"])
      if (entry[0] == 1 && entry[1] == 2) entry[3] = "2";
    Object o = from_json(j);
    CHECK_FALSE(all_passed(check_quasitriangular(std::get<QuasiTriangularStructure>(o))));
  }
}
