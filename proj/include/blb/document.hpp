#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "blb/constructions.hpp"

namespace blb {

using Json = nlohmann::ordered_json;

// Every object a document can carry. The kind strings are lie_algebra,
// lie_bialgebra, quasitriangular, representation, crossed, braided,
// linear_map and split_projection.
using Object = std::variant<LieAlgebra, LieBialgebra, QuasiTriangularStructure, Representation, CrossedModule,
                            BraidedLieBialgebra, LinearMap, SplitProjection>;

std::string kind_of(const Object& object);

// Sparse, deterministic encoding: tensors as sorted [i, j, k, "scalar"]
// lists, matrices as [row, col, "scalar"], canonical scalar strings.
Json to_json(const Object& object);
// Throws ParseError naming the offending JSON path.
Object from_json(const Json& doc);

// Parses text, then the document. Errors carry the source name.
Object parse_document(const std::string& text, const std::string& source = "<input>");
Object load_document(const std::string& path);

// Two-space indented text with a trailing newline; arrays of scalars stay on
// one line.
std::string dump_document(const Json& doc);
// Writes to a temporary file in the same directory, then renames.
void store_document(const std::string& path, const Object& object, const std::string& notes = "");

}  // namespace blb
