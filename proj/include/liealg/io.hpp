#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "liealg/constructive.hpp"
#include "liealg/decomp.hpp"
#include "liealg/series.hpp"

namespace liealg::io {

using Json = nlohmann::json;

/// Algebra file: {"dim", "labels"?, "brackets": [{"i", "j", "out": [{"k", "c"}]}]}
/// with 0-based indices, i < j, scalar strings. Other top-level keys are ignored,
/// so emitted reports carrying "version" and "input_digest" parse back.
/// All schema violations throw Parse.
LieAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebra& l);

LieAlgebra parse_algebra(std::string_view text);
StructureData parse_structure(std::string_view text);

Json scalar_to_json(const Scalar& s);
Json vector_to_json(const Vector& v);
Json matrix_to_json(const Matrix& m);
Json subspace_to_json(const Subspace& s);
Json series_to_json(const SeriesReport& s);
Json witness_to_json(const DirectSumWitness& w);
Json verdict_to_json(const DecomposabilityVerdict& v);
Json search_to_json(const SearchReport& r);

/// {"family", "left_dim", "right_dim", "D": [[row-major scalars]], "b": [{"a", "c", "v"}]}.
/// Heisenberg data also carries "p"; parsing accepts p/n or n1/n2 in place of the dims.
StructureData structure_from_json(const Json& j);
Json structure_to_json(const StructureData& d);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace liealg::io
