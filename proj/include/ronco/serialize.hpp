#pragma once

#include <json.hpp>

#include <string>
#include <variant>

#include "ronco/free_leibniz.hpp"
#include "ronco/free_ronco.hpp"
#include "ronco/homology.hpp"
#include "ronco/structure_algebra.hpp"

namespace ronco {

using Json = nlohmann::ordered_json;
using AnyAlgebra = std::variant<StructureAlgebra, MuAlgebra>;

/// {"dim": N, "kind": "leibniz", "bracket": [{"i":..,"j":..,"c":[{"k":..,"v":"p/q"}]}]}
/// with 1-based indices, rows sorted by (i, j) and entries by k.
Json to_json(const StructureAlgebra& a);
/// Same shape with kind "mu" and the keys "lie_bracket" and "product".
Json to_json(const MuAlgebra& m);
Json to_json(const HomologyReport& r);
Json to_json(const VerificationReport& r);
/// {"degree1": [[gen, "c"], ...], "higher": [["lyndon-word", gen, "c"], ...]}
Json to_json(const RoncoElement& x, int gens);

/// Throws InvalidArgument on schema violations.
AnyAlgebra algebra_from_json(const Json& j);
AnyAlgebra parse_algebra(const std::string& text);

/// Canonical bytes of a JSON document (two-space indent, trailing newline).
std::string dump(const Json& j);

/// "123 - 1/2·132"; "0" for the zero element.
std::string format_leib(const LeibElement& x, int gens);
/// Degree-1 terms print as "g1", higher terms as "[ℓ|v]", e.g. "1/2·[112|2]".
std::string format_ronco(const RoncoElement& x, int gens);

}  // namespace ronco
