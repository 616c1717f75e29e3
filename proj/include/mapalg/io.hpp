#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "mapalg/simplicial_map.hpp"

namespace mapalg {

using json = nlohmann::ordered_json;

/// Interchange form of an object. Cell ids are the labels when they are
/// present and distinct, otherwise the decimal cell index.
json object_to_json(const SimplicialSet& x);
/// Throws ParseError on malformed input, unknown ids, non-decreasing
/// degeneracy words or faces of the wrong dimension. Ids become labels.
SetPtr object_from_json(const json& j);

json map_to_json(const SimplicialMap& f, const std::string& source_name, const std::string& target_name);
SimplicialMap map_from_json(const json& j, SetPtr source, SetPtr target);

/// Catalog expressions: point, pt, s0..s3, sphere(n), delta(n), boundary(n),
/// wedge(x,...), product(x,y), susp(x,i), smash(a,k), halfsmash(x,k).
/// `sphere 2` is accepted for `sphere(2)`.
SetPtr parse_catalog(std::string_view text);

/// A path to an interchange file, or else a catalog expression.
SetPtr load_object(const std::string& arg);

void write_json(const std::string& path, const json& j);

}  // namespace mapalg
