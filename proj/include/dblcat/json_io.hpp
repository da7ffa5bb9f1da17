#pragma once

#include <string>

#include <json.hpp>

#include "dblcat/bisimplicial.hpp"
#include "dblcat/double_category.hpp"
#include "dblcat/two_category.hpp"

namespace dblcat {

using Json = nlohmann::json;

// Composition tables are lists of [a, b, result] id triples sorted by (a, b). Keys come out in
// sorted order, so dump() of a value is canonical.
Json to_json(const FinTwoCategory& k);
Json to_json(const FinDoubleCategory& d);
Json to_json(const FinBisimplicialSet& x);
Json to_json(const BisimplicialMap& f);

// Throw ParseError on malformed input and InvalidInput on dangling references. A 2-category
// may give "leq" pairs of 1-cells instead of "two_cells" and the 2-cell tables; it is then
// built as the locally posetal closure.
FinTwoCategory two_category_from_json(const Json& j);
FinDoubleCategory double_category_from_json(const Json& j);
FinBisimplicialSet bisimplicial_from_json(const Json& j);
BisimplicialMap map_from_json(const Json& j);

// Two-space indented, newline terminated.
std::string dump(const Json& j);
Json read_json_file(const std::string& path);
// "2-category" or "double-category", from the "kind" field.
std::string json_kind(const Json& j);

}  // namespace dblcat
