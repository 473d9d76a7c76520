#pragma once

#include <json.hpp>

#include "gradedpi/monomial.hpp"

namespace gradedpi {

// JSON conventions: elements of rank-1 groups serialize as plain integers,
// higher ranks as strings "(a,b,...)"; tuples and words as arrays of those.
// nlohmann's default object keeps keys sorted, so dumps are byte-stable.

nlohmann::json element_to_json(const Group& group, const GroupElement& e);
GroupElement element_from_json(const Group& group, const nlohmann::json& j);

nlohmann::json elements_to_json(const Group& group, std::span<const GroupElement> elems);
std::vector<GroupElement> elements_from_json(const Group& group, const nlohmann::json& j);

/// Comma-separated element list as used by the CLI (--tuple / --word);
/// splits on top-level commas only, so "(0,1),(2,0)" parses as two elements.
std::vector<GroupElement> parse_element_list(const Group& group, std::string_view text);
std::string format_element_list(const Group& group, std::span<const GroupElement> elems);

}  // namespace gradedpi
