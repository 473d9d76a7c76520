#include "gradedpi/json_io.hpp"

#include <stdexcept>
#include <string>

namespace gradedpi {

nlohmann::json element_to_json(const Group& group, const GroupElement& e) {
  if (group.rank() == 1) return e.coords[0];
  return group.format_element(e);
}

GroupElement element_from_json(const Group& group, const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (group.rank() != 1) {
      throw std::invalid_argument("element_from_json: bare integer for a group of rank " +
                                  std::to_string(group.rank()));
    }
    return group.make({j.get<std::int64_t>()});
  }
  if (j.is_string()) return group.parse_element(j.get<std::string>());
  throw std::invalid_argument("element_from_json: expected an integer or a string, got " + j.dump());
}

nlohmann::json elements_to_json(const Group& group, std::span<const GroupElement> elems) {
  nlohmann::json arr = nlohmann::json::array();
  for (const GroupElement& e : elems) arr.push_back(element_to_json(group, e));
  return arr;
}

std::vector<GroupElement> elements_from_json(const Group& group, const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("elements_from_json: expected an array, got " + j.dump());
  std::vector<GroupElement> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(element_from_json(group, item));
  return out;
}

std::vector<GroupElement> parse_element_list(const Group& group, std::string_view text) {
  std::vector<GroupElement> out;
  std::size_t start = 0;
  int depth = 0;
  auto flush = [&](std::size_t end) {
    const std::string_view piece = text.substr(start, end - start);
    out.push_back(group.parse_element(piece));
    start = end + 1;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == ',' && depth == 0) flush(i);
  }
  if (depth != 0) throw std::invalid_argument("parse_element_list: unbalanced parentheses in \"" +
                                              std::string(text) + "\"");
  flush(text.size());
  return out;
}

std::string format_element_list(const Group& group, std::span<const GroupElement> elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ',';
    out += group.format_element(elems[i]);
  }
  return out;
}

}  // namespace gradedpi
