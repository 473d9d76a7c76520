#include "gradedpi/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace gradedpi {

namespace {

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

// Magnitude-then-sign key of one coordinate; smaller keys are nearer zero.
std::pair<std::int64_t, int> search_key(std::int64_t v, std::int64_t modulus) {
  if (modulus == 0) {  // free coordinate
    return {v < 0 ? -v : v, v < 0 ? 1 : 0};
  }
  const std::int64_t alt = modulus - v;  // v is reduced into [0, m)
  if (v == 0) return {0, 0};
  return {std::min(v, alt), alt < v ? 1 : 0};
}

}  // namespace

Group::Group(int free_rank, std::vector<std::int64_t> moduli)
    : free_rank_(free_rank), moduli_(std::move(moduli)) {
  if (free_rank_ < 0) throw std::invalid_argument("group free rank must be >= 0");
  for (std::int64_t m : moduli_) {
    if (m < 2) throw std::invalid_argument("torsion modulus must be >= 2, got " + std::to_string(m));
  }
  if (rank() == 0) throw std::invalid_argument("group must have at least one factor");
}

Group Group::parse(std::string_view text) {
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto parse_int = [&](std::int64_t& out) -> bool {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) return false;
    auto sub = text.substr(start, pos - start);
    auto res = std::from_chars(sub.data(), sub.data() + sub.size(), out);
    return res.ec == std::errc();
  };

  int free_rank = 0;
  std::vector<std::int64_t> moduli;
  bool first = true;
  for (;;) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) throw std::invalid_argument("empty group string");
      throw std::invalid_argument("dangling 'x' in group string " + quoted(text));
    }
    if (text[pos] != 'Z') {
      throw std::invalid_argument("expected factor 'Z' in group string " + quoted(text) +
                                  " at " + quoted(text.substr(pos, 1)));
    }
    ++pos;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::int64_t k = 0;
      if (!parse_int(k)) throw std::invalid_argument("bad exponent in group string " + quoted(text));
      if (k < 1) throw std::invalid_argument("exponent must be >= 1 in " + quoted(text));
      free_rank += static_cast<int>(k);
    } else if (pos < text.size() && text[pos] == '_') {
      ++pos;
      std::int64_t m = 0;
      if (!parse_int(m)) throw std::invalid_argument("bad modulus in group string " + quoted(text));
      if (m < 2) throw std::invalid_argument("modulus must be >= 2 in " + quoted(text));
      moduli.push_back(m);
    } else {
      free_rank += 1;
    }
    first = false;
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != 'x') {
      throw std::invalid_argument("expected 'x' between factors in group string " + quoted(text) +
                                  " at " + quoted(text.substr(pos, 1)));
    }
    ++pos;
  }
  return Group(free_rank, std::move(moduli));
}

std::string Group::to_string() const {
  std::string out;
  if (free_rank_ == 1) {
    out = "Z";
  } else if (free_rank_ > 1) {
    out = "Z^" + std::to_string(free_rank_);
  }
  for (std::int64_t m : moduli_) {
    if (!out.empty()) out += " x ";
    out += "Z_" + std::to_string(m);
  }
  return out;
}

bool Group::has_order_2_element() const {
  return std::any_of(moduli_.begin(), moduli_.end(), [](std::int64_t m) { return m % 2 == 0; });
}

std::int64_t Group::order() const {
  if (!finite()) throw std::invalid_argument("order() called on an infinite group");
  std::int64_t o = 1;
  for (std::int64_t m : moduli_) {
    if (o > (std::int64_t{1} << 62) / m) throw std::overflow_error("group order overflow");
    o *= m;
  }
  return o;
}

GroupElement Group::zero() const {
  return GroupElement{std::vector<std::int64_t>(static_cast<std::size_t>(rank()), 0)};
}

GroupElement Group::make(std::vector<std::int64_t> coords) const {
  if (static_cast<int>(coords.size()) != rank()) {
    throw std::invalid_argument("element has " + std::to_string(coords.size()) +
                                " coordinates, group rank is " + std::to_string(rank()));
  }
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t m = moduli_[i];
    std::int64_t& c = coords[static_cast<std::size_t>(free_rank_) + i];
    c = ((c % m) + m) % m;
  }
  return GroupElement{std::move(coords)};
}

void Group::check_element(const GroupElement& a) const {
  if (static_cast<int>(a.coords.size()) != rank()) {
    throw std::invalid_argument("element arity " + std::to_string(a.coords.size()) +
                                " does not match group rank " + std::to_string(rank()));
  }
}

GroupElement Group::add(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<std::int64_t> out(a.coords);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coords[i];
  return make(std::move(out));
}

GroupElement Group::neg(const GroupElement& a) const {
  check_element(a);
  std::vector<std::int64_t> out(a.coords);
  for (auto& c : out) c = -c;
  return make(std::move(out));
}

GroupElement Group::sub(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<std::int64_t> out(a.coords);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coords[i];
  return make(std::move(out));
}

GroupElement Group::scalar_mul(std::int64_t c, const GroupElement& a) const {
  check_element(a);
  std::vector<std::int64_t> out(a.coords);
  for (auto& v : out) v *= c;
  return make(std::move(out));
}

GroupElement Group::word_sum(std::span<const GroupElement> word) const {
  if (word.empty()) throw std::invalid_argument("word_sum of an empty word");
  GroupElement acc = word[0];
  check_element(acc);
  for (std::size_t i = 1; i < word.size(); ++i) acc = add(acc, word[i]);
  return acc;
}

bool Group::is_zero(const GroupElement& a) const {
  check_element(a);
  return std::all_of(a.coords.begin(), a.coords.end(), [](std::int64_t c) { return c == 0; });
}

bool Group::lex_less(const GroupElement& a, const GroupElement& b) const {
  if (!torsion_free()) {
    throw std::invalid_argument("lex_less requires a torsion-free group, got " + to_string());
  }
  check_element(a);
  check_element(b);
  return a.coords < b.coords;
}

bool Group::search_less(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  for (int i = 0; i < rank(); ++i) {
    const std::int64_t m = i < free_rank_ ? 0 : moduli_[static_cast<std::size_t>(i - free_rank_)];
    const auto ka = search_key(a.coords[static_cast<std::size_t>(i)], m);
    const auto kb = search_key(b.coords[static_cast<std::size_t>(i)], m);
    if (ka != kb) return ka < kb;
  }
  return false;
}

GroupElement Group::parse_element(std::string_view text) const {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  const auto parse_one = [&](std::string_view tok) -> std::int64_t {
    std::int64_t v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || tok.empty()) {
      throw std::invalid_argument("bad integer " + quoted(tok) + " in element " + quoted(text));
    }
    return v;
  };

  std::vector<std::int64_t> coords;
  std::string_view body(compact);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw std::invalid_argument("unterminated element " + quoted(text));
    body = body.substr(1, body.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      std::string_view tok = body.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - start);
      coords.push_back(parse_one(tok));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    coords.push_back(parse_one(body));
  }
  return make(std::move(coords));  // make() reports arity mismatches
}

std::string Group::format_element(const GroupElement& a) const {
  check_element(a);
  if (rank() == 1) return std::to_string(a.coords[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a.coords[i]);
  }
  out += ")";
  return out;
}

}  // namespace gradedpi
