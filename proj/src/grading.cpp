#include "gradedpi/grading.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gradedpi {

GradingTuple::GradingTuple(Group g, std::vector<GroupElement> e)
    : group(std::move(g)), entries(std::move(e)) {
  if (entries.empty()) throw std::invalid_argument("grading tuple must be nonempty");
  for (const auto& x : entries) {
    if (static_cast<int>(x.coords.size()) != group.rank()) {
      throw std::invalid_argument("grading tuple entry arity does not match the group");
    }
  }
}

ElementaryGrading::ElementaryGrading(GradingTuple tuple) : tuple_(std::move(tuple)) {
  const int n = tuple_.size();
  if (n > PatternMatrix::kMaxSize) {
    throw std::invalid_argument("grading tuple longer than 64 entries is not supported");
  }
  const Group& G = tuple_.group;

  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      GroupElement d = G.sub(tuple_.entries[static_cast<std::size_t>(q - 1)],
                             tuple_.entries[static_cast<std::size_t>(p - 1)]);
      pairs_[std::move(d)].emplace_back(p, q);
    }
  }
  for (const auto& [deg, pairs] : pairs_) {
    support_.push_back(deg);
    PatternMatrix m(n);
    for (auto [p, q] : pairs) m.set(p - 1, q - 1, true);
    assert(m.popcount() == static_cast<int>(pairs.size()));
    matrices_.emplace(deg, std::move(m));
  }

  std::vector<GroupElement> sorted_entries(tuple_.entries);
  std::sort(sorted_entries.begin(), sorted_entries.end());
  distinct_ = std::adjacent_find(sorted_entries.begin(), sorted_entries.end()) == sorted_entries.end();
}

bool ElementaryGrading::in_support(const GroupElement& g) const {
  return pairs_.find(g) != pairs_.end();
}

const std::vector<std::pair<int, int>>& ElementaryGrading::component_pairs(const GroupElement& g) const {
  static const std::vector<std::pair<int, int>> empty;
  auto it = pairs_.find(g);
  return it == pairs_.end() ? empty : it->second;
}

int ElementaryGrading::dim(const GroupElement& g) const {
  return static_cast<int>(component_pairs(g).size());
}

PatternMatrix ElementaryGrading::pattern_matrix(const GroupElement& g) const {
  auto it = matrices_.find(g);
  return it == matrices_.end() ? PatternMatrix(n()) : it->second;
}

std::vector<std::pair<int, int>> ElementaryGrading::hat_map(const GroupElement& g) const {
  if (!distinct_) {
    throw std::invalid_argument("hat_map requires distinct tuple entries");
  }
  auto it = pairs_.find(g);
  if (it == pairs_.end()) {
    throw std::invalid_argument("hat_map degree " + group().format_element(g) +
                                " is outside the support");
  }
  std::vector<std::pair<int, int>> map(it->second);
  std::sort(map.begin(), map.end());
  // Distinct entries make the component a partial injection on rows.
  for (std::size_t i = 1; i < map.size(); ++i) assert(map[i - 1].first != map[i].first);
  return map;
}

ElementaryGrading build_grading(GradingTuple tuple) { return ElementaryGrading(std::move(tuple)); }

ElementaryGrading reduce_distinct(const ElementaryGrading& grading) {
  std::vector<GroupElement> kept;
  for (const auto& e : grading.tuple().entries) {
    if (std::find(kept.begin(), kept.end(), e) == kept.end()) kept.push_back(e);
  }
  return ElementaryGrading(GradingTuple(grading.group(), std::move(kept)));
}

GradingTuple canonical_form(const GradingTuple& tuple) {
  const Group& G = tuple.group;
  const GroupElement zero = G.zero();
  std::vector<std::vector<GroupElement>> candidates;
  for (const auto& base : tuple.entries) {
    std::vector<GroupElement> translated;
    translated.reserve(tuple.entries.size());
    for (const auto& e : tuple.entries) translated.push_back(G.sub(e, base));
    std::sort(translated.begin(), translated.end());
    if (translated.front() == zero) candidates.push_back(std::move(translated));
  }
  assert(!candidates.empty());
  auto best = std::min_element(candidates.begin(), candidates.end());
  return GradingTuple(G, std::move(*best));
}

bool is_isomorphic(const GradingTuple& a, const GradingTuple& b) {
  if (a.group != b.group) {
    throw std::invalid_argument("is_isomorphic requires tuples over the same group");
  }
  if (a.size() != b.size()) return false;
  return canonical_form(a).entries == canonical_form(b).entries;
}

DifferenceProfile difference_profile(const ElementaryGrading& grading) {
  const Group& G = grading.group();
  if (!G.torsion_free()) {
    throw std::invalid_argument("difference_profile requires a torsion-free group");
  }
  if (!grading.distinct_entries()) {
    throw std::invalid_argument("difference_profile requires distinct tuple entries");
  }
  std::vector<GroupElement> sorted(grading.tuple().entries);
  std::sort(sorted.begin(), sorted.end(),
            [&](const GroupElement& x, const GroupElement& y) { return G.lex_less(x, y); });
  DifferenceProfile profile;
  for (std::size_t t = 1; t < sorted.size(); ++t) {
    profile.steps.push_back(G.sub(sorted[t], sorted[t - 1]));
  }
  profile.palindromic = true;
  const std::size_t m = profile.steps.size();
  for (std::size_t t = 0; t < m; ++t) {
    if (profile.steps[t] != profile.steps[m - 1 - t]) {
      profile.palindromic = false;
      break;
    }
  }
  return profile;
}

}  // namespace gradedpi
