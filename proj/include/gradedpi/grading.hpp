#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gradedpi/group.hpp"
#include "gradedpi/pattern_matrix.hpp"

namespace gradedpi {

/// Defining tuple (g_1, ..., g_n) of an elementary grading on n x n matrices.
struct GradingTuple {
  Group group;
  std::vector<GroupElement> entries;

  GradingTuple(Group g, std::vector<GroupElement> e);
  int size() const { return static_cast<int>(entries.size()); }

  friend bool operator==(const GradingTuple&, const GradingTuple&) = default;
};

/// Elementary grading induced by a tuple: the matrix unit e_pq is homogeneous
/// of degree g_q - g_p. Precomputes the support, the index-pair components and
/// the boolean pattern matrix of every component. Immutable once built.
///
/// Index pairs (p, q) are 1-based throughout the public interface.
class ElementaryGrading {
 public:
  explicit ElementaryGrading(GradingTuple tuple);

  const GradingTuple& tuple() const { return tuple_; }
  const Group& group() const { return tuple_.group; }
  int n() const { return tuple_.size(); }
  bool distinct_entries() const { return distinct_; }

  /// Support {g_q - g_p}, sorted by the natural coordinate order.
  const std::vector<GroupElement>& support() const { return support_; }
  bool in_support(const GroupElement& g) const;

  /// Pairs (p, q) with g_q - g_p = g; empty for g outside the support.
  const std::vector<std::pair<int, int>>& component_pairs(const GroupElement& g) const;
  int dim(const GroupElement& g) const;

  /// M_g: ones exactly at the component pairs; the zero matrix off-support.
  PatternMatrix pattern_matrix(const GroupElement& g) const;

  /// Partial injection row -> column of the degree-g component, as (p, q)
  /// pairs with p ascending. Requires distinct entries and g in the support.
  std::vector<std::pair<int, int>> hat_map(const GroupElement& g) const;

 private:
  GradingTuple tuple_;
  bool distinct_;
  std::vector<GroupElement> support_;
  std::map<GroupElement, std::vector<std::pair<int, int>>> pairs_;
  std::map<GroupElement, PatternMatrix> matrices_;
};

ElementaryGrading build_grading(GradingTuple tuple);

/// Keeps the first occurrence of every distinct entry, preserving order.
/// The result grades a smaller matrix algebra with the same support and the
/// same identity verdicts for every degree word.
ElementaryGrading reduce_distinct(const ElementaryGrading& grading);

/// Canonical representative of the tuple up to simultaneous permutation and
/// translation: among the sorted translates sort(entries - g_i), keep those
/// starting at the zero element and take the lexicographically smallest.
GradingTuple canonical_form(const GradingTuple& tuple);

/// True iff h_i = g_{pi(i)} + c for some permutation pi and element c,
/// i.e. the canonical forms coincide. Requires equal groups.
bool is_isomorphic(const GradingTuple& a, const GradingTuple& b);

struct DifferenceProfile {
  std::vector<GroupElement> steps;  // d_t = g_(t+1) - g_t after ascending sort
  bool palindromic;                 // d_t == d_(n-t) for all t
};

/// Consecutive differences of the ascending-sorted tuple. Requires a
/// torsion-free group and distinct entries.
DifferenceProfile difference_profile(const ElementaryGrading& grading);

}  // namespace gradedpi
