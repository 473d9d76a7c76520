#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "gradedpi/grading.hpp"

namespace gradedpi {

/// Multilinear graded monomial x_1 ... x_k presented by its degree word
/// (h_1, ..., h_k); the i-th variable ranges over the degree-h_i component.
struct DegreeWord {
  Group group;
  std::vector<GroupElement> letters;

  DegreeWord(Group g, std::vector<GroupElement> l);
  int size() const { return static_cast<int>(letters.size()); }

  friend bool operator==(const DegreeWord&, const DegreeWord&) = default;
};

/// Witness that a word is not an identity: matrix indices i_0, ..., i_k
/// (1-based) with e_{i0 i1} e_{i1 i2} ... e_{i(k-1) ik} != 0 and matching
/// letter degrees.
struct NonIdentityChain {
  std::vector<int> indices;

  friend bool operator==(const NonIdentityChain&, const NonIdentityChain&) = default;
};

/// Witness of triviality: 1-based inclusive interval [begin, end] whose
/// letter sum lies outside the support.
struct TrivialInterval {
  int begin = 0;
  int end = 0;

  friend bool operator==(const TrivialInterval&, const TrivialInterval&) = default;
};

using IdentityWitness = std::variant<std::monostate, NonIdentityChain, TrivialInterval>;

struct IdentityReport {
  DegreeWord word;
  bool is_identity = false;
  bool is_trivial = false;
  IdentityWitness witness;  // chain iff not identity, interval iff trivial
};

/// Boolean product M_{h_1} ... M_{h_k}; zero iff the monomial is a graded
/// identity of the grading. Word must be nonempty and share the group.
PatternMatrix eval_word(const ElementaryGrading& grading, const DegreeWord& word);

/// Identity / triviality verdict with a validating witness. A word is
/// trivial iff some contiguous interval sums outside the support (the first
/// such interval, scanning begin then end ascending, is reported).
IdentityReport classify_word(const ElementaryGrading& grading, const DegreeWord& word);

/// Block witness for consequence: the window [begin, end] of the word splits
/// at `boundaries` (b_0 = begin-1 < b_1 < ... < b_l = end, 1-based) into
/// blocks whose in-order sums spell generators[generator_index].
struct BlockMatch {
  int begin = 0;
  int end = 0;
  std::vector<int> boundaries;
  std::size_t generator_index = 0;

  friend bool operator==(const BlockMatch&, const BlockMatch&) = default;
};

using ConsequenceWitness = std::variant<TrivialInterval, BlockMatch>;

/// Decides whether `word` is a consequence of the generator identities (or,
/// with allow_trivial, of triviality). Both the word and every generator must
/// be identities of the grading; violations throw std::invalid_argument.
/// Deterministic preference: triviality first, then generator order, then
/// smallest window start, end and boundaries.
std::optional<ConsequenceWitness> is_consequence(const ElementaryGrading& grading,
                                                 const DegreeWord& word,
                                                 std::span<const DegreeWord> generators,
                                                 bool allow_trivial);

}  // namespace gradedpi
