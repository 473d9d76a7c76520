#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradedpi/monomial.hpp"

namespace gradedpi {

enum class ExecutionPolicy { serial, parallel };

/// Non-trivial minimal identities of length <= max_length, ordered by length
/// and then by the search order of the letters. Minimal means: not a
/// consequence of any strictly shorter identity nor of triviality.
struct MinimalIdentitySet {
  GradingTuple tuple;
  int max_length = 0;
  std::vector<DegreeWord> identities;
};

/// Pruned depth-first search over words with letters in support \ {0}.
/// Branches are cut as soon as the running product reaches zero (extensions
/// are consequences) or the word goes trivial (triviality is inherited).
/// Requires distinct entries; apply reduce_distinct first otherwise.
/// Serial and parallel execution produce identical results.
MinimalIdentitySet enumerate_minimal_identities(const ElementaryGrading& grading,
                                                int max_length,
                                                ExecutionPolicy policy = ExecutionPolicy::parallel);

struct AlmostNondegeneracy {
  bool almost_nondegenerate = false;
  /// Shortest (then search-order-least) non-trivial identity when false.
  std::optional<DegreeWord> witness;
};

/// True iff the grading admits no non-trivial monomial identity. Reduces to
/// distinct entries internally; searching up to the reduced size n' is
/// exhaustive, since every longer identity is a consequence of shorter ones.
AlmostNondegeneracy is_almost_nondegenerate(const ElementaryGrading& grading);

struct NondegeneracyVerdict {
  bool nondegenerate = false;
  std::string reason;  // empty when nondegenerate
  std::optional<DegreeWord> witness;
};

/// Non-degenerate = support is the whole (finite) group and the grading is
/// almost non-degenerate. Infinite groups are rejected with a reason.
NondegeneracyVerdict is_nondegenerate(const ElementaryGrading& grading);

struct GoodSequenceVerdict {
  std::vector<std::int64_t> entries;
  int max_length = 0;         // bound L actually searched
  bool good_up_to_length = false;
  /// Shortest violating word when not good: X_{k_1} ... X_{k_t} = 0 although
  /// every contiguous sum stays in S and both end truncations are nonzero.
  std::optional<std::vector<std::int64_t>> violation;
};

/// Bounded test of the good-sequence property for an integer tuple:
/// S = {g_i - g_j}, X_k the 0/1 matrix with ones where g_j - g_i = k, and
/// words (k_1, ..., k_t) over S \ {0} with 2 <= t <= max_length are searched
/// for violations. Verdicts are relative to the bound.
GoodSequenceVerdict is_good_sequence(std::span<const std::int64_t> entries, int max_length);

struct PrefixMinimalIdentity {
  DegreeWord word;
  /// True when every proper suffix also has a nonzero product, i.e. the word
  /// contains no proper contiguous identity subword at all.
  bool proper_suffixes_nonzero = false;
};

/// All identity words of length <= max_length whose proper prefixes all have
/// nonzero products, found by the same pruned search. Every identity word is
/// a consequence of some word in this list. Letters range over the support,
/// including 0 when include_zero_letters is set.
std::vector<PrefixMinimalIdentity> prefix_minimal_identities(const ElementaryGrading& grading,
                                                             int max_length,
                                                             bool include_zero_letters);

}  // namespace gradedpi
