#include "gradedpi/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gradedpi {

namespace {

// Flattened view of a grading for the search kernel: letters in search order
// with their pattern matrices as raw row bitsets, and the support as sorted
// coordinate rows for binary-search membership tests.
struct FlatView {
  int n = 0;
  int rank = 0;
  std::vector<GroupElement> letter_elems;
  std::vector<std::uint64_t> letter_mats;   // letter-major, n rows each
  std::vector<std::int64_t> letter_coords;  // letter-major, rank each
  std::vector<std::int64_t> support_rows;   // sorted naturally, rank each
  std::size_t support_count = 0;
  std::vector<std::int64_t> moduli;         // per coordinate, 0 for free

  const std::uint64_t* mat(std::size_t a) const {
    return letter_mats.data() + a * static_cast<std::size_t>(n);
  }
  const std::int64_t* coords(std::size_t a) const {
    return letter_coords.data() + a * static_cast<std::size_t>(rank);
  }

  bool support_contains(const std::int64_t* key) const {
    std::size_t lo = 0, hi = support_count;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      const std::int64_t* row = support_rows.data() + mid * static_cast<std::size_t>(rank);
      int cmp = 0;
      for (int c = 0; c < rank; ++c) {
        if (row[c] != key[c]) {
          cmp = row[c] < key[c] ? -1 : 1;
          break;
        }
      }
      if (cmp == 0) return true;
      if (cmp < 0) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return false;
  }
};

FlatView make_flat_view(const ElementaryGrading& grading, bool include_zero_letters) {
  FlatView fv;
  fv.n = grading.n();
  const Group& G = grading.group();
  fv.rank = G.rank();
  for (int c = 0; c < fv.rank; ++c) {
    fv.moduli.push_back(c < G.free_rank() ? 0
                                          : G.moduli()[static_cast<std::size_t>(c - G.free_rank())]);
  }
  for (const auto& g : grading.support()) {
    for (std::int64_t v : g.coords) fv.support_rows.push_back(v);
    if (!include_zero_letters && G.is_zero(g)) continue;
    fv.letter_elems.push_back(g);
  }
  fv.support_count = grading.support().size();
  std::sort(fv.letter_elems.begin(), fv.letter_elems.end(),
            [&](const GroupElement& a, const GroupElement& b) { return G.search_less(a, b); });
  for (const auto& g : fv.letter_elems) {
    const PatternMatrix m = grading.pattern_matrix(g);
    for (int r = 0; r < fv.n; ++r) fv.letter_mats.push_back(m.row(r));
    for (std::int64_t v : g.coords) fv.letter_coords.push_back(v);
  }
  return fv;
}

// Preallocated per-search buffers. Level l holds, for each start i < l, the
// suffix product of word[i..l-1] (n uint64 rows) and the suffix sum (rank
// coordinates); level row 0 is the full running product.
struct SearchSpace {
  int n = 0;
  int rank = 0;
  int cap = 0;
  std::vector<std::uint64_t> prods;
  std::vector<std::int64_t> sums;
  std::vector<int> word;

  SearchSpace(const FlatView& fv, int max_length)
      : n(fv.n), rank(fv.rank), cap(max_length) {
    const std::size_t levels = static_cast<std::size_t>(cap) + 1;
    prods.assign(levels * static_cast<std::size_t>(cap) * static_cast<std::size_t>(n), 0);
    sums.assign(levels * static_cast<std::size_t>(cap) * static_cast<std::size_t>(rank), 0);
    word.assign(static_cast<std::size_t>(cap), 0);
  }

  std::uint64_t* prod(int level, int i) {
    return prods.data() +
           (static_cast<std::size_t>(level) * static_cast<std::size_t>(cap) + static_cast<std::size_t>(i)) *
               static_cast<std::size_t>(n);
  }
  std::int64_t* sum(int level, int i) {
    return sums.data() +
           (static_cast<std::size_t>(level) * static_cast<std::size_t>(cap) + static_cast<std::size_t>(i)) *
               static_cast<std::size_t>(rank);
  }
  bool rows_nonzero(int level, int i) {
    const std::uint64_t* rows = prod(level, i);
    for (int r = 0; r < n; ++r) {
      if (rows[r]) return true;
    }
    return false;
  }
};

// Extends the word at `level` by letter `a`, filling level+1. Returns whether
// the full product is still nonzero.
bool push_letter(const FlatView& fv, SearchSpace& ws, int level, std::size_t a) {
  const std::uint64_t* M = fv.mat(a);
  for (int i = 0; i < level; ++i) {
    const std::uint64_t* src = ws.prod(level, i);
    std::uint64_t* dst = ws.prod(level + 1, i);
    for (int r = 0; r < ws.n; ++r) {
      std::uint64_t bits = src[r];
      std::uint64_t acc = 0;
      while (bits) {
        const int j = std::countr_zero(bits);
        bits &= bits - 1;
        acc |= M[j];
      }
      dst[r] = acc;
    }
  }
  std::copy(M, M + ws.n, ws.prod(level + 1, level));

  const std::int64_t* xc = fv.coords(a);
  for (int i = 0; i < level; ++i) {
    const std::int64_t* src = ws.sum(level, i);
    std::int64_t* dst = ws.sum(level + 1, i);
    for (int c = 0; c < ws.rank; ++c) {
      std::int64_t v = src[c] + xc[c];
      const std::int64_t m = fv.moduli[static_cast<std::size_t>(c)];
      if (m) v %= m;  // letters are reduced, so the sum stays in [0, 2m)
      dst[c] = v;
    }
  }
  std::copy(xc, xc + ws.rank, ws.sum(level + 1, level));

  ws.word[static_cast<std::size_t>(level)] = static_cast<int>(a);
  return ws.rows_nonzero(level + 1, 0);
}

// True iff every interval ending at the last letter sums inside the support;
// intervals of the live prefix are in-support automatically.
bool new_sums_in_support(const FlatView& fv, SearchSpace& ws, int level) {
  for (int i = 0; i < level; ++i) {
    if (!fv.support_contains(ws.sum(level, i))) return false;
  }
  return true;
}

void dfs_record_all(const FlatView& fv, SearchSpace& ws, int level, int max_length,
                    std::vector<std::vector<int>>& out) {
  for (std::size_t a = 0; a < fv.letter_elems.size(); ++a) {
    if (push_letter(fv, ws, level, a)) {
      if (level + 1 < max_length) dfs_record_all(fv, ws, level + 1, max_length, out);
    } else if (new_sums_in_support(fv, ws, level + 1)) {
      out.emplace_back(ws.word.begin(), ws.word.begin() + level + 1);
    }
  }
}

enum class TargetMode { nontrivial_identity, violation };

bool dfs_first_at(const FlatView& fv, SearchSpace& ws, int level, int target, TargetMode mode,
                  std::vector<int>& out) {
  for (std::size_t a = 0; a < fv.letter_elems.size(); ++a) {
    if (push_letter(fv, ws, level, a)) {
      if (level + 1 < target && dfs_first_at(fv, ws, level + 1, target, mode, out)) return true;
    } else if (level + 1 == target && new_sums_in_support(fv, ws, level + 1)) {
      if (mode == TargetMode::violation && !ws.rows_nonzero(level + 1, 1)) continue;
      out.assign(ws.word.begin(), ws.word.begin() + level + 1);
      return true;
    }
  }
  return false;
}

struct CollectedWord {
  std::vector<int> letters;
  bool suffixes_nonzero = false;
};

void dfs_collect(const FlatView& fv, SearchSpace& ws, int level, int max_length,
                 std::vector<CollectedWord>& out) {
  for (std::size_t a = 0; a < fv.letter_elems.size(); ++a) {
    if (push_letter(fv, ws, level, a)) {
      if (level + 1 < max_length) dfs_collect(fv, ws, level + 1, max_length, out);
    } else {
      bool fresh = true;
      for (int i = 1; i < level + 1; ++i) {
        if (!ws.rows_nonzero(level + 1, i)) {
          fresh = false;
          break;
        }
      }
      out.push_back({std::vector<int>(ws.word.begin(), ws.word.begin() + level + 1), fresh});
    }
  }
}

// Fans the top level out across first letters; each worker owns its buffers
// and results are concatenated in letter order, so the output sequence is
// identical to the serial one.
template <typename PerLetter>
void fan_out(const FlatView& fv, bool parallel, PerLetter&& per_letter) {
  const std::int64_t count = static_cast<std::int64_t>(fv.letter_elems.size());
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t a = 0; a < count; ++a) per_letter(static_cast<std::size_t>(a));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::int64_t a = 0; a < count; ++a) per_letter(static_cast<std::size_t>(a));
}

bool word_order(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;  // letter indices are search-order ranks
}

DegreeWord to_word(const Group& G, const FlatView& fv, const std::vector<int>& letters) {
  std::vector<GroupElement> elems;
  elems.reserve(letters.size());
  for (int a : letters) elems.push_back(fv.letter_elems[static_cast<std::size_t>(a)]);
  return DegreeWord(G, std::move(elems));
}

std::vector<std::vector<int>> run_record_all(const FlatView& fv, int max_length, bool parallel) {
  std::vector<std::vector<std::vector<int>>> per_letter(fv.letter_elems.size());
  fan_out(fv, parallel, [&](std::size_t a) {
    SearchSpace ws(fv, max_length);
    if (push_letter(fv, ws, 0, a)) {
      if (max_length > 1) dfs_record_all(fv, ws, 1, max_length, per_letter[a]);
    } else if (new_sums_in_support(fv, ws, 1)) {
      per_letter[a].emplace_back(1, static_cast<int>(a));
    }
  });
  std::vector<std::vector<int>> records;
  for (auto& bucket : per_letter) {
    records.insert(records.end(), std::make_move_iterator(bucket.begin()),
                   std::make_move_iterator(bucket.end()));
  }
  std::sort(records.begin(), records.end(), word_order);
  return records;
}

std::optional<std::vector<int>> run_first(const FlatView& fv, int max_length, TargetMode mode) {
  SearchSpace ws(fv, std::max(max_length, 1));
  std::vector<int> out;
  const int start = mode == TargetMode::violation ? 2 : 1;
  for (int target = start; target <= max_length; ++target) {
    if (dfs_first_at(fv, ws, 0, target, mode, out)) return out;
  }
  return std::nullopt;
}

}  // namespace

MinimalIdentitySet enumerate_minimal_identities(const ElementaryGrading& grading, int max_length,
                                                ExecutionPolicy policy) {
  if (max_length < 1) throw std::invalid_argument("enumerate_minimal_identities: max_length must be >= 1");
  if (!grading.distinct_entries()) {
    throw std::invalid_argument(
        "enumerate_minimal_identities requires distinct entries; apply reduce_distinct first");
  }
  const FlatView fv = make_flat_view(grading, /*include_zero_letters=*/false);
  const auto records = run_record_all(fv, max_length, policy == ExecutionPolicy::parallel);

  std::vector<DegreeWord> words;
  words.reserve(records.size());
  for (const auto& r : records) words.push_back(to_word(grading.group(), fv, r));

  // Filtering against the minimal members found so far is equivalent to
  // filtering against all shorter records: block witnesses compose, and a
  // same-length generator can only match the word itself.
  MinimalIdentitySet result{grading.tuple(), max_length, {}};
  for (const DegreeWord& word : words) {
    if (!is_consequence(grading, word, result.identities, /*allow_trivial=*/true)) {
      result.identities.push_back(word);
    }
  }
  return result;
}

AlmostNondegeneracy is_almost_nondegenerate(const ElementaryGrading& grading) {
  const ElementaryGrading reduced =
      grading.distinct_entries() ? grading : reduce_distinct(grading);
  const FlatView fv = make_flat_view(reduced, /*include_zero_letters=*/false);
  if (auto found = run_first(fv, reduced.n(), TargetMode::nontrivial_identity)) {
    return {false, to_word(reduced.group(), fv, *found)};
  }
  return {true, std::nullopt};
}

NondegeneracyVerdict is_nondegenerate(const ElementaryGrading& grading) {
  const Group& G = grading.group();
  if (!G.finite()) {
    return {false, "the group is infinite but the support of a grading is finite", std::nullopt};
  }
  if (G.order() != static_cast<std::int64_t>(grading.support().size())) {
    return {false, "the support is a proper subset of the group", std::nullopt};
  }
  AlmostNondegeneracy almost = is_almost_nondegenerate(grading);
  if (!almost.almost_nondegenerate) {
    return {false, "a non-trivial monomial identity exists", std::move(almost.witness)};
  }
  return {true, "", std::nullopt};
}

GoodSequenceVerdict is_good_sequence(std::span<const std::int64_t> entries, int max_length) {
  if (entries.empty()) throw std::invalid_argument("is_good_sequence: tuple must be nonempty");
  if (max_length < 2) throw std::invalid_argument("is_good_sequence: max_length must be >= 2");
  const Group Z(1, {});
  std::vector<GroupElement> elems;
  elems.reserve(entries.size());
  for (std::int64_t v : entries) elems.push_back(Z.make({v}));
  const ElementaryGrading grading(GradingTuple(Z, std::move(elems)));
  const FlatView fv = make_flat_view(grading, /*include_zero_letters=*/false);

  GoodSequenceVerdict verdict;
  verdict.entries.assign(entries.begin(), entries.end());
  verdict.max_length = max_length;
  if (auto found = run_first(fv, max_length, TargetMode::violation)) {
    std::vector<std::int64_t> word;
    word.reserve(found->size());
    for (int a : *found) word.push_back(fv.letter_elems[static_cast<std::size_t>(a)].coords[0]);
    verdict.good_up_to_length = false;
    verdict.violation = std::move(word);
  } else {
    verdict.good_up_to_length = true;
  }
  return verdict;
}

std::vector<PrefixMinimalIdentity> prefix_minimal_identities(const ElementaryGrading& grading,
                                                             int max_length,
                                                             bool include_zero_letters) {
  if (max_length < 1) throw std::invalid_argument("prefix_minimal_identities: max_length must be >= 1");
  const FlatView fv = make_flat_view(grading, include_zero_letters);

  std::vector<std::vector<CollectedWord>> per_letter(fv.letter_elems.size());
  fan_out(fv, /*parallel=*/true, [&](std::size_t a) {
    SearchSpace ws(fv, max_length);
    if (push_letter(fv, ws, 0, a)) {
      if (max_length > 1) dfs_collect(fv, ws, 1, max_length, per_letter[a]);
    } else {
      per_letter[a].push_back({std::vector<int>(1, static_cast<int>(a)), true});
    }
  });

  std::vector<CollectedWord> collected;
  for (auto& bucket : per_letter) {
    collected.insert(collected.end(), std::make_move_iterator(bucket.begin()),
                     std::make_move_iterator(bucket.end()));
  }
  std::sort(collected.begin(), collected.end(),
            [](const CollectedWord& a, const CollectedWord& b) { return word_order(a.letters, b.letters); });

  std::vector<PrefixMinimalIdentity> out;
  out.reserve(collected.size());
  for (const auto& c : collected) {
    out.push_back({to_word(grading.group(), fv, c.letters), c.suffixes_nonzero});
  }
  return out;
}

}  // namespace gradedpi
