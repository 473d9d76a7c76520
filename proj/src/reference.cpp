#include "gradedpi/reference.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gradedpi::reference {

namespace {

// Support letters sorted by the search order, so plain odometer scans visit
// words in exactly the order the pruned kernel reports them.
std::vector<GroupElement> search_letters(const ElementaryGrading& grading, bool include_zero) {
  const Group& G = grading.group();
  std::vector<GroupElement> letters;
  for (const GroupElement& h : grading.support()) {
    if (include_zero || !G.is_zero(h)) letters.push_back(h);
  }
  std::sort(letters.begin(), letters.end(),
            [&](const GroupElement& a, const GroupElement& b) { return G.search_less(a, b); });
  return letters;
}

// Calls fn on every rank vector of the given length in lexicographic order;
// stops early when fn returns true.
template <typename Fn>
bool scan_words(std::size_t alphabet, int length, Fn&& fn) {
  if (alphabet == 0 || length < 1) return false;
  std::vector<int> ranks(static_cast<std::size_t>(length), 0);
  while (true) {
    if (fn(ranks)) return true;
    int pos = length - 1;
    while (pos >= 0 && ranks[static_cast<std::size_t>(pos)] + 1 == static_cast<int>(alphabet)) {
      ranks[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return false;
    ++ranks[static_cast<std::size_t>(pos)];
  }
}

DegreeWord ranks_to_word(const Group& G, const std::vector<GroupElement>& letters,
                         const std::vector<int>& ranks) {
  std::vector<GroupElement> elems;
  elems.reserve(ranks.size());
  for (int r : ranks) elems.push_back(letters[static_cast<std::size_t>(r)]);
  return DegreeWord(G, std::move(elems));
}

void require_distinct(const ElementaryGrading& grading, const char* who) {
  if (!grading.distinct_entries()) {
    throw std::invalid_argument(std::string(who) +
                                " requires distinct entries; apply reduce_distinct first");
  }
}

void ascending_rec(int n, std::int64_t bound, int pos, std::vector<std::int64_t>& cur,
                   std::vector<std::vector<std::int64_t>>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t v = cur[static_cast<std::size_t>(pos - 1)] + 1; v <= bound; ++v) {
    cur[static_cast<std::size_t>(pos)] = v;
    ascending_rec(n, bound, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<DegreeWord> all_nontrivial_identities(const ElementaryGrading& grading, int max_length) {
  if (max_length < 1) throw std::invalid_argument("all_nontrivial_identities: max_length must be >= 1");
  require_distinct(grading, "reference::all_nontrivial_identities");
  const Group& G = grading.group();
  const auto letters = search_letters(grading, false);
  std::vector<DegreeWord> out;
  for (int length = 1; length <= max_length; ++length) {
    scan_words(letters.size(), length, [&](const std::vector<int>& ranks) {
      DegreeWord word = ranks_to_word(G, letters, ranks);
      const IdentityReport report = classify_word(grading, word);
      if (report.is_identity && !report.is_trivial) out.push_back(std::move(word));
      return false;
    });
  }
  return out;
}

MinimalIdentitySet enumerate_minimal_identities(const ElementaryGrading& grading, int max_length) {
  if (max_length < 1) throw std::invalid_argument("enumerate_minimal_identities: max_length must be >= 1");
  require_distinct(grading, "reference::enumerate_minimal_identities");
  const auto all = all_nontrivial_identities(grading, max_length);
  MinimalIdentitySet result{grading.tuple(), max_length, {}};
  for (const DegreeWord& word : all) {
    std::vector<DegreeWord> shorter;
    for (const DegreeWord& other : all) {
      if (other.size() < word.size()) shorter.push_back(other);
    }
    if (!is_consequence(grading, word, shorter, /*allow_trivial=*/true)) {
      result.identities.push_back(word);
    }
  }
  return result;
}

std::optional<DegreeWord> shortest_nontrivial_identity(const ElementaryGrading& grading,
                                                       int max_length) {
  if (max_length < 1) throw std::invalid_argument("shortest_nontrivial_identity: max_length must be >= 1");
  require_distinct(grading, "reference::shortest_nontrivial_identity");
  const Group& G = grading.group();
  const auto letters = search_letters(grading, false);
  std::optional<DegreeWord> found;
  for (int length = 1; length <= max_length && !found; ++length) {
    scan_words(letters.size(), length, [&](const std::vector<int>& ranks) {
      DegreeWord word = ranks_to_word(G, letters, ranks);
      const IdentityReport report = classify_word(grading, word);
      if (report.is_identity && !report.is_trivial) {
        found = std::move(word);
        return true;
      }
      return false;
    });
  }
  return found;
}

AlmostNondegeneracy is_almost_nondegenerate(const ElementaryGrading& grading) {
  const ElementaryGrading reduced =
      grading.distinct_entries() ? grading : reduce_distinct(grading);
  auto witness = shortest_nontrivial_identity(reduced, reduced.n());
  return {!witness.has_value(), std::move(witness)};
}

GoodSequenceVerdict is_good_sequence(std::span<const std::int64_t> entries, int max_length) {
  if (max_length < 2) throw std::invalid_argument("is_good_sequence: max_length must be >= 2");
  if (entries.empty()) throw std::invalid_argument("is_good_sequence: empty tuple");
  Group Z(1, {});
  std::vector<GroupElement> elems;
  elems.reserve(entries.size());
  for (std::int64_t v : entries) elems.push_back(Z.make({v}));
  const ElementaryGrading grading = build_grading(GradingTuple(Z, std::move(elems)));

  GoodSequenceVerdict verdict;
  verdict.entries.assign(entries.begin(), entries.end());
  verdict.max_length = max_length;

  const auto letters = search_letters(grading, false);
  for (int length = 2; length <= max_length && !verdict.violation; ++length) {
    scan_words(letters.size(), length, [&](const std::vector<int>& ranks) {
      // Violation: zero product, every contiguous sum inside S, and both
      // truncations (drop last / drop first letter) still nonzero.
      const DegreeWord word = ranks_to_word(Z, letters, ranks);
      if (!eval_word(grading, word).is_zero()) return false;
      for (int i = 0; i < length; ++i) {
        GroupElement sum = Z.zero();
        for (int j = i; j < length; ++j) {
          sum = Z.add(sum, word.letters[static_cast<std::size_t>(j)]);
          if (!grading.in_support(sum)) return false;
        }
      }
      const DegreeWord head(Z, {word.letters.begin(), word.letters.end() - 1});
      const DegreeWord tail(Z, {word.letters.begin() + 1, word.letters.end()});
      if (eval_word(grading, head).is_zero() || eval_word(grading, tail).is_zero()) return false;
      std::vector<std::int64_t> flat;
      flat.reserve(word.letters.size());
      for (const GroupElement& h : word.letters) flat.push_back(h.coords[0]);
      verdict.violation = std::move(flat);
      return true;
    });
  }
  verdict.good_up_to_length = !verdict.violation.has_value();
  return verdict;
}

ClassificationResult classify_almost_nondeg(int n, std::int64_t bound, bool palindromic_prune) {
  if (n < 2 || n > 5) throw std::invalid_argument("classify_almost_nondeg: supported range is 2 <= n <= 5");
  if (bound < n - 1) {
    throw std::invalid_argument("classify_almost_nondeg: bound must be at least n - 1");
  }
  Group Z(1, {});
  ClassificationResult result;
  result.n = n;
  result.bound = bound;
  result.pruned = palindromic_prune;

  std::vector<std::vector<std::int64_t>> tuples;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(n), 0);
  ascending_rec(n, bound, 1, cur, tuples);

  for (const auto& t : tuples) {
    std::vector<GroupElement> elems;
    for (std::int64_t v : t) elems.push_back(Z.make({v}));
    const ElementaryGrading grading = build_grading(GradingTuple(Z, std::move(elems)));
    if (palindromic_prune && !difference_profile(grading).palindromic) continue;
    if (!reference::is_almost_nondegenerate(grading).almost_nondegenerate) continue;
    SurvivorInfo info;
    info.entries = t;
    if (equiv_canonical_Z(grading)) {
      info.kind = FamilyKind::canonical_z;
    } else {
      const std::int64_t a = t[1];
      const std::int64_t b = t[2] - t[1];
      const bool shape = n == 4   ? t[3] == 2 * a + b
                         : n == 5 ? t[3] == a + 2 * b && t[4] == 2 * a + 2 * b
                                  : false;
      if (shape && a >= 1 && b >= 1 && family_predicted(n, a, b)) {
        info.kind = n == 4 ? FamilyKind::family_n4 : FamilyKind::family_n5;
        info.a = a;
        info.b = b;
      } else {
        info.kind = FamilyKind::unmatched;
        result.unmatched.push_back(t);
      }
    }
    result.survivors.push_back(std::move(info));
  }
  return result;
}

}  // namespace gradedpi::reference
