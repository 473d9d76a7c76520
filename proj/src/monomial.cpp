#include "gradedpi/monomial.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace gradedpi {

namespace {

void check_same_group(const ElementaryGrading& grading, const DegreeWord& word, const char* op) {
  if (word.group != grading.group()) {
    throw std::invalid_argument(std::string(op) + ": word group does not match the grading group");
  }
}

// Inclusive 1-based prefix sums: P[0] = 0, P[i] = h_1 + ... + h_i.
std::vector<GroupElement> prefix_sums(const Group& G, const DegreeWord& word) {
  std::vector<GroupElement> P;
  P.reserve(word.letters.size() + 1);
  P.push_back(G.zero());
  for (const auto& h : word.letters) P.push_back(G.add(P.back(), h));
  return P;
}

// First interval [i, j] (i ascending, then j) whose sum leaves the support.
std::optional<TrivialInterval> find_trivial_interval(const ElementaryGrading& grading,
                                                    const std::vector<GroupElement>& P) {
  const Group& G = grading.group();
  const int k = static_cast<int>(P.size()) - 1;
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      if (!grading.in_support(G.sub(P[static_cast<std::size_t>(j)], P[static_cast<std::size_t>(i - 1)]))) {
        return TrivialInterval{i, j};
      }
    }
  }
  return std::nullopt;
}

NonIdentityChain recover_chain(const ElementaryGrading& grading, const DegreeWord& word) {
  const int n = grading.n();
  const int k = word.size();
  std::vector<PatternMatrix> suffix(static_cast<std::size_t>(k) + 1, PatternMatrix::identity(n));
  for (int t = k - 1; t >= 0; --t) {
    suffix[static_cast<std::size_t>(t)] =
        grading.pattern_matrix(word.letters[static_cast<std::size_t>(t)]) *
        suffix[static_cast<std::size_t>(t) + 1];
  }
  const PatternMatrix& full = suffix[0];
  int i0 = -1, j0 = -1;
  for (int i = 0; i < n && i0 < 0; ++i) {
    for (int j = 0; j < n; ++j) {
      if (full.get(i, j)) {
        i0 = i;
        j0 = j;
        break;
      }
    }
  }
  assert(i0 >= 0);

  NonIdentityChain chain;
  chain.indices.push_back(i0 + 1);
  int u = i0;
  for (int t = 0; t < k; ++t) {
    const PatternMatrix M = grading.pattern_matrix(word.letters[static_cast<std::size_t>(t)]);
    int next = -1;
    for (int v = 0; v < n; ++v) {
      if (M.get(u, v) && suffix[static_cast<std::size_t>(t) + 1].get(v, j0)) {
        next = v;
        break;
      }
    }
    assert(next >= 0);
    chain.indices.push_back(next + 1);
    u = next;
  }
  assert(u == j0);
  return chain;
}

}  // namespace

DegreeWord::DegreeWord(Group g, std::vector<GroupElement> l)
    : group(std::move(g)), letters(std::move(l)) {
  if (letters.empty()) throw std::invalid_argument("degree word must be nonempty");
  for (const auto& h : letters) {
    if (static_cast<int>(h.coords.size()) != group.rank()) {
      throw std::invalid_argument("degree word letter arity does not match the group");
    }
  }
}

PatternMatrix eval_word(const ElementaryGrading& grading, const DegreeWord& word) {
  check_same_group(grading, word, "eval_word");
  PatternMatrix acc = grading.pattern_matrix(word.letters[0]);
  for (std::size_t t = 1; t < word.letters.size(); ++t) {
    acc = acc * grading.pattern_matrix(word.letters[t]);
  }
  return acc;
}

IdentityReport classify_word(const ElementaryGrading& grading, const DegreeWord& word) {
  check_same_group(grading, word, "classify_word");
  IdentityReport report{word, false, false, std::monostate{}};
  report.is_identity = eval_word(grading, word).is_zero();

  const auto P = prefix_sums(grading.group(), word);
  if (auto interval = find_trivial_interval(grading, P)) {
    report.is_trivial = true;
    report.witness = *interval;
    assert(report.is_identity);  // triviality soundness
    return report;
  }
  if (!report.is_identity) {
    report.witness = recover_chain(grading, word);
  }
  return report;
}

std::optional<ConsequenceWitness> is_consequence(const ElementaryGrading& grading,
                                                 const DegreeWord& word,
                                                 std::span<const DegreeWord> generators,
                                                 bool allow_trivial) {
  check_same_group(grading, word, "is_consequence");
  const Group& G = grading.group();
  const int n = grading.n();
  const int k = word.size();

  // Per-call cache of component row masks, so the validating products below
  // run on raw bitsets instead of allocating pattern matrices per letter.
  std::vector<GroupElement> cached;
  std::vector<std::uint64_t> cached_rows;
  const auto letter_rows = [&](const GroupElement& h) -> const std::uint64_t* {
    for (std::size_t i = 0; i < cached.size(); ++i) {
      if (cached[i] == h) return cached_rows.data() + i * static_cast<std::size_t>(n);
    }
    const PatternMatrix m = grading.pattern_matrix(h);
    cached.push_back(h);
    for (int r = 0; r < n; ++r) cached_rows.push_back(m.row(r));
    return cached_rows.data() + (cached.size() - 1) * static_cast<std::size_t>(n);
  };
  std::array<std::uint64_t, PatternMatrix::kMaxSize> acc{};
  const auto vanishes = [&](const std::vector<GroupElement>& letters) -> bool {
    const std::uint64_t* first = letter_rows(letters.front());
    std::copy(first, first + n, acc.begin());
    for (std::size_t t = 1; t < letters.size(); ++t) {
      const std::uint64_t* m = letter_rows(letters[t]);  // fetch may invalidate `first` only
      for (int i = 0; i < n; ++i) {
        std::uint64_t bits = acc[static_cast<std::size_t>(i)];
        std::uint64_t out = 0;
        while (bits) {
          out |= m[std::countr_zero(bits)];
          bits &= bits - 1;
        }
        acc[static_cast<std::size_t>(i)] = out;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (acc[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  };

  if (!vanishes(word.letters)) {
    throw std::invalid_argument("is_consequence: word is not a graded identity");
  }
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    check_same_group(grading, generators[gi], "is_consequence generator");
    if (!vanishes(generators[gi].letters)) {
      throw std::invalid_argument("is_consequence: generator " + std::to_string(gi) +
                                  " is not a graded identity");
    }
  }

  const auto P = prefix_sums(G, word);

  if (allow_trivial) {
    if (auto interval = find_trivial_interval(grading, P)) return ConsequenceWitness{*interval};
  }

  // Sums over contiguous windows, shared by every generator and start point.
  const std::size_t stride = static_cast<std::size_t>(k) + 1;
  std::vector<GroupElement> window(stride * stride);
  for (int s = 0; s < k; ++s) {
    for (int e = s + 1; e <= k; ++e) {
      window[static_cast<std::size_t>(s) * stride + static_cast<std::size_t>(e)] =
          G.sub(P[static_cast<std::size_t>(e)], P[static_cast<std::size_t>(s)]);
    }
  }

  int l_max = 0;
  for (const DegreeWord& gen : generators) {
    if (gen.size() <= k) l_max = std::max(l_max, gen.size());
  }
  std::vector<int> parent((static_cast<std::size_t>(l_max) + 1) * stride);
  std::vector<char> reach(stride);
  std::vector<char> next(stride);

  // Window [p, q] split at boundaries into |N| blocks whose sums spell the
  // generator N. reach[t] holds the block-end positions after t letters of N;
  // parent pointers pick the smallest split for a deterministic witness.
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const auto& N = generators[gi].letters;
    const int l = static_cast<int>(N.size());
    if (l > k) continue;
    for (int p = 1; p <= k; ++p) {
      std::fill(parent.begin(), parent.begin() + (static_cast<std::size_t>(l) + 1) * stride, -1);
      std::fill(reach.begin(), reach.end(), 0);
      reach[static_cast<std::size_t>(p - 1)] = 1;
      for (int t = 1; t <= l; ++t) {
        std::fill(next.begin(), next.end(), 0);
        for (int s = p - 1; s <= k; ++s) {
          if (!reach[static_cast<std::size_t>(s)]) continue;
          for (int e = s + 1; e <= k; ++e) {
            if (next[static_cast<std::size_t>(e)]) continue;
            if (window[static_cast<std::size_t>(s) * stride + static_cast<std::size_t>(e)] ==
                N[static_cast<std::size_t>(t - 1)]) {
              next[static_cast<std::size_t>(e)] = 1;
              parent[static_cast<std::size_t>(t) * stride + static_cast<std::size_t>(e)] = s;
            }
          }
        }
        std::swap(reach, next);
      }
      for (int q = p; q <= k; ++q) {
        if (!reach[static_cast<std::size_t>(q)]) continue;
        BlockMatch match;
        match.begin = p;
        match.end = q;
        match.generator_index = gi;
        match.boundaries.assign(static_cast<std::size_t>(l) + 1, 0);
        int e = q;
        for (int t = l; t >= 1; --t) {
          match.boundaries[static_cast<std::size_t>(t)] = e;
          e = parent[static_cast<std::size_t>(t) * stride + static_cast<std::size_t>(e)];
          assert(e >= 0);
        }
        assert(e == p - 1);
        match.boundaries[0] = p - 1;
        return ConsequenceWitness{std::move(match)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace gradedpi
