#include "gradedpi/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace gradedpi {

namespace {

std::string verdict_triple(bool s, bool p, bool d) {
  auto word = [](bool b) { return b ? std::string("true") : std::string("false"); };
  return "support=" + word(s) + " progression=" + word(p) + " dimension=" + word(d);
}

GradingTuple int_tuple(const std::vector<std::int64_t>& values) {
  Group Z(1, {});
  std::vector<GroupElement> entries;
  entries.reserve(values.size());
  for (std::int64_t v : values) entries.push_back(Z.make({v}));
  return GradingTuple(std::move(Z), std::move(entries));
}

void ascending_tuples_rec(int n, std::int64_t bound, int pos, std::vector<std::int64_t>& cur,
                          std::vector<std::vector<std::int64_t>>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t v = cur[pos - 1] + 1; v <= bound; ++v) {
    cur[pos] = v;
    ascending_tuples_rec(n, bound, pos + 1, cur, out);
  }
}

// All (0, g_2 < ... < g_n <= bound) in lexicographic order.
std::vector<std::vector<std::int64_t>> ascending_tuples(int n, std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(n), 0);
  ascending_tuples_rec(n, bound, 1, cur, out);
  return out;
}

SurvivorInfo match_survivor(const std::vector<std::int64_t>& t) {
  SurvivorInfo info;
  info.entries = t;
  const ElementaryGrading grading = build_grading(int_tuple(t));
  if (equiv_canonical_Z(grading)) {
    info.kind = FamilyKind::canonical_z;
    return info;
  }
  const int n = static_cast<int>(t.size());
  if (n == 4 || n == 5) {
    const std::int64_t a = t[1];
    const std::int64_t b = t[2] - t[1];
    if (a >= 1 && b >= 1 && family_predicted(n, a, b)) {
      const bool shape = n == 4 ? t[3] == 2 * a + b
                                : t[3] == a + 2 * b && t[4] == 2 * a + 2 * b;
      if (shape) {
        info.kind = n == 4 ? FamilyKind::family_n4 : FamilyKind::family_n5;
        info.a = a;
        info.b = b;
        return info;
      }
    }
  }
  info.kind = FamilyKind::unmatched;
  return info;
}

}  // namespace

bool equiv_canonical_Z(const ElementaryGrading& grading) {
  const Group& G = grading.group();
  if (!G.torsion_free()) throw std::invalid_argument("equiv_canonical_Z: the group must be torsion-free");
  if (!grading.distinct_entries()) throw std::invalid_argument("equiv_canonical_Z: entries must be distinct");
  const int n = grading.n();
  if (n == 1) return true;

  std::vector<GroupElement> sorted = grading.tuple().entries;
  std::sort(sorted.begin(), sorted.end(),
            [&](const GroupElement& a, const GroupElement& b) { return G.lex_less(a, b); });

  const bool by_support = static_cast<int>(grading.support().size()) == 2 * n - 1;

  // (0, g, 2g, ..., (n-1)g) after translating the least entry to zero.
  const GroupElement g = G.sub(sorted[1], sorted[0]);
  bool by_progression = true;
  for (int k = 2; k < n; ++k) {
    if (G.sub(sorted[static_cast<std::size_t>(k)], sorted[0]) != G.scalar_mul(k, g)) {
      by_progression = false;
      break;
    }
  }

  bool by_dimension = false;
  for (const GroupElement& h : grading.support()) {
    if (!G.is_zero(h) && grading.dim(h) == n - 1) {
      by_dimension = true;
      break;
    }
  }

  if (by_support != by_progression || by_support != by_dimension) {
    throw std::logic_error("equiv_canonical_Z: criteria disagree (" +
                           verdict_triple(by_support, by_progression, by_dimension) + ")");
  }
  return by_support;
}

GradingTuple family_tuple(int n, std::int64_t a, std::int64_t b) {
  if (n != 4 && n != 5) throw std::invalid_argument("family_tuple: n must be 4 or 5");
  if (a < 1 || b < 1) throw std::invalid_argument("family_tuple: parameters a, b must be >= 1");
  if (n == 4) return int_tuple({0, a, a + b, 2 * a + b});
  return int_tuple({0, a, a + b, a + 2 * b, 2 * a + 2 * b});
}

bool family_predicted(int n, std::int64_t a, std::int64_t b) {
  if (n != 4 && n != 5) throw std::invalid_argument("family_predicted: n must be 4 or 5");
  if (a < 1 || b < 1) throw std::invalid_argument("family_predicted: parameters a, b must be >= 1");
  if (n == 4) return a != 2 * b && 2 * a != b;
  // For a != b the word (a, b, -(a+2b)) is always a non-trivial identity of
  // the n = 5 shape (see classify.hpp), so only a == b survives.
  return a == b;
}

FamilyVerdict family_verdict(int n, std::int64_t a, std::int64_t b) {
  return {family_tuple(n, a, b), family_predicted(n, a, b)};
}

ClassificationResult classify_almost_nondeg(int n, std::int64_t bound, ClassifyOptions options) {
  if (n < 2 || n > 5) throw std::invalid_argument("classify_almost_nondeg: supported range is 2 <= n <= 5");
  if (bound < n - 1) {
    throw std::invalid_argument("classify_almost_nondeg: bound must be at least n - 1");
  }

  const auto tuples = ascending_tuples(n, bound);
  std::vector<char> survives(tuples.size(), 0);

  const bool parallel = options.policy == ExecutionPolicy::parallel;
  const std::int64_t count = static_cast<std::int64_t>(tuples.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const ElementaryGrading grading = build_grading(int_tuple(tuples[idx]));
    if (options.palindromic_prune && !difference_profile(grading).palindromic) continue;
    survives[idx] = is_almost_nondegenerate(grading).almost_nondegenerate ? 1 : 0;
  }
#ifndef _OPENMP
  (void)parallel;
#endif

  ClassificationResult result;
  result.n = n;
  result.bound = bound;
  result.pruned = options.palindromic_prune;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (!survives[i]) continue;
    SurvivorInfo info = match_survivor(tuples[i]);
    if (info.kind == FamilyKind::unmatched) result.unmatched.push_back(info.entries);
    result.survivors.push_back(std::move(info));
  }
  return result;
}

}  // namespace gradedpi
