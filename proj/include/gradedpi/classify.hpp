#pragma once

#include <cstdint>
#include <vector>

#include "gradedpi/enumerate.hpp"

namespace gradedpi {

/// Tests whether a distinct-entry grading over a torsion-free group is
/// equivalent to the canonical Z-grading, by evaluating three criteria that
/// must agree (support size 2n-1; entries an arithmetic progression
/// 0, g, ..., (n-1)g up to translation; some nonzero degree of dimension
/// n-1). Disagreement raises std::logic_error: it would mean an internal bug.
bool equiv_canonical_Z(const ElementaryGrading& grading);

/// Two-parameter tuple shapes over Z that every almost non-degenerate
/// distinct-entry grading must take for n = 4 and n = 5 (the palindromic
/// coarsening forms), with the predicted verdict inside each shape:
///   n = 4: (0, a, a+b, 2a+b),        predicted iff a != 2b and 2a != b
///   n = 5: (0, a, a+b, a+2b, 2a+2b), predicted iff a == b
/// with integer parameters a, b >= 1. For n = 5 and a != b the product
/// R_a R_b is the single matrix unit e_13, which no element of degree
/// -(a+2b) continues, while every partial sum of (a, b, -(a+2b)) stays in
/// the support: the word is a non-trivial identity. Hence only the
/// arithmetic progressions a == b survive at n = 5.
GradingTuple family_tuple(int n, std::int64_t a, std::int64_t b);
bool family_predicted(int n, std::int64_t a, std::int64_t b);

struct FamilyVerdict {
  GradingTuple tuple;
  bool predicted = false;
};

FamilyVerdict family_verdict(int n, std::int64_t a, std::int64_t b);

enum class FamilyKind { canonical_z, family_n4, family_n5, unmatched };

struct SurvivorInfo {
  std::vector<std::int64_t> entries;  // ascending, starting at 0
  FamilyKind kind = FamilyKind::unmatched;
  std::int64_t a = 0;  // family parameters, valid for family_n4 / family_n5
  std::int64_t b = 0;
};

struct ClassificationResult {
  int n = 0;
  std::int64_t bound = 0;
  bool pruned = false;
  std::vector<SurvivorInfo> survivors;            // ascending tuple order
  std::vector<std::vector<std::int64_t>> unmatched;  // survivors outside all families
};

struct ClassifyOptions {
  /// Skip tuples whose difference profile is not palindromic. Sound: every
  /// ascending distinct Z-tuple has a one-dimensional top component, so an
  /// almost non-degenerate one has a palindromic profile.
  bool palindromic_prune = true;
  ExecutionPolicy policy = ExecutionPolicy::parallel;
};

/// Scans all ascending integer tuples (0, g_2 < ... < g_n <= bound) over Z,
/// keeps the almost non-degenerate ones and matches each survivor against
/// the known families. Supported for 2 <= n <= 5.
ClassificationResult classify_almost_nondeg(int n, std::int64_t bound, ClassifyOptions options = {});

}  // namespace gradedpi
