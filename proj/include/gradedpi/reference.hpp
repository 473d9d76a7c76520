#pragma once

#include "gradedpi/classify.hpp"
#include "gradedpi/enumerate.hpp"

namespace gradedpi::reference {

// Straightforward serial implementations kept as the correctness baseline
// for the pruned search kernels: plain scans over every word, no pruning,
// no flat buffers, no OpenMP. Tests assert exact agreement with the kernel
// results and the benchmark compares running times.

/// Every non-trivial identity word of length <= max_length over
/// support \ {0}, in (length, search-order) order.
std::vector<DegreeWord> all_nontrivial_identities(const ElementaryGrading& grading,
                                                  int max_length);

MinimalIdentitySet enumerate_minimal_identities(const ElementaryGrading& grading,
                                                int max_length);

std::optional<DegreeWord> shortest_nontrivial_identity(const ElementaryGrading& grading,
                                                       int max_length);

AlmostNondegeneracy is_almost_nondegenerate(const ElementaryGrading& grading);

GoodSequenceVerdict is_good_sequence(std::span<const std::int64_t> entries, int max_length);

ClassificationResult classify_almost_nondeg(int n, std::int64_t bound,
                                            bool palindromic_prune = true);

}  // namespace gradedpi::reference
