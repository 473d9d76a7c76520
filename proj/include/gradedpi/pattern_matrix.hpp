#pragma once

#include <cstdint>
#include <vector>

namespace gradedpi {

/// Square boolean matrix over the (or, and) semiring, one uint64 bitset per
/// row (entry (i, j) is bit j of row i). Sizes are capped at 64, which covers
/// every matrix algebra this project works with.
class PatternMatrix {
 public:
  static constexpr int kMaxSize = 64;

  explicit PatternMatrix(int n);
  static PatternMatrix identity(int n);

  int size() const { return n_; }
  bool get(int i, int j) const;
  void set(int i, int j, bool value);
  std::uint64_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  int popcount() const;
  int nonzero_rows() const;
  PatternMatrix transposed() const;

  friend PatternMatrix operator*(const PatternMatrix& a, const PatternMatrix& b);
  friend bool operator==(const PatternMatrix&, const PatternMatrix&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

/// Number of rows with at least one nonzero entry.
int nonzero_rows(const PatternMatrix& m);

}  // namespace gradedpi
