#include "gradedpi/pattern_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace gradedpi {

PatternMatrix::PatternMatrix(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > kMaxSize) {
    throw std::invalid_argument("pattern matrix size must be in [1, 64], got " + std::to_string(n));
  }
}

PatternMatrix PatternMatrix::identity(int n) {
  PatternMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

bool PatternMatrix::get(int i, int j) const {
  return (rows_[static_cast<std::size_t>(i)] >> j) & 1u;
}

void PatternMatrix::set(int i, int j, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << j;
  if (value) {
    rows_[static_cast<std::size_t>(i)] |= bit;
  } else {
    rows_[static_cast<std::size_t>(i)] &= ~bit;
  }
}

bool PatternMatrix::is_zero() const {
  for (std::uint64_t r : rows_) {
    if (r) return false;
  }
  return true;
}

int PatternMatrix::popcount() const {
  int total = 0;
  for (std::uint64_t r : rows_) total += std::popcount(r);
  return total;
}

int PatternMatrix::nonzero_rows() const {
  int total = 0;
  for (std::uint64_t r : rows_) total += r != 0;
  return total;
}

PatternMatrix PatternMatrix::transposed() const {
  PatternMatrix t(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (get(i, j)) t.set(j, i, true);
    }
  }
  return t;
}

PatternMatrix operator*(const PatternMatrix& a, const PatternMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("pattern matrix size mismatch in product");
  PatternMatrix out(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    std::uint64_t bits = a.rows_[static_cast<std::size_t>(i)];
    std::uint64_t acc = 0;
    while (bits) {
      const int j = std::countr_zero(bits);
      bits &= bits - 1;
      acc |= b.rows_[static_cast<std::size_t>(j)];
    }
    out.rows_[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

int nonzero_rows(const PatternMatrix& m) { return m.nonzero_rows(); }

}  // namespace gradedpi
