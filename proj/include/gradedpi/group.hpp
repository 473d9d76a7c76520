#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gradedpi {

/// Element of a finitely generated abelian group. Coordinates are laid out
/// free coordinates first, then torsion residues (each kept in [0, m_i)).
/// Elements only carry their coordinates; arithmetic lives on Group.
struct GroupElement {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Descriptor and arithmetic for G = Z^r x Z_{m_1} x ... x Z_{m_s}.
///
/// Group strings follow the grammar  factor ("x" factor)*  with factors
/// "Z", "Z^k" (k >= 1) and "Z_m" (m >= 2); free factors are collected in
/// front of the torsion factors, matching the element coordinate layout.
class Group {
 public:
  Group(int free_rank, std::vector<std::int64_t> moduli);

  static Group parse(std::string_view text);
  std::string to_string() const;

  int free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  int rank() const { return free_rank_ + static_cast<int>(moduli_.size()); }
  bool torsion_free() const { return moduli_.empty(); }
  bool finite() const { return free_rank_ == 0; }
  bool has_order_2_element() const;
  /// Number of elements for finite groups; throws for infinite ones.
  std::int64_t order() const;

  GroupElement zero() const;
  /// Validates arity and reduces torsion coordinates into [0, m_i).
  GroupElement make(std::vector<std::int64_t> coords) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement scalar_mul(std::int64_t c, const GroupElement& a) const;
  /// Sum of a nonempty word of elements; throws on an empty span.
  GroupElement word_sum(std::span<const GroupElement> word) const;
  bool is_zero(const GroupElement& a) const;

  /// Translation-invariant lexicographic order; only defined on
  /// torsion-free groups (throws otherwise).
  bool lex_less(const GroupElement& a, const GroupElement& b) const;

  /// Total order used for deterministic search and witness selection:
  /// coordinatewise magnitude-then-sign, nearest to zero first
  /// (0 < 1 < -1 < 2 < -2 ...; torsion residues by min(t, m-t), the
  /// positive representative first). Defined on every group.
  bool search_less(const GroupElement& a, const GroupElement& b) const;

  /// "3" for rank-1 groups, "(a,b,...)" otherwise. parse_element accepts
  /// both forms for rank 1 and reduces torsion coordinates.
  GroupElement parse_element(std::string_view text) const;
  std::string format_element(const GroupElement& a) const;

  friend bool operator==(const Group&, const Group&) = default;

 private:
  void check_element(const GroupElement& a) const;

  int free_rank_;
  std::vector<std::int64_t> moduli_;
};

}  // namespace gradedpi
