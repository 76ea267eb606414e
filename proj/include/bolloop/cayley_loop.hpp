#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bolloop/group.hpp"
#include "bolloop/permutation.hpp"

namespace bolloop {

using Element = std::uint32_t;

/// A finite loop as a Cayley table over 0, ..., n-1 with identity 0.
class CayleyLoop {
 public:
  /// `table` is row-major, table[x * n + y] = x * y. Throws Error(NotALoop)
  /// unless the table is a Latin square with two-sided identity 0.
  CayleyLoop(std::size_t order, std::vector<Element> table, std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return n_; }
  Element mul(Element x, Element y) const noexcept { return table_[x * n_ + y]; }
  std::span<const Element> row(Element x) const noexcept { return {table_.data() + x * n_, n_}; }
  const std::vector<Element>& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// x with a x = b.
  Element left_divide(Element a, Element b) const;
  /// x with x a = b.
  Element right_divide(Element b, Element a) const;

  friend bool operator==(const CayleyLoop& a, const CayleyLoop& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  std::size_t n_;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
};

/// Latin square with two-sided identity at index 0.
bool is_loop(std::size_t order, std::span<const Element> table);
bool is_loop(const std::vector<std::vector<Element>>& rows);

Permutation left_translation(const CayleyLoop& loop, Element a);
Permutation right_translation(const CayleyLoop& loop, Element a);

/// {L_a}
std::vector<Permutation> lmlt_generators(const CayleyLoop& loop);
/// {L_a, R_a}
std::vector<Permutation> mlt_generators(const CayleyLoop& loop);

/// Cayley table of a materialized group in element order (identity first).
CayleyLoop group_table(const FiniteGroup& group);

/// Z_n with x * y = x + y mod n.
CayleyLoop cyclic_group_table(std::size_t n);

/// Direct product of two loops, (a, b) stored at index a * |right| + b.
CayleyLoop direct_product(const CayleyLoop& left, const CayleyLoop& right);

bool is_associative(const CayleyLoop& loop);
bool is_commutative(const CayleyLoop& loop);

}  // namespace bolloop
