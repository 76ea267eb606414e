#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bolloop/group.hpp"
#include "bolloop/permutation.hpp"

namespace bolloop {

/// A validated exact factorization X = Y0 Y1 with Y0 n Y1 = 1.
///
/// All three groups are materialized. Every element z of X has a unique
/// split z = y0 y1, precomputed once by running over Y0 x Y1.
class ExactFactorizationTriple {
 public:
  /// Positions in factor0().elements() and factor1().elements().
  struct Split {
    std::size_t first;
    std::size_t second;
  };

  const FiniteGroup& group() const noexcept { return group_; }
  const FiniteGroup& factor0() const noexcept { return factor0_; }
  const FiniteGroup& factor1() const noexcept { return factor1_; }
  bool faithful() const noexcept { return faithful_; }

  /// Split of the element at position `index` of group().elements().
  Split split(std::size_t index) const { return splits_[index]; }

  /// The unique (y0, y1) with z = y0 y1. Throws Error(NotInGroup).
  std::pair<Permutation, Permutation> decompose(const Permutation& z) const;

  friend ExactFactorizationTriple validate(FiniteGroup group, FiniteGroup factor0,
                                           FiniteGroup factor1, bool allow_unfaithful,
                                           std::size_t cap);

 private:
  ExactFactorizationTriple(FiniteGroup g, FiniteGroup y0, FiniteGroup y1)
      : group_(std::move(g)), factor0_(std::move(y0)), factor1_(std::move(y1)) {}

  FiniteGroup group_;
  FiniteGroup factor0_;
  FiniteGroup factor1_;
  std::vector<Split> splits_;
  bool faithful_ = false;
};

/// Checks Y0, Y1 <= X, exactness and faithfulness.
///
/// Throws Error(NotSubgroup), Error(NotExact), or Error(NotFaithful) unless
/// `allow_unfaithful` is set. Groups larger than `cap` raise CapExceeded.
ExactFactorizationTriple validate(FiniteGroup group, FiniteGroup factor0, FiniteGroup factor1,
                                  bool allow_unfaithful = false,
                                  std::size_t cap = kDefaultElementCap);

/// Whether factor0 acts regularly on the left cosets of factor1.
bool acts_regularly_on_cosets(const ExactFactorizationTriple& triple);

}  // namespace bolloop
