#include "bolloop/factorization.hpp"

#include "bolloop/error.hpp"

namespace bolloop {

std::pair<Permutation, Permutation> ExactFactorizationTriple::decompose(
    const Permutation& z) const {
  auto pos = group_.index_of(z);
  if (!pos) {
    throw Error(ErrorCode::NotInGroup, z.to_cycle_string() + " is not an element of X");
  }
  const Split s = splits_[*pos];
  return {factor0_.elements()[s.first], factor1_.elements()[s.second]};
}

ExactFactorizationTriple validate(FiniteGroup group, FiniteGroup factor0, FiniteGroup factor1,
                                  bool allow_unfaithful, std::size_t cap) {
  if (group.degree() != factor0.degree() || group.degree() != factor1.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "X, Y0 and Y1 must act on the same points");
  }
  group = group.materialize(cap);
  factor0 = factor0.materialize(cap);
  factor1 = factor1.materialize(cap);
  for (const auto* sub : {&factor0, &factor1}) {
    for (const auto& g : sub->generators()) {
      if (!group.contains(g)) {
        throw Error(ErrorCode::NotSubgroup, "generator " + g.to_cycle_string() + " lies outside X");
      }
    }
  }
  const std::uint64_t meet = intersection_order(factor0, factor1);
  if (meet != 1 || factor0.order() * factor1.order() != group.order()) {
    throw Error(ErrorCode::NotExact, "|Y0| = " + std::to_string(factor0.order()) +
                                         ", |Y1| = " + std::to_string(factor1.order()) +
                                         ", |X| = " + std::to_string(group.order()) +
                                         ", |Y0 n Y1| = " + std::to_string(meet));
  }

  ExactFactorizationTriple triple(std::move(group), std::move(factor0), std::move(factor1));
  const auto& y0 = triple.factor0_.elements();
  const auto& y1 = triple.factor1_.elements();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  triple.splits_.assign(triple.group_.order(), {unset, unset});
  for (std::size_t i = 0; i < y0.size(); ++i) {
    for (std::size_t j = 0; j < y1.size(); ++j) {
      const std::size_t z = *triple.group_.index_of(y0[i] * y1[j]);
      if (triple.splits_[z].first != unset) {
        throw Error(ErrorCode::NotExact, "two splits of " + y0[i].to_cycle_string());
      }
      triple.splits_[z] = {i, j};
    }
  }

  triple.faithful_ = core_in(triple.group_, triple.factor0_).is_trivial() &&
                     core_in(triple.group_, triple.factor1_).is_trivial();
  if (!triple.faithful_ && !allow_unfaithful) {
    throw Error(ErrorCode::NotFaithful, "Y0 or Y1 contains a nontrivial normal subgroup of X");
  }
  return triple;
}

bool acts_regularly_on_cosets(const ExactFactorizationTriple& triple) {
  // label the left cosets g Y1 and let Y0 act on them
  const auto& x = triple.group();
  const auto& elements = x.elements();
  std::vector<std::int64_t> label(elements.size(), -1);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (label[i] >= 0) continue;
    for (const auto& h : triple.factor1().elements()) {
      label[*x.index_of(elements[i] * h)] = static_cast<std::int64_t>(reps.size());
    }
    reps.push_back(i);
  }
  // coset 0 is Y1 itself (the identity sorts first)
  std::vector<bool> hit(reps.size(), false);
  std::size_t stabilizer = 0;
  for (const auto& y : triple.factor0().elements()) {
    const auto c = static_cast<std::size_t>(label[*x.index_of(y)]);
    hit[c] = true;
    if (c == 0) ++stabilizer;
  }
  for (bool h : hit) {
    if (!h) return false;
  }
  return stabilizer == 1;
}

}  // namespace bolloop
