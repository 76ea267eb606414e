#pragma once

#include <optional>
#include <vector>

#include "bolloop/cayley_loop.hpp"

namespace bolloop {

inline constexpr std::size_t kIsomorphismSizeGate = 64;

/// x o y = R_b^-1(x) L_a^-1(y), relabelled so that its identity ab sits at 0
/// (indices 0 and ab are swapped, everything else keeps its index).
CayleyLoop principal_isotope(const CayleyLoop& loop, Element a, Element b);

/// An isomorphism as an image array, mapping[x] in the second loop.
using LoopIsomorphism = std::vector<Element>;

/// Backtracking over images of a greedy generating set, pruned by the cycle
/// types of left and right translations. Throws Error(SizeGate).
std::optional<LoopIsomorphism> loops_isomorphic(const CayleyLoop& first, const CayleyLoop& second,
                                                std::size_t size_gate = kIsomorphismSizeGate);

}  // namespace bolloop
