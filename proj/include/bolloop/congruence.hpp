#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bolloop/cayley_loop.hpp"

namespace bolloop {

inline constexpr std::size_t kCongruenceSizeGate = 2000;

/// A normal subloop together with the congruence it determines.
struct NormalSubloop {
  std::vector<Element> elements;      // sorted, contains 0
  std::vector<std::uint32_t> class_of;  // element -> congruence class, class 0 holds 0
  std::size_t class_count = 0;

  std::size_t order() const noexcept { return elements.size(); }

  /// Validates normality of `elements` directly and builds the cosets.
  /// Throws Error(NotNormal).
  static NormalSubloop from_elements(const CayleyLoop& loop, std::vector<Element> elements);
};

/// xK = Kx, x(yK) = (xy)K and (Kx)y = K(xy) for all x, y, with K a subloop.
bool is_normal_subloop(const CayleyLoop& loop, std::span<const Element> elements);

/// Congruence generated by `pairs`: union-find with a queue of merged pairs,
/// each merge pushed through every left and right translation.
NormalSubloop congruence_closure(const CayleyLoop& loop,
                                 std::span<const std::pair<Element, Element>> pairs);

/// Smallest normal subloop containing a.
NormalSubloop normal_closure_congruence(const CayleyLoop& loop, Element a);

/// Every normal subloop, sorted by order then elements. Throws Error(SizeGate).
std::vector<NormalSubloop> all_normal_subloops(const CayleyLoop& loop,
                                               std::size_t size_gate = kCongruenceSizeGate);

/// True iff every nonidentity element has the whole loop as normal closure.
bool is_simple(const CayleyLoop& loop, unsigned threads = 0);

/// Smallest normal subloop with abelian group quotient. Throws Error(SizeGate).
NormalSubloop commutator_associator_subloop(const CayleyLoop& loop,
                                            std::size_t size_gate = kCongruenceSizeGate);

/// Table on congruence classes; the class of 0 is the identity.
CayleyLoop quotient_loop(const CayleyLoop& loop, const NormalSubloop& normal);

/// Iterates L <- L / L' down to order 1. Throws Error(SizeGate).
bool is_solvable_loop(const CayleyLoop& loop, std::size_t size_gate = kCongruenceSizeGate);

/// Q' = Q exactly when the derived subgroup of Lmlt(Q) is transitive.
bool q_prime_is_q(const CayleyLoop& loop);

}  // namespace bolloop
