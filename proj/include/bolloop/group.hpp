#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bolloop/permutation.hpp"
#include "bolloop/stabilizer_chain.hpp"

namespace bolloop {

inline constexpr std::size_t kDefaultElementCap = 2'000'000;

/// A permutation group given by generators.
///
/// A group is either materialized (all elements enumerated, sorted so that
/// the identity comes first and the rest follow in lexicographic image
/// order) or held as a stabilizer chain only. Both forms are immutable.
class FiniteGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return order_; }

  bool materialized() const noexcept { return !elements_.empty(); }

  /// Sorted element list. Throws Error(CapExceeded) if not materialized.
  const std::vector<Permutation>& elements() const;

  bool contains(const Permutation& p) const;

  /// Position of `p` in elements(), or nullopt when p is not a member.
  std::optional<std::size_t> index_of(const Permutation& p) const;

  bool is_trivial() const noexcept { return order_ == 1; }

  const StabilizerChain& chain() const { return *chain_; }

  /// Returns a materialized copy, enumerating at most `cap` elements.
  FiniteGroup materialize(std::size_t cap = kDefaultElementCap) const;

  friend FiniteGroup generate(std::span<const Permutation> gens, std::size_t cap);
  friend FiniteGroup from_generators(std::span<const Permutation> gens, std::size_t degree);

 private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::uint64_t order_ = 1;
  std::vector<Permutation> elements_;
  std::shared_ptr<const std::unordered_map<Permutation, std::size_t, PermutationHash>> index_;
  std::shared_ptr<const StabilizerChain> chain_;
};

/// Enumerates the closure of `gens`. Throws Error(CapExceeded) once more
/// than `cap` elements appear and Error(DegreeMismatch) on mixed degrees.
FiniteGroup generate(std::span<const Permutation> gens,
                     std::size_t cap = kDefaultElementCap);
FiniteGroup generate(std::initializer_list<Permutation> gens,
                     std::size_t cap = kDefaultElementCap);

/// Group known only through a stabilizer chain. `degree` is used when
/// `gens` is empty (trivial group).
FiniteGroup from_generators(std::span<const Permutation> gens, std::size_t degree = 0);

BigInt group_order_schreier(std::span<const Permutation> gens);

/// Drops generators that are products of earlier ones.
std::vector<Permutation> reduce_generators(std::span<const Permutation> gens);

/// Generators of the normal closure of `seeds` in <group_gens>.
std::vector<Permutation> normal_closure_generators(std::span<const Permutation> group_gens,
                                                   std::span<const Permutation> seeds);

/// Generators of G' = normal closure of {[a,b] : a,b generators}.
std::vector<Permutation> derived_generators(std::span<const Permutation> gens);

/// G'. Materialized when G is (subject to `cap`), chain-only otherwise.
FiniteGroup derived_subgroup(const FiniteGroup& g, std::size_t cap = kDefaultElementCap);

bool is_solvable_group(const FiniteGroup& g);
bool is_solvable_group(std::span<const Permutation> gens);

bool is_normal_subgroup(const FiniteGroup& g, const FiniteGroup& n);

/// Largest normal subgroup of `g` inside `y`: the kernel of the action of g
/// on the left cosets of y. Both groups must be materialized.
FiniteGroup core_in(const FiniteGroup& g, const FiniteGroup& y);

struct ProductInfo {
  bool equals_group;
  std::uint64_t size;  // |A||B| / |A n B|
};

/// Whether AB = G and the size of the set AB.
ProductInfo subgroup_product_is_group(const FiniteGroup& g, const FiniteGroup& a,
                                      const FiniteGroup& b);

std::uint64_t intersection_order(const FiniteGroup& a, const FiniteGroup& b);

/// Orbit of `point` under <gens>, by flood fill.
std::vector<Point> orbit(std::span<const Permutation> gens, Point point, std::size_t domain_size);

bool is_transitive(std::span<const Permutation> gens, std::size_t domain_size);

}  // namespace bolloop
