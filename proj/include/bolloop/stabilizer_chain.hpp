#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bolloop/permutation.hpp"

namespace bolloop {

using BigInt = boost::multiprecision::cpp_int;

/// Deterministic incremental Schreier-Sims.
///
/// Base points are chosen greedily as the first point moved by the residue
/// that forces a new level. Transversals are stored explicitly together with
/// their inverses, which keeps sifting to one composition per level.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree);
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }

  /// Adds `g` to the group. Returns false when `g` was already a member.
  bool add_generator(const Permutation& g);

  bool contains(const Permutation& g) const;

  BigInt order() const;

  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;

  /// Strong generators at level 0, i.e. a generating set of the whole group.
  const std::vector<Permutation>& strong_generators() const;

 private:
  struct Level {
    Point base;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // orbit point -> index into reps, or -1
    std::vector<Permutation> reps;   // reps[k](base) == orbit[k]
    std::vector<Permutation> reps_inverse;
    std::size_t done_orbit = 0;      // Schreier pairs (orbit[<done_orbit], gens[<done_gens]) checked
    std::size_t done_gens = 0;
  };

  // Sifts g starting at `level`; returns the residue and the level where it stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t level) const;
  void insert(const Permutation& h, std::size_t from, std::size_t to);
  void extend_level(std::size_t level);

  std::size_t degree_;
  std::vector<Level> levels_;
  std::vector<Permutation> empty_;
};

}  // namespace bolloop
