#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bolloop/factorization.hpp"

namespace bolloop {

enum class Family { Sym, PslSinger, F27 };

std::string to_string(Family family);
/// "sym", "psl-singer" or "f27"; throws Error(InvalidParameter).
Family family_from_string(const std::string& name);

struct ExpectedProperties {
  std::uint64_t loop_order;
  std::optional<bool> simple;  // unset when no claim is made
  std::optional<bool> proper;
  std::string notes;
};

struct CatalogEntry {
  Family family;
  unsigned n;  // 0 for f27
  ExactFactorizationTriple triple;
  std::vector<Permutation> socle_gens;  // empty when X is not almost simple
  ExpectedProperties expected;
};

/// X = S_n, Y0 = <(0 1 ... n-1)>, Y1 = the stabilizer of n-1.
/// Throws Error(InvalidParameter) for n < 3.
CatalogEntry sym_triple(unsigned n);

/// X = GL(n,2) on nonzero vectors, Y0 a Singer cycle, Y1 the stabilizer of
/// the first basis vector. n = 5 exceeds the element cap (CapExceeded).
CatalogEntry psl_singer_triple(unsigned n);

/// X = {z -> a z^t + b : a a nonzero square, t a field automorphism} on F_27.
CatalogEntry f27_triple();

CatalogEntry catalog_entry(Family family, unsigned n);

/// The three generating sets of a catalog triple, without enumeration.
struct CatalogGenerators {
  std::vector<Permutation> group;
  std::vector<Permutation> factor0;
  std::vector<Permutation> factor1;
};
CatalogGenerators catalog_generators(Family family, unsigned n);

struct CatalogRow {
  Family family;
  unsigned n;
  std::uint64_t group_order;
  std::uint64_t factor0_order;
  std::uint64_t factor1_order;
  ExpectedProperties expected;
};

/// Rows for sym n = 4..7, psl-singer n = 3..5 and f27; orders come from
/// stabilizer chains so no group is enumerated.
std::vector<CatalogRow> catalog_listing();

/// Components of the f27 construction used by its checks.
struct F27Groups {
  FiniteGroup group;         // X, order 1053
  FiniteGroup sylow;         // U = {z -> z^t + b}, order 81
  FiniteGroup translations;  // {z -> z + b}
  FiniteGroup factor0;
  FiniteGroup factor1;       // stabilizer of 0, order 39
};
F27Groups f27_groups();

/// Minimal generating set obtained by scanning elements in sorted order.
std::vector<Permutation> canonical_generators(const FiniteGroup& group);

}  // namespace bolloop
