#pragma once

#include <cstdint>
#include <vector>

#include "bolloop/group.hpp"
#include "bolloop/permutation.hpp"

namespace bolloop {

/// Square matrix over GF(2), n <= 31, rows stored as bit masks.
///
/// Bit j of row i is the (i, j) entry. Vectors are bit masks as well, with
/// bit k the k-th coordinate, and matrices act on column vectors.
class GF2Matrix {
 public:
  GF2Matrix(unsigned n, std::vector<std::uint32_t> rows);
  static GF2Matrix identity(unsigned n);
  /// I + E_ij: adds coordinate j into coordinate i.
  static GF2Matrix transvection(unsigned n, unsigned i, unsigned j);

  unsigned dimension() const noexcept { return n_; }
  const std::vector<std::uint32_t>& rows() const noexcept { return rows_; }
  bool entry(unsigned i, unsigned j) const noexcept { return (rows_[i] >> j) & 1u; }

  std::uint32_t apply(std::uint32_t v) const noexcept;
  bool is_invertible() const;

  /// Multiplicative order; the matrix must be invertible.
  std::uint64_t order() const;

  /// Action on the 2^n - 1 nonzero vectors; vector v is point v - 1.
  Permutation as_permutation() const;

  friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  unsigned n_;
  std::vector<std::uint32_t> rows_;
};

/// Companion matrix (multiplication by x) of the hardcoded primitive
/// polynomial x^3+x+1, x^4+x+1 or x^5+x^2+1.
/// Throws Error(UnsupportedDimension) for other n.
GF2Matrix gl2_singer_generator(unsigned n);

/// GL(n,2) on nonzero vectors together with a Singer cycle and the
/// stabilizer of the first basis vector (point 0).
struct GL2Action {
  unsigned n;
  FiniteGroup group;
  FiniteGroup singer;
  FiniteGroup stabilizer;
};

/// All three groups are materialized when |GL(n,2)| fits `cap`, otherwise
/// none is (GL(5,2)).
GL2Action gl2_as_permutation_group(unsigned n, std::size_t cap = kDefaultElementCap);

}  // namespace bolloop
