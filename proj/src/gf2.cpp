#include "bolloop/gf2.hpp"

#include <bit>

#include "bolloop/error.hpp"

namespace bolloop {

GF2Matrix::GF2Matrix(unsigned n, std::vector<std::uint32_t> rows) : n_(n), rows_(std::move(rows)) {
  if (n == 0 || n > 31 || rows_.size() != n) {
    throw Error(ErrorCode::InvalidParameter, "GF2Matrix needs 1 <= n <= 31 rows");
  }
  const std::uint32_t mask = (1u << n) - 1u;
  for (auto r : rows_) {
    if (r & ~mask) throw Error(ErrorCode::InvalidParameter, "GF2Matrix row has stray bits");
  }
}

GF2Matrix GF2Matrix::identity(unsigned n) {
  std::vector<std::uint32_t> rows(n);
  for (unsigned i = 0; i < n; ++i) rows[i] = 1u << i;
  return GF2Matrix(n, std::move(rows));
}

GF2Matrix GF2Matrix::transvection(unsigned n, unsigned i, unsigned j) {
  if (i == j || i >= n || j >= n) {
    throw Error(ErrorCode::InvalidParameter, "transvection needs distinct indices below n");
  }
  GF2Matrix m = identity(n);
  m.rows_[i] |= 1u << j;
  return m;
}

std::uint32_t GF2Matrix::apply(std::uint32_t v) const noexcept {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    out |= static_cast<std::uint32_t>(std::popcount(rows_[i] & v) & 1) << i;
  }
  return out;
}

bool GF2Matrix::is_invertible() const {
  auto rows = rows_;
  unsigned rank = 0;
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = rank;
    while (pivot < n_ && !((rows[pivot] >> col) & 1u)) ++pivot;
    if (pivot == n_) continue;
    std::swap(rows[pivot], rows[rank]);
    for (unsigned r = 0; r < n_; ++r) {
      if (r != rank && ((rows[r] >> col) & 1u)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank == n_;
}

std::uint64_t GF2Matrix::order() const {
  if (!is_invertible()) {
    throw Error(ErrorCode::InvalidParameter, "singular matrix has no order");
  }
  return as_permutation().order();
}

Permutation GF2Matrix::as_permutation() const {
  const std::uint32_t points = (1u << n_) - 1u;
  std::vector<Point> images(points);
  for (std::uint32_t v = 1; v <= points; ++v) {
    images[v - 1] = apply(v) - 1;
  }
  return Permutation(std::move(images));
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::DegreeMismatch, "GF2Matrix dimensions differ");
  std::vector<std::uint32_t> rows(a.n_, 0);
  for (unsigned i = 0; i < a.n_; ++i) {
    for (unsigned k = 0; k < a.n_; ++k) {
      if (a.entry(i, k)) rows[i] ^= b.rows_[k];
    }
  }
  return GF2Matrix(a.n_, std::move(rows));
}

GF2Matrix gl2_singer_generator(unsigned n) {
  // low coefficients c_0..c_{n-1} of x^n + ... + c_0
  std::uint32_t low;
  switch (n) {
    case 3: low = 0b011; break;    // x^3 + x + 1
    case 4: low = 0b0011; break;   // x^4 + x + 1
    case 5: low = 0b00101; break;  // x^5 + x^2 + 1
    default:
      throw Error(ErrorCode::UnsupportedDimension,
                  "no primitive polynomial for n = " + std::to_string(n));
  }
  // column k is the image of e_k: e_k -> e_{k+1}, e_{n-1} -> sum c_i e_i
  std::vector<std::uint32_t> rows(n, 0);
  for (unsigned k = 0; k + 1 < n; ++k) rows[k + 1] |= 1u << k;
  for (unsigned i = 0; i < n; ++i) {
    if ((low >> i) & 1u) rows[i] |= 1u << (n - 1);
  }
  return GF2Matrix(n, std::move(rows));
}

namespace {

FiniteGroup make_group(const std::vector<Permutation>& gens, std::size_t cap) {
  FiniteGroup g = from_generators(gens);
  return g.order() <= cap ? generate(gens, cap) : g;
}

}  // namespace

GL2Action gl2_as_permutation_group(unsigned n, std::size_t cap) {
  const GF2Matrix singer = gl2_singer_generator(n);
  std::vector<Permutation> all;
  std::vector<Permutation> fixing_first;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      Permutation t = GF2Matrix::transvection(n, i, j).as_permutation();
      all.push_back(t);
      // I + E_ij moves e_j only, so it fixes e_0 exactly when j != 0
      if (j != 0) fixing_first.push_back(t);
    }
  }
  std::vector<Permutation> cycle{singer.as_permutation()};
  FiniteGroup group = make_group(all, cap);
  if (!group.materialized()) {
    return GL2Action{n, std::move(group), from_generators(cycle), from_generators(fixing_first)};
  }
  return GL2Action{n, std::move(group), make_group(cycle, cap), make_group(fixing_first, cap)};
}

}  // namespace bolloop
