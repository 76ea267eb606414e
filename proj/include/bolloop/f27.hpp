#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace bolloop {

/// An element of F_27 = F_3[x] / (x^3 - x - 1).
///
/// The element c0 + c1 x + c2 x^2 is stored as the index c0 + 3 c1 + 9 c2,
/// which is also the point it occupies when F_27 is a permutation domain.
class F27Element {
 public:
  static constexpr unsigned kFieldSize = 27;

  constexpr F27Element() = default;
  explicit F27Element(unsigned index);
  static F27Element from_coefficients(unsigned c0, unsigned c1, unsigned c2);

  static F27Element zero() { return F27Element(0); }
  static F27Element one() { return F27Element(1); }
  /// The class of x.
  static F27Element generator_x() { return F27Element(3); }

  unsigned index() const noexcept { return index_; }
  std::array<unsigned, 3> coefficients() const noexcept;
  bool is_zero() const noexcept { return index_ == 0; }

  friend bool operator==(F27Element, F27Element) = default;
  friend auto operator<=>(F27Element, F27Element) = default;

 private:
  std::uint8_t index_ = 0;
};

F27Element f27_add(F27Element a, F27Element b);
F27Element f27_neg(F27Element a);
F27Element f27_mul(F27Element a, F27Element b);
F27Element f27_pow(F27Element a, unsigned e);
/// Multiplicative inverse; a must be nonzero.
F27Element f27_inverse(F27Element a);

/// a^(3^k); k is taken modulo 3.
F27Element frobenius(F27Element a, unsigned k);

/// The 13 nonzero squares, sorted by index.
std::vector<F27Element> f27_squares();

/// Multiplicative order of a nonzero element.
unsigned f27_multiplicative_order(F27Element a);

}  // namespace bolloop
