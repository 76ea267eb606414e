#include "bolloop/f27.hpp"

#include <algorithm>

#include "bolloop/error.hpp"

namespace bolloop {

F27Element::F27Element(unsigned index) : index_(static_cast<std::uint8_t>(index)) {
  if (index >= kFieldSize) {
    throw Error(ErrorCode::InvalidParameter, "F27 index out of range");
  }
}

F27Element F27Element::from_coefficients(unsigned c0, unsigned c1, unsigned c2) {
  return F27Element(c0 % 3 + 3 * (c1 % 3) + 9 * (c2 % 3));
}

std::array<unsigned, 3> F27Element::coefficients() const noexcept {
  return {index_ % 3u, (index_ / 3u) % 3u, index_ / 9u};
}

F27Element f27_add(F27Element a, F27Element b) {
  auto x = a.coefficients();
  auto y = b.coefficients();
  return F27Element::from_coefficients(x[0] + y[0], x[1] + y[1], x[2] + y[2]);
}

F27Element f27_neg(F27Element a) {
  auto x = a.coefficients();
  return F27Element::from_coefficients(3 - x[0], 3 - x[1], 3 - x[2]);
}

F27Element f27_mul(F27Element a, F27Element b) {
  auto x = a.coefficients();
  auto y = b.coefficients();
  unsigned p[5] = {};
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      p[i + j] += x[i] * y[j];
    }
  }
  // x^4 = x^2 + x, x^3 = x + 1
  p[2] += p[4];
  p[1] += p[4];
  p[1] += p[3];
  p[0] += p[3];
  return F27Element::from_coefficients(p[0], p[1], p[2]);
}

F27Element f27_pow(F27Element a, unsigned e) {
  F27Element result = F27Element::one();
  F27Element base = a;
  while (e > 0) {
    if (e & 1u) result = f27_mul(result, base);
    base = f27_mul(base, base);
    e >>= 1u;
  }
  return result;
}

F27Element f27_inverse(F27Element a) {
  if (a.is_zero()) {
    throw Error(ErrorCode::InvalidParameter, "zero has no inverse in F27");
  }
  return f27_pow(a, 25);
}

F27Element frobenius(F27Element a, unsigned k) {
  for (unsigned i = 0; i < k % 3; ++i) {
    a = f27_pow(a, 3);
  }
  return a;
}

std::vector<F27Element> f27_squares() {
  std::vector<F27Element> out;
  for (unsigned i = 1; i < F27Element::kFieldSize; ++i) {
    F27Element s = f27_mul(F27Element(i), F27Element(i));
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned f27_multiplicative_order(F27Element a) {
  if (a.is_zero()) {
    throw Error(ErrorCode::InvalidParameter, "zero has no multiplicative order");
  }
  unsigned k = 1;
  for (F27Element p = a; p != F27Element::one(); p = f27_mul(p, a)) ++k;
  return k;
}

}  // namespace bolloop
