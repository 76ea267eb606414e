#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bolloop {

using Point = std::uint32_t;

/// A bijection on {0, ..., n-1} stored in image form: `perm[i]` is the image
/// of point i.
///
/// Products follow the function-composition convention used everywhere in
/// this library: `compose(f, g)(x) == f(g(x))`, so in a product `f * g` the
/// right factor acts first.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection; throws Error(MalformedInput).
  explicit Permutation(std::vector<Point> images);
  Permutation(std::initializer_list<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses cycle notation such as "(0 1 2 3)(4 5)" on `degree` points.
  /// "()" denotes the identity.
  static Permutation from_cycles(std::string_view cycles, std::size_t degree);

  /// Builds a permutation from explicit cycles.
  static Permutation from_cycles(const std::vector<std::vector<Point>>& cycles,
                                 std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  Point operator()(Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Least point not fixed, or degree() when the permutation is the identity.
  Point first_moved_point() const noexcept;

  /// Smallest k >= 1 with p^k = 1.
  std::uint64_t order() const;

  /// Cycle notation with fixed points omitted; the identity prints as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& f, const Permutation& g);
  friend Permutation inverse(const Permutation& f);

  std::vector<Point> images_;
};

/// (f o g)(x) = f(g(x)). Throws Error(DegreeMismatch).
Permutation compose(const Permutation& f, const Permutation& g);

inline Permutation operator*(const Permutation& f, const Permutation& g) {
  return compose(f, g);
}

Permutation inverse(const Permutation& f);

/// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

/// g^-1 h g
Permutation conjugate(const Permutation& h, const Permutation& g);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace bolloop
