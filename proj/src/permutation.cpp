#include "bolloop/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "bolloop/error.hpp"

namespace bolloop {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw Error(ErrorCode::MalformedInput, "permutation of degree 0");
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw Error(ErrorCode::MalformedInput, "image array is not a bijection");
    }
    seen[p] = true;
  }
}

Permutation::Permutation(std::initializer_list<Point> images)
    : Permutation(std::vector<Point>(images)) {}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) {
    throw Error(ErrorCode::MalformedInput, "permutation of degree 0");
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Point>>& cycles,
                                     std::size_t degree) {
  auto images = identity(degree).images_;
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree) {
        throw Error(ErrorCode::MalformedInput, "cycle point out of range");
      }
      if (used[from]) {
        throw Error(ErrorCode::MalformedInput, "cycles are not disjoint");
      }
      used[from] = true;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw Error(ErrorCode::MalformedInput, "expected '(' in cycle notation");
    }
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) {
        throw Error(ErrorCode::MalformedInput, "unterminated cycle");
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error(ErrorCode::MalformedInput, "bad character in cycle notation");
      }
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > degree) {
          throw Error(ErrorCode::MalformedInput, "cycle point out of range");
        }
        ++i;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty()) {
      cycles.push_back(std::move(cycle));
    }
    skip_space();
  }
  return from_cycles(cycles, degree);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out << '(';
    bool first = true;
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      if (!first) out << ' ';
      out << p;
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) {
    throw Error(ErrorCode::DegreeMismatch,
                "degrees " + std::to_string(f.degree()) + " and " + std::to_string(g.degree()));
  }
  std::vector<Point> images(g.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = f.images_[g.images_[i]];
  }
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& f) {
  std::vector<Point> images(f.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[f.images_[i]] = static_cast<Point>(i);
  }
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return inverse(a) * inverse(b) * a * b;
}

Permutation conjugate(const Permutation& h, const Permutation& g) {
  return inverse(g) * h * g;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace bolloop
