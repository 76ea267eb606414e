#include "bolloop/cayley_loop.hpp"

#include "bolloop/error.hpp"

namespace bolloop {

bool is_loop(std::size_t n, std::span<const Element> table) {
  if (n == 0 || table.size() != n * n) return false;
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t round = 0;
  for (std::size_t x = 0; x < n; ++x) {
    ++round;
    for (std::size_t y = 0; y < n; ++y) {
      const Element v = table[x * n + y];
      if (v >= n || stamp[v] == round) return false;
      stamp[v] = round;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    ++round;
    for (std::size_t x = 0; x < n; ++x) {
      const Element v = table[x * n + y];
      if (stamp[v] == round) return false;
      stamp[v] = round;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i] != i || table[i * n] != i) return false;
  }
  return true;
}

bool is_loop(const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) return false;
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return is_loop(n, flat);
}

CayleyLoop::CayleyLoop(std::size_t order, std::vector<Element> table,
                       std::vector<std::string> labels)
    : n_(order), table_(std::move(table)), labels_(std::move(labels)) {
  if (!is_loop(n_, table_)) {
    throw Error(ErrorCode::NotALoop, "table of order " + std::to_string(n_) +
                                         " is not a Latin square with identity 0");
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw Error(ErrorCode::MalformedInput, "label count differs from loop order");
  }
}

Element CayleyLoop::left_divide(Element a, Element b) const {
  for (Element x = 0; x < n_; ++x) {
    if (mul(a, x) == b) return x;
  }
  throw Error(ErrorCode::NotALoop, "left division failed");
}

Element CayleyLoop::right_divide(Element b, Element a) const {
  for (Element x = 0; x < n_; ++x) {
    if (mul(x, a) == b) return x;
  }
  throw Error(ErrorCode::NotALoop, "right division failed");
}

Permutation left_translation(const CayleyLoop& loop, Element a) {
  auto r = loop.row(a);
  return Permutation(std::vector<Point>(r.begin(), r.end()));
}

Permutation right_translation(const CayleyLoop& loop, Element a) {
  std::vector<Point> images(loop.order());
  for (Element x = 0; x < loop.order(); ++x) images[x] = loop.mul(x, a);
  return Permutation(std::move(images));
}

std::vector<Permutation> lmlt_generators(const CayleyLoop& loop) {
  std::vector<Permutation> out;
  out.reserve(loop.order());
  for (Element a = 0; a < loop.order(); ++a) out.push_back(left_translation(loop, a));
  return out;
}

std::vector<Permutation> mlt_generators(const CayleyLoop& loop) {
  std::vector<Permutation> out = lmlt_generators(loop);
  for (Element a = 0; a < loop.order(); ++a) out.push_back(right_translation(loop, a));
  return out;
}

CayleyLoop group_table(const FiniteGroup& group) {
  const auto& elements = group.elements();
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(elements[i].to_cycle_string());
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = static_cast<Element>(*group.index_of(elements[i] * elements[j]));
    }
  }
  return CayleyLoop(n, std::move(table), std::move(labels));
}

CayleyLoop cyclic_group_table(std::size_t n) {
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return CayleyLoop(n, std::move(table));
}

CayleyLoop direct_product(const CayleyLoop& left, const CayleyLoop& right) {
  const std::size_t m = right.order();
  const std::size_t n = left.order() * m;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element a = left.mul(static_cast<Element>(x / m), static_cast<Element>(y / m));
      const Element b = right.mul(static_cast<Element>(x % m), static_cast<Element>(y % m));
      table[x * n + y] = static_cast<Element>(a * m + b);
    }
  }
  return CayleyLoop(n, std::move(table));
}

bool is_associative(const CayleyLoop& loop) {
  const auto n = static_cast<Element>(loop.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = loop.mul(x, y);
      for (Element z = 0; z < n; ++z) {
        if (loop.mul(xy, z) != loop.mul(x, loop.mul(y, z))) return false;
      }
    }
  }
  return true;
}

bool is_commutative(const CayleyLoop& loop) {
  const auto n = static_cast<Element>(loop.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (loop.mul(x, y) != loop.mul(y, x)) return false;
    }
  }
  return true;
}

}  // namespace bolloop
