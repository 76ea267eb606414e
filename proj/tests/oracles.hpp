#pragma once

// Brute-force reference implementations. They work on raw image vectors and
// full element sets so they share no algorithmic code with the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "bolloop/cayley_loop.hpp"
#include "bolloop/factorization.hpp"
#include "bolloop/permutation.hpp"

namespace oracle {

using Images = std::vector<std::uint32_t>;
using ElementSet = std::set<Images>;

inline Images images(const bolloop::Permutation& p) { return {p.images().begin(), p.images().end()}; }

inline bolloop::Permutation perm(const Images& v) { return bolloop::Permutation(v); }

// (f o g)(x) = f(g(x))
inline Images compose(const Images& f, const Images& g) {
  Images out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[g[x]];
  return out;
}

inline Images inverse(const Images& f) {
  Images out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[f[x]] = static_cast<std::uint32_t>(x);
  return out;
}

inline Images identity(std::size_t n) {
  Images out(n);
  for (std::size_t x = 0; x < n; ++x) out[x] = static_cast<std::uint32_t>(x);
  return out;
}

inline ElementSet closure(const std::vector<Images>& gens, std::size_t degree) {
  ElementSet seen{identity(degree)};
  std::vector<Images> frontier{identity(degree)};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        Images p = compose(g, e);
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline ElementSet closure(const std::vector<bolloop::Permutation>& gens, std::size_t degree) {
  std::vector<Images> raw;
  for (const auto& g : gens) raw.push_back(images(g));
  return closure(raw, degree);
}

inline ElementSet as_set(const bolloop::FiniteGroup& g) {
  ElementSet out;
  for (const auto& e : g.elements()) out.insert(images(e));
  return out;
}

// a^-1 b^-1 a b over all pairs, then closed.
inline ElementSet derived(const ElementSet& g) {
  std::set<Images> comms;
  for (const auto& a : g) {
    for (const auto& b : g) comms.insert(compose(compose(inverse(a), inverse(b)), compose(a, b)));
  }
  const std::size_t n = g.begin()->size();
  return closure(std::vector<Images>(comms.begin(), comms.end()), n);
}

inline ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

// Intersection of all conjugates g Y g^-1.
inline ElementSet core(const ElementSet& g, const ElementSet& y) {
  ElementSet out = y;
  for (const auto& x : g) {
    ElementSet conj;
    for (const auto& e : y) conj.insert(compose(compose(x, e), inverse(x)));
    out = intersect(out, conj);
  }
  return out;
}

inline ElementSet product_set(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  for (const auto& x : a) {
    for (const auto& y : b) out.insert(compose(x, y));
  }
  return out;
}

inline bool is_normal(const ElementSet& g, const ElementSet& n) {
  for (const auto& x : g) {
    for (const auto& e : n) {
      if (!n.count(compose(compose(inverse(x), e), x))) return false;
    }
  }
  return true;
}

// Orders of all normal subgroups: normal closures of single elements, then
// products until nothing new appears.
inline std::vector<std::size_t> normal_subgroup_orders(const ElementSet& g) {
  const std::size_t n = g.begin()->size();
  std::set<ElementSet> normals;
  for (const auto& e : g) {
    std::vector<Images> conjugates;
    for (const auto& x : g) conjugates.push_back(compose(compose(inverse(x), e), x));
    normals.insert(closure(conjugates, n));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementSet> list(normals.begin(), normals.end());
    for (const auto& a : list) {
      for (const auto& b : list) {
        if (normals.insert(product_set(a, b)).second) grew = true;
      }
    }
  }
  std::vector<std::size_t> orders;
  for (const auto& s : normals) orders.push_back(s.size());
  std::sort(orders.begin(), orders.end());
  return orders;
}

// The unique (z, z^-1) in (xy, x^-1 y^-1) H, found by scanning Y0 x Y1.
inline bolloop::Permutation coset_product(const bolloop::ExactFactorizationTriple& t,
                                          const bolloop::Permutation& x,
                                          const bolloop::Permutation& y) {
  const Images a = compose(images(x), images(y));
  const Images b = compose(inverse(images(x)), inverse(images(y)));
  const Images one = identity(a.size());
  std::optional<Images> found;
  int hits = 0;
  for (const auto& y0 : t.factor0().elements()) {
    const Images first = compose(a, images(y0));
    for (const auto& y1 : t.factor1().elements()) {
      const Images second = compose(b, images(y1));
      if (compose(first, second) == one) {
        ++hits;
        found = first;
      }
    }
  }
  if (hits != 1) throw std::logic_error("coset meets S in " + std::to_string(hits) + " elements");
  return perm(*found);
}

struct Triple {
  std::uint32_t x, y, z;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

inline std::optional<Triple> first_left_bol_violation(const bolloop::CayleyLoop& q) {
  const auto n = static_cast<std::uint32_t>(q.order());
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        if (q.mul(x, q.mul(y, q.mul(x, z))) != q.mul(q.mul(x, q.mul(y, x)), z)) return Triple{x, y, z};
  return std::nullopt;
}

inline std::optional<Triple> first_right_bol_violation(const bolloop::CayleyLoop& q) {
  const auto n = static_cast<std::uint32_t>(q.order());
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        if (q.mul(q.mul(q.mul(x, y), z), y) != q.mul(x, q.mul(q.mul(y, z), y))) return Triple{x, y, z};
  return std::nullopt;
}

// Is K (as a subset) a normal subloop, by the definition with all three
// products compared as sets.
inline bool is_normal_subloop(const bolloop::CayleyLoop& q, const std::set<std::uint32_t>& k) {
  const auto n = static_cast<std::uint32_t>(q.order());
  for (auto a : k)
    for (auto b : k)
      if (!k.count(q.mul(a, b))) return false;
  for (std::uint32_t x = 0; x < n; ++x) {
    std::set<std::uint32_t> xk, kx;
    for (auto a : k) {
      xk.insert(q.mul(x, a));
      kx.insert(q.mul(a, x));
    }
    if (xk != kx) return false;
    for (std::uint32_t y = 0; y < n; ++y) {
      std::set<std::uint32_t> l1, l2, r1, r2;
      for (auto a : k) {
        l1.insert(q.mul(x, q.mul(y, a)));
        l2.insert(q.mul(q.mul(x, y), a));
        r1.insert(q.mul(q.mul(a, x), y));
        r2.insert(q.mul(a, q.mul(x, y)));
      }
      if (l1 != l2 || r1 != r2) return false;
    }
  }
  return true;
}

inline Images random_permutation(std::size_t n, std::mt19937_64& rng) {
  Images v = identity(n);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace oracle
