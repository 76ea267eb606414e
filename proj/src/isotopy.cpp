#include "bolloop/isotopy.hpp"

#include <algorithm>
#include <map>

#include "bolloop/error.hpp"

namespace bolloop {

CayleyLoop principal_isotope(const CayleyLoop& loop, Element a, Element b) {
  const auto n = static_cast<Element>(loop.order());
  if (a >= n || b >= n) {
    throw Error(ErrorCode::InvalidParameter, "isotope parameters out of range");
  }
  // R_b^-1 and L_a^-1 as lookup tables
  std::vector<Element> rb_inv(n), la_inv(n);
  for (Element x = 0; x < n; ++x) {
    rb_inv[loop.mul(x, b)] = x;
    la_inv[loop.mul(a, x)] = x;
  }
  const Element e = loop.mul(a, b);
  auto relabel = [e](Element x) { return x == e ? 0 : (x == 0 ? e : x); };
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      table[relabel(x) * n + relabel(y)] = relabel(loop.mul(rb_inv[x], la_inv[y]));
    }
  }
  return CayleyLoop(n, std::move(table));
}

namespace {

// Cycle type of L_x and R_x: invariant under isomorphism.
using Signature = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;

std::vector<std::uint32_t> cycle_type(const CayleyLoop& loop, Element x, bool left) {
  const auto n = static_cast<Element>(loop.order());
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> lengths;
  for (Element s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::uint32_t len = 0;
    for (Element p = s; !seen[p]; p = left ? loop.mul(x, p) : loop.mul(p, x)) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<Signature> signatures(const CayleyLoop& loop) {
  std::vector<Signature> out;
  for (Element x = 0; x < loop.order(); ++x) {
    out.emplace_back(cycle_type(loop, x, true), cycle_type(loop, x, false));
  }
  return out;
}

// Elements reachable from `gens` by multiplication; closed sets are subloops.
std::vector<Element> generated(const CayleyLoop& loop, const std::vector<Element>& gens) {
  std::vector<bool> in(loop.order(), false);
  std::vector<Element> members{0};
  in[0] = true;
  for (Element g : gens) {
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Element p : {loop.mul(members[i], members[j]), loop.mul(members[j], members[i])}) {
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  return members;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const CayleyLoop& a, const CayleyLoop& b)
      : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)) {
    // greedy generating set of the first loop
    std::vector<bool> covered(a.order(), false);
    covered[0] = true;
    for (Element x = 1; x < a.order(); ++x) {
      if (covered[x]) continue;
      gens_.push_back(x);
      for (Element m : generated(a, gens_)) covered[m] = true;
    }
  }

  std::optional<LoopIsomorphism> run() {
    LoopIsomorphism map(a_.order(), kUnset);
    map[0] = 0;
    if (search(0, map)) return map;
    return std::nullopt;
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  // Extends `map` to the subloop generated by its domain; false on conflict.
  bool close(LoopIsomorphism& map, std::vector<bool>& used) const {
    std::vector<Element> domain;
    for (Element x = 0; x < a_.order(); ++x) {
      if (map[x] != kUnset) domain.push_back(x);
    }
    auto extend = [&](Element x, Element y) {
      const Element xy = a_.mul(x, y);
      const Element image = b_.mul(map[x], map[y]);
      if (map[xy] == kUnset) {
        if (used[image] || sig_a_[xy] != sig_b_[image]) return false;
        map[xy] = image;
        used[image] = true;
        domain.push_back(xy);
        return true;
      }
      return map[xy] == image;
    };
    for (std::size_t i = 0; i < domain.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        if (!extend(domain[i], domain[j]) || !extend(domain[j], domain[i])) return false;
      }
    }
    return true;
  }

  bool search(std::size_t depth, LoopIsomorphism& map) {
    if (depth == gens_.size()) return true;
    const Element g = gens_[depth];
    if (map[g] != kUnset) return search(depth + 1, map);
    std::vector<bool> used(b_.order(), false);
    for (Element v : map) {
      if (v != kUnset) used[v] = true;
    }
    for (Element candidate = 1; candidate < b_.order(); ++candidate) {
      if (used[candidate] || sig_a_[g] != sig_b_[candidate]) continue;
      LoopIsomorphism trial = map;
      std::vector<bool> trial_used = used;
      trial[g] = candidate;
      trial_used[candidate] = true;
      if (close(trial, trial_used) && search(depth + 1, trial)) {
        map = std::move(trial);
        return true;
      }
    }
    return false;
  }

  const CayleyLoop& a_;
  const CayleyLoop& b_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<Element> gens_;
};

}  // namespace

std::optional<LoopIsomorphism> loops_isomorphic(const CayleyLoop& first, const CayleyLoop& second,
                                                std::size_t size_gate) {
  if (first.order() > size_gate || second.order() > size_gate) {
    throw Error(ErrorCode::SizeGate, "isomorphism search is limited to order " +
                                         std::to_string(size_gate));
  }
  if (first.order() != second.order()) return std::nullopt;
  {
    auto sa = signatures(first);
    auto sb = signatures(second);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  auto map = IsomorphismSearch(first, second).run();
  if (!map) return std::nullopt;
  const auto n = static_cast<Element>(first.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if ((*map)[first.mul(x, y)] != second.mul((*map)[x], (*map)[y])) return std::nullopt;
    }
  }
  return map;
}

}  // namespace bolloop
