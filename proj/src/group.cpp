#include "bolloop/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

#include "bolloop/error.hpp"

namespace bolloop {

namespace {

std::size_t common_degree(std::span<const Permutation> gens) {
  if (gens.empty()) {
    throw Error(ErrorCode::InvalidParameter, "empty generator set");
  }
  const std::size_t degree = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "generators of different degrees");
    }
  }
  return degree;
}

std::uint64_t to_u64(const BigInt& v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::CapExceeded, "group order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

const std::vector<Permutation>& FiniteGroup::elements() const {
  if (!materialized()) {
    throw Error(ErrorCode::CapExceeded, "group of order " + std::to_string(order_) +
                                            " is not materialized");
  }
  return elements_;
}

bool FiniteGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  if (materialized()) return index_->contains(p);
  return chain_->contains(p);
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  if (!materialized()) {
    throw Error(ErrorCode::CapExceeded, "index_of on a group that is not materialized");
  }
  auto it = index_->find(p);
  if (it == index_->end()) return std::nullopt;
  return it->second;
}

FiniteGroup FiniteGroup::materialize(std::size_t cap) const {
  if (materialized()) return *this;
  if (order_ > cap) {
    throw Error(ErrorCode::CapExceeded, "group of order " + std::to_string(order_) +
                                            " exceeds the cap of " + std::to_string(cap));
  }
  return generate(generators_, cap);
}

FiniteGroup generate(std::span<const Permutation> gens, std::size_t cap) {
  const std::size_t degree = common_degree(gens);
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> queue;
  queue.push_back(Permutation::identity(degree));
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      Permutation p = g * queue[head];
      if (seen.insert(p).second) {
        if (seen.size() > cap) {
          throw Error(ErrorCode::CapExceeded,
                      "closure exceeded " + std::to_string(cap) + " elements");
        }
        queue.push_back(std::move(p));
      }
    }
  }
  std::sort(queue.begin(), queue.end());

  FiniteGroup group;
  group.degree_ = degree;
  group.generators_.assign(gens.begin(), gens.end());
  group.order_ = queue.size();
  auto index = std::make_shared<std::unordered_map<Permutation, std::size_t, PermutationHash>>();
  index->reserve(queue.size());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    index->emplace(queue[i], i);
  }
  group.elements_ = std::move(queue);
  group.index_ = std::move(index);
  group.chain_ = std::make_shared<StabilizerChain>(degree, gens);
  return group;
}

FiniteGroup generate(std::initializer_list<Permutation> gens, std::size_t cap) {
  return generate(std::span<const Permutation>(gens.begin(), gens.size()), cap);
}

FiniteGroup from_generators(std::span<const Permutation> gens, std::size_t degree) {
  FiniteGroup group;
  if (gens.empty()) {
    if (degree == 0) {
      throw Error(ErrorCode::InvalidParameter, "trivial group needs an explicit degree");
    }
    group.degree_ = degree;
    group.generators_.push_back(Permutation::identity(degree));
  } else {
    group.degree_ = common_degree(gens);
    group.generators_.assign(gens.begin(), gens.end());
  }
  auto chain = std::make_shared<StabilizerChain>(group.degree_, group.generators_);
  group.order_ = to_u64(chain->order());
  group.chain_ = std::move(chain);
  return group;
}

BigInt group_order_schreier(std::span<const Permutation> gens) {
  const std::size_t degree = common_degree(gens);
  return StabilizerChain(degree, gens).order();
}

std::vector<Permutation> reduce_generators(std::span<const Permutation> gens) {
  std::vector<Permutation> out;
  if (gens.empty()) return out;
  StabilizerChain chain(common_degree(gens));
  for (const auto& g : gens) {
    if (chain.add_generator(g)) out.push_back(g);
  }
  return out;
}

std::vector<Permutation> normal_closure_generators(std::span<const Permutation> group_gens,
                                                   std::span<const Permutation> seeds) {
  std::vector<Permutation> out;
  if (seeds.empty()) return out;
  StabilizerChain chain(common_degree(seeds));
  for (const auto& s : seeds) {
    if (chain.add_generator(s)) out.push_back(s);
  }
  const auto conjugators = reduce_generators(group_gens);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : conjugators) {
      Permutation c = conjugate(out[i], g);
      if (chain.add_generator(c)) out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Permutation> derived_generators(std::span<const Permutation> gens) {
  const auto reduced = reduce_generators(gens);
  std::vector<Permutation> commutators;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      Permutation c = commutator(reduced[i], reduced[j]);
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  }
  return normal_closure_generators(reduced, commutators);
}

FiniteGroup derived_subgroup(const FiniteGroup& g, std::size_t cap) {
  auto gens = derived_generators(g.generators());
  if (gens.empty()) {
    gens.push_back(Permutation::identity(g.degree()));
  }
  if (g.materialized()) return generate(gens, cap);
  return from_generators(gens);
}

bool is_solvable_group(std::span<const Permutation> gens) {
  auto current = reduce_generators(gens);
  if (current.empty()) return true;
  BigInt order = StabilizerChain(current.front().degree(), current).order();
  for (;;) {
    auto next = derived_generators(current);
    if (next.empty()) return true;
    BigInt next_order = StabilizerChain(next.front().degree(), next).order();
    if (next_order == order) return false;
    order = next_order;
    current = reduce_generators(next);
  }
}

bool is_solvable_group(const FiniteGroup& g) { return is_solvable_group(g.generators()); }

bool is_normal_subgroup(const FiniteGroup& g, const FiniteGroup& n) {
  for (const auto& x : g.generators()) {
    for (const auto& y : n.generators()) {
      if (!n.contains(conjugate(y, x))) return false;
    }
  }
  return true;
}

FiniteGroup core_in(const FiniteGroup& g, const FiniteGroup& y) {
  const auto& elements = g.elements();
  const auto& sub = y.elements();
  // label every element of g by its left coset of y
  std::vector<std::int64_t> label(elements.size(), -1);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (label[i] >= 0) continue;
    const auto id = static_cast<std::int64_t>(reps.size());
    reps.push_back(i);
    for (const auto& h : sub) {
      auto pos = g.index_of(elements[i] * h);
      if (!pos) throw Error(ErrorCode::NotSubgroup, "core_in: y is not contained in g");
      label[*pos] = id;
    }
  }
  std::vector<Permutation> kernel;
  for (const auto& k : sub) {
    bool fixes_all = true;
    for (std::size_t c = 0; c < reps.size() && fixes_all; ++c) {
      fixes_all = label[*g.index_of(k * elements[reps[c]])] == static_cast<std::int64_t>(c);
    }
    if (fixes_all) kernel.push_back(k);
  }
  auto gens = reduce_generators(kernel);
  if (gens.empty()) gens.push_back(Permutation::identity(g.degree()));
  return generate(gens);
}

std::uint64_t intersection_order(const FiniteGroup& a, const FiniteGroup& b) {
  const FiniteGroup* small = &a;
  const FiniteGroup* large = &b;
  if (a.order() > b.order()) std::swap(small, large);
  FiniteGroup owned = small->materialize();
  std::uint64_t count = 0;
  for (const auto& p : owned.elements()) {
    if (large->contains(p)) ++count;
  }
  return count;
}

ProductInfo subgroup_product_is_group(const FiniteGroup& g, const FiniteGroup& a,
                                      const FiniteGroup& b) {
  const std::uint64_t meet = intersection_order(a, b);
  const std::uint64_t size = a.order() / meet * b.order();
  return {size == g.order(), size};
}

std::vector<Point> orbit(std::span<const Permutation> gens, Point point, std::size_t domain_size) {
  std::vector<bool> seen(domain_size, false);
  std::vector<Point> out{point};
  seen[point] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      Point image = g[out[head]];
      if (!seen[image]) {
        seen[image] = true;
        out.push_back(image);
      }
    }
  }
  return out;
}

bool is_transitive(std::span<const Permutation> gens, std::size_t domain_size) {
  if (domain_size == 0) return false;
  for (const auto& g : gens) {
    if (g.degree() != domain_size) {
      throw Error(ErrorCode::DegreeMismatch, "generator degree differs from domain size");
    }
  }
  return orbit(gens, 0, domain_size).size() == domain_size;
}

}  // namespace bolloop
