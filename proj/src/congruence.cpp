#include "bolloop/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "bolloop/error.hpp"
#include "bolloop/identities.hpp"

namespace bolloop {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), classes_(n) {
    std::iota(parent_.begin(), parent_.end(), Element{0});
  }

  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --classes_;
    return true;
  }

  std::size_t classes() const noexcept { return classes_; }

 private:
  std::vector<Element> parent_;
  std::size_t classes_;
};

// Generates the smallest congruence containing the pairs fed to add().
class CongruenceBuilder {
 public:
  explicit CongruenceBuilder(const CayleyLoop& loop) : loop_(loop), uf_(loop.order()) {}

  void add(Element a, Element b) {
    if (uf_.unite(a, b)) {
      pending_.emplace_back(a, b);
      propagate();
    }
  }

  bool total() const noexcept { return uf_.classes() == 1; }

  NormalSubloop result() {
    const std::size_t n = loop_.order();
    NormalSubloop out;
    out.class_of.assign(n, 0);
    std::vector<std::int64_t> id(n, -1);
    std::uint32_t next = 0;
    for (Element e = 0; e < n; ++e) {
      const Element root = uf_.find(e);
      if (id[root] < 0) id[root] = next++;
      out.class_of[e] = static_cast<std::uint32_t>(id[root]);
      if (out.class_of[e] == 0) out.elements.push_back(e);
    }
    out.class_count = next;
    return out;
  }

 private:
  void propagate() {
    const auto n = static_cast<Element>(loop_.order());
    while (!pending_.empty() && !total()) {
      auto [x, y] = pending_.front();
      pending_.pop_front();
      for (Element u = 0; u < n; ++u) {
        const Element lx = loop_.mul(u, x), ly = loop_.mul(u, y);
        if (uf_.unite(lx, ly)) pending_.emplace_back(lx, ly);
        const Element rx = loop_.mul(x, u), ry = loop_.mul(y, u);
        if (uf_.unite(rx, ry)) pending_.emplace_back(rx, ry);
      }
    }
    if (total()) pending_.clear();
  }

  const CayleyLoop& loop_;
  UnionFind uf_;
  std::deque<std::pair<Element, Element>> pending_;
};

void check_gate(const CayleyLoop& loop, std::size_t gate, const char* what) {
  if (loop.order() > gate) {
    throw Error(ErrorCode::SizeGate, std::string(what) + " is limited to order " +
                                         std::to_string(gate) + ", got " +
                                         std::to_string(loop.order()));
  }
}

}  // namespace

bool is_normal_subloop(const CayleyLoop& loop, std::span<const Element> k) {
  const auto n = static_cast<Element>(loop.order());
  std::vector<std::uint64_t> stamp(n, 0);
  std::uint64_t round = 0;
  std::vector<bool> member(n, false);
  for (Element e : k) {
    if (e >= n) return false;
    member[e] = true;
  }
  if (!member[0]) return false;
  for (Element a : k) {
    for (Element b : k) {
      if (!member[loop.mul(a, b)]) return false;
    }
  }
  auto mark = [&](auto&& produce) {
    ++round;
    for (Element e : k) stamp[produce(e)] = round;
  };
  auto all_marked = [&](auto&& produce) {
    for (Element e : k) {
      if (stamp[produce(e)] != round) return false;
    }
    return true;
  };
  for (Element x = 0; x < n; ++x) {
    mark([&](Element e) { return loop.mul(x, e); });
    if (!all_marked([&](Element e) { return loop.mul(e, x); })) return false;
    for (Element y = 0; y < n; ++y) {
      const Element xy = loop.mul(x, y);
      mark([&](Element e) { return loop.mul(xy, e); });
      if (!all_marked([&](Element e) { return loop.mul(x, loop.mul(y, e)); })) return false;
      mark([&](Element e) { return loop.mul(e, xy); });
      if (!all_marked([&](Element e) { return loop.mul(loop.mul(e, x), y); })) return false;
    }
  }
  return true;
}

NormalSubloop NormalSubloop::from_elements(const CayleyLoop& loop, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_normal_subloop(loop, elements)) {
    throw Error(ErrorCode::NotNormal, "element set is not a normal subloop");
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (Element e : elements) pairs.emplace_back(0, e);
  NormalSubloop out = congruence_closure(loop, pairs);
  if (out.elements != elements) {
    throw Error(ErrorCode::NotNormal, "element set is not a congruence class");
  }
  return out;
}

NormalSubloop congruence_closure(const CayleyLoop& loop,
                                 std::span<const std::pair<Element, Element>> pairs) {
  CongruenceBuilder builder(loop);
  for (auto [a, b] : pairs) {
    builder.add(a, b);
    if (builder.total()) break;
  }
  return builder.result();
}

NormalSubloop normal_closure_congruence(const CayleyLoop& loop, Element a) {
  const std::pair<Element, Element> seed{0, a};
  NormalSubloop out = congruence_closure(loop, std::span(&seed, 1));
  if (out.order() > 1 && out.order() < loop.order()) {
    if (loop.order() % out.order() != 0 || out.class_count * out.order() != loop.order() ||
        !is_normal_subloop(loop, out.elements)) {
      throw std::logic_error("congruence class of 0 failed the normality predicate");
    }
  }
  return out;
}

std::vector<NormalSubloop> all_normal_subloops(const CayleyLoop& loop, std::size_t size_gate) {
  check_gate(loop, size_gate, "all_normal_subloops");
  const auto n = static_cast<Element>(loop.order());
  std::vector<NormalSubloop> found;
  std::set<std::vector<Element>> seen;
  auto record = [&](NormalSubloop s) {
    if (seen.insert(s.elements).second) found.push_back(std::move(s));
  };
  for (Element a = 0; a < n; ++a) {
    record(normal_closure_congruence(loop, a));
  }
  // joins of congruences; every normal subloop is a join of principal ones
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<std::pair<Element, Element>> pairs;
      for (Element e : found[i].elements) pairs.emplace_back(0, e);
      for (Element e : found[j].elements) pairs.emplace_back(0, e);
      record(congruence_closure(loop, pairs));
    }
  }
  std::sort(found.begin(), found.end(), [](const NormalSubloop& a, const NormalSubloop& b) {
    return std::pair(a.order(), a.elements) < std::pair(b.order(), b.elements);
  });
  return found;
}

bool is_simple(const CayleyLoop& loop, unsigned threads) {
  const std::size_t n = loop.order();
  if (n <= 1) return false;
  std::atomic<std::size_t> next{1};
  std::atomic<bool> simple{true};
  auto worker = [&] {
    for (;;) {
      const std::size_t a = next.fetch_add(1);
      if (a >= n || !simple.load()) return;
      if (normal_closure_congruence(loop, static_cast<Element>(a)).order() != n) {
        simple.store(false);
        return;
      }
    }
  };
  threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(n));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return simple.load();
}

NormalSubloop commutator_associator_subloop(const CayleyLoop& loop, std::size_t size_gate) {
  check_gate(loop, size_gate, "commutator_associator_subloop");
  const auto n = static_cast<Element>(loop.order());
  CongruenceBuilder builder(loop);
  for (Element x = 0; x < n && !builder.total(); ++x) {
    for (Element y = 0; y < n && !builder.total(); ++y) {
      builder.add(loop.mul(x, y), loop.mul(y, x));
      const Element xy = loop.mul(x, y);
      for (Element z = 0; z < n && !builder.total(); ++z) {
        builder.add(loop.mul(xy, z), loop.mul(x, loop.mul(y, z)));
      }
    }
  }
  NormalSubloop out = builder.result();
  const CayleyLoop quotient = quotient_loop(loop, out);
  if (!is_commutative(quotient) || !is_associative(quotient)) {
    throw std::logic_error("quotient by the commutator-associator subloop is not an abelian group");
  }
  return out;
}

CayleyLoop quotient_loop(const CayleyLoop& loop, const NormalSubloop& normal) {
  const auto n = static_cast<Element>(loop.order());
  const std::size_t m = normal.class_count;
  if (normal.class_of.size() != n || m == 0 || normal.class_of[0] != 0) {
    throw Error(ErrorCode::NotNormal, "partition does not match the loop");
  }
  std::vector<Element> rep(m, n);
  for (Element e = 0; e < n; ++e) {
    const auto c = normal.class_of[e];
    if (c >= m) throw Error(ErrorCode::NotNormal, "class index out of range");
    if (rep[c] == n) rep[c] = e;
  }
  std::vector<Element> table(m * m);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t d = 0; d < m; ++d) {
      table[c * m + d] = normal.class_of[loop.mul(rep[c], rep[d])];
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (table[normal.class_of[x] * m + normal.class_of[y]] != normal.class_of[loop.mul(x, y)]) {
        throw Error(ErrorCode::NotNormal, "partition is not compatible with multiplication");
      }
    }
  }
  return CayleyLoop(m, std::move(table));
}

bool is_solvable_loop(const CayleyLoop& loop, std::size_t size_gate) {
  check_gate(loop, size_gate, "is_solvable_loop");
  CayleyLoop current = loop;
  while (current.order() > 1) {
    NormalSubloop derived = commutator_associator_subloop(current, size_gate);
    if (derived.order() == current.order()) return false;
    if (derived.order() == 1) return true;  // abelian group
    current = quotient_loop(current, derived);
  }
  return true;
}

bool q_prime_is_q(const CayleyLoop& loop) {
  const auto gens = derived_generators(lmlt_generators(loop));
  if (gens.empty()) return loop.order() == 1;
  return is_transitive(gens, loop.order());
}

}  // namespace bolloop
