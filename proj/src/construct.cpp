#include "bolloop/construct.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "bolloop/error.hpp"
#include "bolloop/identities.hpp"

namespace bolloop {

namespace {

std::vector<PairElement> default_section(const ExactFactorizationTriple& triple) {
  std::vector<PairElement> out;
  for (const auto& x : triple.group().elements()) {
    out.push_back({x, inverse(x)});
  }
  return out;
}

void require_faithful(const ExactFactorizationTriple& triple, bool allow_unfaithful) {
  if (!triple.faithful() && !allow_unfaithful) {
    throw Error(ErrorCode::NotFaithful, "loop construction needs a faithful triple");
  }
}

std::size_t index_in(const FiniteGroup& g, const Permutation& p) {
  auto pos = g.index_of(p);
  if (!pos) throw Error(ErrorCode::NotInGroup, p.to_cycle_string() + " is not in X");
  return *pos;
}

// Left coset labels of `sub` in the materialized `group`, by element index.
std::vector<std::size_t> coset_labels(const FiniteGroup& group, const FiniteGroup& sub,
                                      std::size_t& count) {
  const auto& elements = group.elements();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(elements.size(), unset);
  count = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (label[i] != unset) continue;
    for (const auto& h : sub.elements()) label[index_in(group, elements[i] * h)] = count;
    ++count;
  }
  return label;
}

std::string describe(const PairElement& p) {
  return "(" + p.first.to_cycle_string() + ", " + p.second.to_cycle_string() + ")";
}

}  // namespace

BolFolder::BolFolder(ExactFactorizationTriple triple)
    : triple_(std::move(triple)), section_(default_section(triple_)) {}

BolFolder::BolFolder(ExactFactorizationTriple triple, std::vector<PairElement> section)
    : triple_(std::move(triple)), section_(std::move(section)) {}

Permutation loop_product(const ExactFactorizationTriple& triple, const Permutation& x,
                         const Permutation& y, bool allow_unfaithful) {
  require_faithful(triple, allow_unfaithful);
  if (!triple.group().contains(x) || !triple.group().contains(y)) {
    throw Error(ErrorCode::NotInGroup, "loop_product arguments must lie in X");
  }
  const Permutation a = x * y;
  const Permutation b = inverse(x) * inverse(y);
  const auto [a0, a1] = triple.decompose(inverse(a));
  const auto [b0, b1] = triple.decompose(b);
  Permutation z = inverse(a1) * inverse(b0);
  if (!(z * (b0 * a1)).is_identity()) {
    throw std::logic_error("loop product is not paired with b0 a1");
  }
  return z;
}

CayleyLoop build_loop(const ExactFactorizationTriple& triple, unsigned threads,
                      bool allow_unfaithful, std::size_t size_gate) {
  require_faithful(triple, allow_unfaithful);
  const auto& x = triple.group();
  const std::size_t n = x.order();
  if (n > size_gate) {
    throw Error(ErrorCode::SizeGate, "loop tables are limited to order " +
                                         std::to_string(size_gate) + ", |X| = " +
                                         std::to_string(n));
  }
  const auto& elements = x.elements();
  const auto& y0 = triple.factor0().elements();
  const auto& y1 = triple.factor1().elements();
  std::vector<Permutation> inv(n), y0_inv, y1_inv;
  for (std::size_t i = 0; i < n; ++i) inv[i] = inverse(elements[i]);
  for (const auto& p : y0) y0_inv.push_back(inverse(p));
  for (const auto& p : y1) y1_inv.push_back(inverse(p));

  std::vector<Element> table(n * n);
  std::atomic<std::size_t> next_row{0};
  std::atomic<bool> broken{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next_row.fetch_add(1);
      if (i >= n) return;
      for (std::size_t j = 0; j < n; ++j) {
        // a^-1 = (xy)^-1 = y^-1 x^-1 and b = x^-1 y^-1
        const auto a_split = triple.split(index_in(x, inv[j] * inv[i]));
        const auto b_split = triple.split(index_in(x, inv[i] * inv[j]));
        Permutation z = y1_inv[a_split.second] * y0_inv[b_split.first];
        if (!(z * (y0[b_split.first] * y1[a_split.second])).is_identity()) broken.store(true);
        table[i * n + j] = static_cast<Element>(index_in(x, z));
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
  if (broken.load()) {
    throw std::logic_error("loop product is not paired with b0 a1");
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elements) labels.push_back(e.to_cycle_string());
  return CayleyLoop(n, std::move(table), std::move(labels));
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Passed: return "pass";
    case CheckStatus::Failed: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "skipped";
}

bool FolderReport::passed() const {
  for (const auto* c : {&identity_in_section, &closed_under_sts, &transversal_to_h,
                        &transversal_to_conjugates}) {
    if (c->status == CheckStatus::Failed) return false;
  }
  return true;
}

FolderReport verify_folder(const BolFolder& folder, FolderLevel level,
                           std::size_t conjugate_gate) {
  const auto& triple = folder.triple();
  const auto& x = triple.group();
  const std::size_t n = x.order();
  const auto& section = folder.section();
  FolderReport report;

  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (const auto& s : section) {
    auto u = x.index_of(s.first);
    auto v = x.index_of(s.second);
    if (!u || !v) {
      report.identity_in_section = {CheckStatus::Failed, describe(s) + " is not in X x X"};
      return report;
    }
    idx.emplace_back(*u, *v);
  }
  const auto key = [n](std::size_t u, std::size_t v) { return u * n + v; };
  std::unordered_set<std::size_t> members;
  for (auto [u, v] : idx) members.insert(key(u, v));

  // the identity sorts first in X
  report.identity_in_section = members.contains(key(0, 0))
                                   ? FolderCheck{CheckStatus::Passed, ""}
                                   : FolderCheck{CheckStatus::Failed, "(1, 1) is not in S"};

  report.closed_under_sts = {CheckStatus::Passed, ""};
  for (std::size_t i = 0; i < section.size() && report.closed_under_sts.status == CheckStatus::Passed; ++i) {
    const auto& s = section[i];
    for (const auto& t : section) {
      const std::size_t u = index_in(x, s.first * t.first * s.first);
      const std::size_t v = index_in(x, s.second * t.second * s.second);
      if (!members.contains(key(u, v))) {
        report.closed_under_sts = {CheckStatus::Failed,
                                   "s = " + describe(s) + ", t = " + describe(t) + ": sts not in S"};
        break;
      }
    }
  }

  std::size_t count0 = 0, count1 = 0;
  const auto label0 = coset_labels(x, triple.factor0(), count0);
  const auto label1 = coset_labels(x, triple.factor1(), count1);
  const std::size_t cosets = count0 * count1;

  // each coset of K must contain exactly one element of S, where the coset of
  // t is computed as the H-coset of t * shift (shift = 1 gives H itself,
  // shift = s gives s H s^-1)
  auto transversal = [&](const PairElement* shift) -> FolderCheck {
    if (section.size() != cosets) {
      return {CheckStatus::Failed, "|S| = " + std::to_string(section.size()) + " but there are " +
                                       std::to_string(cosets) + " cosets"};
    }
    std::vector<std::int64_t> owner(cosets, -1);
    for (std::size_t i = 0; i < section.size(); ++i) {
      std::size_t u = idx[i].first, v = idx[i].second;
      if (shift) {
        u = index_in(x, section[i].first * shift->first);
        v = index_in(x, section[i].second * shift->second);
      }
      const std::size_t c = label0[u] * count1 + label1[v];
      if (owner[c] >= 0) {
        std::string where = shift ? " of s H s^-1 for s = " + describe(*shift) : " of H";
        return {CheckStatus::Failed, describe(section[static_cast<std::size_t>(owner[c])]) +
                                         " and " + describe(section[i]) + " share a coset" + where};
      }
      owner[c] = static_cast<std::int64_t>(i);
    }
    return {CheckStatus::Passed, ""};
  };

  report.transversal_to_h = transversal(nullptr);
  if (level == FolderLevel::Conjugates) {
    if (n > conjugate_gate) {
      report.transversal_to_conjugates = {
          CheckStatus::Skipped, "|X| = " + std::to_string(n) + " exceeds the conjugate-check gate " +
                                    std::to_string(conjugate_gate)};
    } else {
      report.transversal_to_conjugates = {CheckStatus::Passed, ""};
      for (const auto& s : section) {
        auto check = transversal(&s);
        if (check.status == CheckStatus::Failed) {
          report.transversal_to_conjugates = check;
          break;
        }
      }
    }
  } else {
    report.transversal_to_conjugates = {CheckStatus::Skipped, "basic level"};
  }
  return report;
}

bool check_gloop_witness(const ExactFactorizationTriple& triple) {
  const auto& x = triple.group();
  const auto& elements = x.elements();
  for (std::size_t bi = 0; bi < elements.size(); ++bi) {
    const Permutation& b = elements[bi];
    const auto split = triple.split(bi);
    const Permutation& y0 = triple.factor0().elements()[split.first];
    const Permutation y1 = inverse(triple.factor1().elements()[split.second]);
    if (!(y0 * inverse(y1) == b)) return false;
    const Permutation b_inv = inverse(b);
    const Permutation y0_inv = inverse(y0);
    const Permutation y1_inv = inverse(y1);
    for (const auto& a : elements) {
      const Permutation first = y0 * a * y0_inv;
      const Permutation second = y1 * inverse(a) * y1_inv;
      // (first, second) = (b s1, b^-1 s2) with (s1, s2) in S
      const Permutation s1 = b_inv * first;
      const Permutation s2 = b * second;
      if (!(s1 * s2).is_identity()) return false;
    }
  }
  return true;
}

NonsolvabilityCheck check_nonsolvability_condition(const ExactFactorizationTriple& triple) {
  const FiniteGroup& x = triple.group();
  const FiniteGroup d1 = derived_subgroup(x);
  const FiniteGroup d2 = derived_subgroup(d1);
  const auto p0 = subgroup_product_is_group(x, d1, triple.factor0());
  const auto p1 = subgroup_product_is_group(x, d2, triple.factor1());
  return {p0.equals_group && p1.equals_group, d1.order(), d2.order(), p0.size, p1.size};
}

bool is_nonabelian_simple(const FiniteGroup& group) {
  const FiniteGroup g = group.materialize();
  if (g.order() <= 1) return false;
  const auto& gens = g.generators();
  bool abelian = true;
  for (std::size_t i = 0; i < gens.size() && abelian; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && abelian; ++j) {
      abelian = gens[i] * gens[j] == gens[j] * gens[i];
    }
  }
  if (abelian) return false;
  // one normal closure per conjugacy class
  const auto& elements = g.elements();
  std::vector<bool> seen(elements.size(), false);
  seen[0] = true;
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> queue{i};
    seen[i] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& c : gens) {
        const std::size_t k = *g.index_of(conjugate(elements[queue[head]], c));
        if (!seen[k]) {
          seen[k] = true;
          queue.push_back(k);
        }
      }
    }
    const Permutation& rep = elements[i];
    const auto closure = normal_closure_generators(gens, std::span(&rep, 1));
    if (StabilizerChain(g.degree(), closure).order() != g.order()) return false;
  }
  return true;
}

SimplicityCriterion check_simplicity_criterion(const ExactFactorizationTriple& triple,
                                               std::span<const Permutation> socle_gens) {
  const FiniteGroup& x = triple.group();
  for (const auto& s : socle_gens) {
    if (!x.contains(s)) {
      throw Error(ErrorCode::NotNormalSocle, s.to_cycle_string() + " is not in X");
    }
  }
  const FiniteGroup socle = generate(socle_gens);
  if (!is_normal_subgroup(x, socle)) {
    throw Error(ErrorCode::NotNormalSocle, "proposed socle is not normal in X");
  }
  SimplicityCriterion out{};
  const bool simple = is_nonabelian_simple(socle);
  std::size_t centralizer = 0;
  for (const auto& e : x.elements()) {
    bool commutes = true;
    for (const auto& s : socle_gens) {
      if (!(e * s == s * e)) {
        commutes = false;
        break;
      }
    }
    if (commutes) ++centralizer;
  }
  out.applies = simple && centralizer == 1;
  if (!simple) {
    out.reason = "socle is not a nonabelian simple group";
  } else if (centralizer != 1) {
    out.reason = "socle has a nontrivial centralizer in X";
  }
  out.verdict = subgroup_product_is_group(x, socle, triple.factor0()).equals_group &&
                subgroup_product_is_group(x, socle, triple.factor1()).equals_group;
  if (out.applies && !out.verdict) out.reason = "T Y0 or T Y1 is smaller than X";
  return out;
}

std::uint64_t predicted_lmlt_order(const ExactFactorizationTriple& triple) {
  require_faithful(triple, false);
  return triple.group().order() * derived_subgroup(triple.group()).order();
}

}  // namespace bolloop
