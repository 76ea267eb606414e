#include "bolloop/stabilizer_chain.hpp"

#include "bolloop/error.hpp"

namespace bolloop {

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {}

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  for (const auto& g : generators) {
    add_generator(g);
  }
}

bool StabilizerChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_) {
    throw Error(ErrorCode::DegreeMismatch, "generator degree differs from chain degree");
  }
  auto [residue, stop] = sift(g, 0);
  if (residue.is_identity()) {
    return false;
  }
  insert(residue, 0, stop);
  return true;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) {
    return false;
  }
  auto [residue, stop] = sift(g, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t level) const {
  for (std::size_t l = level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const auto slot = lv.slot[g[lv.base]];
    if (slot < 0) {
      return {std::move(g), l};
    }
    g = lv.reps_inverse[static_cast<std::size_t>(slot)] * g;
  }
  return {std::move(g), levels_.size()};
}

// `h` fixes the base points of all levels below `to`; it joins the
// generating sets of levels `from` through `to`, deepest first.
void StabilizerChain::insert(const Permutation& h, std::size_t from, std::size_t to) {
  if (to == levels_.size()) {
    Level lv;
    lv.base = h.first_moved_point();
    lv.slot.assign(degree_, -1);
    lv.slot[lv.base] = 0;
    lv.orbit.push_back(lv.base);
    lv.reps.push_back(Permutation::identity(degree_));
    lv.reps_inverse.push_back(Permutation::identity(degree_));
    levels_.push_back(std::move(lv));
  }
  for (std::size_t l = to + 1; l-- > from;) {
    levels_[l].generators.push_back(h);
    extend_level(l);
  }
}

void StabilizerChain::extend_level(std::size_t l) {
  {
    Level& lv = levels_[l];
    for (std::size_t idx = 0; idx < lv.orbit.size(); ++idx) {
      for (const auto& s : lv.generators) {
        Point image = s[lv.orbit[idx]];
        if (lv.slot[image] < 0) {
          lv.slot[image] = static_cast<std::int32_t>(lv.orbit.size());
          lv.orbit.push_back(image);
          Permutation rep = s * lv.reps[idx];
          lv.reps_inverse.push_back(inverse(rep));
          lv.reps.push_back(std::move(rep));
        }
      }
    }
  }
  // Schreier generators rep(s(b))^-1 s rep(b); pairs checked on an earlier
  // pass are skipped since existing representatives never change.
  const std::size_t orbit_size = levels_[l].orbit.size();
  const std::size_t gen_count = levels_[l].generators.size();
  const std::size_t old_orbit = levels_[l].done_orbit;
  const std::size_t old_gens = levels_[l].done_gens;
  levels_[l].done_orbit = orbit_size;
  levels_[l].done_gens = gen_count;
  for (std::size_t idx = 0; idx < orbit_size; ++idx) {
    for (std::size_t gi = (idx < old_orbit ? old_gens : 0); gi < gen_count; ++gi) {
      const Level& lv = levels_[l];
      const Permutation& s = lv.generators[gi];
      Point image = s[lv.orbit[idx]];
      Permutation schreier =
          lv.reps_inverse[static_cast<std::size_t>(lv.slot[image])] * (s * lv.reps[idx]);
      if (schreier.is_identity()) continue;
      auto [residue, stop] = sift(std::move(schreier), l + 1);
      if (!residue.is_identity()) {
        insert(residue, l + 1, stop);
      }
    }
  }
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& lv : levels_) {
    result *= lv.orbit.size();
  }
  return result;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& lv : levels_) out.push_back(lv.base);
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

const std::vector<Permutation>& StabilizerChain::strong_generators() const {
  return levels_.empty() ? empty_ : levels_.front().generators;
}

}  // namespace bolloop
