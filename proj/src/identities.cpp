#include "bolloop/identities.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace bolloop {

std::string to_string(CheckMode mode) {
  return mode == CheckMode::Exhaustive ? "exhaustive" : "sampled";
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Scans rows x = 0..n-1; `scan_row(x)` returns the least (y, z) violating the
// identity for that x. Workers pull rows in increasing order and skip rows
// beyond the least violating x seen so far.
template <typename RowScan>
std::optional<Witness> least_violation(std::size_t n, unsigned threads, RowScan scan_row) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_row{n};
  std::mutex mutex;
  std::optional<Witness> best;

  auto worker = [&] {
    for (;;) {
      const std::size_t x = next.fetch_add(1);
      if (x >= n || x > best_row.load()) return;
      if (auto hit = scan_row(static_cast<Element>(x))) {
        std::lock_guard lock(mutex);
        if (!best || *hit < *best) best = *hit;
        std::size_t current = best_row.load();
        while (x < current && !best_row.compare_exchange_weak(current, x)) {
        }
        return;
      }
    }
  };

  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return best;
}

bool use_exhaustive(const CayleyLoop& loop, const CheckOptions& options) {
  const auto n = static_cast<std::uint64_t>(loop.order());
  return options.force_exhaustive || n * n * n <= options.exhaustive_limit;
}

template <typename Holds>
IdentityResult sampled(const CayleyLoop& loop, const CheckOptions& options, Holds holds) {
  IdentityResult result;
  result.mode = CheckMode::Sampled;
  result.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(loop.order() - 1));
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const Element x = pick(rng);
    const Element y = pick(rng);
    const Element z = pick(rng);
    ++result.triples_checked;
    if (!holds(x, y, z)) {
      result.holds = false;
      result.witness = Witness{x, y, z};
      break;
    }
  }
  return result;
}

}  // namespace

IdentityResult check_left_bol(const CayleyLoop& loop, const CheckOptions& options) {
  const std::size_t n = loop.order();
  if (!use_exhaustive(loop, options)) {
    return sampled(loop, options, [&](Element x, Element y, Element z) {
      return loop.mul(x, loop.mul(y, loop.mul(x, z))) == loop.mul(loop.mul(x, loop.mul(y, x)), z);
    });
  }
  auto scan_row = [&](Element x) -> std::optional<Witness> {
    const Element* lx = loop.row(x).data();
    for (Element y = 0; y < n; ++y) {
      const Element* ly = loop.row(y).data();
      const Element* lw = loop.row(lx[ly[x]]).data();  // w = x(yx)
      for (Element z = 0; z < n; ++z) {
        if (lx[ly[lx[z]]] != lw[z]) return Witness{x, y, z};
      }
    }
    return std::nullopt;
  };
  IdentityResult result;
  result.witness = least_violation(n, resolve_threads(options.threads), scan_row);
  result.holds = !result.witness;
  result.triples_checked = static_cast<std::uint64_t>(n) * n * n;
  return result;
}

IdentityResult check_right_bol(const CayleyLoop& loop, const CheckOptions& options) {
  const std::size_t n = loop.order();
  if (!use_exhaustive(loop, options)) {
    return sampled(loop, options, [&](Element x, Element y, Element z) {
      return loop.mul(loop.mul(loop.mul(x, y), z), y) == loop.mul(x, loop.mul(loop.mul(y, z), y));
    });
  }
  // column y of the table, i.e. R_y, gathered once per (x, y)
  auto scan_row = [&](Element x) -> std::optional<Witness> {
    const Element* lx = loop.row(x).data();
    std::vector<Element> ry(n);
    for (Element y = 0; y < n; ++y) {
      for (Element t = 0; t < n; ++t) ry[t] = loop.mul(t, y);
      const Element* lxy = loop.row(lx[y]).data();
      const Element* lyrow = loop.row(y).data();
      for (Element z = 0; z < n; ++z) {
        if (ry[lxy[z]] != lx[ry[lyrow[z]]]) return Witness{x, y, z};
      }
    }
    return std::nullopt;
  };
  IdentityResult result;
  result.witness = least_violation(n, resolve_threads(options.threads), scan_row);
  result.holds = !result.witness;
  result.triples_checked = static_cast<std::uint64_t>(n) * n * n;
  return result;
}

IdentityResult check_moufang(const CayleyLoop& loop, const CheckOptions& options) {
  IdentityResult left = check_left_bol(loop, options);
  if (!left.holds) {
    left.violated = "left_bol";
    return left;
  }
  IdentityResult right = check_right_bol(loop, options);
  right.triples_checked += left.triples_checked;
  if (!right.holds) right.violated = "right_bol";
  return right;
}

}  // namespace bolloop
