#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bolloop/cayley_loop.hpp"

namespace bolloop {

enum class CheckMode { Exhaustive, Sampled };

std::string to_string(CheckMode mode);

struct Witness {
  Element x;
  Element y;
  Element z;
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct IdentityResult {
  bool holds = true;
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t triples_checked = 0;
  std::uint64_t seed = 0;  // meaningful in sampled mode
  std::optional<Witness> witness;
  /// For Moufang checks: which Bol identity produced the witness.
  std::string violated;
};

struct CheckOptions {
  /// Largest n^3 scanned exhaustively unless `force_exhaustive` is set.
  std::uint64_t exhaustive_limit = 500'000'000;
  bool force_exhaustive = false;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  /// Worker count; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// x(y(xz)) = (x(yx))z.
///
/// The exhaustive scan walks (x, y, z) lexicographically and reports the
/// least violating triple whatever the worker schedule. Sampled mode draws
/// uniform triples from a generator seeded with `options.seed` and reports
/// the first violation drawn.
IdentityResult check_left_bol(const CayleyLoop& loop, const CheckOptions& options = {});

/// ((xy)z)y = x((yz)y)
IdentityResult check_right_bol(const CayleyLoop& loop, const CheckOptions& options = {});

/// Both Bol identities; the witness comes from the first one that fails.
IdentityResult check_moufang(const CayleyLoop& loop, const CheckOptions& options = {});

unsigned resolve_threads(unsigned requested);

}  // namespace bolloop
