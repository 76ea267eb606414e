#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bolloop/cayley_loop.hpp"
#include "bolloop/factorization.hpp"

namespace bolloop {

inline constexpr std::size_t kBuildSizeGate = 5040;
inline constexpr std::size_t kConjugateCheckGate = 200;

/// An element of G = X x X, written as a pair of permutations of X's points.
struct PairElement {
  Permutation first;
  Permutation second;
  friend bool operator==(const PairElement&, const PairElement&) = default;
};

/// The folder (G, H, S) with G = X x X, H = Y0 x Y1 and, by default,
/// S = {(x, x^-1)}. G and H stay implicit: all arithmetic happens in X.
class BolFolder {
 public:
  explicit BolFolder(ExactFactorizationTriple triple);
  /// Folder with an explicit section, e.g. loaded from a fixture file.
  BolFolder(ExactFactorizationTriple triple, std::vector<PairElement> section);

  const ExactFactorizationTriple& triple() const noexcept { return triple_; }
  const std::vector<PairElement>& section() const noexcept { return section_; }

 private:
  ExactFactorizationTriple triple_;
  std::vector<PairElement> section_;
};

/// x o y from the closed form: with a = xy, b = x^-1 y^-1, a^-1 = a0 a1 and
/// b = b0 b1, the product is a1^-1 b0^-1. Throws Error(NotInGroup) and
/// Error(NotFaithful) for unfaithful triples unless `allow_unfaithful`.
Permutation loop_product(const ExactFactorizationTriple& triple, const Permutation& x,
                         const Permutation& y, bool allow_unfaithful = false);

/// Cayley table of the loop on X's elements in their sorted order (identity
/// first); labels are cycle strings. Rows are filled by `threads` workers.
/// Throws Error(SizeGate) above `size_gate` elements.
CayleyLoop build_loop(const ExactFactorizationTriple& triple, unsigned threads = 0,
                      bool allow_unfaithful = false, std::size_t size_gate = kBuildSizeGate);

enum class FolderLevel { Basic, Conjugates };
enum class CheckStatus { Passed, Failed, Skipped };

std::string to_string(CheckStatus status);

struct FolderCheck {
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;  // offending pair or coset on failure, reason when skipped
};

struct FolderReport {
  FolderCheck identity_in_section;
  FolderCheck closed_under_sts;  // s t s in S
  FolderCheck transversal_to_h;
  FolderCheck transversal_to_conjugates;
  bool passed() const;
};

/// Basic level: 1 in S, sts in S over all of S x S, and S a left transversal
/// of H. Conjugates level adds transversality to every s H s^-1 by counting
/// hits per coset, skipped above `conjugate_gate` elements.
FolderReport verify_folder(const BolFolder& folder, FolderLevel level,
                           std::size_t conjugate_gate = kConjugateCheckGate);

/// For every b = y0 y1^-1 and every a, (y0 a y0^-1, y1 a^-1 y1^-1) lies in
/// (b, b^-1) S.
bool check_gloop_witness(const ExactFactorizationTriple& triple);

struct NonsolvabilityCheck {
  bool holds;
  std::uint64_t derived_order;         // |X'|
  std::uint64_t second_derived_order;  // |X''|
  std::uint64_t derived_times_factor0;         // |X' Y0|
  std::uint64_t second_derived_times_factor1;  // |X'' Y1|
};

/// X' Y0 = X'' Y1 = X.
NonsolvabilityCheck check_nonsolvability_condition(const ExactFactorizationTriple& triple);

struct SimplicityCriterion {
  bool applies;  // socle nonabelian simple, normal, with trivial centralizer in X
  bool verdict;  // T Y0 = T Y1 = X
  std::string reason;
};

/// Throws Error(NotNormalSocle) when <socle_gens> is not a normal subgroup of X.
SimplicityCriterion check_simplicity_criterion(const ExactFactorizationTriple& triple,
                                               std::span<const Permutation> socle_gens);

/// |X| |X'|
std::uint64_t predicted_lmlt_order(const ExactFactorizationTriple& triple);

/// Nonabelian and no proper nontrivial normal closure of any element.
bool is_nonabelian_simple(const FiniteGroup& group);

}  // namespace bolloop
