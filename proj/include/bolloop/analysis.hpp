#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bolloop/cayley_loop.hpp"
#include "bolloop/construct.hpp"
#include "bolloop/identities.hpp"
#include "bolloop/io.hpp"

namespace bolloop {

inline constexpr std::size_t kMltSizeGate = 256;

/// bol, rbol, moufang, simple, solvable, qprime, lmlt, mlt, gloop, folder
const std::vector<std::string>& known_checks();

/// Comma separated list of known check names. Throws Error(InvalidParameter).
std::set<std::string> parse_checks(const std::string& list);

struct AnalysisOptions {
  std::set<std::string> checks;
  CheckOptions identity;
  std::size_t mlt_gate = kMltSizeGate;
};

/// Structured results; each optional is filled only when its check ran.
/// Gated checks leave the value empty and record a reason in `skipped`.
struct AnalysisReport {
  std::size_t order = 0;
  bool is_loop = false;
  bool is_group = false;
  std::set<std::string> checks;
  std::optional<IdentityResult> left_bol;
  std::optional<IdentityResult> right_bol;
  std::optional<IdentityResult> moufang;
  std::optional<bool> is_simple;
  std::optional<std::vector<std::size_t>> normal_subloop_orders;
  std::optional<bool> q_prime_is_q;
  std::optional<bool> solvable_loop;
  std::optional<BigInt> lmlt_order;
  std::optional<bool> lmlt_solvable;
  std::optional<BigInt> mlt_order;
  std::optional<bool> gloop;
  std::optional<FolderReport> folder;
  std::vector<std::pair<std::string, std::string>> skipped;  // field, reason
};

/// Runs the requested checks. `triple` is needed for gloop and folder; those
/// are skipped without it.
AnalysisReport analyze(const CayleyLoop& loop, const AnalysisOptions& options,
                       const ExactFactorizationTriple* triple = nullptr);

/// Report JSON with "schema": 1. Fields of checks that did not run are absent;
/// gated fields are null and listed under "skipped".
Json report_to_json(const AnalysisReport& report);

Json folder_report_to_json(const FolderReport& report);

struct AssertionOutcome {
  std::string key;
  std::string expected;
  std::string actual;
  bool passed;
};

/// Compares key=value pairs against the report. Keys: order, loop, group,
/// bol, rbol, moufang, simple, solvable, qprime, lmlt, lmlt_solvable, mlt,
/// gloop, folder. Throws Error(InvalidParameter) for unknown keys, malformed
/// pairs and keys whose check was not run.
std::vector<AssertionOutcome> evaluate_assertions(const AnalysisReport& report,
                                                  const std::string& assertions);

}  // namespace bolloop
