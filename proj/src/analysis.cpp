#include "bolloop/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "bolloop/congruence.hpp"
#include "bolloop/error.hpp"

namespace bolloop {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Json big_to_json(const BigInt& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return Json(static_cast<std::uint64_t>(value));
  }
  return Json(value.str());
}

Json identity_to_json(const IdentityResult& r) {
  Json out{{"holds", r.holds}, {"mode", to_string(r.mode)}, {"samples", r.triples_checked}};
  if (r.mode == CheckMode::Sampled) out["seed"] = r.seed;
  if (r.witness) {
    out["witness"] = Json::array({r.witness->x, r.witness->y, r.witness->z});
    if (!r.violated.empty()) out["violated"] = r.violated;
  }
  return out;
}

Json check_to_json(const FolderCheck& c) {
  Json out{{"status", to_string(c.status)}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"bol",  "rbol", "moufang", "simple", "solvable",
                                              "qprime", "lmlt", "mlt",   "gloop",  "folder"};
  return names;
}

std::set<std::string> parse_checks(const std::string& list) {
  std::set<std::string> out;
  for (const auto& name : split(list, ',')) {
    const auto& known = known_checks();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw Error(ErrorCode::InvalidParameter, "unknown check '" + name + "'");
    }
    out.insert(name);
  }
  return out;
}

AnalysisReport analyze(const CayleyLoop& loop, const AnalysisOptions& options,
                       const ExactFactorizationTriple* triple) {
  AnalysisReport r;
  const std::size_t n = loop.order();
  r.order = n;
  r.checks = options.checks;
  r.is_loop = is_loop(n, loop.table());
  r.is_group = is_associative(loop);
  const auto& want = options.checks;
  auto wants = [&](const char* name) { return want.count(name) > 0; };

  if (wants("bol")) r.left_bol = check_left_bol(loop, options.identity);
  if (wants("rbol")) r.right_bol = check_right_bol(loop, options.identity);
  if (wants("moufang")) r.moufang = check_moufang(loop, options.identity);
  if (wants("simple")) {
    r.is_simple = is_simple(loop, options.identity.threads);
    if (*r.is_simple) {
      r.normal_subloop_orders = n == 1 ? std::vector<std::size_t>{1}
                                       : std::vector<std::size_t>{1, n};
    } else if (n <= kCongruenceSizeGate) {
      std::vector<std::size_t> orders;
      for (const auto& k : all_normal_subloops(loop)) orders.push_back(k.order());
      r.normal_subloop_orders = std::move(orders);
    } else {
      r.skipped.emplace_back("normal_subloop_orders",
                             "order above " + std::to_string(kCongruenceSizeGate));
    }
  }
  if (wants("qprime")) r.q_prime_is_q = q_prime_is_q(loop);
  if (wants("solvable")) {
    if (n <= kCongruenceSizeGate) {
      r.solvable_loop = is_solvable_loop(loop);
    } else {
      r.skipped.emplace_back("solvable_loop", "order above " + std::to_string(kCongruenceSizeGate));
    }
  }
  if (wants("lmlt")) {
    const auto gens = lmlt_generators(loop);
    r.lmlt_order = group_order_schreier(gens);
    r.lmlt_solvable = is_solvable_group(gens);
  }
  if (wants("mlt")) {
    if (n <= options.mlt_gate) {
      r.mlt_order = group_order_schreier(mlt_generators(loop));
    } else {
      r.skipped.emplace_back("mlt_order", "order above " + std::to_string(options.mlt_gate));
    }
  }
  if (wants("gloop")) {
    if (triple != nullptr) {
      r.gloop = check_gloop_witness(*triple);
    } else {
      r.skipped.emplace_back("gloop", "no factorization attached to the loop");
    }
  }
  if (wants("folder")) {
    if (triple != nullptr) {
      r.folder = verify_folder(BolFolder(*triple), FolderLevel::Conjugates);
    } else {
      r.skipped.emplace_back("folder", "no factorization attached to the loop");
    }
  }
  return r;
}

Json folder_report_to_json(const FolderReport& report) {
  return Json{{"passed", report.passed()},
              {"identity_in_section", check_to_json(report.identity_in_section)},
              {"closed_under_sts", check_to_json(report.closed_under_sts)},
              {"transversal_to_h", check_to_json(report.transversal_to_h)},
              {"transversal_to_conjugates", check_to_json(report.transversal_to_conjugates)}};
}

Json report_to_json(const AnalysisReport& r) {
  Json out{{"schema", 1}, {"order", r.order}, {"is_loop", r.is_loop}, {"is_group", r.is_group}};
  out["checks"] = Json(std::vector<std::string>(r.checks.begin(), r.checks.end()));
  if (r.left_bol) out["left_bol"] = identity_to_json(*r.left_bol);
  if (r.right_bol) out["right_bol"] = identity_to_json(*r.right_bol);
  if (r.moufang) out["moufang"] = identity_to_json(*r.moufang);
  if (r.is_simple) out["is_simple"] = *r.is_simple;
  if (r.normal_subloop_orders) out["normal_subloop_orders"] = *r.normal_subloop_orders;
  if (r.q_prime_is_q) out["q_prime_is_q"] = *r.q_prime_is_q;
  if (r.checks.count("solvable")) out["solvable_loop"] = r.solvable_loop ? Json(*r.solvable_loop) : Json();
  if (r.lmlt_order) out["lmlt_order"] = big_to_json(*r.lmlt_order);
  if (r.lmlt_solvable) out["lmlt_solvable"] = *r.lmlt_solvable;
  if (r.checks.count("mlt")) out["mlt_order"] = r.mlt_order ? big_to_json(*r.mlt_order) : Json();
  if (r.checks.count("gloop")) out["gloop"] = r.gloop ? Json(*r.gloop) : Json();
  if (r.checks.count("folder")) out["folder"] = r.folder ? folder_report_to_json(*r.folder) : Json();
  if (!r.skipped.empty()) {
    Json skipped = Json::object();
    for (const auto& [key, reason] : r.skipped) skipped[key] = reason;
    out["skipped"] = std::move(skipped);
  }
  return out;
}

std::vector<AssertionOutcome> evaluate_assertions(const AnalysisReport& report,
                                                  const std::string& assertions) {
  std::vector<AssertionOutcome> out;
  for (const auto& item : split(assertions, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw Error(ErrorCode::InvalidParameter, "assertion '" + item + "' is not key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string expected = item.substr(eq + 1);
    std::optional<std::string> actual;
    auto missing = [&](const std::string& check) {
      throw Error(ErrorCode::InvalidParameter,
                  "assertion '" + key + "' needs --checks " + check);
    };
    auto gated = [&](bool ran) -> std::string { return ran ? "" : "skipped"; };
    if (key == "order") {
      actual = std::to_string(report.order);
    } else if (key == "loop") {
      actual = bool_text(report.is_loop);
    } else if (key == "group") {
      actual = bool_text(report.is_group);
    } else if (key == "bol" || key == "rbol" || key == "moufang") {
      const auto& r = key == "bol" ? report.left_bol : key == "rbol" ? report.right_bol : report.moufang;
      if (!r) missing(key);
      actual = bool_text(r->holds);
    } else if (key == "simple") {
      if (!report.is_simple) missing("simple");
      actual = bool_text(*report.is_simple);
    } else if (key == "qprime") {
      if (!report.q_prime_is_q) missing("qprime");
      actual = bool_text(*report.q_prime_is_q);
    } else if (key == "solvable") {
      if (!report.checks.count("solvable")) missing("solvable");
      actual = report.solvable_loop ? bool_text(*report.solvable_loop) : gated(false);
    } else if (key == "lmlt") {
      if (!report.lmlt_order) missing("lmlt");
      actual = report.lmlt_order->str();
    } else if (key == "lmlt_solvable") {
      if (!report.lmlt_solvable) missing("lmlt");
      actual = bool_text(*report.lmlt_solvable);
    } else if (key == "mlt") {
      if (!report.checks.count("mlt")) missing("mlt");
      actual = report.mlt_order ? report.mlt_order->str() : gated(false);
    } else if (key == "gloop") {
      if (!report.checks.count("gloop")) missing("gloop");
      actual = report.gloop ? bool_text(*report.gloop) : gated(false);
    } else if (key == "folder") {
      if (!report.checks.count("folder")) missing("folder");
      actual = report.folder ? bool_text(report.folder->passed()) : gated(false);
    } else {
      throw Error(ErrorCode::InvalidParameter, "unknown assertion key '" + key + "'");
    }
    out.push_back({key, expected, *actual, *actual == expected});
  }
  return out;
}

}  // namespace bolloop
