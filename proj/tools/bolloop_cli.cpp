#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "bolloop/analysis.hpp"
#include "bolloop/catalog.hpp"
#include "bolloop/construct.hpp"
#include "bolloop/error.hpp"
#include "bolloop/io.hpp"

using namespace bolloop;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitProperty = 2;
constexpr int kExitIo = 3;

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

bool is_csv(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

LoopFile load_loop(const std::string& path) {
  if (is_csv(path)) return {loop_from_csv(read_text_file(path)), Json::object()};
  return loop_from_json(read_json_file(path));
}

std::string yes_no(const std::optional<bool>& v) {
  if (!v) return "-";
  return *v ? "yes" : "no";
}

Json build_meta(const CatalogEntry& e) {
  Json params = Json::object();
  if (e.family != Family::F27) params["n"] = e.n;
  return Json{{"family", to_string(e.family)},
              {"parameters", params},
              {"X_order", e.triple.group().order()},
              {"Y0_order", e.triple.factor0().order()},
              {"Y1_order", e.triple.factor1().order()},
              {"predicted_lmlt_order", predicted_lmlt_order(e.triple)}};
}

// Rebuilds the catalog triple named in a loop file's meta block.
std::optional<ExactFactorizationTriple> triple_from_meta(const Json& meta, std::size_t order) {
  if (!meta.is_object() || !meta.contains("family") || !meta["family"].is_string()) return std::nullopt;
  const Family family = family_from_string(meta["family"].get<std::string>());
  unsigned n = 0;
  if (meta.contains("parameters") && meta["parameters"].contains("n")) {
    n = meta["parameters"]["n"].get<unsigned>();
  }
  CatalogEntry e = catalog_entry(family, n);
  if (e.triple.group().order() != order) {
    throw Error(ErrorCode::MalformedInput, "meta names a factorization of a different order");
  }
  return std::move(e.triple);
}

int cmd_catalog() {
  std::ostringstream out;
  out << std::left << std::setw(12) << "family" << std::setw(4) << "n" << std::right
      << std::setw(10) << "|X|" << std::setw(6) << "|Y0|" << std::setw(8) << "|Y1|"
      << std::setw(12) << "loop order" << std::setw(8) << "simple" << std::setw(8) << "proper"
      << "  notes\n";
  for (const auto& row : catalog_listing()) {
    out << std::left << std::setw(12) << to_string(row.family) << std::setw(4)
        << (row.family == Family::F27 ? std::string("-") : std::to_string(row.n)) << std::right
        << std::setw(10) << row.group_order << std::setw(6) << row.factor0_order << std::setw(8)
        << row.factor1_order << std::setw(12) << row.expected.loop_order << std::setw(8)
        << yes_no(row.expected.simple) << std::setw(8) << yes_no(row.expected.proper) << "  "
        << row.expected.notes << "\n";
  }
  std::cout << out.str();
  return kExitOk;
}

int cmd_build(const std::string& family_name, std::optional<unsigned> n, const std::string& out,
              unsigned threads) {
  const Family family = family_from_string(family_name);
  if (family != Family::F27 && !n) {
    throw Error(ErrorCode::InvalidParameter, "--n is required for family " + family_name);
  }
  CatalogEntry e = catalog_entry(family, n.value_or(0));
  const Json meta = build_meta(e);
  CayleyLoop loop = build_loop(e.triple, threads);
  const std::string text = loop_to_json_text(loop, meta);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
    std::cout << "order " << loop.order() << "\n" << meta.dump() << "\n";
  }
  return kExitOk;
}

struct AnalyzeArgs {
  std::string input;
  std::string checks = "bol,rbol,moufang,simple,qprime,lmlt";
  std::string assertions;
  std::uint64_t exhaustive_limit = CheckOptions{}.exhaustive_limit;
  bool force_exhaustive = false;
  std::uint64_t samples = CheckOptions{}.samples;
  std::uint64_t seed = 0;
  unsigned threads = default_threads();
  std::string out;
};

int cmd_analyze(const AnalyzeArgs& a) {
  AnalysisOptions options;
  options.checks = parse_checks(a.checks);
  options.identity.exhaustive_limit = a.exhaustive_limit;
  options.identity.force_exhaustive = a.force_exhaustive;
  options.identity.samples = a.samples;
  options.identity.seed = a.seed;
  options.identity.threads = a.threads;
  const LoopFile file = load_loop(a.input);
  std::optional<ExactFactorizationTriple> triple;
  if (options.checks.count("gloop") || options.checks.count("folder")) {
    triple = triple_from_meta(file.meta, file.loop.order());
  }
  const AnalysisReport report = analyze(file.loop, options, triple ? &*triple : nullptr);
  std::vector<AssertionOutcome> outcomes;
  if (!a.assertions.empty()) outcomes = evaluate_assertions(report, a.assertions);
  emit(report_to_json(report).dump(2) + "\n", a.out);
  bool ok = true;
  for (const auto& o : outcomes) {
    std::cerr << (o.passed ? "assert ok   " : "assert FAIL ") << o.key << ": expected "
              << o.expected << ", got " << o.actual << "\n";
    ok = ok && o.passed;
  }
  return ok ? kExitOk : kExitProperty;
}

int cmd_verify_folder(const std::string& family_name, std::optional<unsigned> n,
                      const std::string& input, const std::string& level_name,
                      const std::string& out) {
  FolderLevel level;
  if (level_name == "basic") {
    level = FolderLevel::Basic;
  } else if (level_name == "conjugates") {
    level = FolderLevel::Conjugates;
  } else {
    throw Error(ErrorCode::InvalidParameter, "--level must be basic or conjugates");
  }
  std::optional<BolFolder> folder;
  if (!input.empty()) {
    TripleFile file = triple_from_json(read_json_file(input));
    folder = file.section ? BolFolder(std::move(file.triple), std::move(*file.section))
                          : BolFolder(std::move(file.triple));
  } else if (!family_name.empty()) {
    const Family family = family_from_string(family_name);
    if (family != Family::F27 && !n) {
      throw Error(ErrorCode::InvalidParameter, "--n is required for family " + family_name);
    }
    folder.emplace(catalog_entry(family, n.value_or(0)).triple);
  } else {
    throw Error(ErrorCode::InvalidParameter, "give --family or --in");
  }
  const FolderReport report = verify_folder(*folder, level);
  Json json = folder_report_to_json(report);
  json["level"] = level_name;
  emit(json.dump(2) + "\n", out);
  return report.passed() ? kExitOk : kExitProperty;
}

int cmd_export(const std::string& input, const std::string& format, const std::string& out) {
  const LoopFile file = load_loop(input);
  if (format == "csv") {
    emit(loop_to_csv(file.loop), out);
  } else {
    emit(loop_to_json_text(file.loop, file.meta), out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bol loops from exact factorizations"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "List the built-in factorizations");
  std::string catalog_action = "list";
  catalog->add_option("action", catalog_action, "only 'list'")->check(CLI::IsMember({"list"}));

  auto* build = app.add_subcommand("build", "Build the loop of a catalog factorization");
  std::string family;
  std::optional<unsigned> n;
  std::string out;
  unsigned threads = default_threads();
  build->add_option("--family", family, "sym, psl-singer or f27")->required();
  build->add_option("--n", n, "family parameter");
  build->add_option("--out", out, "output loop file (default stdout)");
  build->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* analyze_cmd = app.add_subcommand("analyze", "Check properties of a loop file");
  AnalyzeArgs a;
  analyze_cmd->add_option("input", a.input, "loop file (.json or .csv)")->required();
  analyze_cmd->add_option("--checks", a.checks, "comma separated check names");
  analyze_cmd->add_option("--assert", a.assertions, "comma separated key=value pairs");
  analyze_cmd->add_option("--exhaustive-limit", a.exhaustive_limit,
                          "largest n^3 checked exhaustively");
  analyze_cmd->add_flag("--force-exhaustive", a.force_exhaustive);
  analyze_cmd->add_option("--samples", a.samples)->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--seed", a.seed);
  analyze_cmd->add_option("--threads", a.threads)->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--out", a.out, "report file (default stdout)");

  auto* verify = app.add_subcommand("verify-folder", "Check the folder axioms");
  std::string fixture;
  std::string level = "basic";
  verify->add_option("--family", family);
  verify->add_option("--n", n);
  verify->add_option("--in", fixture, "factorization file, optionally with a section S");
  verify->add_option("--level", level, "basic or conjugates");
  verify->add_option("--out", out);

  auto* export_cmd = app.add_subcommand("export", "Convert a loop file");
  std::string input;
  std::string format = "csv";
  export_cmd->add_option("input", input)->required();
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  export_cmd->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*catalog) return cmd_catalog();
    if (*build) return cmd_build(family, n, out, threads);
    if (*analyze_cmd) return cmd_analyze(a);
    if (*verify) return cmd_verify_folder(family, n, fixture, level, out);
    if (*export_cmd) return cmd_export(input, format, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Io ? kExitIo : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
