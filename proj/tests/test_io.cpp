#include <doctest.h>

#include <filesystem>

#include "bolloop/analysis.hpp"
#include "bolloop/catalog.hpp"
#include "bolloop/error.hpp"
#include "bolloop/io.hpp"

using namespace bolloop;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::Io;
}

const CayleyLoop& q4() {
  static const CayleyLoop loop = build_loop(sym_triple(4).triple);
  return loop;
}

}  // namespace

TEST_CASE("permutations and groups in JSON") {
  const Permutation p{1, 2, 0, 3};
  CHECK(permutation_to_json(p) == Json::parse("[1,2,0,3]"));
  CHECK(permutation_from_json(Json::parse("[1,2,0,3]"), 4) == p);
  CHECK(permutation_from_json(Json("(0 1 2)"), 4) == p);
  CHECK(code_of([] { permutation_from_json(Json::parse("[1,1,0]"), 3); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { permutation_from_json(Json::parse("[1,0]"), 3); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { permutation_from_json(Json::parse("[1,-1,0]"), 3); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { permutation_from_json(Json(3), 3); }) == ErrorCode::MalformedInput);

  const auto g = group_from_json(Json::parse(R"j({"degree": 4, "generators": ["(0 1)", [1,2,3,0]]})j"));
  CHECK(g.order() == 24);
  CHECK(group_from_json(group_to_json(g)).elements() == g.elements());
  CHECK(group_from_json(Json::parse(R"j({"degree": 3, "generators": []})j")).order() == 1);
  CHECK(code_of([] { group_from_json(Json::parse(R"j({"generators": []})j")); }) == ErrorCode::MalformedInput);
}

TEST_CASE("triples in JSON") {
  const auto t = sym_triple(4).triple;
  const auto back = triple_from_json(triple_to_json(t));
  CHECK(back.triple.group().elements() == t.group().elements());
  CHECK(back.triple.factor0().elements() == t.factor0().elements());
  CHECK(back.triple.faithful());
  CHECK_FALSE(back.section);

  std::vector<PairElement> s;
  for (const auto& x : t.group().elements()) s.push_back({x, inverse(x)});
  const auto with_section = triple_from_json(triple_to_json(t, &s));
  REQUIRE(with_section.section);
  CHECK(*with_section.section == s);

  const auto unfaithful = Json::parse(R"j({
    "X": {"degree": 4, "generators": ["(0 1)", "(0 1 2 3)"]},
    "Y0": {"degree": 4, "generators": ["(0 1)"]},
    "Y1": {"degree": 4, "generators": ["(0 1 2)", "(1 2 3)"]},
    "faithful": false})j");
  CHECK_FALSE(triple_from_json(unfaithful).triple.faithful());
  auto strict = unfaithful;
  strict.erase("faithful");
  CHECK(code_of([&] { triple_from_json(strict); }) == ErrorCode::NotFaithful);
}

TEST_CASE("loop files") {
  const Json meta{{"family", "sym"}, {"parameters", {{"n", 4}}}};
  const std::string text = loop_to_json_text(q4(), meta);
  const LoopFile back = loop_from_json(Json::parse(text));
  CHECK(back.loop == q4());
  CHECK(back.loop.labels() == q4().labels());
  CHECK(back.meta == meta);
  CHECK(loop_to_json_text(back.loop, back.meta) == text);

  auto broken = Json::parse(text);
  broken["table"][1][1] = broken["table"][1][2];
  CHECK(code_of([&] { loop_from_json(broken); }) == ErrorCode::NotALoop);
  auto wrong = Json::parse(text);
  wrong["order"] = 25;
  CHECK(code_of([&] { loop_from_json(wrong); }) == ErrorCode::MalformedInput);
  auto range = Json::parse(text);
  range["table"][1][1] = 24;
  CHECK(code_of([&] { loop_from_json(range); }) == ErrorCode::MalformedInput);
}

TEST_CASE("CSV") {
  const std::string csv = loop_to_csv(q4());
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 24);
  CHECK(csv.rfind("1,2,3,", 0) == 0);
  CHECK(loop_from_csv(csv) == q4());
  CHECK(loop_from_csv("1,2\r\n2,1\r\n") == cyclic_group_table(2));
  CHECK(code_of([] { loop_from_csv("1,2\n2\n"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { loop_from_csv("0,1\n1,0\n"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { loop_from_csv("1,x\n2,1\n"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { loop_from_csv("1,2\n1,2\n"); }) == ErrorCode::NotALoop);
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "bolloop_io_test";
  std::filesystem::create_directories(dir);
  write_text_file(dir / "a.txt", "hello");
  CHECK(read_text_file(dir / "a.txt") == "hello");
  CHECK(code_of([&] { read_text_file(dir / "missing.txt"); }) == ErrorCode::Io);
  CHECK(code_of([&] { write_text_file(dir / "no" / "such" / "dir.txt", "x"); }) == ErrorCode::Io);
  write_text_file(dir / "bad.json", "{not json");
  CHECK(code_of([&] { read_json_file(dir / "bad.json"); }) == ErrorCode::MalformedInput);
  std::filesystem::remove_all(dir);
}

TEST_CASE("check names") {
  CHECK(parse_checks("bol, moufang,simple") == std::set<std::string>{"bol", "moufang", "simple"});
  CHECK(parse_checks("").empty());
  CHECK(code_of([] { parse_checks("bol,nope"); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("analysis report") {
  AnalysisOptions options;
  options.checks = parse_checks("bol,rbol,moufang,simple,solvable,qprime,lmlt,mlt,gloop,folder");
  const auto t = sym_triple(4).triple;
  const AnalysisReport r = analyze(q4(), options, &t);
  CHECK(r.order == 24);
  CHECK(r.is_loop);
  CHECK_FALSE(r.is_group);
  CHECK(r.left_bol->holds);
  CHECK_FALSE(r.right_bol->holds);
  CHECK_FALSE(r.moufang->holds);
  CHECK(*r.is_simple);
  CHECK(*r.normal_subloop_orders == std::vector<std::size_t>{1, 24});
  CHECK(*r.q_prime_is_q);
  CHECK_FALSE(*r.solvable_loop);
  CHECK(*r.lmlt_order == 288);
  CHECK(*r.lmlt_solvable);
  CHECK(r.mlt_order.has_value());
  CHECK(*r.gloop);
  CHECK(r.folder->passed());

  const Json j = report_to_json(r);
  CHECK(j["schema"] == 1);
  CHECK(j["lmlt_order"] == 288);
  CHECK(j["left_bol"]["mode"] == "exhaustive");
  CHECK_FALSE(j["left_bol"].contains("witness"));
  CHECK(j["right_bol"]["witness"].size() == 3);
  CHECK(j["mlt_order"] == "310224200866619719680000");
  CHECK(report_to_json(analyze(q4(), options, &t)).dump() == j.dump());

  // checks that were not requested are absent, gated ones are null
  AnalysisOptions few;
  few.checks = parse_checks("bol,gloop,mlt");
  few.mlt_gate = 10;
  const Json k = report_to_json(analyze(q4(), few));
  CHECK_FALSE(k.contains("moufang"));
  CHECK_FALSE(k.contains("is_simple"));
  CHECK(k["gloop"].is_null());
  CHECK(k["mlt_order"].is_null());
  CHECK(k["skipped"].contains("gloop"));
  CHECK(k["skipped"].contains("mlt_order"));
}

TEST_CASE("sampled identity reports carry the seed") {
  AnalysisOptions options;
  options.checks = {"bol"};
  options.identity.exhaustive_limit = 100;
  options.identity.samples = 1000;
  options.identity.seed = 7;
  const Json j = report_to_json(analyze(q4(), options));
  CHECK(j["left_bol"]["mode"] == "sampled");
  CHECK(j["left_bol"]["seed"] == 7);
  CHECK(j["left_bol"]["samples"] == 1000);
}

TEST_CASE("assertions") {
  AnalysisOptions options;
  options.checks = parse_checks("bol,moufang,simple,lmlt");
  const AnalysisReport r = analyze(q4(), options);
  auto outcomes = evaluate_assertions(r, "simple=true,moufang=false,lmlt=288,order=24,bol=true");
  CHECK(outcomes.size() == 5);
  for (const auto& o : outcomes) CHECK(o.passed);
  outcomes = evaluate_assertions(r, "simple=false");
  CHECK_FALSE(outcomes.front().passed);
  CHECK(outcomes.front().actual == "true");
  CHECK(code_of([&] { evaluate_assertions(r, "qprime=true"); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([&] { evaluate_assertions(r, "color=red"); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([&] { evaluate_assertions(r, "simple"); }) == ErrorCode::InvalidParameter);
}
