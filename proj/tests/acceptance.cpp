// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "bolloop/catalog.hpp"
#include "bolloop/congruence.hpp"
#include "bolloop/construct.hpp"
#include "bolloop/error.hpp"
#include "bolloop/identities.hpp"
#include "bolloop/isotopy.hpp"
#include "oracles.hpp"

using namespace bolloop;

namespace {

struct Outcome {
  bool ok = true;
  std::string failure;
  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      failure = what;
    }
  }
};

Permutation cyc(const char* c, std::size_t n = 4) { return Permutation::from_cycles(c, n); }

std::optional<ErrorCode> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

void ac1(Outcome& o) {
  const CayleyLoop q = build_loop(sym_triple(4).triple);
  o.expect(q.order() == 24, "order 24");
  const auto bol = check_left_bol(q);
  o.expect(bol.holds && bol.mode == CheckMode::Exhaustive && bol.triples_checked == 13824,
           "left Bol exhaustive over 13824 triples");
  const auto m = check_moufang(q);
  o.expect(!m.holds && m.witness.has_value(), "Moufang fails with a witness");
  o.expect(is_simple(q), "simple");
  o.expect(!is_solvable_loop(q), "not solvable");
  o.expect(q_prime_is_q(q), "Q' = Q");
}

void ac2(Outcome& o) {
  const auto t = sym_triple(4).triple;
  const CayleyLoop q = build_loop(t);
  const auto gens = lmlt_generators(q);
  o.expect(group_order_schreier(gens) == 288, "|Lmlt| = 288");
  o.expect(is_solvable_group(gens), "Lmlt solvable");
  o.expect(predicted_lmlt_order(t) == 288, "predicted 24 * 12 = 288");
}

void ac3(Outcome& o) {
  for (const auto& t : {sym_triple(4).triple, psl_singer_triple(3).triple}) {
    std::size_t agree = 0;
    for (const auto& x : t.group().elements())
      for (const auto& y : t.group().elements())
        if (loop_product(t, x, y) == oracle::coset_product(t, x, y)) ++agree;
    const std::size_t n = t.group().order();
    o.expect(agree == n * n, "all |X|^2 products match for |X| = " + std::to_string(n));
  }
}

void ac4(Outcome& o) {
  const auto t = sym_triple(4).triple;
  const FolderReport r = verify_folder(BolFolder(t), FolderLevel::Conjugates);
  o.expect(r.passed() && r.identity_in_section.status == CheckStatus::Passed &&
               r.closed_under_sts.status == CheckStatus::Passed &&
               r.transversal_to_h.status == CheckStatus::Passed &&
               r.transversal_to_conjugates.status == CheckStatus::Passed,
           "folder axioms at conjugates level");
  std::vector<PairElement> section;
  for (const auto& x : t.group().elements()) {
    section.push_back({x, x == cyc("(0 1)") ? cyc("(0 3)") : inverse(x)});
  }
  const FolderReport bad = verify_folder(BolFolder(t, section), FolderLevel::Conjugates);
  o.expect(!bad.passed() && bad.transversal_to_h.status == CheckStatus::Failed &&
               !bad.transversal_to_h.detail.empty(),
           "tampered section fails with a witness");
}

void ac5(Outcome& o) {
  const auto e = psl_singer_triple(3);
  const CayleyLoop q = build_loop(e.triple);
  o.expect(q.order() == 168, "order 168");
  const auto bol = check_left_bol(q);
  o.expect(bol.holds && bol.mode == CheckMode::Exhaustive, "left Bol exhaustive");
  o.expect(!check_moufang(q).holds, "not Moufang");
  o.expect(is_simple(q), "simple");
  const auto c = check_simplicity_criterion(e.triple, e.socle_gens);
  o.expect(c.applies && c.verdict, "simplicity criterion applies and holds");
}

void ac6(Outcome& o) {
  const auto e = sym_triple(6);
  const CayleyLoop q = build_loop(e.triple);
  o.expect(q.order() == 720, "order 720");
  const auto c = check_simplicity_criterion(e.triple, e.socle_gens);
  o.expect(c.applies && c.verdict, "criterion with socle A6");
  o.expect(is_simple(q), "congruence method confirms simplicity");
  const auto bol = check_left_bol(q);
  o.expect(bol.holds && bol.mode == CheckMode::Exhaustive && bol.triples_checked == 720ull * 720 * 720,
           "left Bol exhaustive");
}

void ac7(Outcome& o) {
  const auto e = f27_triple();
  const CayleyLoop q = build_loop(e.triple);
  o.expect(q.order() == 1053 && q.order() % 2 == 1 && 81 * 13 == 1053, "odd order 1053");
  o.expect(check_nonsolvability_condition(e.triple).holds, "X'Y0 = X''Y1 = X");
  o.expect(q_prime_is_q(q), "Q' = Q");
  o.expect(is_simple(q), "simple over all 1052 seeds");
  o.expect(!check_moufang(q).holds, "not Moufang");
  const auto t0 = std::chrono::steady_clock::now();
  const auto sampled = check_left_bol(q);
  const double sampled_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(sampled.holds && sampled.mode == CheckMode::Sampled && sampled.triples_checked == 1000000,
           "left Bol on 10^6 sampled triples by default");
  o.expect(sampled_s < 60, "sampled path under 1 min");
  CheckOptions force;
  force.force_exhaustive = true;
  const auto t1 = std::chrono::steady_clock::now();
  const auto full = check_left_bol(q, force);
  const double full_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
  o.expect(full.holds && full.mode == CheckMode::Exhaustive && full.triples_checked == 1053ull * 1053 * 1053,
           "left Bol exhaustive under force");
  o.expect(full_s < 1800, "exhaustive path under 30 min");
}

void ac8(Outcome& o) {
  o.expect(check_gloop_witness(sym_triple(4).triple), "witness for sym n=4");
  o.expect(check_gloop_witness(psl_singer_triple(3).triple), "witness for psl-singer n=3");
  const CayleyLoop q = build_loop(sym_triple(4).triple);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<Element> pick(0, 23);
  for (int i = 0; i < 20; ++i) {
    const Element a = pick(rng);
    const Element b = pick(rng);
    o.expect(loops_isomorphic(q, principal_isotope(q, a, b)).has_value(),
             "isotope (" + std::to_string(a) + ", " + std::to_string(b) + ") isomorphic");
  }
}

void ac9(Outcome& o) {
  const auto s4 = [] { return generate({cyc("(0 1)"), cyc("(0 1 2 3)")}); };
  const auto s3 = [] { return generate({cyc("(0 1)"), cyc("(0 1 2)")}); };
  const auto a4 = [] { return generate({cyc("(0 1 2)"), cyc("(1 2 3)")}); };
  o.expect(error_of([&] { validate(s4(), generate({cyc("(0 1)")}), s3()); }) == ErrorCode::NotExact,
           "(S4, <(0 1)>, S3) is NotExact");
  o.expect(error_of([&] { validate(s4(), generate({cyc("(0 1)")}), a4()); }) == ErrorCode::NotFaithful,
           "(S4, <(0 1)>, A4) is NotFaithful");
  o.expect(!check_nonsolvability_condition(sym_triple(5).triple).holds,
           "sym n=5 fails the nonsolvability condition");
}

void ac10(Outcome& o) {
  const FiniteGroup z6 = generate({Permutation::from_cycles("(0 1 2 3 4 5)", 6)});
  const FiniteGroup s3 = generate({Permutation::from_cycles("(0 1)", 3), Permutation::from_cycles("(0 1 2)", 3)});
  const FiniteGroup s4 = generate({cyc("(0 1)"), cyc("(0 1 2 3)")});
  for (const auto* g : {&z6, &s3, &s4}) {
    const CayleyLoop q = group_table(*g);
    const std::string name = "group of order " + std::to_string(g->order());
    o.expect(check_left_bol(q).holds && check_right_bol(q).holds && check_moufang(q).holds,
             name + " satisfies all identities");
    o.expect(group_order_schreier(lmlt_generators(q)) == g->order(), name + " has |Lmlt| = n");
    std::vector<std::size_t> orders;
    for (const auto& k : all_normal_subloops(q)) orders.push_back(k.order());
    o.expect(orders == oracle::normal_subgroup_orders(oracle::as_set(*g)),
             name + " normal subloops match normal subgroups");
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  void (*run)(Outcome&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "order-24 loop: Bol, not Moufang, simple, nonsolvable, Q' = Q", 1, ac1},
      {2, "Lmlt of the order-24 loop has order 288 and is solvable", 1, ac2},
      {3, "closed-form product equals the coset oracle (sym 4, psl-singer 3)", 30, ac3},
      {4, "folder axioms for sym 4; tampered section rejected", 10, ac4},
      {5, "psl-singer 3: order 168, Bol, not Moufang, simple, criterion", 30, ac5},
      {6, "sym 6: order 720, criterion with A6, simple, Bol exhaustive", 300, ac6},
      {7, "f27: odd order 1053, nonsolvable, simple, Bol, not Moufang", 1860, ac7},
      {8, "G-loop witness and isotopes of the order-24 loop", 120, ac8},
      {9, "negative controls", 10, ac9},
      {10, "group tables: identities, Lmlt order, normal subloops", 10, ac10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(s < c.limit_s, "runtime limit " + std::to_string(c.limit_s) + " s");
    std::printf("AC%-2d %s  %s (%.2f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, s,
                o.ok ? "" : " -- ", o.failure.c_str());
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu acceptance criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
