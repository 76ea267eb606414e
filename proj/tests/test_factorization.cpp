#include <doctest.h>

#include <set>

#include "bolloop/catalog.hpp"
#include "bolloop/error.hpp"
#include "bolloop/factorization.hpp"
#include "oracles.hpp"

using namespace bolloop;

namespace {

Permutation cyc(const char* c, std::size_t n = 4) { return Permutation::from_cycles(c, n); }

FiniteGroup s4() { return generate({cyc("(0 1)"), cyc("(0 1 2 3)")}); }
FiniteGroup s3() { return generate({cyc("(0 1)"), cyc("(0 1 2)")}); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::MalformedInput;
}

}  // namespace

TEST_CASE("validate") {
  const auto t = validate(s4(), generate({cyc("(0 1 2 3)")}), s3());
  CHECK(t.faithful());
  CHECK(t.group().order() == 24);

  CHECK(code_of([] { validate(s4(), generate({cyc("(0 1)")}), s3()); }) == ErrorCode::NotExact);
  const FiniteGroup a4 = generate({cyc("(0 1 2)"), cyc("(1 2 3)")});
  CHECK(code_of([&] { validate(s4(), generate({cyc("(0 1)")}), a4); }) == ErrorCode::NotFaithful);
  const auto unfaithful = validate(s4(), generate({cyc("(0 1)")}), a4, true);
  CHECK_FALSE(unfaithful.faithful());

  const FiniteGroup c5 = generate({Permutation::from_cycles("(0 1 2 3 4)", 5)});
  CHECK(code_of([&] { validate(s4(), c5, s3()); }) == ErrorCode::DegreeMismatch);
  // <(0 1 2 3)> in a group that does not contain it
  const FiniteGroup d = generate({cyc("(0 1)"), cyc("(2 3)")});
  CHECK(code_of([&] { validate(d, generate({cyc("(0 1 2 3)")}), s3()); }) == ErrorCode::NotSubgroup);
}

TEST_CASE("decompose") {
  const auto t = validate(s4(), generate({cyc("(0 1 2 3)")}), s3());
  const Permutation one = Permutation::identity(4);
  CHECK(t.decompose(one) == std::pair{one, one});
  CHECK(t.decompose(cyc("(0 1 2 3)")) == std::pair{cyc("(0 1 2 3)"), one});
  CHECK(t.decompose(cyc("(0 1)")) == std::pair{one, cyc("(0 1)")});

  // exhaustive search over Y0 x Y1
  for (const auto& z : t.group().elements()) {
    int hits = 0;
    for (const auto& y0 : t.factor0().elements())
      for (const auto& y1 : t.factor1().elements())
        if (y0 * y1 == z) {
          ++hits;
          CHECK(t.decompose(z) == std::pair{y0, y1});
        }
    CHECK(hits == 1);
  }

  const auto other = validate(generate({Permutation::from_cycles("(0 1)", 5)}),
                              generate({Permutation::from_cycles("(0 1)", 5)}),
                              generate(std::vector<Permutation>{Permutation::identity(5)}), true);
  CHECK(code_of([&] { t.decompose(Permutation::from_cycles("(0 1)", 5)); }) == ErrorCode::NotInGroup);
  CHECK(code_of([&] { other.decompose(Permutation::from_cycles("(0 1 2)", 5)); }) ==
        ErrorCode::NotInGroup);
}

TEST_CASE("decomposition is a bijection for catalog triples") {
  std::vector<ExactFactorizationTriple> triples;
  for (unsigned n = 4; n <= 6; ++n) triples.push_back(sym_triple(n).triple);
  triples.push_back(psl_singer_triple(3).triple);
  triples.push_back(f27_triple().triple);
  for (const auto& t : triples) {
    CHECK(t.faithful());
    std::set<oracle::Images> products;
    for (const auto& y0 : t.factor0().elements())
      for (const auto& y1 : t.factor1().elements()) products.insert(oracle::images(y0 * y1));
    CHECK(products == oracle::as_set(t.group()));
    for (const auto& z : t.group().elements()) {
      const auto [y0, y1] = t.decompose(z);
      REQUIRE(y0 * y1 == z);
      CHECK(t.factor0().contains(y0));
      CHECK(t.factor1().contains(y1));
    }
    CHECK(acts_regularly_on_cosets(t));
    CHECK(oracle::core(oracle::as_set(t.group()), oracle::as_set(t.factor0())).size() == 1);
    CHECK(oracle::core(oracle::as_set(t.group()), oracle::as_set(t.factor1())).size() == 1);
  }
}

TEST_CASE("sym n = 3 is exact but not faithful") {
  CHECK(code_of([] { sym_triple(3); }) == ErrorCode::NotFaithful);
  const auto gens = catalog_generators(Family::Sym, 3);
  const auto t = validate(generate(gens.group), generate(gens.factor0), generate(gens.factor1), true);
  CHECK_FALSE(t.faithful());
}

TEST_CASE("factors swapped") {
  const auto t = validate(s4(), s3(), generate({cyc("(0 1 2 3)")}));
  CHECK(acts_regularly_on_cosets(t));
}
