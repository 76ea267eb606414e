#include "bolloop/catalog.hpp"

#include <algorithm>
#include <set>

#include "bolloop/error.hpp"
#include "bolloop/f27.hpp"
#include "bolloop/gf2.hpp"

namespace bolloop {

std::string to_string(Family family) {
  switch (family) {
    case Family::Sym: return "sym";
    case Family::PslSinger: return "psl-singer";
    case Family::F27: return "f27";
  }
  return "sym";
}

Family family_from_string(const std::string& name) {
  if (name == "sym") return Family::Sym;
  if (name == "psl-singer") return Family::PslSinger;
  if (name == "f27") return Family::F27;
  throw Error(ErrorCode::InvalidParameter, "unknown family '" + name + "'");
}

namespace {

Permutation cycle_on(std::size_t degree, Point length) {
  std::vector<Point> cycle(length);
  for (Point i = 0; i < length; ++i) cycle[i] = i;
  return Permutation::from_cycles({cycle}, degree);
}

CatalogGenerators sym_generators(unsigned n) {
  if (n < 3) {
    throw Error(ErrorCode::InvalidParameter, "sym family needs n >= 3, got " + std::to_string(n));
  }
  const Permutation swap01 = Permutation::from_cycles({{0, 1}}, n);
  return {{swap01, cycle_on(n, n)}, {cycle_on(n, n)}, {swap01, cycle_on(n, n - 1)}};
}

ExpectedProperties sym_expected(unsigned n, std::uint64_t order) {
  ExpectedProperties e{order, std::nullopt, std::nullopt, ""};
  if (n % 2 == 1) {
    e.notes = "odd n: the n-cycle is even, so X'Y0 != X and the simplicity criterion fails";
  } else if (n == 4) {
    e.simple = true;
    e.proper = true;
    e.notes = "nonsolvable; Lmlt solvable of order 288";
  } else {
    e.simple = true;
    e.proper = true;
    e.notes = "simple by the socle criterion (A_n)";
  }
  return e;
}

// z -> m z^(3^k) + b on the index domain of F_27
Permutation affine_map(F27Element m, unsigned k, F27Element b) {
  std::vector<Point> images(F27Element::kFieldSize);
  for (unsigned z = 0; z < F27Element::kFieldSize; ++z) {
    images[z] = f27_add(f27_mul(m, frobenius(F27Element(z), k)), b).index();
  }
  return Permutation(std::move(images));
}

F27Element square_generator() {
  for (F27Element s : f27_squares()) {
    if (f27_multiplicative_order(s) == 13) return s;
  }
  throw std::logic_error("F27 has no square of order 13");
}

}  // namespace

std::vector<Permutation> canonical_generators(const FiniteGroup& group) {
  const FiniteGroup g = group.materialize();
  std::vector<Permutation> out;
  StabilizerChain chain(g.degree());
  for (const auto& e : g.elements()) {
    if (chain.add_generator(e)) out.push_back(e);
  }
  return out;
}

F27Groups f27_groups() {
  const F27Element one = F27Element::one();
  const F27Element zero = F27Element::zero();
  const Permutation scale = affine_map(square_generator(), 0, zero);
  const Permutation frob = affine_map(one, 1, zero);
  std::vector<Permutation> shifts;
  for (unsigned basis : {1u, 3u, 9u}) shifts.push_back(affine_map(one, 0, F27Element(basis)));

  std::vector<Permutation> x_gens{scale, frob, shifts[0]};
  std::vector<Permutation> u_gens = shifts;
  u_gens.push_back(frob);

  FiniteGroup x = generate(x_gens);
  FiniteGroup sylow = generate(u_gens);
  FiniteGroup translations = generate(shifts);
  FiniteGroup stabilizer = generate({scale, frob});

  // Order-27 subgroups of U all contain its Frattini subgroup, generated by
  // commutators and cubes; each is <Frattini, g, h> for some g, h in U.
  std::vector<Permutation> frattini;
  for (const auto& a : sylow.elements()) {
    frattini.push_back(a * a * a);
    for (const auto& b : sylow.elements()) frattini.push_back(commutator(a, b));
  }
  frattini = reduce_generators(frattini);

  std::optional<std::vector<Permutation>> best;
  std::set<std::vector<Permutation>> seen;
  const auto& u = sylow.elements();
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i; j < u.size(); ++j) {
      std::vector<Permutation> gens = frattini;
      gens.push_back(u[i]);
      gens.push_back(u[j]);
      if (group_order_schreier(gens) != 27) continue;
      FiniteGroup candidate = generate(gens);
      if (!seen.insert(candidate.elements()).second) continue;
      if (candidate.elements() == translations.elements()) continue;
      if (!is_transitive(candidate.generators(), F27Element::kFieldSize)) continue;
      auto canon = canonical_generators(candidate);
      if (!best || canon < *best) best = std::move(canon);
    }
  }
  if (!best) throw std::logic_error("no regular order-27 subgroup of U besides X''");
  FiniteGroup factor0 = generate(*best);
  return {std::move(x), std::move(sylow), std::move(translations), std::move(factor0),
          std::move(stabilizer)};
}

CatalogGenerators catalog_generators(Family family, unsigned n) {
  switch (family) {
    case Family::Sym:
      return sym_generators(n);
    case Family::PslSinger: {
      const GF2Matrix singer = gl2_singer_generator(n);
      CatalogGenerators out;
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
          if (i == j) continue;
          Permutation t = GF2Matrix::transvection(n, i, j).as_permutation();
          out.group.push_back(t);
          if (j != 0) out.factor1.push_back(t);
        }
      }
      out.factor0.push_back(singer.as_permutation());
      return out;
    }
    case Family::F27: {
      const F27Groups g = f27_groups();
      return {g.group.generators(), g.factor0.generators(), g.factor1.generators()};
    }
  }
  throw Error(ErrorCode::InvalidParameter, "unknown family");
}

CatalogEntry sym_triple(unsigned n) {
  auto gens = sym_generators(n);
  auto triple = validate(generate(gens.group), generate(gens.factor0), generate(gens.factor1));
  std::vector<Permutation> socle;
  if (n >= 5) {
    for (Point k = 2; k < n; ++k) socle.push_back(Permutation::from_cycles({{0, 1, k}}, n));
  }
  const std::uint64_t order = triple.group().order();
  return {Family::Sym, n, std::move(triple), std::move(socle), sym_expected(n, order)};
}

CatalogEntry psl_singer_triple(unsigned n) {
  GL2Action action = gl2_as_permutation_group(n);
  auto triple = validate(action.group, action.singer, action.stabilizer);
  std::vector<Permutation> socle = triple.group().generators();
  const std::uint64_t order = triple.group().order();
  return {Family::PslSinger, n, std::move(triple), std::move(socle),
          {order, true, true, "X = GL(n,2) is simple; socle criterion applies"}};
}

CatalogEntry f27_triple() {
  F27Groups g = f27_groups();
  auto triple = validate(std::move(g.group), std::move(g.factor0), std::move(g.factor1));
  return {Family::F27, 0, std::move(triple), {},
          {1053, true, true, "odd order 3^4 * 13; X is solvable, not almost simple"}};
}

CatalogEntry catalog_entry(Family family, unsigned n) {
  switch (family) {
    case Family::Sym: return sym_triple(n);
    case Family::PslSinger: return psl_singer_triple(n);
    case Family::F27: return f27_triple();
  }
  throw Error(ErrorCode::InvalidParameter, "unknown family");
}

std::vector<CatalogRow> catalog_listing() {
  std::vector<CatalogRow> rows;
  auto add = [&](Family family, unsigned n, ExpectedProperties expected) {
    auto gens = catalog_generators(family, n);
    const auto x = from_generators(gens.group).order();
    expected.loop_order = x;
    rows.push_back({family, n, x, from_generators(gens.factor0).order(),
                    from_generators(gens.factor1).order(), std::move(expected)});
  };
  for (unsigned n = 4; n <= 7; ++n) add(Family::Sym, n, sym_expected(n, 0));
  for (unsigned n = 3; n <= 5; ++n) {
    std::string notes = n == 5 ? "|X| exceeds the element cap; listing only"
                               : "X = GL(n,2) is simple; socle criterion applies";
    add(Family::PslSinger, n, {0, true, true, notes});
  }
  add(Family::F27, 0, {0, true, true, "odd order 3^4 * 13; X is solvable, not almost simple"});
  return rows;
}

}  // namespace bolloop
