#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gliderrep/error.hpp"
#include "gliderrep/registry.hpp"
#include "gliderrep/rep.hpp"

using namespace glrep;

namespace {

std::vector<long> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

CycNumber chr(const Representation& r, long g) {
  return r.character().at_element(g);
}

}  // namespace

TEST_CASE("linear characters of cyclic groups") {
  auto c4 = cyclic_group(4);
  auto lins = linear_characters(c4);
  REQUIRE(lins.size() == 4);
  for (long k = 0; k < 4; ++k)
    for (long x = 0; x < 4; ++x)
      CHECK(lins[k].matrix(x).at(0, 0) == CycNumber::zeta(4, (k * x) % 4));
}

TEST_CASE("quaternion linear characters match the classical four") {
  auto q8 = named_group("Q8");
  auto lins = linear_characters(q8);
  REQUIRE(lins.size() == 4);
  long i = q8->element_by_name("i"), j = q8->element_by_name("j");
  CycNumber one(1), neg(-1);
  // T1 trivial; T2: i -> -1, j -> 1; T3: i -> 1, j -> -1; T4: both -> -1.
  CHECK(chr(lins[0], i) == one);
  CHECK(chr(lins[0], j) == one);
  CHECK(chr(lins[1], i) == neg);
  CHECK(chr(lins[1], j) == one);
  CHECK(chr(lins[2], i) == one);
  CHECK(chr(lins[2], j) == neg);
  CHECK(chr(lins[3], i) == neg);
  CHECK(chr(lins[3], j) == neg);
}

TEST_CASE("abelian bases") {
  auto c6 = cyclic_group(6);
  auto b6 = abelian_basis(c6);
  REQUIRE(b6.orders == std::vector<long>{6});
  CHECK(b6.gens == std::vector<long>{1});

  auto v4 = named_group("V4");
  auto bv = abelian_basis(v4);
  CHECK(bv.orders == std::vector<long>{2, 2});

  auto a = named_group("C4xC2");
  auto ba = abelian_basis(a);
  CHECK(ba.orders == std::vector<long>{4, 2});

  CHECK_THROWS_AS(abelian_basis(named_group("D8")), Error);
}

TEST_CASE("induction from the halving subgroup of C4") {
  auto c4 = cyclic_group(4);
  auto h = subgroup_group(c4, {0, 2}, "C2");
  auto ind = induce(Representation::trivial(h.group), h, c4);
  CHECK(ind.degree() == 2);
  CHECK(chr(ind, 0) == CycNumber(2));
  CHECK(chr(ind, 1) == CycNumber(0));
  CHECK(chr(ind, 2) == CycNumber(2));
  CHECK(chr(ind, 3) == CycNumber(0));
  CHECK_FALSE(ind.is_irreducible());  // trivial + sign-squared character
}

TEST_CASE("the two-dimensional quaternion representation") {
  auto q8 = named_group("Q8");
  auto zj = subgroup_group(q8, {0, 2, 4, 6}, "Z4j");
  // faithful character j -> zeta_4 of <j>
  auto lins = linear_characters(zj.group);
  long faithful = -1;
  for (size_t k = 0; k < lins.size(); ++k)
    if (chr(lins[k], zj.from_parent[4]) == CycNumber::zeta(4)) faithful = (long)k;
  REQUIRE(faithful >= 0);
  auto u = induce(lins[faithful], zj, q8);
  CHECK(u.degree() == 2);
  CHECK(u.is_irreducible());
  CHECK(chr(u, 0) == CycNumber(2));
  CHECK(chr(u, 2) == CycNumber(-2));
  for (long g : {1, 3, 4, 5, 6, 7}) CHECK(chr(u, g) == CycNumber(0));
  // -1 is central of order two, so it acts as the scalar -1.
  CHECK(u.matrix(2) == CycMatrix::identity(2).scaled(CycNumber(-1)));

  // Restriction recovers the two faithful linear characters of <j> once each,
  // and the nontrivial character of the center twice.
  auto mult_zj = restriction_multiplicities(u, zj);
  std::vector<long> expect_zj{0, 1, 0, 1};
  CHECK(mult_zj == expect_zj);
  auto z2 = subgroup_group(q8, {0, 2}, "Z2");
  auto mult_z2 = restriction_multiplicities(u, z2);
  std::vector<long> expect_z2{0, 2};
  CHECK(mult_z2 == expect_z2);
}

TEST_CASE("character tables of the key groups") {
  auto check_table = [](const char* name, std::vector<long> degrees) {
    auto g = named_group(name);
    const auto& t = character_table(g);
    CHECK(sorted_degrees(t) == degrees);
    long sum = 0;
    for (long d : t.degrees()) sum += d * d;
    CHECK(sum == g->order());
    // row orthogonality
    for (size_t a = 0; a < t.irreps.size(); ++a)
      for (size_t b = 0; b < t.irreps.size(); ++b)
        CHECK(inner_product(t.irreps[a].character(), t.irreps[b].character()) ==
              Rat(a == b ? 1 : 0));
    for (const auto& r : t.irreps) CHECK(r.is_irreducible());
  };
  check_table("Q8", {1, 1, 1, 1, 2});
  check_table("D8", {1, 1, 1, 1, 2});
  check_table("D6", {1, 1, 2});
  check_table("A4", {1, 1, 1, 3});
  check_table("Dic12", {1, 1, 1, 1, 2, 2});
  check_table("C12", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  check_table("He3", {1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3});
  check_table("M16", {1, 1, 1, 1, 1, 1, 1, 1, 2, 2});
  check_table("SD16", {1, 1, 1, 1, 2, 2, 2});
  check_table("Q8xC3", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2});
}

TEST_CASE("table ordering is linear-first then by degree") {
  auto q8 = named_group("Q8");
  const auto& t = character_table(q8);
  REQUIRE(t.degrees() == std::vector<long>{1, 1, 1, 1, 2});
  auto lins = linear_characters(q8);
  for (size_t k = 0; k < lins.size(); ++k)
    CHECK(t.irreps[k].character() == lins[k].character());
  CHECK(t.irreps[4].label() == "chi5");
  CHECK(t.index_of(lins[2].character()) == 2);
}

TEST_CASE("restriction conserves degree across subgroups") {
  for (const char* name : {"Q8", "D8", "A4"}) {
    auto g = named_group(name);
    const auto& t = character_table(g);
    for (const auto& elems : all_subgroups(*g)) {
      auto h = subgroup_group(g, elems, "H");
      const auto& ht = character_table(h.group);
      for (const auto& irr : t.irreps) {
        auto mult = restriction_multiplicities(irr, h);
        long total = 0;
        for (size_t k = 0; k < mult.size(); ++k)
          total += mult[k] * ht.irreps[k].degree();
        CHECK(total == irr.degree());
      }
    }
  }
}

TEST_CASE("induced character formula matches the matrix construction") {
  auto d8 = named_group("D8");
  for (const auto& elems : all_subgroups(*d8)) {
    if ((long)elems.size() == d8->order()) continue;
    auto h = subgroup_group(d8, elems, "H");
    for (const auto& lin : linear_characters(h.group)) {
      auto by_formula = induced_character(lin.character(), h, d8);
      auto by_matrices = induce(lin, h, d8).character();
      CHECK(by_formula == by_matrices);
    }
  }
}

TEST_CASE("frobenius reciprocity") {
  auto q8 = named_group("Q8");
  const auto& tg = character_table(q8);
  for (const auto& elems : all_subgroups(*q8)) {
    if ((long)elems.size() == q8->order()) continue;
    auto h = subgroup_group(q8, elems, "H");
    const auto& th = character_table(h.group);
    for (const auto& chi : th.irreps)
      for (const auto& psi : tg.irreps) {
        Rat lhs = inner_product(induced_character(chi.character(), h, q8),
                                psi.character());
        auto res_mult = restriction_multiplicities(psi, h);
        Rat rhs = res_mult[character_table(h.group).index_of(chi.character())];
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("conjugate characters and inertia") {
  auto q8 = named_group("Q8");
  auto zj = subgroup_group(q8, {0, 2, 4, 6}, "Z4j");
  const auto& t = character_table(zj.group);
  long f1 = -1, f2 = -1;
  for (size_t k = 0; k < t.irreps.size(); ++k) {
    CycNumber v = t.irreps[k].character().at_element(zj.from_parent[4]);
    if (v == CycNumber::zeta(4)) f1 = (long)k;
    if (v == CycNumber::zeta(4, 3)) f2 = (long)k;
  }
  REQUIRE(f1 >= 0);
  REQUIRE(f2 >= 0);
  const auto& chi = t.irreps[f1].character();
  // conjugation by i inverts j, swapping the faithful pair
  CHECK(conjugate_character(chi, zj, 1) == t.irreps[f2].character());
  // conjugation by members or central elements fixes
  CHECK(conjugate_character(chi, zj, 4) == chi);
  CHECK(conjugate_character(chi, zj, 2) == chi);
  CHECK(inertia_group(chi, zj) == std::vector<long>{0, 2, 4, 6});
  CHECK(inertia_group(t.irreps[0].character(), zj) ==
        std::vector<long>{0, 1, 2, 3, 4, 5, 6, 7});

  // non-normal subgroup: conjugation is rejected
  auto d8 = named_group("D8");
  auto s = subgroup_group(d8, {0, 4}, "refl");
  CHECK_THROWS_AS(
      conjugate_character(character_table(s.group).irreps[0].character(), s, 1),
      Error);
}

TEST_CASE("non-monomial group is reported unsupported") {
  // Binary tetrahedral group: Q8 extended by a three-cycle of i, j, k. Its
  // two-dimensional representations are not induced from linear characters
  // (there is no index-two subgroup), so the table search must fail cleanly.
  auto q8 = named_group("Q8");
  std::vector<long> phi{0, 4, 2, 6, 5, 1, 7, 3};  // i->j->k->i
  long n = 24;
  auto id = [](long q, long c) { return q * 3 + c; };
  std::vector<long> table(n * n);
  for (long q1 = 0; q1 < 8; ++q1)
    for (long c1 = 0; c1 < 3; ++c1)
      for (long q2 = 0; q2 < 8; ++q2)
        for (long c2 = 0; c2 < 3; ++c2) {
          long image = q2;
          for (long k = 0; k < c1; ++k) image = phi[image];
          table[id(q1, c1) * n + id(q2, c2)] =
              id(q8->mul(q1, image), (c1 + c2) % 3);
        }
  auto sl23 = FiniteGroup::from_table("SL23", table);
  CHECK(sl23->order() == 24);
  CHECK_FALSE(sl23->is_nilpotent());
  try {
    character_table(sl23);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
}

TEST_CASE("tensor tables for direct products agree with the search") {
  auto direct = named_group("Q8xC3");
  REQUIRE(direct->product_left() != nullptr);
  const auto& tensor = character_table(direct);
  // Same group assembled through a validated flat table: no product
  // structure, so the monomial search runs; the character multisets and the
  // linear block must agree.
  std::vector<long> flat(direct->order() * direct->order());
  for (long a = 0; a < direct->order(); ++a)
    for (long b = 0; b < direct->order(); ++b)
      flat[a * direct->order() + b] = direct->mul(a, b);
  auto searched_group = FiniteGroup::from_table("Q8xC3_flat", flat);
  const auto& searched = character_table(searched_group);
  REQUIRE(tensor.irreps.size() == searched.irreps.size());
  for (size_t k = 0; k < tensor.irreps.size(); ++k) {
    CHECK(tensor.irreps[k].character().values() ==
          searched.irreps[k].character().values());
  }
}
