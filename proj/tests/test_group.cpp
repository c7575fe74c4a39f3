#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "gliderrep/error.hpp"
#include "gliderrep/group.hpp"
#include "gliderrep/registry.hpp"

using namespace glrep;

namespace {

long count_of_order(const FiniteGroup& g, long k) {
  long c = 0;
  for (long x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) ++c;
  return c;
}

std::vector<long> whole(const FiniteGroup& g) {
  std::vector<long> v(g.order());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("cyclic groups") {
  auto c12 = cyclic_group(12);
  CHECK(c12->order() == 12);
  CHECK(c12->is_abelian());
  CHECK(c12->is_nilpotent());
  CHECK(c12->element_order(1) == 12);
  CHECK(c12->element_order(4) == 3);
  CHECK(all_subgroups(*c12).size() == 6);  // one per divisor
  CHECK(c12->element_by_name("g^5") == 5);
  CHECK_THROWS_AS(c12->element_by_name("nope"), Error);
}

TEST_CASE("table validation catches each defect") {
  auto c6 = cyclic_group(6);
  std::vector<long> table(36);
  for (long i = 0; i < 6; ++i)
    for (long j = 0; j < 6; ++j) table[i * 6 + j] = c6->mul(i, j);
  CHECK(FiniteGroup::from_table("C6", table)->order() == 6);

  auto bad = table;
  bad[1 * 6 + 0] = 2;  // breaks right identity (and the Latin property)
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", bad), Error);

  // Subtraction mod 6: identity and Latin hold, associativity fails.
  for (long i = 0; i < 6; ++i)
    for (long j = 0; j < 6; ++j) bad[i * 6 + j] = ((i - j) % 6 + 6) % 6;
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", bad), Error);

  CHECK_THROWS_AS(FiniteGroup::from_table("bad", {0, 1, 1, 0, 1, 0}), Error);

  // Orders beyond the validation bound are rejected up front.
  long big = 1024;
  std::vector<long> huge(big * big);
  for (long i = 0; i < big; ++i)
    for (long j = 0; j < big; ++j) huge[i * big + j] = (i + j) % big;
  try {
    FiniteGroup::from_table("huge", huge);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
}

TEST_CASE("dihedral structure") {
  auto d8 = dihedral_group(4);
  CHECK(d8->order() == 8);
  CHECK_FALSE(d8->is_abelian());
  CHECK(d8->is_nilpotent());
  CHECK(d8->center() == std::vector<long>{0, 2});
  CHECK(d8->conjugacy_classes().size() == 5);
  CHECK(d8->commutator_subgroup() == std::vector<long>{0, 2});
  CHECK(all_subgroups(*d8).size() == 10);
  CHECK(normal_subgroups(*d8).size() == 6);
  auto ab = abelianization(d8);
  CHECK(ab.group->order() == 4);
  for (long x = 0; x < 4; ++x) CHECK(ab.group->element_order(x) <= 2);

  // s r s^-1 = r^-1
  long r = d8->element_by_name("r"), s = d8->element_by_name("s");
  CHECK(d8->conjugate(s, r) == d8->inv(r));
}

TEST_CASE("quaternion structure") {
  auto q8 = dicyclic_group(2);
  CHECK(q8->name() == "Q8");
  CHECK(q8->order() == 8);
  CHECK(q8->center() == std::vector<long>{0, 2});
  CHECK(q8->element_name(2) == "-1");
  CHECK(count_of_order(*q8, 2) == 1);  // -1 is the unique involution
  CHECK(count_of_order(*q8, 4) == 6);
  CHECK(q8->conjugacy_classes().size() == 5);
  // Hamiltonian: every subgroup normal.
  auto subs = all_subgroups(*q8);
  CHECK(subs.size() == 6);
  CHECK(normal_subgroups(*q8) == subs);
  long i = q8->element_by_name("i"), j = q8->element_by_name("j");
  long k = q8->element_by_name("k");
  CHECK(q8->mul(i, j) == k);
  CHECK(q8->mul(j, i) == q8->element_by_name("-k"));
  CHECK(q8->mul(i, i) == q8->element_by_name("-1"));
}

TEST_CASE("order sixteen two-generator families are distinguished") {
  // involution counts separate D16 / SD16 / M16 / Q16
  CHECK(count_of_order(*named_group("D16"), 2) == 9);
  CHECK(count_of_order(*named_group("SD16"), 2) == 5);
  CHECK(count_of_order(*named_group("M16"), 2) == 3);
  CHECK(count_of_order(*named_group("Q16"), 2) == 1);
  for (const char* n : {"D16", "SD16", "M16", "Q16", "C4sC4"}) {
    auto g = named_group(n);
    CHECK(g->order() == 16);
    CHECK(g->is_nilpotent());
    CHECK_FALSE(g->is_abelian());
  }
}

TEST_CASE("heisenberg and modular 27") {
  auto he3 = heisenberg_group(3);
  CHECK(he3->order() == 27);
  CHECK(he3->center().size() == 3);
  CHECK(count_of_order(*he3, 3) == 26);  // exponent three
  CHECK(he3->conjugacy_classes().size() == 11);
  CHECK(he3->is_nilpotent());
  CHECK_FALSE(he3->is_abelian());

  auto m27 = named_group("M27");
  CHECK(m27->order() == 27);
  CHECK(m27->center().size() == 3);
  CHECK(count_of_order(*m27, 9) > 0);  // exponent nine
}

TEST_CASE("alternating group on four letters") {
  auto a4 = named_group("A4");
  CHECK(a4->order() == 12);
  CHECK_FALSE(a4->is_nilpotent());
  CHECK(a4->conjugacy_classes().size() == 4);
  auto normals = normal_subgroups(*a4);
  REQUIRE(normals.size() == 3);
  CHECK(normals[1].size() == 4);  // the Klein four-group
  CHECK(a4->commutator_subgroup() == normals[1]);
  auto q = quotient_group(a4, normals[1], "A4/V4");
  CHECK(q.group->order() == 3);
  CHECK(q.group->is_abelian());
  // one maximal normal chain, with a non-prime step
  auto chains = maximal_normal_chains(a4);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].levels.size() == 3);
  CHECK(chains[0].levels[1].size() == 4);
}

TEST_CASE("dicyclic twelve") {
  auto g = named_group("Dic12");
  CHECK(g->order() == 12);
  CHECK(count_of_order(*g, 2) == 1);
  CHECK(g->center().size() == 2);
  CHECK_FALSE(g->is_nilpotent());
}

TEST_CASE("direct products") {
  auto c6 = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(c6->order() == 6);
  CHECK(c6->is_abelian());
  CHECK(count_of_order(*c6, 6) == 2);  // isomorphic to C6
  auto q8c3 = named_group("Q8xC3");
  CHECK(q8c3->order() == 24);
  CHECK(q8c3->is_nilpotent());
  CHECK(q8c3->center().size() == 6);
}

TEST_CASE("cosets, subgroup groups, quotients") {
  auto q8 = named_group("Q8");
  std::vector<long> zi{0, 1, 2, 3};  // <i>
  CHECK(is_subgroup(*q8, zi));
  CHECK(is_normal(*q8, zi));
  auto reps = left_coset_reps(*q8, zi);
  CHECK(reps == std::vector<long>{0, 4});

  auto sub = subgroup_group(q8, zi, "Z4i");
  CHECK(sub.group->order() == 4);
  CHECK(count_of_order(*sub.group, 4) == 2);
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 4; ++b)
      CHECK(sub.to_parent[sub.group->mul(a, b)] ==
            q8->mul(sub.to_parent[a], sub.to_parent[b]));

  auto v4 = quotient_group(q8, {0, 2}, "Q8/Z");
  CHECK(v4.group->order() == 4);
  for (long x = 1; x < 4; ++x) CHECK(v4.group->element_order(x) == 2);
  CHECK_THROWS_AS(quotient_group(q8, {0, 1}, "bad"), Error);
  CHECK_THROWS_AS(subgroup_group(q8, {0, 1}, "bad"), Error);

  CHECK(closure(*q8, {1}) == zi);
  CHECK(closure(*q8, {1, 4}) == whole(*q8));
}

TEST_CASE("maximal normal chains") {
  auto c4 = cyclic_group(4);
  auto chains = maximal_normal_chains(c4);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].levels ==
        std::vector<std::vector<long>>{{0}, {0, 2}, {0, 1, 2, 3}});

  auto q8 = named_group("Q8");
  auto through_center = maximal_normal_chains_through(q8, q8->center());
  CHECK(through_center.size() == 3);
  for (const auto& ch : through_center) {
    REQUIRE(ch.levels.size() == 4);
    CHECK(ch.levels[1] == std::vector<long>{0, 2});
    CHECK(ch.levels[2].size() == 4);
  }
  // Q8's chains all pass through the center.
  CHECK(maximal_normal_chains(q8).size() == 3);

  auto d8 = named_group("D8");
  CHECK(maximal_normal_chains_through(d8, d8->center()).size() == 3);
  // D8 chains through a non-central order-2 subgroup do not exist: only
  // normal levels count, and <s> is not normal.
  CHECK(maximal_normal_chains_through(d8, {0, 4}).empty());

  auto v4 = named_group("V4");
  CHECK(maximal_normal_chains(v4).size() == 3);
}

TEST_CASE("registry") {
  for (const auto& name : builtin_group_catalog()) {
    auto g = named_group(name);
    CHECK(g->order() <= 64);
    CHECK(g->order() > 1);
  }
  CHECK(named_group("Q8xC2xC2")->order() == 32);
  CHECK(named_group("C2xC2xC3")->order() == 12);
  CHECK_THROWS_AS(named_group("E8"), Error);
  CHECK_THROWS_AS(named_group("Q12"), Error);
  CHECK_THROWS_AS(named_group("Cx"), Error);
  CHECK_THROWS_AS(named_group("D7"), Error);

  for (auto& g : builtin_p_groups(2, 32)) {
    CHECK((g->order() & (g->order() - 1)) == 0);
    CHECK(g->is_nilpotent());
  }
  CHECK(builtin_p_groups(2, 32).size() >= 35);
  CHECK(builtin_p_groups(3, 27).size() == 8);

  auto q8i = named_chain("q8i");
  CHECK(q8i.group->name() == "Q8");
  CHECK(q8i.length() == 3);
  for (const auto& lvl : q8i.levels) CHECK(is_normal(*q8i.group, lvl));
  auto d8v4 = named_chain("d8v4");
  for (const auto& lvl : d8v4.levels) CHECK(is_normal(*d8v4.group, lvl));
  CHECK_THROWS_AS(named_chain("q8"), Error);
}
