#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gliderrep/error.hpp"
#include "gliderrep/glider.hpp"
#include "gliderrep/registry.hpp"

using namespace glrep;

namespace {

CycVector vec(std::initializer_list<long> entries) {
  CycVector v;
  for (long e : entries) v.emplace_back(e);
  return v;
}

CycMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  CycMatrix m((long)rows.size(), (long)rows.begin()->size());
  long r = 0;
  for (const auto& row : rows) {
    long c = 0;
    for (long v : row) m.at(r, c++) = CycNumber(v);
    ++r;
  }
  return m;
}

const CycNumber& chr(const Representation& rep, long g) {
  return rep.character().at_element(g);
}

// 2-dim quaternion module in the basis where <j> acts diagonally and the
// first coordinate carries j -> zeta_4.
std::shared_ptr<const LabeledModule> quaternion_plane(const GroupPtr& q8) {
  auto zj = subgroup_group(q8, {0, 2, 4, 6}, "Z4j");
  auto lins = linear_characters(zj.group);
  long faithful = -1;
  for (size_t k = 0; k < lins.size(); ++k)
    if (chr(lins[k], zj.from_parent[q8->element_by_name("j")]) ==
        CycNumber::zeta(4))
      faithful = (long)k;
  REQUIRE(faithful >= 0);
  auto u = induce(lins[faithful], zj, q8);
  return std::make_shared<const LabeledModule>(
      q8, std::vector<std::pair<Representation, long>>{{u, 1}});
}

SubgroupGroup identity_embedding(const GroupPtr& g) {
  SubgroupGroup top;
  top.parent = g;
  top.group = g;
  top.to_parent.resize(g->order());
  for (long i = 0; i < g->order(); ++i) top.to_parent[i] = i;
  top.from_parent = top.to_parent;
  return top;
}

long count_dims(const std::vector<Glider>& gs, const std::vector<long>& dims) {
  long n = 0;
  for (const auto& g : gs) n += g.dimension_vector() == dims ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("descending ladder over the quaternion chain") {
  NormalChain ch = named_chain("q8j");
  auto q8 = ch.group;
  auto mod = quaternion_plane(q8);
  long j = q8->element_by_name("j"), i = q8->element_by_name("i");
  long m1 = q8->element_by_name("-1");

  Glider g = Glider::build(ch, mod, vec({1, 0}));
  CHECK(g.length() == 3);
  CHECK(g.essential_length() == 3);
  CHECK(g.dimension_vector() == std::vector<long>{1, 1, 1, 2});
  CHECK(g.level(0).dim() == 2);
  CHECK(g.generated_submodule().dim() == 2);
  for (long lv = 1; lv <= 3; ++lv) CHECK(g.level(lv - 1).contains(g.level(lv)));
  CHECK_THROWS_AS(g.level(4), Error);
  CHECK_THROWS_AS(g.level(-1), Error);

  const GeneralizedCharacter& chi = g.character();
  CHECK(chi.layer(0) == 0);
  CHECK(chi.layer(m1) == 1);
  CHECK(chi.layer(j) == 2);
  CHECK(chi.layer(i) == 3);

  CHECK(chi.matrix(0) ==
        from_rows({{2, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 2}}));
  CHECK(chi.trace_on_level(m1, 0) == CycNumber(-2));
  CHECK(chi.trace_on_level(m1, 1) == CycNumber(-1));
  CHECK(chi.trace_on_level(m1, 2) == CycNumber(-1));
  CHECK_THROWS_AS(chi.trace_on_level(m1, 3), Error);
  CHECK(chi.trace_on_level(j, 0).is_zero());
  CHECK(chi.trace_on_level(j, 1) == CycNumber::zeta(4));
  CHECK(chi.trace_on_level(j, 1).root_of_unity_order() == 4);
  CHECK(chi.matrix(j).at(1, 0) == CycNumber::zeta(4));
  CHECK(chi.matrix(j).at(2, 2).is_zero());  // row below j's reach stays empty
  CHECK(chi.trace_on_level(i, 0).is_zero());
  CHECK_THROWS_AS(chi.trace_on_level(i, 1), Error);

  CHECK(g.anti_diagonal());
  CHECK(g.direct_irreducible().ok);
  CHECK(largest_submodule_in_tail(g).dim() == 0);

  // fragment rule: acting by the i-th chain level pushes M_j into M_{j-i}
  for (long lv = 1; lv <= 3; ++lv)
    for (long act = 0; act <= lv; ++act)
      CHECK(g.level(lv - act).contains(
          subspace_product(g.ambient(), ch.levels[act], g.level(lv))));

  // generator off the eigenlines: middle level widens, still irreducible
  Glider h = Glider::build(ch, mod, vec({1, 1}));
  CHECK(h.dimension_vector() == std::vector<long>{1, 1, 2, 2});
  CHECK(h.anti_diagonal());
  CHECK(h.direct_irreducible().ok);

  CHECK_THROWS_AS(Glider::build(ch, mod, vec({1, 0, 0})), Error);
  auto d8 = named_group("D8");
  auto foreign = std::make_shared<const LabeledModule>(
      d8, std::vector<std::pair<Representation, long>>{
              {character_table(d8).irreps[0], 1}});
  CHECK_THROWS_AS(Glider::build(ch, foreign, vec({1})), Error);
}

TEST_CASE("length-one chains and the reflection rule") {
  auto c3 = named_group("C3");
  NormalChain ch = make_chain(c3, {{0}, {0, 1, 2}});
  auto lins = linear_characters(c3);
  REQUIRE(lins.size() == 3);

  auto irr = std::make_shared<const LabeledModule>(
      c3, std::vector<std::pair<Representation, long>>{{lins[1], 1}});
  Glider g = Glider::build(ch, irr, vec({1}));
  CHECK(g.character().matrix(0) == from_rows({{1, 0}, {1, 1}}));
  CHECK(g.anti_diagonal());
  CHECK(g.direct_irreducible().ok);

  // two copies of one character generated on the diagonal line: the ladder
  // never reaches the rest of the ambient space
  auto dbl = std::make_shared<const LabeledModule>(
      c3, std::vector<std::pair<Representation, long>>{{lins[1], 2}});
  Glider flat = Glider::build(ch, dbl, vec({1, 1}));
  CHECK(flat.character().matrix(0) == from_rows({{1, 0}, {1, 2}}));
  CHECK_FALSE(flat.anti_diagonal());
  TailCheck t = flat.direct_irreducible();
  CHECK_FALSE(t.ok);
  CHECK(t.detail.find("exceeds degree") != std::string::npos);
  // non-identity elements of a length-one chain only reach the KGa trace
  CHECK(flat.character().trace_on_level(1, 0) == chr(lins[1], 1));
  CHECK(largest_submodule_in_tail(flat).dim() == 1);

  Glider zero = Glider::build(ch, dbl, vec({0, 0}));
  CHECK(zero.essential_length() == 0);
  CHECK(zero.dimension_vector() == std::vector<long>{0, 2});
  CHECK_FALSE(zero.anti_diagonal());
  CHECK(zero.direct_irreducible().detail == "zero generator");
}

TEST_CASE("enumeration over the golden chains") {
  NormalChain q8j = named_chain("q8j");
  auto all = enumerate_gliders(q8j);
  CHECK(all.size() == 7);
  CHECK(count_dims(all, {1, 1, 1, 1}) == 4);
  CHECK(count_dims(all, {1, 1, 1, 2}) == 2);
  CHECK(count_dims(all, {1, 1, 2, 2}) == 1);
  for (size_t a = 0; a < all.size(); ++a)
    for (size_t b = a + 1; b < all.size(); ++b)
      CHECK(all[a].character() != all[b].character());

  auto planes = enumerate_gliders(q8j, std::vector<long>{1, 1, 1, 2});
  REQUIRE(planes.size() == 2);
  for (const auto& g : planes) {
    CHECK(g.anti_diagonal());
    CHECK(g.direct_irreducible().ok);
    CHECK(g.level(1).dim() == 1);  // generator sits on a <j>-eigenline
  }

  auto lines = enumerate_gliders(q8j, std::vector<long>{1, 1, 1, 1});
  CHECK(lines.size() == 4);
  for (const auto& g : lines) CHECK(g.ambient().dimension() == 1);

  CHECK(enumerate_gliders(q8j, std::vector<long>{9, 9, 9, 9}).empty());

  auto c4 = enumerate_gliders(named_chain("c4"));
  CHECK(c4.size() == 4);
  CHECK(count_dims(c4, {1, 1, 1}) == 4);
  for (const auto& g : c4) CHECK(g.ambient().components().size() == 1);
}

TEST_CASE("reflection symmetry equals module-side irreducibility") {
  std::vector<NormalChain> chains = {named_chain("q8j"), named_chain("d8v4"),
                                     named_chain("c4")};
  auto he3 = named_group("He3");
  chains.push_back(maximal_normal_chains(he3)[0]);
  for (const auto& ch : chains)
    for (const auto& g : enumerate_gliders(ch))
      CHECK(g.anti_diagonal() == g.direct_irreducible().ok);

  // negatives reached by hand-picked generators
  NormalChain ch = named_chain("q8j");
  auto mod = quaternion_plane(ch.group);
  const auto& u = mod->components()[0].first;
  auto dbl = std::make_shared<const LabeledModule>(
      ch.group, std::vector<std::pair<Representation, long>>{{u, 2}});
  Glider dependent = Glider::build(ch, dbl, vec({1, 0, 2, 0}));
  CHECK_FALSE(dependent.anti_diagonal());
  CHECK_FALSE(dependent.direct_irreducible().ok);
  Glider spread = Glider::build(ch, dbl, vec({1, 0, 0, 1}));
  CHECK(spread.anti_diagonal());
  CHECK(spread.direct_irreducible().ok);
  auto triple = std::make_shared<const LabeledModule>(
      ch.group, std::vector<std::pair<Representation, long>>{{u, 3}});
  Glider crowded = Glider::build(ch, triple, vec({1, 0, 1, 0, 1, 0}));
  CHECK_FALSE(crowded.anti_diagonal());
  CHECK_FALSE(crowded.direct_irreducible().ok);
}

TEST_CASE("level traces are constant on orbits of the acting level") {
  auto q16 = named_group("Q16");
  auto chains = maximal_normal_chains(q16);
  REQUIRE(!chains.empty());
  bool saw_nonabelian_level = false;
  for (const auto& ch : chains) {
    ChainContext ctx = make_context(ch);
    long d = ch.length();
    for (long lv = 1; lv < d; ++lv)
      saw_nonabelian_level =
          saw_nonabelian_level || !ctx.levels[lv].group->is_abelian();
    for (const auto& g : enumerate_gliders(ch)) {
      const GeneralizedCharacter& chi = g.character();
      for (long x = 0; x < q16->order(); ++x)
        for (long y = 0; y < q16->order(); ++y)
          CHECK(chi.layer(x) == chi.layer(q16->conjugate(y, x)));
      for (long m = 0; m <= d; ++m) {
        const auto& movers = ch.levels[d - m];
        for (long x = 0; x < q16->order(); ++x) {
          if (chi.layer(x) > d - m) continue;
          for (long h : movers)
            CHECK(chi.trace_on_level(q16->conjugate(h, x), m) ==
                  chi.trace_on_level(x, m));
        }
      }
    }
  }
  CHECK(saw_nonabelian_level);  // Q16 chains pass through a quaternion level
}

TEST_CASE("telling chains apart by middle-layer trace values") {
  DistinguishReport r = distinguish_chains(named_chain("q8i"), named_chain("d8v4"));
  CHECK(r.distinguishable);
  CHECK(r.witness_order == 4);
  CHECK(r.detail.find("Q8") != std::string::npos);
  CHECK(r.detail.find("D8") != std::string::npos);
  CHECK(r.detail.find("first") != std::string::npos);

  DistinguishReport twin = distinguish_chains(named_chain("q8i"), named_chain("q8j"));
  CHECK_FALSE(twin.distinguishable);
  CHECK(twin.detail.find("indistinguishable") != std::string::npos);
  CHECK(twin.witness.empty());

  DistinguishReport self = distinguish_chains(named_chain("q8j"), named_chain("q8j"));
  CHECK_FALSE(self.distinguishable);

  CHECK_THROWS_AS(distinguish_chains(named_chain("c4"), named_chain("q8i")), Error);
}

TEST_CASE("re-reading a glider over a subgroup chain") {
  NormalChain ch = named_chain("q8j");
  auto q8 = ch.group;
  auto mod = quaternion_plane(q8);
  Glider g = Glider::build(ch, mod, vec({1, 0}));

  // the identity embedding reproduces the glider
  Glider same = restrict_glider(g, ch, identity_embedding(q8));
  CHECK(same.character() == g.character());
  CHECK(same.dimension_vector() == g.dimension_vector());

  // factor chain shorter than the glider's chain
  CHECK_THROWS_AS(
      restrict_glider(g, named_chain("c4"), subgroup_group(q8, {0, 1, 2, 3}, "C4i")),
      Error);

  // same length but a level leaves the corresponding chain level
  NormalChain askew = make_chain(q8, {{0}, {0, 2}, {0, 1, 2, 3}, ch.levels[3]});
  CHECK_THROWS_AS(restrict_glider(g, askew, identity_embedding(q8)), Error);

  // a filtration may repeat a step; the plane does not split over <i> in
  // <j>-eigenline coordinates
  auto emb = subgroup_group(q8, {0, 1, 2, 3}, "C4i");
  NormalChain repeat{emb.group, {{0}, {0, 2}, {0, 2}, {0, 1, 2, 3}}};
  try {
    restrict_glider(g, repeat, emb);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
    CHECK(std::string(e.what()).find("split") != std::string::npos);
  }

  // one character in two different bases cannot be regrouped coordinatewise
  const auto& u = mod->components()[0].first;
  CycMatrix p = from_rows({{1, 1}, {0, 1}});
  CycMatrix pinv = from_rows({{1, -1}, {0, 1}});
  std::vector<CycMatrix> twisted;
  for (long x = 0; x < q8->order(); ++x)
    twisted.push_back(p * u.matrix(x) * pinv);
  auto uc = Representation::create(q8, twisted, "Uc");
  auto mixed = std::make_shared<const LabeledModule>(
      q8, std::vector<std::pair<Representation, long>>{{u, 1}, {uc, 1}});
  Glider gm = Glider::build(ch, mixed, vec({1, 0, 1, 0}));
  try {
    restrict_glider(gm, ch, identity_embedding(q8));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
    CHECK(std::string(e.what()).find("different bases") != std::string::npos);
  }

  // genuine subgroup: a cyclic line pair over C6 re-read over its C3
  auto c6 = named_group("C6");
  NormalChain flat{c6, {{0}, {0, 1, 2, 3, 4, 5}}};
  auto lins = linear_characters(c6);
  long faithful = -1;
  for (size_t k = 0; k < lins.size(); ++k)
    if (chr(lins[k], 1) == CycNumber::zeta(6)) faithful = (long)k;
  REQUIRE(faithful >= 0);
  auto pair_mod = std::make_shared<const LabeledModule>(
      c6, std::vector<std::pair<Representation, long>>{{lins[0], 1},
                                                       {lins[faithful], 1}});
  Glider gc = Glider::build(flat, pair_mod, vec({1, 1}));
  auto emb3 = subgroup_group(c6, {0, 2, 4}, "C3");
  NormalChain sub = make_chain(emb3.group, {{0}, {0, 1, 2}});
  Glider rc = restrict_glider(gc, sub, emb3);
  CHECK(rc.chain().group.get() == emb3.group.get());
  CHECK(rc.ambient().components().size() == 2);
  CHECK(rc.dimension_vector() == std::vector<long>{1, 2});
  long local = emb3.from_parent[2];
  CHECK(rc.character().trace_on_level(local, 0) ==
        CycNumber(1) + CycNumber::zeta(3));
}
