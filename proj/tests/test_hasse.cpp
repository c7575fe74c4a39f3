#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "gliderrep/error.hpp"
#include "gliderrep/hasse.hpp"
#include "gliderrep/registry.hpp"

using namespace glrep;

namespace {

std::vector<std::string> labels_at_level(const ChainHasse& h, long level) {
  std::vector<std::string> out;
  for (const auto& nd : h.nodes)
    if (nd.level == level) out.push_back(nd.label);
  return out;
}

std::set<std::pair<std::string, std::string>> edge_set(const ChainHasse& h) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : h.edges)
    out.insert({h.nodes[e.upper].label, h.nodes[e.lower].label});
  return out;
}

}  // namespace

TEST_CASE("chain validation") {
  auto q8 = named_group("Q8");
  CHECK_NOTHROW(make_chain(q8, {{0}, {0, 2}, {0, 2, 4, 6}, {0, 1, 2, 3, 4, 5, 6, 7}}));
  // skipping the center leaves a normal subgroup insertable
  CHECK_THROWS_AS(make_chain(q8, {{0}, {0, 1, 2, 3}, {0, 1, 2, 3, 4, 5, 6, 7}}),
                  Error);
  // must reach the whole group
  CHECK_THROWS_AS(make_chain(q8, {{0}, {0, 2}, {0, 2, 4, 6}}), Error);
  // reflections generate a non-normal subgroup of D8
  auto d8 = named_group("D8");
  CHECK_THROWS_AS(
      make_chain(d8, {{0}, {0, 4}, {0, 2, 4, 6}, {0, 1, 2, 3, 4, 5, 6, 7}}),
      Error);
}

TEST_CASE("quaternion chain diagram") {
  auto h = build_hasse(named_chain("q8j"));
  CHECK(labels_at_level(h, 0) ==
        std::vector<std::string>{"T1", "T2", "T3", "T4", "U"});
  CHECK(labels_at_level(h, 1) ==
        std::vector<std::string>{"V1", "V2", "V3", "V4"});
  // S sits under V1, V2 and is displayed first on its row
  CHECK(labels_at_level(h, 2) == std::vector<std::string>{"S", "T"});
  CHECK(h.edges.size() == 10);
  CHECK(h.component_count == 2);
  CHECK(h.neighbor_labels("U") == std::vector<std::string>{"V1", "V2"});
  CHECK(h.neighbor_labels("V4") == std::vector<std::string>{"T", "T3", "T4"});
  std::set<std::pair<std::string, std::string>> expected{
      {"U", "V1"},  {"U", "V2"},  {"T1", "V3"}, {"T2", "V3"}, {"T3", "V4"},
      {"T4", "V4"}, {"V1", "S"},  {"V2", "S"},  {"V3", "T"},  {"V4", "T"}};
  CHECK(edge_set(h) == expected);

  // V1, V2 carry the faithful middle characters; V3 is trivial.
  const auto& mid = character_table(
      subgroup_group(h.chain.group, h.chain.levels[2], "mid").group);
  long v1 = h.node_by_label("V1");
  CHECK(mid.irreps[h.nodes[v1].table_index]
            .character()
            .at_class(2)
            .root_of_unity_order() == 4);
  long v3 = h.node_by_label("V3");
  for (const auto& v : mid.irreps[h.nodes[v3].table_index].character().values())
    CHECK(v == CycNumber(1));

  CHECK_THROWS_AS(h.node_by_label("V9"), Error);
  // every node of the U component is degree <= 2 and none is T-labelled
  long uc = h.component_of[h.node_by_label("U")];
  for (size_t v = 0; v < h.nodes.size(); ++v)
    if (h.component_of[v] == uc)
      CHECK(h.nodes[v].label.substr(0, 1) != "T");
}

TEST_CASE("sibling chains produce the same picture") {
  // Which linear characters sit over V4 depends on the middle subgroup (T2
  // kills <j> and V4 but not <i> or <r>); the shape never changes.
  std::vector<std::pair<const char*, std::vector<std::string>>> cases{
      {"q8i", {"T", "T2", "T4"}},
      {"d8v4", {"T", "T3", "T4"}},
      {"d8c4", {"T", "T2", "T4"}}};
  for (const auto& [name, v4_neighbors] : cases) {
    auto h = build_hasse(named_chain(name));
    CHECK(h.edges.size() == 10);
    CHECK(h.component_count == 2);
    CHECK(labels_at_level(h, 0) ==
          std::vector<std::string>{"T1", "T2", "T3", "T4", "U"});
    CHECK(h.neighbor_labels("U") == std::vector<std::string>{"V1", "V2"});
    CHECK(h.neighbor_labels("V4") == v4_neighbors);
  }
}

TEST_CASE("cyclic four") {
  auto h = build_hasse(named_chain("c4"));
  CHECK(labels_at_level(h, 0) ==
        std::vector<std::string>{"T1", "T2", "T3", "T4"});
  CHECK(labels_at_level(h, 1) == std::vector<std::string>{"T", "S"});
  CHECK(h.edges.size() == 4);
  CHECK(h.component_count == 2);
  CHECK(h.neighbor_labels("S") == std::vector<std::string>{"T2", "T4"});
  CHECK(h.neighbor_labels("T") == std::vector<std::string>{"T1", "T3"});
}

TEST_CASE("heisenberg chain splits by central character") {
  auto he3 = named_group("He3");
  long y = he3->element_by_name("y"), z = he3->element_by_name("z");
  auto mid = closure(*he3, {y, z});
  std::vector<long> all(27);
  for (long i = 0; i < 27; ++i) all[i] = i;
  auto chain =
      make_chain(he3, {{0}, closure(*he3, {z}), mid, all});
  auto h = build_hasse(chain);
  auto top = labels_at_level(h, 0);
  CHECK(top.size() == 11);
  CHECK(top[0] == "T1");
  CHECK(top[9] == "U1");
  CHECK(top[10] == "U2");
  CHECK(labels_at_level(h, 1).size() == 9);
  CHECK(labels_at_level(h, 1)[0] == "V1");
  CHECK(labels_at_level(h, 2) ==
        std::vector<std::string>{"W1", "W2", "W3"});
  CHECK(h.edges.size() == 24);
  CHECK(h.component_count == 3);
  // the three-dimensional irreducibles restrict without multiplicity
  for (const auto& e : h.edges) CHECK(e.multiplicity == 1);
  CHECK(h.neighbor_labels("U1").size() == 3);
}

TEST_CASE("dot export") {
  auto h = build_hasse(named_chain("q8j"));
  auto dot = h.to_dot();
  CHECK(dot.find("graph hasse {") == 0);
  CHECK(dot.find("rank=same; \"T1\"; \"T2\"; \"T3\"; \"T4\"; \"U\";") !=
        std::string::npos);
  CHECK(dot.find("\"U\" -- \"V1\";") != std::string::npos);
  CHECK(dot.find("\"V4\" -- \"T\";") != std::string::npos);
  CHECK(dot.find("[label=") == std::string::npos);  // all multiplicities 1
  CHECK(dot.back() == '\n');
}
