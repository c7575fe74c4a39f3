#pragma once

#include <string>
#include <vector>

#include "gliderrep/group.hpp"
#include "gliderrep/rep.hpp"

namespace glrep {

struct HasseNode {
  long level;        // 0 = the whole group, increasing downward
  long table_index;  // position in that level's character table
  std::string label;
  long degree;
};

struct HasseEdge {
  long upper, lower;  // node indexes
  long multiplicity;  // restriction multiplicity, >= 1
};

// Restriction diagram of a chain: one row per nontrivial level (whole group
// on top), with an edge wherever an irreducible of one level restricts onto
// an irreducible of the level below.
//
// Labels, row by row:
//   top     T1..Tk for the linear irreducibles in table order, then U
//           (or U1..Um when several) for the higher-degree ones;
//   middle  V1.., then W1.., X.., Y.., Z.. going down, numbered after
//           sorting by (largest parent degree desc, parent positions asc,
//           character values asc);
//   bottom  an order-two level is written S (sign) and T (trivial).
struct ChainHasse {
  NormalChain chain;
  std::vector<HasseNode> nodes;
  std::vector<HasseEdge> edges;
  std::vector<long> component_of;  // node index -> component id
  long component_count = 0;

  long node_by_label(const std::string& label) const;  // Usage error if absent
  // Sorted labels adjacent to the named node, both rows.
  std::vector<std::string> neighbor_labels(const std::string& label) const;
  std::string to_dot() const;
};

ChainHasse build_hasse(const NormalChain& chain);

}  // namespace glrep
