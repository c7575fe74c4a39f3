#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gliderrep/group.hpp"

namespace glrep {

// Group table file: {"name": str, "order": n, "table": n rows of n ids,
// "elements": n names}, id 0 the identity. Loading validates the table in
// full; save(load(s)) reproduces s byte for byte when s is in saved form.
std::string group_to_json(const GroupPtr& g);
GroupPtr group_from_json(const std::string& text);

// Chain file: JSON array of sorted element-id arrays, trivial level first.
std::string chain_to_json(const NormalChain& chain);
NormalChain chain_from_json(const GroupPtr& g, const std::string& text);

// Chain spec accepted by the command line and the C layer:
//   - a registry shorthand ("q8j"); the group argument, if any, must agree;
//   - generator lists, levels joined by ';', ids by ',' or spaces
//     ("4; 1" over Q8 = e < {+-1} < <i> < Q8): each level is the closure of
//     its generators, the trivial and full levels are filled in when
//     missing;
//   - a JSON level array, as written by chain_to_json.
NormalChain parse_chain_spec(const std::optional<GroupPtr>& g,
                             const std::string& spec);

// Character table: one header row of class representative names, one row of
// class sizes, then a row per irreducible with its label, degree and exact
// values in CycNumber::str() form.
std::string character_table_csv(const GroupPtr& g);

// Generalized character tables of the enumerated gliders of a chain, one
// row per (glider, conjugacy class): glider index, dimension vector, class
// representative, chain layer, then the lower triangle of the trace matrix
// row by row (rows below the layer bound are structurally zero).
std::string glider_table_csv(
    const NormalChain& chain,
    const std::optional<std::vector<long>>& dim_filter = std::nullopt);

}  // namespace glrep
