#pragma once

#include "gliderrep/group.hpp"

namespace glrep {

// Group factory for names like "C12", "D8", "Q16", "Dic12", "SD16", "M27",
// "He3", "C4sC4", "A4", "V4" and direct products joined with 'x'
// ("Q8xC2xC2"). Usage error on anything unrecognized.
GroupPtr named_group(const std::string& name);

// The curated catalog backing the "built-in groups" suites.
const std::vector<std::string>& builtin_group_catalog();
std::vector<GroupPtr> builtin_groups(long max_order);
// Catalog members of order p^k only.
std::vector<GroupPtr> builtin_p_groups(long p, long max_order);

// Frequently used golden chains by shorthand:
//   "q8i"  : e < {+-1} < <i> < Q8         "q8j" : same through <j>
//   "d8v4" : e < Z(D8) < {1,r^2,s,r^2 s} < D8
//   "d8c4" : e < Z(D8) < <r> < D8
//   "c4"   : e < C2 < C4
NormalChain named_chain(const std::string& shorthand);

}  // namespace glrep
