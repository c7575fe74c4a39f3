#pragma once

#include <gmpxx.h>

#include <string>

namespace glrep {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator), which the textual formats rely on.
using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_parse(const std::string& s);

inline bool rat_is_int(const Rat& r) { return r.get_den() == 1; }

// Narrowing accessor for small integer rationals (dimensions, multiplicities).
long rat_to_long(const Rat& r);

}  // namespace glrep
