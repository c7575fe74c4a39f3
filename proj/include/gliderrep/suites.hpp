#pragma once

#include <string>
#include <vector>

#include "gliderrep/group.hpp"

namespace glrep {

// Knobs shared by the verification suites. `seed` drives the documented
// generic-vector generator (std::mt19937 consumed through modular
// reduction, so identical seeds give identical instance streams on every
// platform); `max_order` caps the built-in group sweep; `instances` only
// affects the randomized suites.
struct SuiteOptions {
  long max_order = 64;
  unsigned long seed = 0;
  long instances = 200;
};

struct SuiteReport {
  std::string suite;
  long instances_checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  long runtime_ms = 0;
};

// Registered suite names:
//   group-algebra     every built-in group's irreducible degrees satisfy
//                     sum of squares = order; quaternion and dihedral
//                     order-8 degree multisets pinned
//   cyclic-dimension  random ambient V^n and generator: the cyclic
//                     submodule dimension equals deg(V) * rank of the
//                     component matrix
//   annihilator       same instances: explicit null-space computation of
//                     the orbit matrix matches order - dim KGa, and
//                     independent component vectors give order - m*deg(V)
//   pgroup-thm        2-groups (order <= 32) and 3-groups (<= 27), every
//                     maximal normal chain through the center: top
//                     irreducibles over a common next-level irreducible
//                     have equal degree
//   anti-diagonal     full glider enumeration of the stock order-8 chains
//                     and every maximal chain of built-ins of order <= 16:
//                     the anti-diagonal symmetry test agrees with direct
//                     irreducibility checking
//   chain-squares     every square of prime-index normal subgroups of
//                     built-ins of order <= 32, all building blocks: the
//                     pentad landing-spot laws hold
//   tensor-products   exhaustive decomposability counting over C2xC3 and
//                     (C2xC2)xC3 plus the quaternion witness suite
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace glrep
