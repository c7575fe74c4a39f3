#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gliderrep/group.hpp"
#include "gliderrep/module.hpp"
#include "gliderrep/rep.hpp"
#include "gliderrep/subspace.hpp"

namespace glrep {

// One rung shared by two subgroup chains of a common ambient group:
//
//     g_lo  <  top
//      |        |
//     base  <  h_hi
//
// All three proper subgroups are normal in `top`, the two upper levels have
// prime index, and `base` is forced to be their intersection. `maximal`
// records whether h_hi * g_lo covers top (automatic for distinct prime-index
// normal subgroups, but kept explicit since consumers rely on it).
struct ChainSquare {
  GroupPtr top;
  SubgroupGroup base;  // h_hi intersected with g_lo
  SubgroupGroup h_hi;
  SubgroupGroup g_lo;
  bool maximal = false;
};

// Validates the levels (proper subgroups, normal in top, prime index,
// distinct) and packages the square; Domain error otherwise.
ChainSquare make_square(const GroupPtr& top, const std::vector<long>& h_hi,
                        const std::vector<long>& g_lo);

// Squares from every ordered pair of distinct prime-index normal subgroups.
// Pairs that fail to cover the group are skipped (none do for prime index).
std::vector<ChainSquare> enumerate_squares(const GroupPtr& top);

// Base-level-irreducible subspace of a module over the square's top group;
// the seed from which the five inertia subgroups below are grown.
struct BuildingBlock {
  std::shared_ptr<const LabeledModule> ambient;
  Subspace space;
  CharacterVector character;  // of square.base.group
};

// Checks invariance under the base level and irreducibility of the induced
// character; Domain error otherwise.
BuildingBlock make_block(const ChainSquare& sq,
                         std::shared_ptr<const LabeledModule> ambient,
                         const Subspace& space);

// A full decomposition of the module into building blocks, one per
// irreducible base-level constituent (copies listed separately). Blocks for
// a degree-f constituent are cut out of the image of the corner entry of its
// matrix projector, so the result covers the module exactly.
std::vector<BuildingBlock> block_constituents(
    const ChainSquare& sq, std::shared_ptr<const LabeledModule> ambient);

// Where the stabilizer of a block's character lands relative to the square.
enum class BlockClass {
  StabilizerIsGroup,   // inertia of the block character is all of top
  StabilizerIsLowerG,  // inertia is exactly g_lo
  StabilizerIsUpperH,  // inertia is exactly h_hi
  StabilizerIsBase,    // inertia is exactly the base: everything outside moves
  MidStabilizerMobile, // strictly between, off both chains; the h_hi-generated
                       // module itself has inertia h_hi
  MidStabilizerStable, // strictly between, off both chains; that module's
                       // character is fixed by the whole group
  Unclassified,
};
const char* block_class_name(BlockClass c);

// The five inertia subgroups a block generates on a square, as sorted
// element ids of `top`:
//   h_prime   = elements of h_hi fixing the block character
//   g_prime   = elements of g_lo fixing it
//   stabilizer= elements of top fixing it
//   g_grown   = inertia in top of the module generated over g_lo
//   h_grown   = inertia in top of the module generated over h_hi
struct Pentad {
  std::vector<long> h_prime;
  std::vector<long> g_prime;
  std::vector<long> stabilizer;
  std::vector<long> g_grown;
  std::vector<long> h_grown;
  BlockClass cls = BlockClass::Unclassified;
};

Pentad block_pentad(const ChainSquare& sq, const BuildingBlock& b);
BlockClass classify_block(const ChainSquare& sq, const Pentad& p);

// Structural laws every pentad obeys on a maximal square, checked per block:
//   - the chain containments of the five subgroups;
//   - h_prime * g_prime lands inside the stabilizer;
//   - the three landing-spot biconditionals
//       stabilizer == g_lo  <=>  g_prime == g_lo  and h_prime == base
//       stabilizer == h_hi  <=>  g_prime == base  and h_prime == h_hi
//       stabilizer == top   <=>  g_prime == g_lo  and h_prime == h_hi
//   - a central base forces the third case;
//   - base-stabilizer blocks have h_grown == h_hi and g_grown == g_lo;
//   - mid-stabilizer blocks on a p-group: the quotient by the base is
//     noncyclic of order p^2, the stabilizer holds a generator avoiding both
//     chains, and the base is not of order p;
//   - mobile mid-stabilizer blocks additionally satisfy the translate
//     counting laws and the index identity
//       [top : stabilizer] * mult(character in top-generated module) ==
//       [top : base].
// Violations come back as readable descriptions; an empty list is a pass.
//
// Whether a noncentralizing elementary abelian complement of order p^2
// splits the group over the base is genuinely instance-dependent (the
// maximal-class groups of order 16 carry mid-stabilizer blocks but no such
// complement), so its absence is reported in `notes`, not as a violation.
struct SquareReport {
  long blocks_checked = 0;
  std::vector<BlockClass> classes;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};
SquareReport verify_square(const ChainSquare& sq,
                           const std::vector<BuildingBlock>& blocks);
// Same, over the blocks of the one-copy-of-every-irreducible module.
SquareReport verify_square(const ChainSquare& sq);

// --- Pieces of the mid-stabilizer laws, exposed for direct testing --------

// Number of irreducibles of the group with the given degree.
long irrep_count_of_degree(const GroupPtr& g, long degree);

// Conjugates of a base-level character under coset representatives of the
// base inside h_hi; distinct entries correspond to genuinely moved copies.
std::vector<CharacterVector> coset_translates(const ChainSquare& sq,
                                              const CharacterVector& chi);

// Number of h_hi-irreducibles whose restriction to the base is exactly one
// copy of every translate.
long matched_upper_module_count(const ChainSquare& sq,
                                const std::vector<CharacterVector>& translates);

// Multiplicity of the block character in the module generated from the block
// over the whole group.
long generated_module_multiplicity(const ChainSquare& sq,
                                   const BuildingBlock& b);

}  // namespace glrep
