#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gliderrep/rep.hpp"
#include "gliderrep/subspace.hpp"

namespace glrep {

// A module presented as an explicit direct sum of irreducible components
// with multiplicities; the action is block diagonal in the component order,
// copies of one component adjacent.
class LabeledModule {
public:
  LabeledModule(GroupPtr group,
                std::vector<std::pair<Representation, long>> components);

  const GroupPtr& group() const { return group_; }
  long dimension() const { return dimension_; }
  const std::vector<std::pair<Representation, long>>& components() const {
    return components_;
  }
  // First coordinate of component k's block (length degree * multiplicity).
  long offset_of(long k) const { return offsets_[k]; }
  const CycMatrix& action(long g) const;  // cached per element
  CharacterVector character() const;

private:
  GroupPtr group_;
  std::vector<std::pair<Representation, long>> components_;
  std::vector<long> offsets_;
  long dimension_ = 0;
  mutable std::vector<CycMatrix> action_;
  mutable std::vector<char> have_action_;
};

// Span of the orbit of `a` under the listed elements (often a subgroup).
Subspace orbit_span(const LabeledModule& m, const std::vector<long>& elems,
                    const CycVector& a);
// Span of the full group orbit = the cyclic submodule generated by a.
Subspace cyclic_module(const LabeledModule& m, const CycVector& a);

// Dimension of { x in the group algebra : x.a = 0 }.
long annihilator_dim(const LabeledModule& m, const CycVector& a);

// Whether the cyclic submodule generated by a is all of m: requires each
// multiplicity to stay within the component's degree and each component's
// stack of generator blocks to have full rank.
struct TailCheck {
  bool ok;
  std::string detail;  // failing component when !ok
};
TailCheck is_irreducible_tail(const LabeledModule& m, const CycVector& a);

// Largest subspace of w stable under the whole group action.
Subspace largest_invariant_subspace(const LabeledModule& m, Subspace w);

// Images of the isotypic projectors of the subgroup, aligned with its
// character table; they partition m into h-stable summands.
std::vector<Subspace> isotypic_components(const LabeledModule& m,
                                          const SubgroupGroup& h);

}  // namespace glrep
