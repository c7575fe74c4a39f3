#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gliderrep/module.hpp"

namespace glrep {

// Chain levels materialized once as subgroups of the top group so that
// their character tables are computed and cached a single time.
struct ChainContext {
  NormalChain chain;
  std::vector<SubgroupGroup> levels;  // levels.back() reuses the group itself
};
ChainContext make_context(const NormalChain& chain);

// Layered trace data of a glider. Element g living in chain layer i (the
// first level containing it) has defined traces on the level subspaces
// M_0..M_{d-i}; the display form is a (d+1)x(d+1) lower-triangular matrix
// whose row r, column c entry is the trace of g on the orbit span
// KG_{d-r} M_{d-c}, zero once r exceeds d-i.
class GeneralizedCharacter {
public:
  GeneralizedCharacter() = default;
  GeneralizedCharacter(GroupPtr group, long length, long ambient_dim,
                       std::vector<long> layers,
                       std::vector<std::vector<CycNumber>> traces);

  const GroupPtr& group() const { return group_; }
  long length() const { return d_; }
  long layer(long g) const { return layers_[g]; }
  // Trace of g on the orbit span KG_{d-j}.a — the level M_j for j >= 1 and
  // the generated submodule for j = 0; defined for j <= length() - layer(g).
  const CycNumber& trace_on_level(long g, long j) const;
  CycMatrix matrix(long g) const;

  bool operator==(const GeneralizedCharacter& o) const;
  bool operator!=(const GeneralizedCharacter& o) const { return !(*this == o); }

  // The identity matrix of dimensions is symmetric under the anti-diagonal
  // reflection with a 1 in the bottom-left corner; equivalent to the glider
  // being irreducible of full essential length.
  bool anti_diagonal_symmetric() const;

private:
  GroupPtr group_;
  long d_ = 0;
  long ambient_dim_ = 0;
  std::vector<long> layers_;
  std::vector<std::vector<CycNumber>> traces_;
};

// Descending subspace ladder M_0 = ambient >= M_1 >= ... >= M_d inside a
// labeled module, where M_j is the orbit span of the generator under the
// chain level d-j. Immutable once built.
class Glider {
public:
  static Glider build(NormalChain chain,
                      std::shared_ptr<const LabeledModule> ambient,
                      CycVector generator);

  const NormalChain& chain() const { return chain_; }
  const LabeledModule& ambient() const { return *ambient_; }
  const std::shared_ptr<const LabeledModule>& ambient_ptr() const {
    return ambient_;
  }
  const CycVector& generator() const { return generator_; }
  long length() const { return (long)chain_.levels.size() - 1; }
  long essential_length() const { return essential_; }

  // M_j: j = 0 is the whole ambient space, higher j the orbit spans.
  const Subspace& level(long j) const;
  // Orbit span under the whole group (= level(0) exactly when the generator
  // reaches everything).
  const Subspace& generated_submodule() const { return generated_; }
  // (dim M_d, ..., dim M_0), tail first.
  std::vector<long> dimension_vector() const;

  const GeneralizedCharacter& character() const { return character_; }
  bool anti_diagonal() const { return character_.anti_diagonal_symmetric(); }

  // Irreducibility checked on the module side: nonzero generator whose
  // component blocks have full rank, the generated submodule filling the
  // ambient, and the ladder identities KG_i M_i = KG_{d-i} M_{d-i}
  // recomputed from scratch.
  TailCheck direct_irreducible() const;

private:
  Glider() = default;

  NormalChain chain_;
  std::shared_ptr<const LabeledModule> ambient_;
  CycVector generator_;
  std::vector<Subspace> levels_;  // M_1..M_d at indexes 1..d; [0] = full
  Subspace generated_;            // KGa
  GeneralizedCharacter character_;
  long essential_ = 0;
};

// Span of sums g.w over g in elems and w in the subspace.
Subspace subspace_product(const LabeledModule& m, const std::vector<long>& elems,
                          const Subspace& w);

// Largest submodule inside the tail line M_d; the build convention pins an
// extra zero level below M_d, making every built glider bodyless, so this
// exists as a validation helper only.
Subspace largest_submodule_in_tail(const Glider& g);

// One glider per (irreducible ambient, nonempty subset of the chain's joint
// isotypic pieces), generators being sums of first basis vectors,
// deduplicated by generalized character; optionally filtered by dimension
// vector.
std::vector<Glider> enumerate_gliders(
    const NormalChain& chain,
    const std::optional<std::vector<long>>& dim_filter = std::nullopt);

struct DistinguishReport {
  bool distinguishable = false;
  std::string detail;
  std::string witness;      // trace value seen on one side only
  long witness_order = 0;   // its root-of-unity order, 0 if not a root
};

// Compares the multisets of generalized-trace value sets gathered on the
// proper middle layers of the enumerated gliders.
DistinguishReport distinguish_chains(const NormalChain& a,
                                     const NormalChain& b);

// The same generator viewed over a chain of a subgroup: the ambient module
// is re-expressed over the subgroup (componentwise restriction; coordinates
// regrouped when copies merge) and the ladder recomputed. The embedding maps
// the subchain's group into the glider's group, with each subchain level
// landing inside the corresponding chain level.
Glider restrict_glider(const Glider& g, const NormalChain& sub_chain,
                       const SubgroupGroup& embedding);

}  // namespace glrep
