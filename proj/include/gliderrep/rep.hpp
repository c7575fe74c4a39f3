#pragma once

#include "gliderrep/group.hpp"
#include "gliderrep/matrix.hpp"

namespace glrep {

// Class function given by one value per conjugacy class (classes in the
// canonical order of FiniteGroup::conjugacy_classes).
class CharacterVector {
public:
  CharacterVector(GroupPtr group, std::vector<CycNumber> class_values);

  const GroupPtr& group() const { return group_; }
  const std::vector<CycNumber>& values() const { return values_; }
  const CycNumber& at_class(long c) const { return values_[c]; }
  const CycNumber& at_element(long g) const;
  long degree() const;

  bool operator==(const CharacterVector& o) const { return cmp(o) == 0; }
  bool operator!=(const CharacterVector& o) const { return cmp(o) != 0; }
  // Value-lexicographic total order; groups must coincide.
  int cmp(const CharacterVector& o) const;

private:
  GroupPtr group_;
  std::vector<CycNumber> values_;
  std::vector<long> class_of_;  // element id -> class index
};

// (1/|G|) sum_g a(g) conj(b(g)); a rational (integer for module characters).
Rat inner_product(const CharacterVector& a, const CharacterVector& b);

// Matrix representation, one matrix per element id. Valid on construction:
// identity at id 0 and multiplicativity (verified on a generating set, which
// extends to all pairs by induction on word length).
class Representation {
public:
  static Representation create(GroupPtr group, std::vector<CycMatrix> matrices,
                               std::string label);
  static Representation trivial(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  long degree() const { return matrices_[0].rows(); }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const CycMatrix& matrix(long g) const { return matrices_[g]; }

  const CharacterVector& character() const;
  bool is_irreducible() const;

private:
  Representation() = default;

  GroupPtr group_;
  std::vector<CycMatrix> matrices_;
  std::string label_;
  mutable std::shared_ptr<CharacterVector> character_;  // lazy
};

// Cyclic decomposition of an abelian group: ids `gens` with `orders`, every
// element reachable as a unique product; dlog[x] lists the exponents.
struct AbelianBasis {
  std::vector<long> gens;
  std::vector<long> orders;
  std::vector<std::vector<long>> dlog;
};
AbelianBasis abelian_basis(const GroupPtr& abelian);

// All degree-1 representations, pulled back from the abelianization. Order:
// odometer over the abelian basis exponents, first exponent fastest, so the
// trivial character is first.
std::vector<Representation> linear_characters(const GroupPtr& g);

// Induced representation via coset-permutation block matrices.
Representation induce(const Representation& rep, const SubgroupGroup& h,
                      const GroupPtr& g);
// Induced character alone (sum over conjugating coset representatives).
CharacterVector induced_character(const CharacterVector& chi,
                                  const SubgroupGroup& h, const GroupPtr& g);

// Irreducibles with explicit monomial models. Linear characters first (in the
// linear_characters order), then ascending degree with value-lexicographic
// ties. Computed by inducing linear characters from subgroups in descending
// order until the degree-square sum reaches |G|; Unsupported error if the
// search exhausts all subgroups first (non-monomial group).
struct CharacterTable {
  GroupPtr group;
  std::vector<Representation> irreps;
  std::vector<long> degrees() const;
  long index_of(const CharacterVector& chi) const;  // -1 if absent
};
const CharacterTable& character_table(const GroupPtr& g);

Representation restrict_to(const Representation& rep, const SubgroupGroup& h);
// Multiplicity of every h-irreducible in rep|_h, indexed like
// character_table(h.group).irreps.
std::vector<long> restriction_multiplicities(const Representation& rep,
                                             const SubgroupGroup& h);
std::vector<long> restriction_multiplicities(const CharacterVector& chi,
                                             const SubgroupGroup& h);

// chi^g(h) = chi(g^-1 h g) for h normal in the parent group.
CharacterVector conjugate_character(const CharacterVector& chi,
                                    const SubgroupGroup& h, long g);
// Elements of the parent group fixing chi under conjugation; a subgroup
// containing h.
std::vector<long> inertia_group(const CharacterVector& chi,
                                const SubgroupGroup& h);

}  // namespace glrep
