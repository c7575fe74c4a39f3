#pragma once

#include <memory>
#include <string>
#include <vector>

namespace glrep {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Finite group as a multiplication table over element ids 0..n-1, with the
// identity fixed at id 0. Structure queries are memoized; instances are
// immutable after construction and shared via GroupPtr.
class FiniteGroup {
public:
  // Fully validates the table (identity, Latin square, inverses,
  // associativity). Associativity checking is cubic; orders above 1000 are
  // rejected as out of scope.
  static GroupPtr from_table(const std::string& name,
                             std::vector<long> table,
                             std::vector<std::string> element_names = {});

  // Trusted constructor for combinators whose tables are correct by
  // construction.
  static GroupPtr unchecked(const std::string& name, std::vector<long> table,
                            std::vector<std::string> element_names);

  long order() const { return n_; }
  long mul(long a, long b) const { return table_[a * n_ + b]; }
  long inv(long a) const { return inverse_[a]; }
  long conjugate(long g, long h) const { return mul(mul(g, h), inv(g)); }
  long element_order(long a) const;

  const std::string& name() const { return name_; }
  const std::string& element_name(long a) const { return element_names_[a]; }
  // Id for an element name; Usage error if absent.
  long element_by_name(const std::string& s) const;

  bool is_abelian() const;
  bool is_nilpotent() const;
  const std::vector<long>& center() const;
  const std::vector<long>& commutator_subgroup() const;
  const std::vector<std::vector<long>>& conjugacy_classes() const;

  // Non-null when built by direct_product; element (a,b) has id a*|B| + b.
  // Lets representation code work factorwise.
  const std::shared_ptr<const FiniteGroup>& product_left() const {
    return product_left_;
  }
  const std::shared_ptr<const FiniteGroup>& product_right() const {
    return product_right_;
  }

private:
  FiniteGroup() = default;

  friend GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

  std::shared_ptr<const FiniteGroup> product_left_, product_right_;

  long n_ = 0;
  std::string name_;
  std::vector<long> table_;
  std::vector<long> inverse_;
  std::vector<std::string> element_names_;

  // Lazy structure caches (single-threaded use).
  mutable std::vector<long> center_;
  mutable std::vector<long> commutator_;
  mutable std::vector<std::vector<long>> classes_;
  mutable int abelian_ = -1;
  mutable int nilpotent_ = -1;
};

// --- Constructions ---------------------------------------------------------

GroupPtr cyclic_group(long n);
GroupPtr dihedral_group(long n);  // order 2n, n >= 1
// <a, b | a^m = e, b^k = a^t, b a b^-1 = a^r>; requires r^k = 1 (mod m) and
// t(r-1) = 0 (mod m).
GroupPtr metacyclic_group(long m, long k, long t, long r,
                          const std::string& name);
GroupPtr dicyclic_group(long n);  // order 4n; n = 2 gives the quaternions
GroupPtr heisenberg_group(long p);  // unitriangular 3x3 over F_p, order p^3
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
// Closure of permutations of {0..degree-1}; names use cycle notation.
GroupPtr permutation_group(long degree,
                           const std::vector<std::vector<long>>& gens,
                           const std::string& name);

// --- Subgroups --------------------------------------------------------------

// Sorted element closure of a seed set (identity always included).
std::vector<long> closure(const FiniteGroup& g, std::vector<long> seed);
// Small generating set, greedily collected in id order (empty for the
// trivial group).
std::vector<long> generating_set(const FiniteGroup& g);
bool is_subgroup(const FiniteGroup& g, const std::vector<long>& elems);
bool is_normal(const FiniteGroup& g, const std::vector<long>& elems);
// Every subgroup, as sorted element lists, ordered by (size, lexicographic).
std::vector<std::vector<long>> all_subgroups(const FiniteGroup& g);
std::vector<std::vector<long>> normal_subgroups(const FiniteGroup& g);
// Minimal-id representative per left coset gH, ascending.
std::vector<long> left_coset_reps(const FiniteGroup& g,
                                  const std::vector<long>& sub);

// Subgroup materialized as a group of its own plus the id correspondence.
struct SubgroupGroup {
  GroupPtr parent;
  GroupPtr group;
  std::vector<long> to_parent;    // subgroup id -> parent id
  std::vector<long> from_parent;  // parent id -> subgroup id or -1
};
SubgroupGroup subgroup_group(const GroupPtr& g, const std::vector<long>& elems,
                             const std::string& name);

struct Quotient {
  GroupPtr group;
  std::vector<long> coset_of;  // parent id -> quotient id
  std::vector<long> rep_of;    // quotient id -> minimal parent representative
};
Quotient quotient_group(const GroupPtr& g, const std::vector<long>& normal_sub,
                        const std::string& name);
Quotient abelianization(const GroupPtr& g);

// --- Chains -----------------------------------------------------------------

// Ascending chain {e} = levels[0] < ... < levels[d] = G where every level is
// normal in G and no normal subgroup fits strictly between consecutive
// levels. Steps need not have prime index (A4 covers its Klein subgroup).
struct NormalChain {
  GroupPtr group;
  std::vector<std::vector<long>> levels;
  long length() const { return (long)levels.size() - 1; }
};

// Validates the levels (sorted ids, endpoints, normality, saturation) and
// packages them; Domain error with the offending level otherwise.
NormalChain make_chain(const GroupPtr& g,
                       std::vector<std::vector<long>> levels);

std::vector<NormalChain> maximal_normal_chains(const GroupPtr& g);
// Only chains having `through` as one of their levels.
std::vector<NormalChain> maximal_normal_chains_through(
    const GroupPtr& g, const std::vector<long>& through);

}  // namespace glrep
