#pragma once

#include "gliderrep/matrix.hpp"

namespace glrep {

// Subspace of K^n held in canonical form: basis rows in reduced row echelon
// form plus their pivot columns. Two subspaces are equal iff the canonical
// bases agree entrywise.
class Subspace {
public:
  explicit Subspace(long ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(const std::vector<CycVector>& vectors, long ambient);
  static Subspace span_rows(const CycMatrix& rows);
  static Subspace zero(long ambient) { return Subspace(ambient); }
  static Subspace full(long ambient);

  long ambient() const { return ambient_; }
  long dim() const { return basis_.rows(); }
  const CycMatrix& basis() const { return basis_; }
  const std::vector<long>& pivots() const { return pivots_; }

  bool contains(const CycVector& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Coordinates of v in the canonical basis; Domain error if v is outside.
  CycVector coords(const CycVector& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  // Image {b M^T-style action: row b -> M.apply(b)} of each basis row.
  Subspace image_under(const CycMatrix& m) const;
  bool invariant_under(const CycMatrix& m) const;

  // Trace of the action induced on this subspace by m; Domain error if the
  // subspace is not invariant. Reads coordinates at pivot columns, so no
  // linear solve is needed.
  CycNumber trace_of(const CycMatrix& m) const;

private:
  long ambient_;
  CycMatrix basis_;
  std::vector<long> pivots_;
};

}  // namespace glrep
