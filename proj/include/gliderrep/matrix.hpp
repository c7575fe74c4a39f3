#pragma once

#include <vector>

#include "gliderrep/cyclotomic.hpp"

namespace glrep {

using CycVector = std::vector<CycNumber>;

// Dense matrix over the cyclotomic numbers. Vectors are row tuples; a matrix
// acts on a coordinate tuple v by (M.apply(v))_i = sum_j M(i,j) * v_j.
class CycMatrix {
public:
  CycMatrix() : rows_(0), cols_(0) {}
  CycMatrix(long rows, long cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CycMatrix identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  CycNumber& at(long i, long j) { return data_[i * cols_ + j]; }
  const CycNumber& at(long i, long j) const { return data_[i * cols_ + j]; }

  CycVector row(long i) const;
  void set_row(long i, const CycVector& v);

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix scaled(const CycNumber& c) const;
  // *this += c * o, touching only the nonzero entries of o. Projector sums
  // over a group are the hot path and the summands are mostly zeros.
  void add_scaled(const CycMatrix& o, const CycNumber& c);
  CycMatrix transpose() const;

  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }

  CycNumber trace() const;
  CycVector apply(const CycVector& v) const;

  bool is_zero() const;

private:
  long rows_, cols_;
  std::vector<CycNumber> data_;
};

CycMatrix tensor_product(const CycMatrix& a, const CycMatrix& b);

struct RrefResult {
  CycMatrix mat;            // reduced row echelon form, zero rows dropped
  std::vector<long> pivots; // pivot column per surviving row
};

// Deterministic Gauss-Jordan: leftmost pivot column, topmost nonzero row.
RrefResult rref(const CycMatrix& m);

// Right null space {x : M x = 0} as RREF rows of an (n-r) x cols matrix.
CycMatrix null_space(const CycMatrix& m);
// Row null space {c : c M = 0}; equals null_space of the transpose.
CycMatrix row_null_space(const CycMatrix& m);

long rank(const CycMatrix& m);

}  // namespace glrep
