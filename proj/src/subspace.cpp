#include "gliderrep/subspace.hpp"

#include "gliderrep/error.hpp"

namespace glrep {

Subspace Subspace::span(const std::vector<CycVector>& vectors, long ambient) {
  CycMatrix m((long)vectors.size(), ambient);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if ((long)vectors[i].size() != ambient)
      fail_domain("spanning vector length mismatch");
    m.set_row((long)i, vectors[i]);
  }
  return span_rows(m);
}

Subspace Subspace::span_rows(const CycMatrix& rows) {
  RrefResult r = rref(rows);
  Subspace s(rows.cols());
  s.basis_ = std::move(r.mat);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::full(long ambient) {
  return span_rows(CycMatrix::identity(ambient));
}

bool Subspace::contains(const CycVector& v) const {
  if ((long)v.size() != ambient_) fail_domain("vector/ambient mismatch");
  // Reduce v against the echelon basis; membership iff the residue vanishes.
  CycVector w = v;
  for (long i = 0; i < basis_.rows(); ++i) {
    const CycNumber& c = w[pivots_[i]];
    if (c.is_zero()) continue;
    CycNumber f = c;
    for (long j = pivots_[i]; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail_domain("subspace ambient mismatch");
  for (long i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

CycVector Subspace::coords(const CycVector& v) const {
  if (!contains(v)) fail_domain("vector outside subspace");
  CycVector c(dim());
  for (long i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.ambient_ != ambient_) fail_domain("subspace ambient mismatch");
  CycMatrix stacked(dim() + o.dim(), ambient_);
  for (long i = 0; i < dim(); ++i) stacked.set_row(i, basis_.row(i));
  for (long i = 0; i < o.dim(); ++i) stacked.set_row(dim() + i, o.basis_.row(i));
  return span_rows(stacked);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) fail_domain("subspace ambient mismatch");
  // Zassenhaus: rref of [U|U; V|0] — rows with zero left half carry the
  // intersection in their right half.
  long p = dim(), q = o.dim(), n = ambient_;
  CycMatrix block(p + q, 2 * n);
  for (long i = 0; i < p; ++i)
    for (long j = 0; j < n; ++j) {
      block.at(i, j) = basis_.at(i, j);
      block.at(i, n + j) = basis_.at(i, j);
    }
  for (long i = 0; i < q; ++i)
    for (long j = 0; j < n; ++j) block.at(p + i, j) = o.basis_.at(i, j);
  RrefResult r = rref(block);
  std::vector<CycVector> inter;
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] < n) continue;  // left half nonzero: contributes to U+V
    CycVector v(n);
    for (long j = 0; j < n; ++j) v[j] = r.mat.at((long)i, n + j);
    inter.push_back(std::move(v));
  }
  return span(inter, n);
}

Subspace Subspace::image_under(const CycMatrix& m) const {
  if (m.cols() != ambient_ || m.rows() != ambient_)
    fail_domain("action matrix/ambient mismatch");
  CycMatrix img(dim(), ambient_);
  for (long i = 0; i < dim(); ++i) img.set_row(i, m.apply(basis_.row(i)));
  return span_rows(img);
}

bool Subspace::invariant_under(const CycMatrix& m) const {
  if (m.cols() != ambient_ || m.rows() != ambient_)
    fail_domain("action matrix/ambient mismatch");
  for (long i = 0; i < dim(); ++i)
    if (!contains(m.apply(basis_.row(i)))) return false;
  return true;
}

CycNumber Subspace::trace_of(const CycMatrix& m) const {
  if (m.cols() != ambient_ || m.rows() != ambient_)
    fail_domain("action matrix/ambient mismatch");
  // In the pivot-column coordinate system the k-th coordinate of any member
  // is just its entry at pivots_[k].
  CycNumber t;
  for (long k = 0; k < dim(); ++k) {
    CycVector img = m.apply(basis_.row(k));
    if (!contains(img)) fail_domain("subspace not invariant under action");
    t += img[pivots_[k]];
  }
  return t;
}

}  // namespace glrep
