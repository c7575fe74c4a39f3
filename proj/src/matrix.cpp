#include "gliderrep/matrix.hpp"

#include "gliderrep/error.hpp"

namespace glrep {

CycMatrix CycMatrix::identity(long n) {
  CycMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = CycNumber::one(1);
  return m;
}

CycVector CycMatrix::row(long i) const {
  return CycVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void CycMatrix::set_row(long i, const CycVector& v) {
  if ((long)v.size() != cols_) fail_domain("row length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols_ != o.rows_) fail_domain("matrix product shape mismatch");
  CycMatrix out(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const CycNumber& a = at(i, k);
      if (a.is_zero()) continue;  // representation matrices are mostly sparse
      for (long j = 0; j < o.cols_; ++j) {
        const CycNumber& b = o.at(k, j);
        if (b.is_zero()) continue;
        out.at(i, j) += a * b;
      }
    }
  return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail_domain("matrix sum shape mismatch");
  CycMatrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail_domain("matrix difference shape mismatch");
  CycMatrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

CycMatrix CycMatrix::scaled(const CycNumber& c) const {
  CycMatrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

void CycMatrix::add_scaled(const CycMatrix& o, const CycNumber& c) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail_domain("matrix sum shape mismatch");
  if (c.is_zero()) return;
  for (size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i] * c;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix out(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

CycNumber CycMatrix::trace() const {
  if (rows_ != cols_) fail_domain("trace of non-square matrix");
  CycNumber t;
  for (long i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

CycVector CycMatrix::apply(const CycVector& v) const {
  if ((long)v.size() != cols_) fail_domain("apply length mismatch");
  CycVector out(rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) {
      const CycNumber& a = at(i, j);
      if (a.is_zero() || v[j].is_zero()) continue;
      out[i] += a * v[j];
    }
  return out;
}

bool CycMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

CycMatrix tensor_product(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (long k = 0; k < b.rows(); ++k)
        for (long l = 0; l < b.cols(); ++l) {
          if (b.at(k, l).is_zero()) continue;
          out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    }
  return out;
}

RrefResult rref(const CycMatrix& m) {
  CycMatrix w = m;
  std::vector<long> pivots;
  long r = 0;
  for (long col = 0; col < w.cols() && r < w.rows(); ++col) {
    long pr = -1;
    for (long i = r; i < w.rows(); ++i)
      if (!w.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (long j = 0; j < w.cols(); ++j) std::swap(w.at(r, j), w.at(pr, j));
    CycNumber inv = w.at(r, col).inverse();
    for (long j = col; j < w.cols(); ++j) w.at(r, j) *= inv;
    for (long i = 0; i < w.rows(); ++i) {
      if (i == r || w.at(i, col).is_zero()) continue;
      CycNumber f = w.at(i, col);
      for (long j = col; j < w.cols(); ++j) w.at(i, j) -= f * w.at(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  RrefResult out;
  out.mat = CycMatrix(r, w.cols());
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < w.cols(); ++j) out.mat.at(i, j) = w.at(i, j);
  out.pivots = std::move(pivots);
  return out;
}

CycMatrix null_space(const CycMatrix& m) {
  RrefResult r = rref(m);
  long n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (long p : r.pivots) is_pivot[p] = true;
  std::vector<long> free_cols;
  for (long j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  CycMatrix out((long)free_cols.size(), n);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    long f = free_cols[k];
    out.at(k, f) = CycNumber::one(1);
    for (size_t i = 0; i < r.pivots.size(); ++i)
      out.at(k, r.pivots[i]) = -r.mat.at(i, f);
  }
  // Basis already echelonized by free column; normalize via rref for a
  // canonical result.
  return rref(out).mat;
}

CycMatrix row_null_space(const CycMatrix& m) { return null_space(m.transpose()); }

long rank(const CycMatrix& m) { return rref(m).mat.rows(); }

}  // namespace glrep
