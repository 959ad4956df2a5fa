#include "nilproj/complex_matrix.hpp"

#include <cmath>

namespace nilproj {

double ComplexVector::norm() const {
  double sum = 0.0;
  for (const cplx& e : entries) sum += std::norm(e);
  return std::sqrt(sum);
}

cplx inner(const ComplexVector& u, const ComplexVector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("inner: vector dims differ");
  cplx sum = 0.0;
  for (int i = 0; i < u.dim(); ++i) sum += std::conj(u[i]) * v[i];
  return sum;
}

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), cplx(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector& u, const ComplexVector& v) {
  ComplexMatrix m(u.dim(), v.dim());
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::block(int r0, int r1, int c0, int c1) const {
  if (r0 < 0 || r1 > rows_ || c0 < 0 || c1 > cols_ || r0 > r1 || c0 > c1)
    throw IndexOutOfRange("block: range outside matrix");
  ComplexMatrix m(r1 - r0, c1 - c0);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) m(i - r0, j - c0) = (*this)(i, j);
  return m;
}

ComplexVector ComplexMatrix::col(int j) const {
  ComplexVector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void ComplexMatrix::set_col(int j, const ComplexVector& v) {
  if (v.dim() != rows_) throw DimensionMismatch("set_col: wrong length");
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

cplx ComplexMatrix::trace() const {
  cplx sum = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) sum += (*this)(i, i);
  return sum;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& e : data_) m = std::max(m, std::abs(e));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& e : data_)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

static void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix shapes differ");
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) + b(i, j);
  return m;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) - b(i, j);
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dims differ");
  ComplexMatrix m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
  ComplexMatrix m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = s * a(i, j);
  return m;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return cplx(s, 0.0) * a; }

ComplexMatrix adjoint_times_self(const ComplexMatrix& a) {
  ComplexMatrix m(a.cols(), a.cols());
  for (int i = 0; i < a.cols(); ++i) {
    double diag = 0.0;
    for (int k = 0; k < a.rows(); ++k) diag += std::norm(a(k, i));
    m(i, i) = diag;
    for (int j = i + 1; j < a.cols(); ++j) {
      cplx sum = 0.0;
      for (int k = 0; k < a.rows(); ++k) sum += std::conj(a(k, i)) * a(k, j);
      m(i, j) = sum;
      m(j, i) = std::conj(sum);
    }
  }
  return m;
}

ComplexMatrix times_adjoint(const ComplexMatrix& a) {
  ComplexMatrix m(a.rows(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    double diag = 0.0;
    for (int k = 0; k < a.cols(); ++k) diag += std::norm(a(i, k));
    m(i, i) = diag;
    for (int j = i + 1; j < a.rows(); ++j) {
      cplx sum = 0.0;
      for (int k = 0; k < a.cols(); ++k) sum += a(i, k) * std::conj(a(j, k));
      m(i, j) = sum;
      m(j, i) = std::conj(sum);
    }
  }
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace nilproj
