#pragma once

#include <complex>
#include <vector>

#include "nilproj/errors.hpp"

namespace nilproj {

using cplx = std::complex<double>;

/// Dense complex vector.
struct ComplexVector {
  std::vector<cplx> entries;

  ComplexVector() = default;
  explicit ComplexVector(int dim) : entries(static_cast<size_t>(dim)) {}
  explicit ComplexVector(std::vector<cplx> e) : entries(std::move(e)) {}

  int dim() const { return static_cast<int>(entries.size()); }
  cplx& operator[](int i) { return entries[static_cast<size_t>(i)]; }
  const cplx& operator[](int i) const { return entries[static_cast<size_t>(i)]; }

  double norm() const;
};

/// Standard inner product, conjugate-linear in the first argument:
/// inner(u, v) = sum_i conj(u_i) v_i.
cplx inner(const ComplexVector& u, const ComplexVector& v);

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);

  static ComplexMatrix identity(int n);
  /// Rank-one operator u (x) v* with entries u_i * conj(v_j).
  static ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  ComplexMatrix adjoint() const;
  /// Half-open sub-block, rows [r0, r1) x cols [c0, c1).
  ComplexMatrix block(int r0, int r1, int c0, int c1) const;
  ComplexVector col(int j) const;
  void set_col(int j, const ComplexVector& v);

  cplx trace() const;
  double max_abs() const;
  bool all_finite() const;

  const std::vector<cplx>& data() const { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);

/// A* A, Hermitian by construction (upper triangle computed, lower mirrored).
ComplexMatrix adjoint_times_self(const ComplexMatrix& a);
/// A A*, Hermitian by construction.
ComplexMatrix times_adjoint(const ComplexMatrix& a);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace nilproj
