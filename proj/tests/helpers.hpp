#pragma once

// Shared test-only utilities.

#include <string>

#include "nilproj/complex_matrix.hpp"
#include "nilproj/matcore.hpp"

namespace nilproj::testutil {

/// Isometry whose columns span the range of the (approximate) rank-r
/// projection P: greedily picks r independent columns of P, then retracts.
inline ComplexMatrix isometry_from_projection(const ComplexMatrix& p, int r) {
  const int n = p.rows();
  ComplexMatrix picked(n, r);
  int found = 0;
  std::vector<ComplexVector> basis;
  for (int j = 0; j < n && found < r; ++j) {
    ComplexVector candidate = p.col(j);
    for (const ComplexVector& b : basis) {
      const cplx coef = inner(b, candidate);
      for (int i = 0; i < n; ++i) candidate[i] -= coef * b[i];
    }
    const double nrm = candidate.norm();
    if (nrm < 1e-3) continue;
    for (int i = 0; i < n; ++i) candidate[i] /= nrm;
    basis.push_back(candidate);
    picked.set_col(found, p.col(j));
    ++found;
  }
  if (found < r) throw RankDeficient("isometry_from_projection: too few independent columns");
  return qr_isometry(picked);
}

}  // namespace nilproj::testutil
