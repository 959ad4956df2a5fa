#pragma once

#include <vector>

#include "nilproj/complex_matrix.hpp"

namespace nilproj {

/// Eigenvalues of a Hermitian matrix in ascending order, computed by cyclic
/// Jacobi rotations iterated until every off-diagonal magnitude drops below
/// tol. Throws NotHermitian if the max entrywise defect ||H - H*|| exceeds
/// tol, NoConvergence if the sweep limit is exhausted first.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double tol,
                                          int max_sweeps = 100);

/// Operator (spectral) norm: the largest singular value of a.
double operator_norm(const ComplexMatrix& a);

/// QR-retracts an n x r matrix of full column rank onto the isometries
/// (V* V = I_r). Modified Gram-Schmidt with one re-orthogonalization pass;
/// the triangular factor has real positive diagonal, so an input that is
/// already an isometry is returned unchanged up to rounding. Throws
/// RankDeficient when a pivot magnitude falls below 1e-12.
ComplexMatrix qr_isometry(const ComplexMatrix& m);

/// Solves A x = b by Gaussian elimination with partial pivoting.
/// Throws Singular when the pivot magnitude falls below 1e-12.
ComplexVector solve_linear(ComplexMatrix a, ComplexVector b);

/// Given a rank-one projection P (Hermitian, idempotent and of unit trace
/// within tol), returns the unit vector e with P = e (x) e*. The phase is
/// fixed so that the largest-magnitude entry of e is real nonnegative.
ComplexVector rank_one_extract(const ComplexMatrix& p, double tol);

}  // namespace nilproj
