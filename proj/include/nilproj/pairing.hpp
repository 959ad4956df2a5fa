#pragma once

#include <vector>

#include "nilproj/complex_matrix.hpp"

namespace nilproj {

/// A closest projection-nilpotent pair: Q - T = nu U with Q a corank-1
/// projection, T strictly upper triangular and U unitary.
struct ClosestPair {
  int n = 0;
  ComplexMatrix q;
  ComplexMatrix t;
  ComplexMatrix u;
  double nu = 0.0;
};

/// Diagonal unitary D of entry phases and the canonical form Qc = D* Q D,
/// whose off-diagonal entries are real nonpositive.
struct PhaseCanonicalization {
  ComplexMatrix d;
  ComplexMatrix qc;
};

struct EquivalenceResult {
  bool equivalent = false;
  double defect = 0.0;
};

/// Reconstructs the unique closest strictly upper triangular T to an optimal
/// corank-1 projection Q with equal corner profile nu (checked to 1e-6,
/// ProfileMismatch otherwise). Column t_k is found by forcing column k of
/// Q - T orthogonal to columns 1..k-1.
ComplexMatrix closest_nilpotent(const ComplexMatrix& q, double nu);

/// U = (Q - T)/nu, verified unitary: throws NotUnitary when
/// ||U* U - I||_max exceeds tol.
ComplexMatrix residual_unitary(const ComplexMatrix& q, const ComplexMatrix& t,
                               double nu, double tol = 1e-6);

/// Extracts the phases of the rank-one complement of Q and conjugates them
/// away. Throws NotCorankOne unless I - Q is a rank-one projection within
/// 1e-6.
PhaseCanonicalization canonical_phases(const ComplexMatrix& q);

/// Decides unitary equivalence of two closest pairs by reducing both to the
/// all-ones-phase canonical form and comparing entrywise.
EquivalenceResult pairs_unitarily_equivalent(const ClosestPair& p1,
                                             const ClosestPair& p2, double tol);

/// max_{i,j} |Q_{ij} - Q_{n-j+1, n-i+1}|: deviation from symmetry about the
/// anti-diagonal.
double antidiagonal_defect(const ComplexMatrix& q);

/// Convenience constructor running the full pipeline:
/// optimal_projection -> closest_nilpotent -> residual_unitary.
ClosestPair build_closest_pair(int n, const std::vector<cplx>& phases = {});

}  // namespace nilproj
