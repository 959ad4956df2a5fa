#pragma once

#include <vector>

#include "nilproj/complex_matrix.hpp"

namespace nilproj {

/// The n corner norms ||E_{k-1}^perp A E_k|| of a square matrix together
/// with their maximum, which equals dist(A, strictly upper triangulars).
struct CornerProfile {
  int n = 0;
  std::vector<double> norms;  // norms[k-1] = ||E_{k-1}^perp A E_k||, k = 1..n
  double max_norm = 0.0;
};

/// Diagonal 0/1 projection onto the span of the first k standard basis
/// vectors. E_0 is the zero matrix, E_n the identity.
ComplexMatrix truncation_projection(int n, int k);

/// Corner norms of A. norms[k-1] is the operator norm of the trimmed
/// (n-k+1) x k block of rows k..n and columns 1..k. Parallelized across k
/// when built with OpenMP; results are identical to the serial reference.
CornerProfile corner_profile(const ComplexMatrix& a);

/// Serial reference implementation of corner_profile.
CornerProfile corner_profile_serial(const ComplexMatrix& a);

/// dist(A, strictly upper triangular algebra) = max corner norm.
double arveson_distance(const ComplexMatrix& a);

}  // namespace nilproj
