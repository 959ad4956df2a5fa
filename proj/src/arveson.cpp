#include "nilproj/arveson.hpp"

#include <algorithm>

#include "nilproj/matcore.hpp"

namespace nilproj {

namespace {

// ||E_{k-1}^perp A E_k|| = operator norm of rows k..n by columns 1..k.
double corner_norm(const ComplexMatrix& a, int k) {
  const ComplexMatrix blk = a.block(k - 1, a.rows(), 0, k);
  if (blk.rows() == 0 || blk.cols() == 0) return 0.0;
  return operator_norm(blk);
}

CornerProfile finalize(int n, std::vector<double> norms) {
  CornerProfile profile;
  profile.n = n;
  profile.norms = std::move(norms);
  profile.max_norm = 0.0;
  for (double v : profile.norms) profile.max_norm = std::max(profile.max_norm, v);
  return profile;
}

}  // namespace

ComplexMatrix truncation_projection(int n, int k) {
  if (n < 1) throw IndexOutOfRange("truncation_projection: n must be positive");
  if (k < 0 || k > n) throw IndexOutOfRange("truncation_projection: k outside 0..n");
  ComplexMatrix e(n, n);
  for (int i = 0; i < k; ++i) e(i, i) = 1.0;
  return e;
}

CornerProfile corner_profile(const ComplexMatrix& a) {
  if (!a.square()) throw DomainError("corner_profile: matrix not square");
  const int n = a.rows();
  std::vector<double> norms(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int k = 1; k <= n; ++k) norms[static_cast<size_t>(k - 1)] = corner_norm(a, k);
  return finalize(n, std::move(norms));
}

CornerProfile corner_profile_serial(const ComplexMatrix& a) {
  if (!a.square()) throw DomainError("corner_profile: matrix not square");
  const int n = a.rows();
  std::vector<double> norms(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) norms[static_cast<size_t>(k - 1)] = corner_norm(a, k);
  return finalize(n, std::move(norms));
}

double arveson_distance(const ComplexMatrix& a) { return corner_profile(a).max_norm; }

}  // namespace nilproj
