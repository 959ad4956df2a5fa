#include "nilproj/pairing.hpp"

#include <cmath>
#include <string>

#include "nilproj/arveson.hpp"
#include "nilproj/corank1.hpp"
#include "nilproj/matcore.hpp"

namespace nilproj {

ComplexMatrix closest_nilpotent(const ComplexMatrix& q, double nu) {
  if (!q.square()) throw DomainError("closest_nilpotent: matrix not square");
  const int n = q.rows();
  if (n < 2) throw DomainError("closest_nilpotent: need n >= 2");

  const CornerProfile profile = corner_profile_serial(q);
  for (int k = 0; k < n; ++k)
    if (std::abs(profile.norms[static_cast<size_t>(k)] - nu) > 1e-6)
      throw ProfileMismatch("closest_nilpotent: corner norm " + std::to_string(k + 1) +
                            " deviates from nu by more than 1e-6");

  ComplexMatrix t(n, n);
  std::vector<ComplexVector> residual_cols;  // columns of Q - T settled so far
  residual_cols.push_back(q.col(0));         // t_1 = 0

  for (int k = 1; k < n; ++k) {
    // Unknowns: the k strictly-upper entries of column k of T. Row i demands
    // <d_i, q_k - t_k> = 0 for the settled residual column d_i.
    ComplexMatrix a(k, k);
    ComplexVector b(k);
    const ComplexVector qk = q.col(k);
    for (int i = 0; i < k; ++i) {
      const ComplexVector& di = residual_cols[static_cast<size_t>(i)];
      for (int j = 0; j < k; ++j) a(i, j) = std::conj(di[j]);
      b[i] = inner(di, qk);
    }
    const ComplexVector x = solve_linear(a, b);
    ComplexVector dk = qk;
    for (int j = 0; j < k; ++j) {
      t(j, k) = x[j];
      dk[j] -= x[j];
    }
    residual_cols.push_back(dk);
  }
  return t;
}

ComplexMatrix residual_unitary(const ComplexMatrix& q, const ComplexMatrix& t,
                               double nu, double tol) {
  if (nu <= 0.0) throw DomainError("residual_unitary: need nu > 0");
  const ComplexMatrix u = (1.0 / nu) * (q - t);
  const double defect = max_abs_diff(adjoint_times_self(u), ComplexMatrix::identity(u.rows()));
  if (defect > tol)
    throw NotUnitary("residual_unitary: ||U*U - I||_max = " + std::to_string(defect));
  return u;
}

PhaseCanonicalization canonical_phases(const ComplexMatrix& q) {
  if (!q.square()) throw NotCorankOne("canonical_phases: matrix not square");
  const int n = q.rows();
  ComplexVector e;
  try {
    e = rank_one_extract(ComplexMatrix::identity(n) - q, 1e-6);
  } catch (const NotRankOneProjection& err) {
    throw NotCorankOne(std::string("canonical_phases: ") + err.what());
  }
  PhaseCanonicalization out;
  out.d = ComplexMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    const double mag = std::abs(e[i]);
    out.d(i, i) = mag > 1e-12 ? e[i] / mag : cplx(1.0, 0.0);
  }
  out.qc = out.d.adjoint() * q * out.d;
  return out;
}

EquivalenceResult pairs_unitarily_equivalent(const ClosestPair& p1,
                                             const ClosestPair& p2, double tol) {
  if (p1.n != p2.n) throw DimensionMismatch("pairs_unitarily_equivalent: dims differ");
  const PhaseCanonicalization c1 = canonical_phases(p1.q);
  const PhaseCanonicalization c2 = canonical_phases(p2.q);
  const ComplexMatrix t1c = c1.d.adjoint() * p1.t * c1.d;
  const ComplexMatrix t2c = c2.d.adjoint() * p2.t * c2.d;
  EquivalenceResult result;
  result.defect = std::max(max_abs_diff(c1.qc, c2.qc), max_abs_diff(t1c, t2c));
  result.equivalent = result.defect <= tol;
  return result;
}

double antidiagonal_defect(const ComplexMatrix& q) {
  if (!q.square()) throw DomainError("antidiagonal_defect: matrix not square");
  const int n = q.rows();
  double defect = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      defect = std::max(defect, std::abs(q(i, j) - q(n - 1 - j, n - 1 - i)));
  return defect;
}

ClosestPair build_closest_pair(int n, const std::vector<cplx>& phases) {
  ClosestPair pair;
  pair.n = n;
  pair.nu = nu_corank1(n);
  pair.q = optimal_projection(n, phases);
  pair.t = closest_nilpotent(pair.q, pair.nu);
  pair.u = residual_unitary(pair.q, pair.t, pair.nu);
  return pair;
}

}  // namespace nilproj
