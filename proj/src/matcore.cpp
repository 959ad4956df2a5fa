#include "nilproj/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nilproj {

namespace {

double hermitian_defect(const ComplexMatrix& h) {
  double defect = 0.0;
  for (int i = 0; i < h.rows(); ++i)
    for (int j = i; j < h.cols(); ++j)
      defect = std::max(defect, std::abs(h(i, j) - std::conj(h(j, i))));
  return defect;
}

double max_offdiag(const ComplexMatrix& h) {
  double m = 0.0;
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j)
      if (i != j) m = std::max(m, std::abs(h(i, j)));
  return m;
}

// Two-sided unitary rotation on rows/columns (p, q) annihilating H(p, q).
// With b = H(p,q) = r * u, |u| = 1, the rotation is
//   U_pp = c, U_pq = -s u, U_qp = s conj(u), U_qq = c,
// where t = tan(theta) is the small-magnitude root of t^2 - 2 tau t - 1 = 0,
// tau = (H_qq - H_pp) / (2r).
void jacobi_rotate(ComplexMatrix& h, int p, int q) {
  const cplx b = h(p, q);
  const double r = std::abs(b);
  const cplx u = b / r;
  const double tau = (h(q, q).real() - h(p, p).real()) / (2.0 * r);
  double t;
  if (tau == 0.0) {
    t = 1.0;
  } else {
    const double sgn = tau > 0.0 ? 1.0 : -1.0;
    t = -sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = h.rows();
  for (int i = 0; i < n; ++i) {  // right-multiplication by U
    const cplx hip = h(i, p), hiq = h(i, q);
    h(i, p) = hip * c + hiq * (s * std::conj(u));
    h(i, q) = -hip * (s * u) + hiq * c;
  }
  for (int j = 0; j < n; ++j) {  // left-multiplication by U*
    const cplx hpj = h(p, j), hqj = h(q, j);
    h(p, j) = c * hpj + (s * u) * hqj;
    h(q, j) = -(s * std::conj(u)) * hpj + c * hqj;
  }
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h_in, double tol,
                                          int max_sweeps) {
  if (!h_in.square()) throw NotHermitian("hermitian_eigenvalues: matrix not square");
  const int n = h_in.rows();
  if (n == 0) return {};
  if (hermitian_defect(h_in) > tol)
    throw NotHermitian("hermitian_eigenvalues: ||H - H*||_max exceeds tol");

  ComplexMatrix h(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = h_in(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (h_in(i, j) + std::conj(h_in(j, i)));
      h(i, j) = avg;
      h(j, i) = std::conj(avg);
    }
  }

  const double skip = tol * 1e-2;
  bool converged = (n == 1) || max_offdiag(h) < tol;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::abs(h(p, q)) > skip) jacobi_rotate(h, p, q);
    converged = max_offdiag(h) < tol;
  }
  if (!converged) throw NoConvergence("hermitian_eigenvalues: sweep limit exceeded");

  std::vector<double> evs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) evs[static_cast<size_t>(i)] = h(i, i).real();
  std::sort(evs.begin(), evs.end());
  return evs;
}

double operator_norm(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  const double scale = a.max_abs();
  if (scale == 0.0) return 0.0;
  const ComplexMatrix b = adjoint_times_self((1.0 / scale) * a);
  const std::vector<double> evs = hermitian_eigenvalues(b, 1e-13);
  return scale * std::sqrt(std::max(evs.back(), 0.0));
}

ComplexMatrix qr_isometry(const ComplexMatrix& m) {
  const int n = m.rows(), r = m.cols();
  if (n < r) throw RankDeficient("qr_isometry: more columns than rows");
  ComplexMatrix v = m;
  for (int k = 0; k < r; ++k) {
    ComplexVector ck = v.col(k);
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < k; ++j) {
        const ComplexVector cj = v.col(j);
        const cplx coef = inner(cj, ck);
        for (int i = 0; i < n; ++i) ck[i] -= coef * cj[i];
      }
    const double nrm = ck.norm();
    if (nrm < 1e-12)
      throw RankDeficient("qr_isometry: pivot below 1e-12 at column " + std::to_string(k));
    for (int i = 0; i < n; ++i) ck[i] /= nrm;
    v.set_col(k, ck);
  }
  return v;
}

ComplexVector solve_linear(ComplexMatrix a, ComplexVector b) {
  if (!a.square()) throw Singular("solve_linear: matrix not square");
  const int k = a.rows();
  if (b.dim() != k) throw DimensionMismatch("solve_linear: rhs length mismatch");

  for (int col = 0; col < k; ++col) {
    int pivot = col;
    double best = std::abs(a(col, col));
    for (int i = col + 1; i < k; ++i)
      if (std::abs(a(i, col)) > best) {
        best = std::abs(a(i, col));
        pivot = i;
      }
    if (best < 1e-12) throw Singular("solve_linear: pivot below 1e-12");
    if (pivot != col) {
      for (int j = 0; j < k; ++j) std::swap(a(col, j), a(pivot, j));
      std::swap(b[col], b[pivot]);
    }
    for (int i = col + 1; i < k; ++i) {
      const cplx factor = a(i, col) / a(col, col);
      if (factor == cplx(0.0, 0.0)) continue;
      for (int j = col; j < k; ++j) a(i, j) -= factor * a(col, j);
      b[i] -= factor * b[col];
    }
  }
  ComplexVector x(k);
  for (int i = k - 1; i >= 0; --i) {
    cplx sum = b[i];
    for (int j = i + 1; j < k; ++j) sum -= a(i, j) * x[j];
    x[i] = sum / a(i, i);
  }
  return x;
}

ComplexVector rank_one_extract(const ComplexMatrix& p, double tol) {
  if (!p.square()) throw NotRankOneProjection("rank_one_extract: matrix not square");
  const int n = p.rows();
  if (hermitian_defect(p) > tol)
    throw NotRankOneProjection("rank_one_extract: not Hermitian within tol");
  if (std::abs(p.trace() - cplx(1.0, 0.0)) > tol)
    throw NotRankOneProjection("rank_one_extract: trace not 1 within tol");
  if (max_abs_diff(p * p, p) > tol)
    throw NotRankOneProjection("rank_one_extract: not idempotent within tol");

  int jmax = 0;
  for (int j = 1; j < n; ++j)
    if (p(j, j).real() > p(jmax, jmax).real()) jmax = j;
  ComplexVector e = p.col(jmax);
  const double nrm = e.norm();
  if (nrm <= tol) throw NotRankOneProjection("rank_one_extract: dominant column is zero");
  for (int i = 0; i < n; ++i) e[i] /= nrm;

  int imax = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(e[i]) > std::abs(e[imax])) imax = i;
  const cplx phase = e[imax] / std::abs(e[imax]);
  for (int i = 0; i < n; ++i) e[i] *= std::conj(phase);

  if (max_abs_diff(p, ComplexMatrix::outer(e, e)) > 10.0 * tol)
    throw NotRankOneProjection("rank_one_extract: residual exceeds 10*tol");
  return e;
}

}  // namespace nilproj
