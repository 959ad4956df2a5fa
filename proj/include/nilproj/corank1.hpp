#pragma once

#include <vector>

#include "nilproj/complex_matrix.hpp"

namespace nilproj {

/// Partial traces a_0..a_n of the rank-one complement of a corank-1
/// projection, generated from the squared distance t.
struct PartialTraceSequence {
  int n = 0;
  double t = 0.0;
  std::vector<double> a;  // size n+1, a[0] = 0
};

/// One candidate squared distance t = (1/4) sec^2(k pi / (3n-2)).
struct Candidate {
  int k = 0;
  double t = 0.0;
};

/// All candidate squared distances in [1/4, 1] for dimension n, with the
/// unique candidate passing the lower-bound filter marked selected.
struct CandidateSet {
  int n = 0;
  int m = 0;  // 3n - 2
  std::vector<Candidate> entries;
  int selected_k = 0;
  double lower_bound_sq = 0.0;
};

/// y = sqrt(4t-1) and the conjugate roots lambda1, lambda2 of
/// z^2 - (3t-1) z + t^3, used by the closed-form q-polynomials.
struct SpectralParams {
  double t = 0.0;
  double y = 0.0;
  cplx lambda1;
  cplx lambda2;
};

/// q_{n-1}(t) and q_{n-2}(t) evaluated via SpectralParams, plus the largest
/// imaginary residue left by the complex quotients (zero in exact arithmetic).
struct QPolyClosedForm {
  double q_nm1 = 0.0;
  double q_nm2 = 0.0;
  double imag_residue = 0.0;
};

/// The quartic polynomial under the square root in f_norm_sq. Nonnegative on
/// the closed unit square, vanishing only at (0,1).
double g_disc(double x, double y);

/// Squared corner norm of an optimal corank-1 projection as a function of
/// consecutive partial traces: f(x,y) = (sqrt(g(x,y)) - xy - y + 2x + 1)/2.
/// Increasing in x, decreasing in y.
double f_norm_sq(double x, double y);

/// One step of the partial-trace recursion:
/// h_t(x) = (-t^2 + 2tx + t - x) / (tx + t - x).
double h_step(double t, double x);

/// Inverse of h_step in x, solved exactly from the linear-fractional form.
/// Throws OutOfRange when the back-substitution residual exceeds 1e-10.
double h_inverse(double t, double v);

/// Lower bound sqrt((r/2n)(1 + r/n)) on the distance from a rank-r
/// projection to any nilpotent.
double lower_bound(int r, int n);

/// Distance from the rank n-1 projections to the nilpotents:
/// (1/2) sec((n-1) pi / (3n-2)).
double nu_corank1(int n);

/// Distance from the rank-one projections to the nilpotents:
/// (1/2) sec(pi / (n+2)).
double nu_rank1(int n);

/// Conjectured distance for arbitrary rank: (1/2) sec(pi / (n/r + 2)).
/// Coincides with nu_rank1 at r = 1 and nu_corank1 at r = n-1.
double nu_conjecture(int r, int n);

/// Iterates h_step from a_0 = 0. Requires t in [1/4, 1] and each iterate to
/// stay inside [0, 1]. With assert_terminal, additionally requires
/// |a_n - 1| <= 1e-9 (NotTerminal otherwise).
PartialTraceSequence partial_trace_sequence(int n, double t,
                                            bool assert_terminal = false);

/// The optimal corank-1 projection Q = I - e (x) e* built from the partial
/// trace sequence at t = nu_corank1(n)^2, with entries
/// e_k = z_k sqrt(a_k - a_{k-1}). Default phases are all 1, which makes
/// every off-diagonal entry real nonpositive.
ComplexMatrix optimal_projection(int n, const std::vector<cplx>& phases = {});

/// q_0..q_{n-1} of the recurrence q_k = (3t-1) q_{k-1} - t^3 q_{k-2},
/// q_0 = 1, q_1 = -t^2 + 3t - 1.
std::vector<double> q_poly_sequence(int n, double t);

SpectralParams spectral_params(double t);

/// Closed-form q_{n-1}, q_{n-2} via the roots lambda1, lambda2. Requires
/// t strictly inside (1/4, 1).
QPolyClosedForm q_poly_closed_form(int n, double t);

/// Enumerates candidates t = (1/4) sec^2(k pi/(3n-2)) for k = 1..(3n-2)/2,
/// keeps those in [1/4, 1], and verifies that exactly one passes the
/// lower-bound filter and that its index is n-1. SelectionFailure otherwise.
CandidateSet candidate_values(int n);

/// Independent cross-check of nu_corank1: bisects a_n(t) - 1 = 0 on a
/// bracket around the closed-form answer, shrinking the bracket radius until
/// the endpoints straddle the root. Returns the root to 1e-12.
double shoot_for_t(int n);

}  // namespace nilproj
