#include "nilproj/corank1.hpp"

#include <cmath>
#include <string>

namespace nilproj {

namespace {

constexpr double kPi = 3.141592653589793238462643383280;

void require_unit_interval(double v, const char* name) {
  if (v < -1e-12 || v > 1.0 + 1e-12)
    throw DomainError(std::string(name) + " outside [0, 1]");
}

cplx pow_int(cplx base, int exponent) {
  cplx result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

double g_disc(double x, double y) {
  require_unit_interval(x, "g_disc: x");
  require_unit_interval(y, "g_disc: y");
  return x * x * y * y - 4.0 * x * x * y + 2.0 * x * y * y + 4.0 * x * x -
         2.0 * x * y + y * y - 2.0 * y + 1.0;
}

double f_norm_sq(double x, double y) {
  double g = g_disc(x, y);
  if (g < 0.0) {
    if (g < -1e-14) throw DomainError("f_norm_sq: discriminant negative beyond slack");
    g = 0.0;
  }
  return (std::sqrt(g) - x * y - y + 2.0 * x + 1.0) / 2.0;
}

double h_step(double t, double x) {
  const double denom = t * x + t - x;
  if (std::abs(denom) <= 1e-12) throw PoleError("h_step: denominator vanishes");
  return (-t * t + 2.0 * t * x + t - x) / denom;
}

double h_inverse(double t, double v) {
  const double denom = v * t - v - 2.0 * t + 1.0;
  if (std::abs(denom) <= 1e-12) throw PoleError("h_inverse: denominator vanishes");
  const double x = (t - t * t - v * t) / denom;
  if (std::abs(h_step(t, x) - v) > 1e-10)
    throw OutOfRange("h_inverse: back-substitution residual exceeds 1e-10");
  return x;
}

double lower_bound(int r, int n) {
  if (r < 1 || n < 1 || r > n) throw DomainError("lower_bound: need 1 <= r <= n");
  const double ratio = static_cast<double>(r) / static_cast<double>(n);
  return std::sqrt(0.5 * ratio * (1.0 + ratio));
}

double nu_corank1(int n) {
  if (n < 2) throw DomainError("nu_corank1: need n >= 2");
  return 0.5 / std::cos(static_cast<double>(n - 1) * kPi / static_cast<double>(3 * n - 2));
}

double nu_rank1(int n) {
  if (n < 1) throw DomainError("nu_rank1: need n >= 1");
  return 0.5 / std::cos(kPi / static_cast<double>(n + 2));
}

double nu_conjecture(int r, int n) {
  if (r < 1 || n < 1 || r > n) throw DomainError("nu_conjecture: need 1 <= r <= n");
  const double ratio = static_cast<double>(n) / static_cast<double>(r);
  return 0.5 / std::cos(kPi / (ratio + 2.0));
}

PartialTraceSequence partial_trace_sequence(int n, double t, bool assert_terminal) {
  if (n < 1) throw DomainError("partial_trace_sequence: need n >= 1");
  if (t < 0.25 - 1e-12 || t > 1.0 + 1e-12)
    throw DomainError("partial_trace_sequence: t outside [1/4, 1]");
  PartialTraceSequence seq;
  seq.n = n;
  seq.t = t;
  seq.a.assign(static_cast<size_t>(n) + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    const double value = h_step(t, seq.a[static_cast<size_t>(k - 1)]);
    if (value < -1e-9 || value > 1.0 + 1e-9)
      throw DomainError("partial_trace_sequence: iterate escaped [0, 1] at k=" +
                        std::to_string(k));
    seq.a[static_cast<size_t>(k)] = value;
  }
  if (assert_terminal && std::abs(seq.a[static_cast<size_t>(n)] - 1.0) > 1e-9)
    throw NotTerminal("partial_trace_sequence: |a_n - 1| exceeds 1e-9");
  return seq;
}

ComplexMatrix optimal_projection(int n, const std::vector<cplx>& phases) {
  if (n < 2) throw DomainError("optimal_projection: need n >= 2");
  if (!phases.empty()) {
    if (static_cast<int>(phases.size()) != n)
      throw DomainError("optimal_projection: need exactly n phases");
    for (const cplx& z : phases)
      if (std::abs(std::abs(z) - 1.0) > 1e-12)
        throw DomainError("optimal_projection: phase modulus differs from 1");
  }
  const double nu = nu_corank1(n);
  const PartialTraceSequence seq = partial_trace_sequence(n, nu * nu, true);
  ComplexVector e(n);
  for (int k = 1; k <= n; ++k) {
    const double gap =
        std::max(seq.a[static_cast<size_t>(k)] - seq.a[static_cast<size_t>(k - 1)], 0.0);
    const cplx z = phases.empty() ? cplx(1.0, 0.0) : phases[static_cast<size_t>(k - 1)];
    e[k - 1] = z * std::sqrt(gap);
  }
  return ComplexMatrix::identity(n) - ComplexMatrix::outer(e, e);
}

std::vector<double> q_poly_sequence(int n, double t) {
  if (n < 2) throw DomainError("q_poly_sequence: need n >= 2");
  std::vector<double> q(static_cast<size_t>(n));
  q[0] = 1.0;
  q[1] = -t * t + 3.0 * t - 1.0;
  for (int k = 2; k < n; ++k)
    q[static_cast<size_t>(k)] = (3.0 * t - 1.0) * q[static_cast<size_t>(k - 1)] -
                                t * t * t * q[static_cast<size_t>(k - 2)];
  return q;
}

SpectralParams spectral_params(double t) {
  if (t < 0.25) throw DomainError("spectral_params: need t >= 1/4");
  SpectralParams sp;
  sp.t = t;
  sp.y = std::sqrt(4.0 * t - 1.0);
  sp.lambda1 = cplx((3.0 * t - 1.0) / 2.0, (1.0 - t) * sp.y / 2.0);
  sp.lambda2 = std::conj(sp.lambda1);
  return sp;
}

QPolyClosedForm q_poly_closed_form(int n, double t) {
  if (n < 2) throw DomainError("q_poly_closed_form: need n >= 2");
  if (t <= 0.25 || t >= 1.0)
    throw DomainError("q_poly_closed_form: need t strictly inside (1/4, 1)");
  const SpectralParams sp = spectral_params(t);
  const cplx l1m = pow_int(sp.lambda1, n - 1);
  const cplx l2m = pow_int(sp.lambda2, n - 1);
  const cplx l1n = l1m * sp.lambda1;
  const cplx l2n = l2m * sp.lambda2;
  const cplx denom(0.0, t * (1.0 - t) * sp.y);
  const cplx r1 = (t * (l1n - l2n) - sp.lambda2 * l1n + sp.lambda1 * l2n) / denom;
  const cplx r2 = (t * (l1m - l2m) - sp.lambda2 * l1m + sp.lambda1 * l2m) / denom;
  QPolyClosedForm out;
  out.q_nm1 = r1.real();
  out.q_nm2 = r2.real();
  out.imag_residue = std::max(std::abs(r1.imag()), std::abs(r2.imag()));
  return out;
}

CandidateSet candidate_values(int n) {
  if (n < 2) throw DomainError("candidate_values: need n >= 2");
  CandidateSet set;
  set.n = n;
  set.m = 3 * n - 2;
  set.lower_bound_sq = lower_bound(n - 1, n) * lower_bound(n - 1, n);
  // k = 0 gives t = 1/4, which never reaches the bound window for n >= 3;
  // asserted rather than assumed.
  if (n >= 3 && 0.25 >= set.lower_bound_sq)
    throw SelectionFailure("candidate_values: k=0 value 1/4 passes the bound filter");

  for (int k = 1; k <= set.m / 2; ++k) {
    const double c = std::cos(static_cast<double>(k) * kPi / static_cast<double>(set.m));
    if (std::abs(c) < 1e-12) continue;
    const double t = 0.25 / (c * c);
    if (t >= 0.25 - 1e-12 && t <= 1.0 + 1e-12) set.entries.push_back({k, t});
  }

  int winners = 0;
  int winner_k = -1;
  for (const Candidate& cand : set.entries)
    if (cand.t >= set.lower_bound_sq) {
      ++winners;
      winner_k = cand.k;
    }
  if (winners != 1)
    throw SelectionFailure("candidate_values: " + std::to_string(winners) +
                           " candidates pass the bound filter for n=" + std::to_string(n));
  if (winner_k != n - 1)
    throw SelectionFailure("candidate_values: selected index " + std::to_string(winner_k) +
                           " differs from n-1");
  set.selected_k = winner_k;
  return set;
}

double shoot_for_t(int n) {
  if (n < 2) throw DomainError("shoot_for_t: need n >= 2");
  const double nu = nu_corank1(n);
  const double t_star = nu * nu;

  // n-fold iterate of h_t from 0, minus 1. Unlike partial_trace_sequence this
  // places no containment constraint on the iterates: probed t values off the
  // root legitimately push them outside [0, 1].
  auto f_of = [n](double t) {
    double x = 0.0;
    for (int k = 0; k < n; ++k) x = h_step(t, x);
    return x - 1.0;
  };
  auto eval = [&f_of](double t, double& out) {
    try {
      out = f_of(t);
    } catch (const PoleError&) {
      return false;
    }
    return std::isfinite(out);
  };

  const int m = 3 * n - 2;
  const double c_below = std::cos(static_cast<double>(n - 2) * kPi / static_cast<double>(m));
  const double t_below = 0.25 / (c_below * c_below);

  // Bracket around the closed-form answer; the initial radius is half the gap
  // to the nearest candidate below, halved until the endpoints straddle the
  // root (F may hit poles or keep its sign at wider radii).
  double radius = (t_star - t_below) / 2.0;
  double lo = 0.0, hi = 0.0, flo = 0.0;
  bool bracketed = false;
  for (int attempt = 0; attempt < 60 && !bracketed; ++attempt) {
    lo = t_star - radius;
    hi = std::min(t_star + radius, 1.0);
    double a = 0.0, b = 0.0;
    if (eval(lo, a) && eval(hi, b) && ((a < 0.0) != (b < 0.0))) {
      flo = a;
      bracketed = true;
    } else {
      radius /= 2.0;
    }
  }
  if (!bracketed) throw BracketFailure("shoot_for_t: no sign change around t*");

  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    double fm = 0.0;
    if (!eval(mid, fm)) throw BracketFailure("shoot_for_t: pole inside bracket");
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace nilproj
