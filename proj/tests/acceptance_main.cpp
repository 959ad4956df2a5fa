// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. --full-table additionally runs the
// r <= n <= 10 sweep (informational, not a gate).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "nilproj/arveson.hpp"
#include "nilproj/cli.hpp"
#include "nilproj/corank1.hpp"
#include "nilproj/matcore.hpp"
#include "nilproj/matrix_io.hpp"
#include "nilproj/pairing.hpp"
#include "nilproj/search.hpp"

using namespace nilproj;

namespace {

const std::string kFixtures = NILPROJ_FIXTURE_DIR;
constexpr double kPi = 3.141592653589793238462643383280;

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

struct Checker {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool golden_pairs(Checker& c) {
  for (int n : {3, 4, 5}) {
    const std::string q_path = tmp_path("nilproj_acc_q.json");
    const std::string t_path = tmp_path("nilproj_acc_t.json");
    std::ostringstream out, err;
    const auto t0 = clock_type::now();
    const int code = cli::run({"pair", "--dim", std::to_string(n), "--out-q", q_path,
                               "--out-t", t_path},
                              out, err);
    const double elapsed = seconds_since(t0);
    c.require(code == 0, "pair --dim " + std::to_string(n) + " exited " + std::to_string(code));
    c.require(elapsed < 1.0, "pair --dim " + std::to_string(n) + " took over 1s");
    const double dq = max_abs_diff(read_matrix(q_path),
                                   read_matrix(kFixtures + "/q" + std::to_string(n) + ".json"));
    const double dt = max_abs_diff(read_matrix(t_path),
                                   read_matrix(kFixtures + "/t" + std::to_string(n) + ".json"));
    c.require(dq < 1e-4, "Q mismatch " + std::to_string(dq) + " at n=" + std::to_string(n));
    c.require(dt < 1e-4, "T mismatch " + std::to_string(dt) + " at n=" + std::to_string(n));
  }
  return c.ok;
}

bool distance_values(Checker& c) {
  const auto t0 = clock_type::now();
  c.require(std::abs(nu_corank1(3) - 0.80194) <= 1e-5, "nu(3) off 0.80194");
  c.require(std::abs(nu_corank1(2) - 0.70711) <= 1e-5, "nu(2) off 0.70711");
  for (int n = 2; n <= 12; ++n) {
    const double defect = std::abs(arveson_distance(optimal_projection(n)) - nu_corank1(n));
    c.require(defect <= 1e-8, "distance defect " + std::to_string(defect) +
                                  " at n=" + std::to_string(n));
  }
  c.require(seconds_since(t0) < 5.0, "distance sweep took over 5s");
  return c.ok;
}

bool unitary_residual(Checker& c) {
  for (int n = 2; n <= 12; ++n) {
    const ClosestPair pair = build_closest_pair(n);
    const double defect =
        max_abs_diff(adjoint_times_self(pair.u), ComplexMatrix::identity(n));
    c.require(defect < 1e-9, "||U*U - I|| = " + std::to_string(defect) +
                                 " at n=" + std::to_string(n));
    const ComplexMatrix scaled = (1.0 / pair.nu) * (pair.q - pair.t);
    ComplexMatrix gram(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gram(i, j) = inner(scaled.col(i), scaled.col(j));
    c.require(max_abs_diff(gram, ComplexMatrix::identity(n)) <= 1e-8,
              "column Gram matrix off identity at n=" + std::to_string(n));
  }
  return c.ok;
}

bool candidate_uniqueness(Checker& c) {
  for (int n = 3; n <= 50; ++n) {
    try {
      const CandidateSet set = candidate_values(n);
      c.require(set.selected_k == n - 1, "selected_k != n-1 at n=" + std::to_string(n));
      int in_window = 0;
      for (const Candidate& cand : set.entries)
        if (cand.t >= set.lower_bound_sq) ++in_window;
      c.require(in_window == 1, "window count " + std::to_string(in_window) +
                                    " at n=" + std::to_string(n));
    } catch (const SelectionFailure& e) {
      c.require(false, std::string("SelectionFailure: ") + e.what());
    }
  }
  return c.ok;
}

bool cross_oracles(Checker& c) {
  for (int n = 2; n <= 12; ++n) {
    const double t_star = nu_corank1(n) * nu_corank1(n);
    const double root = shoot_for_t(n);
    c.require(std::abs(root - t_star) <= 1e-10,
              "shoot_for_t deviates at n=" + std::to_string(n));

    for (int i = 0; i < 50; ++i) {
      const double t = 0.25 + (i + 0.5) * 0.75 / 50.0;
      const QPolyClosedForm closed = q_poly_closed_form(n, t);
      const auto seq = q_poly_sequence(n, t);
      const bool match =
          std::abs(closed.q_nm1 - seq[n - 1]) <= 1e-8 * std::max(1.0, std::abs(seq[n - 1])) &&
          std::abs(closed.q_nm2 - seq[n - 2]) <= 1e-8 * std::max(1.0, std::abs(seq[n - 2]));
      c.require(match, "closed form mismatch at n=" + std::to_string(n) +
                           ", t=" + std::to_string(t));
    }

    const QPolyClosedForm at_star = q_poly_closed_form(n, t_star);
    const double defect = std::abs(at_star.q_nm1 - t_star * t_star * at_star.q_nm2);
    c.require(defect <= 1e-8 * std::max(1.0, std::abs(at_star.q_nm1)),
              "q_{n-1} != t^2 q_{n-2} at n=" + std::to_string(n));
  }
  return c.ok;
}

bool corner_closed_form(Checker& c) {
  for (int n = 2; n <= 10; ++n) {
    const double t = nu_corank1(n) * nu_corank1(n);
    const ComplexMatrix q = optimal_projection(n);
    const PartialTraceSequence seq = partial_trace_sequence(n, t);
    const CornerProfile profile = corner_profile(q);
    for (int k = 1; k <= n; ++k) {
      const double lhs = profile.norms[k - 1] * profile.norms[k - 1];
      const double rhs = f_norm_sq(seq.a[k - 1], seq.a[k]);
      c.require(std::abs(lhs - rhs) <= 1e-9, "corner " + std::to_string(k) +
                                                 " off closed form at n=" + std::to_string(n));
    }
  }
  return c.ok;
}

bool monotonicity_suite(Checker& c) {
  const int grid = 101;
  auto at = [&](int i) { return static_cast<double>(i) / (grid - 1); };
  int violations = 0;
  for (int yi = 0; yi < grid; ++yi)
    for (int xi = 0; xi + 1 < grid; ++xi)
      if (!(f_norm_sq(at(xi + 1), at(yi)) - f_norm_sq(at(xi), at(yi)) > 1e-12)) ++violations;
  for (int xi = 0; xi < grid; ++xi)
    for (int yi = 0; yi + 1 < grid; ++yi)
      if (!(f_norm_sq(at(xi), at(yi)) - f_norm_sq(at(xi), at(yi + 1)) > 1e-12)) ++violations;
  for (int xi = 0; xi < grid; ++xi)
    for (int yi = 0; yi < grid; ++yi) {
      const double g = g_disc(at(xi), at(yi));
      if (g < -1e-14) ++violations;
      if (!(xi == 0 && yi == grid - 1) && g <= 1e-12) ++violations;
      if (at(xi) <= at(yi)) {
        const double f = f_norm_sq(at(xi), at(yi));
        if (f < -1e-14 || f > 1.0 + 1e-14) ++violations;
      }
    }
  c.require(violations == 0, std::to_string(violations) + " grid violations");
  return c.ok;
}

bool search_reproduction(Checker& c) {
  struct Cell {
    int r, n;
    double target;
  };
  std::vector<Cell> cells = {{2, 5, 0.65270},
                             {3, 5, 0.76352},
                             {2, 4, 1.0 / std::sqrt(2.0)}};
  for (int n = 1; n <= 5; ++n) cells.push_back({1, n, nu_rank1(n)});

  for (const Cell& cell : cells) {
    SearchConfig config;
    config.rank = cell.r;
    config.dim = cell.n;
    const auto t0 = clock_type::now();
    const SearchResult result = random_walk_minimize(config);
    const double elapsed = seconds_since(t0);
    const double diff = std::abs(result.best_objective - cell.target);
    c.require(diff <= 2e-3, "estimate off by " + std::to_string(diff) + " at (r=" +
                                std::to_string(cell.r) + ", n=" + std::to_string(cell.n) + ")");
    c.require(elapsed < 120.0, "cell over 2 minutes");
  }
  return c.ok;
}

bool conjecture_table_gate(Checker& c) {
  const ConjectureTable table = conjecture_table(6, SearchConfig{});
  for (const TableRow& row : table.rows) {
    c.require(row.abs_diff <= 5e-3, "abs_diff " + std::to_string(row.abs_diff) + " at (r=" +
                                        std::to_string(row.r) + ", n=" + std::to_string(row.n) +
                                        ")");
    c.require(row.estimate >= lower_bound(row.r, row.n) - 1e-9,
              "estimate below lower bound at (r=" + std::to_string(row.r) +
                  ", n=" + std::to_string(row.n) + ")");
  }
  return c.ok;
}

bool property_suites(Checker& c) {
  for (int n = 2; n <= 12; ++n) {
    const PartialTraceSequence seq =
        partial_trace_sequence(n, nu_corank1(n) * nu_corank1(n), true);
    for (int k = 0; k <= n; ++k)
      c.require(std::abs(seq.a[k] + seq.a[n - k] - 1.0) <= 1e-9,
                "sequence symmetry fails at n=" + std::to_string(n));
  }

  for (int n = 2; n <= 10; ++n)
    c.require(antidiagonal_defect(optimal_projection(n)) < 1e-9,
              "anti-diagonal defect at n=" + std::to_string(n));

  Xoshiro256pp rng(2718);
  for (int n : {3, 5, 7}) {
    std::vector<cplx> phases;
    for (int i = 0; i < n; ++i) {
      const double angle = 2.0 * kPi * rng.uniform01();
      phases.emplace_back(std::cos(angle), std::sin(angle));
    }
    const CornerProfile base = corner_profile(optimal_projection(n));
    const CornerProfile twisted = corner_profile(optimal_projection(n, phases));
    for (int k = 0; k < n; ++k)
      c.require(std::abs(base.norms[k] - twisted.norms[k]) <= 1e-10,
                "profile not phase invariant at n=" + std::to_string(n));

    const ClosestPair p1 = build_closest_pair(n);
    const ClosestPair p2 = build_closest_pair(n, phases);
    c.require(pairs_unitarily_equivalent(p1, p2, 1e-8).equivalent,
              "phase variants not equivalent at n=" + std::to_string(n));
  }

  {
    const ClosestPair pair = build_closest_pair(3);
    ComplexMatrix p = ComplexMatrix::identity(3) - pair.q;
    p(0, 0) += 1e-2;
    const ComplexVector e = rank_one_extract(p, 0.05);
    ClosestPair off = pair;
    off.q = ComplexMatrix::identity(3) - ComplexMatrix::outer(e, e);
    c.require(!pairs_unitarily_equivalent(pair, off, 1e-8).equivalent,
              "perturbed pair reported equivalent");
  }

  {
    SearchConfig config;
    config.rank = 2;
    config.dim = 4;
    config.starts = 4;
    config.steps_per_start = 2000;
    const SearchResult a = random_walk_minimize(config);
    const SearchResult b = random_walk_minimize(config);
    const SearchResult s = random_walk_minimize_serial(config);
    bool identical = a.per_start_bests.size() == b.per_start_bests.size() &&
                     a.per_start_bests.size() == s.per_start_bests.size();
    for (size_t i = 0; identical && i < a.per_start_bests.size(); ++i)
      identical = a.per_start_bests[i] == b.per_start_bests[i] &&
                  a.per_start_bests[i] == s.per_start_bests[i];
    c.require(identical && a.best_objective == b.best_objective &&
                  a.best_objective == s.best_objective,
              "search runs are not byte-identical");
  }
  return c.ok;
}

void full_table_sweep() {
  std::printf("-- full sweep r <= n <= 10 (informational) --\n");
  std::printf("r,n,nu_estimate,nu_formula,abs_diff\n");
  const ConjectureTable table = conjecture_table(10, SearchConfig{});
  for (const TableRow& row : table.rows)
    std::printf("%d,%d,%.12g,%.12g,%.12g%s\n", row.r, row.n, row.estimate, row.formula,
                row.abs_diff,
                row.below_formula || row.below_bound ? "  <-- violation" : "");
  std::printf("violations: %d\n", table.violations);
}

}  // namespace

int main(int argc, char** argv) {
  bool full_table = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--full-table") full_table = true;

  struct Criterion {
    const char* name;
    std::function<bool(Checker&)> fn;
  };
  const std::vector<Criterion> criteria = {
      {"golden pair matrices (n=3,4,5) within 1e-4, under 1s each", golden_pairs},
      {"distance values and constructed-projection distances", distance_values},
      {"unitary residual and column Gram certificates (n <= 12)", unitary_residual},
      {"candidate uniqueness with index n-1 (3 <= n <= 50)", candidate_uniqueness},
      {"shooting and q-polynomial cross-oracles (n <= 12)", cross_oracles},
      {"corner norms match the closed form (n <= 10)", corner_closed_form},
      {"f/g grid monotonicity and nonnegativity", monotonicity_suite},
      {"search reproduces the published estimates", search_reproduction},
      {"conjecture table within 5e-3 for r <= n <= 6", conjecture_table_gate},
      {"property suites (symmetry, phases, equivalence, determinism)", property_suites},
  };

  int passed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Checker checker;
    bool ok = false;
    std::string detail;
    const auto t0 = clock_type::now();
    try {
      ok = criteria[i].fn(checker);
      detail = checker.detail;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    std::printf("C%02zu %s %s (%.2fs)%s%s\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].name,
                seconds_since(t0), detail.empty() ? "" : " -- ", detail.c_str());
    if (ok) ++passed;
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());

  if (full_table) full_table_sweep();

  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
