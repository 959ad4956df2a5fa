#pragma once

#include <cstdint>
#include <vector>

#include "nilproj/arveson.hpp"
#include "nilproj/complex_matrix.hpp"
#include "nilproj/rng.hpp"

namespace nilproj {


/// Seed used by the CLI and the acceptance runs unless overridden.
inline constexpr uint64_t kDefaultSeed = 1729;

/// Proposals rejected in a row before the step size is multiplied by decay.
inline constexpr int kStallLimit = 500;

struct SearchConfig {
  int rank = 1;
  int dim = 2;
  uint64_t seed = kDefaultSeed;
  int starts = 8;
  int steps_per_start = 20000;
  double initial_step = 0.1;
  double decay = 0.5;
  double min_step = 1e-7;
  bool real_only = false;
  bool persymmetric_bias = false;
};

struct SearchResult {
  double best_objective = 0.0;
  ComplexMatrix best_isometry;    // n x r
  ComplexMatrix best_projection;  // V V*
  CornerProfile profile;
  long long evaluations = 0;
  std::vector<double> per_start_bests;
};

struct StartOutcome {
  double best = 0.0;
  ComplexMatrix isometry;
  long long evaluations = 0;
};

/// dist(V V*, nilpotents) for an isometry V (NotIsometry if
/// ||V* V - I||_max > 1e-8).
double objective(const ComplexMatrix& v);

/// One random-walk move: a Gaussian perturbation of entrywise scale step
/// (imaginary parts suppressed when real_only, averaged with its
/// anti-transpose image when persymmetric_bias), retracted back onto the
/// isometries. Retries a fresh draw up to 10 times on RankDeficient.
ComplexMatrix propose(const ComplexMatrix& v, double step, Xoshiro256pp& rng,
                      bool real_only = false, bool persymmetric_bias = false);

/// One start of the walk: seeded initial isometry, then greedy descent with
/// the step-decay schedule. accepted_trace, when given, records the accepted
/// objective values in order.
StartOutcome run_single_start(const SearchConfig& config, int start_index,
                              std::vector<double>* accepted_trace = nullptr);

/// Multistart greedy random-walk minimization of the max corner norm over
/// rank-r projections P = V V*. Starts run concurrently when built with
/// OpenMP; per-start results are bitwise identical to the serial reference
/// and the merge is deterministic (min objective, then lowest start index).
SearchResult random_walk_minimize(const SearchConfig& config);

/// Serial reference implementation of random_walk_minimize.
SearchResult random_walk_minimize_serial(const SearchConfig& config);

struct TableRow {
  int r = 0;
  int n = 0;
  double estimate = 0.0;
  double formula = 0.0;
  double abs_diff = 0.0;
  bool below_formula = false;  // estimate < formula - 2e-3
  bool below_bound = false;    // estimate < lower_bound(r, n) - 1e-9
};

struct ConjectureTable {
  std::vector<TableRow> rows;  // sorted by (n, r)
  int violations = 0;          // rows with either flag set
};

/// Runs random_walk_minimize for every 1 <= r <= n <= n_max (rank and dim of
/// the template are overwritten per cell) and pairs each estimate with the
/// conjectured formula value.
ConjectureTable conjecture_table(int n_max, const SearchConfig& config_template);

}  // namespace nilproj
