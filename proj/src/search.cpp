#include "nilproj/search.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "nilproj/corank1.hpp"
#include "nilproj/matcore.hpp"

namespace nilproj {

namespace {

ComplexMatrix gaussian_matrix(int n, int r, double scale, Xoshiro256pp& rng,
                              bool real_only) {
  ComplexMatrix m(n, r);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j) {
      const double re = scale * rng.gaussian();
      const double im = real_only ? 0.0 : scale * rng.gaussian();
      m(i, j) = cplx(re, im);
    }
  return m;
}

// J_n conj(E) J_r: the isometry-level image of anti-transposing P = V V*.
ComplexMatrix antitranspose_image(const ComplexMatrix& e) {
  const int n = e.rows(), r = e.cols();
  ComplexMatrix m(n, r);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = std::conj(e(n - 1 - i, r - 1 - j));
  return m;
}

// Max corner norm of P if it is strictly below threshold, nullopt otherwise
// (the walk only needs the exact value on accepted proposals).
std::optional<double> profile_max_below(const ComplexMatrix& p, double threshold) {
  const int n = p.rows();
  double max_norm = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double norm = operator_norm(p.block(k - 1, n, 0, k));
    if (norm >= threshold) return std::nullopt;
    max_norm = std::max(max_norm, norm);
  }
  return max_norm;
}

ComplexMatrix initial_isometry(const SearchConfig& config, Xoshiro256pp& rng) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    try {
      return qr_isometry(gaussian_matrix(config.dim, config.rank, 1.0, rng,
                                         config.real_only));
    } catch (const RankDeficient&) {
    }
  }
  throw RankDeficient("search: initial draw rank-deficient after 10 attempts");
}

SearchResult merge_outcomes(const std::vector<StartOutcome>& outcomes) {
  int best_index = 0;
  for (int s = 1; s < static_cast<int>(outcomes.size()); ++s)
    if (outcomes[static_cast<size_t>(s)].best < outcomes[static_cast<size_t>(best_index)].best)
      best_index = s;

  SearchResult result;
  result.per_start_bests.reserve(outcomes.size());
  result.evaluations = 0;
  for (const StartOutcome& outcome : outcomes) {
    result.per_start_bests.push_back(outcome.best);
    result.evaluations += outcome.evaluations;
  }
  const StartOutcome& winner = outcomes[static_cast<size_t>(best_index)];
  result.best_objective = winner.best;
  result.best_isometry = winner.isometry;
  result.best_projection = times_adjoint(winner.isometry);
  result.profile = corner_profile_serial(result.best_projection);
  return result;
}

void validate(const SearchConfig& config) {
  if (config.rank < 1 || config.dim < 1 || config.rank > config.dim)
    throw DomainError("search: need 1 <= rank <= dim");
  if (config.starts < 1 || config.steps_per_start < 1)
    throw DomainError("search: starts and steps must be positive");
  if (config.decay <= 0.0 || config.decay >= 1.0)
    throw DomainError("search: decay must lie in (0, 1)");
}

}  // namespace

double objective(const ComplexMatrix& v) {
  const ComplexMatrix gram = adjoint_times_self(v);
  if (max_abs_diff(gram, ComplexMatrix::identity(v.cols())) > 1e-8)
    throw NotIsometry("objective: ||V*V - I||_max exceeds 1e-8");
  return corner_profile_serial(times_adjoint(v)).max_norm;
}

ComplexMatrix propose(const ComplexMatrix& v, double step, Xoshiro256pp& rng,
                      bool real_only, bool persymmetric_bias) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    ComplexMatrix e = gaussian_matrix(v.rows(), v.cols(), step, rng, real_only);
    if (persymmetric_bias) e = 0.5 * (e + antitranspose_image(e));
    try {
      return qr_isometry(v + e);
    } catch (const RankDeficient&) {
    }
  }
  throw RankDeficient("propose: retraction failed after 10 attempts");
}

StartOutcome run_single_start(const SearchConfig& config, int start_index,
                              std::vector<double>* accepted_trace) {
  validate(config);
  Xoshiro256pp rng(config.seed ^ static_cast<uint64_t>(start_index));

  StartOutcome outcome;
  outcome.isometry = initial_isometry(config, rng);
  const auto initial =
      profile_max_below(times_adjoint(outcome.isometry),
                        std::numeric_limits<double>::infinity());
  outcome.best = *initial;
  outcome.evaluations = 1;
  if (accepted_trace) accepted_trace->push_back(outcome.best);

  double step = config.initial_step;
  int stall = 0;
  for (int iter = 0; iter < config.steps_per_start; ++iter) {
    if (step < config.min_step) break;
    const ComplexMatrix candidate = propose(outcome.isometry, step, rng,
                                            config.real_only, config.persymmetric_bias);
    ++outcome.evaluations;
    const auto value = profile_max_below(times_adjoint(candidate), outcome.best);
    if (value) {
      outcome.isometry = candidate;
      outcome.best = *value;
      stall = 0;
      if (accepted_trace) accepted_trace->push_back(outcome.best);
    } else if (++stall >= kStallLimit) {
      step *= config.decay;
      stall = 0;
    }
  }
  return outcome;
}

SearchResult random_walk_minimize(const SearchConfig& config) {
  validate(config);
  std::vector<StartOutcome> outcomes(static_cast<size_t>(config.starts));
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < config.starts; ++s)
    outcomes[static_cast<size_t>(s)] = run_single_start(config, s);
  return merge_outcomes(outcomes);
}

SearchResult random_walk_minimize_serial(const SearchConfig& config) {
  validate(config);
  std::vector<StartOutcome> outcomes(static_cast<size_t>(config.starts));
  for (int s = 0; s < config.starts; ++s)
    outcomes[static_cast<size_t>(s)] = run_single_start(config, s);
  return merge_outcomes(outcomes);
}

ConjectureTable conjecture_table(int n_max, const SearchConfig& config_template) {
  if (n_max < 1) throw DomainError("conjecture_table: need n_max >= 1");
  ConjectureTable table;
  for (int n = 1; n <= n_max; ++n)
    for (int r = 1; r <= n; ++r) {
      SearchConfig config = config_template;
      config.rank = r;
      config.dim = n;
      const SearchResult result = random_walk_minimize(config);
      TableRow row;
      row.r = r;
      row.n = n;
      row.estimate = result.best_objective;
      row.formula = nu_conjecture(r, n);
      row.abs_diff = std::abs(row.estimate - row.formula);
      row.below_formula = row.estimate < row.formula - 2e-3;
      row.below_bound = row.estimate < lower_bound(r, n) - 1e-9;
      if (row.below_formula || row.below_bound) ++table.violations;
      table.rows.push_back(row);
    }
  return table;
}

}  // namespace nilproj
