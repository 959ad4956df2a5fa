#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "nilproj/corank1.hpp"
#include "nilproj/matrix_io.hpp"
#include "nilproj/search.hpp"

using namespace nilproj;

namespace {

const std::string kFixtures = NILPROJ_FIXTURE_DIR;

SearchConfig small_config(int rank, int dim) {
  SearchConfig config;
  config.rank = rank;
  config.dim = dim;
  config.starts = 4;
  config.steps_per_start = 3000;
  return config;
}

bool same_matrix_bits(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("objective: standard basis columns give distance 1") {
  ComplexMatrix v(4, 2);
  v(0, 0) = 1.0;
  v(1, 1) = 1.0;
  CHECK(std::abs(objective(v) - 1.0) < 1e-12);
}

TEST_CASE("objective: published search optima") {
  const ComplexMatrix p24 = read_matrix(kFixtures + "/p24.json");
  const ComplexMatrix v24 = testutil::isometry_from_projection(p24, 2);
  CHECK(std::abs(objective(v24) - 1.0 / std::sqrt(2.0)) < 1e-4);

  const ComplexMatrix v34 = testutil::isometry_from_projection(optimal_projection(4), 3);
  CHECK(std::abs(objective(v34) - nu_corank1(4)) < 1e-6);
}

TEST_CASE("objective: rejects non-isometries") {
  ComplexMatrix v(3, 1);
  v(0, 0) = 2.0;
  CHECK_THROWS_AS(objective(v), NotIsometry);
}

TEST_CASE("published rank-2 and rank-3 projections in dimension 5 have flat profiles") {
  const ComplexMatrix p25 = read_matrix(kFixtures + "/p25.json");
  for (double norm : corner_profile(p25).norms) CHECK(std::abs(norm - 0.65270) < 1e-4);

  const ComplexMatrix p35 = read_matrix(kFixtures + "/p35.json");
  for (double norm : corner_profile(p35).norms) CHECK(std::abs(norm - 0.76352) < 1e-4);
}

TEST_CASE("propose: zero step is the identity move") {
  Xoshiro256pp rng(1);
  ComplexMatrix v(5, 2);
  v(0, 0) = 1.0;
  v(3, 1) = 1.0;
  const ComplexMatrix w = propose(v, 0.0, rng);
  CHECK(max_abs_diff(w, v) < 1e-14);
}

TEST_CASE("propose: deterministic replay and isometry output") {
  ComplexMatrix v = qr_isometry([] {
    Xoshiro256pp rng(2);
    ComplexMatrix m(6, 3);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = cplx(rng.gaussian(), rng.gaussian());
    return m;
  }());

  Xoshiro256pp rng_a(42), rng_b(42);
  const ComplexMatrix wa = propose(v, 0.1, rng_a);
  const ComplexMatrix wb = propose(v, 0.1, rng_b);
  CHECK(same_matrix_bits(wa, wb));

  Xoshiro256pp rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix w = propose(v, 0.05, rng, trial % 2 == 0, trial % 3 == 0);
    CHECK(max_abs_diff(adjoint_times_self(w), ComplexMatrix::identity(3)) < 1e-12);
  }
}

TEST_CASE("propose: real_only keeps real iterates real") {
  ComplexMatrix v(3, 1);
  v(0, 0) = 1.0;
  Xoshiro256pp rng(7);
  const ComplexMatrix w = propose(v, 0.2, rng, /*real_only=*/true);
  for (int i = 0; i < 3; ++i) CHECK(w(i, 0).imag() == 0.0);
}

TEST_CASE("run_single_start: accepted objectives strictly decrease") {
  std::vector<double> trace;
  const StartOutcome outcome = run_single_start(small_config(2, 4), 0, &trace);
  REQUIRE(trace.size() >= 2);
  for (size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] < trace[i - 1]);
  CHECK(outcome.best == trace.back());
}

TEST_CASE("random_walk_minimize: finds the rank-one optimum in dimension 3") {
  SearchConfig config;
  config.rank = 1;
  config.dim = 3;
  const SearchResult result = random_walk_minimize(config);
  CHECK(std::abs(result.best_objective - nu_rank1(3)) < 2e-3);
  CHECK(result.best_objective >= lower_bound(1, 3) - 1e-9);
  CHECK(result.best_objective == result.profile.max_norm);
  CHECK(max_abs_diff(result.best_projection, times_adjoint(result.best_isometry)) < 1e-10);
  REQUIRE(static_cast<int>(result.per_start_bests.size()) == config.starts);
}

TEST_CASE("random_walk_minimize: bitwise deterministic replay") {
  const SearchConfig config = small_config(2, 4);
  const SearchResult a = random_walk_minimize(config);
  const SearchResult b = random_walk_minimize(config);
  REQUIRE(a.per_start_bests.size() == b.per_start_bests.size());
  for (size_t s = 0; s < a.per_start_bests.size(); ++s)
    CHECK(a.per_start_bests[s] == b.per_start_bests[s]);
  CHECK(a.best_objective == b.best_objective);
  CHECK(a.evaluations == b.evaluations);
  CHECK(same_matrix_bits(a.best_isometry, b.best_isometry));
}

TEST_CASE("random_walk_minimize: parallel run equals the serial reference") {
  for (const SearchConfig& config : {small_config(2, 4), small_config(3, 5)}) {
    const SearchResult parallel = random_walk_minimize(config);
    const SearchResult serial = random_walk_minimize_serial(config);
    CHECK(parallel.best_objective == serial.best_objective);
    CHECK(parallel.evaluations == serial.evaluations);
    REQUIRE(parallel.per_start_bests.size() == serial.per_start_bests.size());
    for (size_t s = 0; s < serial.per_start_bests.size(); ++s)
      CHECK(parallel.per_start_bests[s] == serial.per_start_bests[s]);
    CHECK(same_matrix_bits(parallel.best_isometry, serial.best_isometry));
  }
}

TEST_CASE("random_walk_minimize: corner profile nearly equalizes at the corank-1 optimum") {
  SearchConfig config;
  config.rank = 3;
  config.dim = 4;
  const SearchResult result = random_walk_minimize(config);
  double lo = result.profile.norms[0], hi = result.profile.norms[0];
  for (double v : result.profile.norms) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(hi - lo < 5e-3);
}

TEST_CASE("random_walk_minimize: real-only and persymmetric modes") {
  SearchConfig config = small_config(2, 4);
  config.real_only = true;
  config.persymmetric_bias = true;
  const SearchResult result = random_walk_minimize(config);
  CHECK(result.best_objective >= lower_bound(2, 4) - 1e-9);
  CHECK(std::abs(result.best_objective - 1.0 / std::sqrt(2.0)) < 5e-3);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) CHECK(result.best_isometry(i, j).imag() == 0.0);
}

TEST_CASE("random_walk_minimize: config validation") {
  SearchConfig config;
  config.rank = 3;
  config.dim = 2;
  CHECK_THROWS_AS(random_walk_minimize(config), DomainError);
  config = SearchConfig{};
  config.decay = 1.5;
  CHECK_THROWS_AS(random_walk_minimize(config), DomainError);
}

TEST_CASE("conjecture_table: small sweep at reduced budget") {
  SearchConfig tmpl;
  tmpl.starts = 4;
  tmpl.steps_per_start = 4000;
  const ConjectureTable table = conjecture_table(3, tmpl);
  REQUIRE(table.rows.size() == 6);  // (1,1) (1,2) (2,2) (1,3) (2,3) (3,3)

  int idx = 0;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r) {
      const TableRow& row = table.rows[idx++];
      CHECK(row.r == r);
      CHECK(row.n == n);
      CHECK(row.estimate >= lower_bound(r, n) - 1e-9);
      if (r == n) CHECK(std::abs(row.estimate - 1.0) < 1e-9);
    }
  CHECK(std::abs(table.rows[1].estimate - 1.0 / std::sqrt(2.0)) < 2e-3);  // (1,2)
  CHECK(table.violations == 0);
}
