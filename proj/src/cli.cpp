#include "nilproj/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "nilproj/arveson.hpp"
#include "nilproj/corank1.hpp"
#include "nilproj/matcore.hpp"
#include "nilproj/matrix_io.hpp"
#include "nilproj/pairing.hpp"
#include "nilproj/search.hpp"

namespace nilproj::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

uint64_t resolve_seed(bool flag_given, uint64_t flag_value) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("NILPROJ_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw UsageError("NILPROJ_SEED is not an unsigned integer: " + std::string(env));
    return static_cast<uint64_t>(v);
  }
  return kDefaultSeed;
}

std::string sec_formula(int k, int m) {
  return "(1/2) sec(" + std::to_string(k) + " pi / " + std::to_string(m) + ")";
}

ordered_json matrix_doc(const ComplexMatrix& m) {
  return ordered_json::parse(matrix_to_json_string(m));
}

void emit_matrix(const ComplexMatrix& m, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << matrix_to_json_string(m) << "\n";
  else
    write_matrix(m, path);
}

int cmd_nu(int rank, int dim, bool conjecture, std::ostream& out) {
  if (rank < 1 || dim < 1 || rank > dim) throw DomainError("nu: need 1 <= rank <= dim");
  double value = 0.0;
  std::string formula;
  if (conjecture) {
    value = nu_conjecture(rank, dim);
    formula = sec_formula(rank, dim + 2 * rank);
  } else if (rank == dim - 1) {
    value = nu_corank1(dim);
    formula = sec_formula(dim - 1, 3 * dim - 2);
  } else if (rank == 1) {
    value = nu_rank1(dim);
    formula = sec_formula(1, dim + 2);
  } else if (rank == dim) {
    value = 1.0;
    formula = sec_formula(rank, dim + 2 * rank);
  } else {
    throw DomainError(
        "nu: closed forms exist for rank 1, dim-1 and dim only; "
        "pass --conjecture for intermediate ranks");
  }
  out << fmt12(value) << "\n" << "formula: " << formula << "\n";
  return 0;
}

int cmd_construct(int dim, const std::string& phases_path, const std::string& out_path,
                  std::ostream& out) {
  std::vector<cplx> phases;
  if (!phases_path.empty()) phases = read_phases(phases_path);
  emit_matrix(optimal_projection(dim, phases), out_path, out);
  return 0;
}

int cmd_pair(int dim, const std::string& out_q, const std::string& out_t,
             const std::string& out_u, std::ostream& out, std::ostream& err) {
  const ClosestPair pair = build_closest_pair(dim);

  const double idem = max_abs_diff(pair.q * pair.q, pair.q);
  const double unit = max_abs_diff(adjoint_times_self(pair.u),
                                   ComplexMatrix::identity(dim));
  const CornerProfile profile = corner_profile(pair.q);
  double min_norm = profile.norms[0];
  for (double v : profile.norms) min_norm = std::min(min_norm, v);
  const double spread = profile.max_norm - min_norm;
  const double dist = std::abs(operator_norm(pair.q - pair.t) - pair.nu);

  out << "n: " << dim << "\n"
      << "nu: " << fmt12(pair.nu) << "\n"
      << "idempotency_defect: " << fmt12(idem) << "\n"
      << "unitary_defect: " << fmt12(unit) << "\n"
      << "profile_spread: " << fmt12(spread) << "\n"
      << "distance_defect: " << fmt12(dist) << "\n";

  if (!out_q.empty()) write_matrix(pair.q, out_q);
  if (!out_t.empty()) write_matrix(pair.t, out_t);
  if (!out_u.empty()) write_matrix(pair.u, out_u);

  const double gate = 1e-8;
  if (idem > gate || unit > gate || spread > gate || dist > gate) {
    err << "pair: certificate defect exceeds " << fmt12(gate) << "\n";
    return 1;
  }
  return 0;
}

int cmd_profile(const std::string& in_path, std::ostream& out) {
  const ComplexMatrix a = read_matrix(in_path);
  const CornerProfile profile = corner_profile(a);
  out << "n: " << profile.n << "\n";
  for (int k = 1; k <= profile.n; ++k)
    out << "norm " << k << ": " << fmt12(profile.norms[static_cast<size_t>(k - 1)]) << "\n";
  out << "distance: " << fmt12(profile.max_norm) << "\n";
  return 0;
}

int cmd_candidates(int dim, std::ostream& out) {
  const CandidateSet set = candidate_values(dim);
  out << "n: " << set.n << "\n"
      << "m: " << set.m << "\n"
      << "lower_bound_sq: " << fmt12(set.lower_bound_sq) << "\n"
      << "k\tt\tin_window\tselected\n";
  for (const Candidate& cand : set.entries) {
    const bool in_window = cand.t >= set.lower_bound_sq;
    out << cand.k << "\t" << fmt12(cand.t) << "\t" << (in_window ? "yes" : "no") << "\t"
        << (cand.k == set.selected_k ? "*" : "") << "\n";
  }
  return 0;
}

ordered_json search_manifest(const SearchConfig& config, const SearchResult& result) {
  ordered_json doc;
  doc["command"] = "search";
  ordered_json params;
  params["rank"] = config.rank;
  params["dim"] = config.dim;
  params["starts"] = config.starts;
  params["steps"] = config.steps_per_start;
  params["initial_step"] = config.initial_step;
  params["decay"] = config.decay;
  params["min_step"] = config.min_step;
  params["real_only"] = config.real_only;
  params["persymmetric"] = config.persymmetric_bias;
  doc["parameters"] = std::move(params);
  doc["seed"] = config.seed;
  doc["tool_version"] = kToolVersion;
  ordered_json results;
  results["best_objective"] = result.best_objective;
  results["per_start_bests"] = result.per_start_bests;
  results["evaluations"] = result.evaluations;
  results["corner_norms"] = result.profile.norms;
  results["best_isometry"] = matrix_doc(result.best_isometry);
  results["best_projection"] = matrix_doc(result.best_projection);
  doc["results"] = std::move(results);
  return doc;
}

int cmd_search(SearchConfig config, std::ostream& out) {
  const SearchResult result = random_walk_minimize(config);
  out << search_manifest(config, result).dump(1) << "\n";
  return 0;
}

int cmd_table(int max_dim, const SearchConfig& config_template, std::ostream& out,
              std::ostream& err) {
  const ConjectureTable table = conjecture_table(max_dim, config_template);
  out << "r,n,nu_estimate,nu_formula,abs_diff\n";
  for (const TableRow& row : table.rows) {
    out << row.r << "," << row.n << "," << fmt12(row.estimate) << ","
        << fmt12(row.formula) << "," << fmt12(row.abs_diff) << "\n";
    if (row.below_formula)
      err << "warning: estimate for (r=" << row.r << ", n=" << row.n
          << ") lies more than 2e-3 below the formula\n";
    if (row.below_bound)
      err << "warning: estimate for (r=" << row.r << ", n=" << row.n
          << ") violates the rank lower bound\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"distance from orthogonal projections to nilpotent matrices"};
  app.require_subcommand(1);

  int rank = 0, dim = 0, max_dim = 0;
  bool conjecture = false;
  std::string phases_path, out_path, out_q, out_t, out_u, in_path;
  uint64_t seed_flag = 0;
  SearchConfig defaults;
  int starts = defaults.starts;
  int steps = defaults.steps_per_start;
  bool real_only = false, persymmetric = false;

  CLI::App* nu = app.add_subcommand("nu", "exact or conjectured distance value");
  nu->add_option("--rank", rank, "projection rank")->required();
  nu->add_option("--dim", dim, "ambient dimension")->required();
  nu->add_flag("--conjecture", conjecture, "use the conjectured general-rank formula");

  CLI::App* construct = app.add_subcommand("construct", "optimal corank-1 projection");
  construct->add_option("--dim", dim, "ambient dimension")->required();
  construct->add_option("--phases", phases_path, "JSON array of unit-modulus [re, im] phases");
  construct->add_option("--out", out_path, "output file (stdout when omitted)");

  CLI::App* pair = app.add_subcommand("pair", "closest projection-nilpotent pair");
  pair->add_option("--dim", dim, "ambient dimension")->required();
  pair->add_option("--out-q", out_q, "write Q to this file");
  pair->add_option("--out-t", out_t, "write T to this file");
  pair->add_option("--out-u", out_u, "write U to this file");

  CLI::App* profile = app.add_subcommand("profile", "corner norms of a matrix");
  profile->add_option("--in", in_path, "matrix JSON file")->required();

  CLI::App* candidates = app.add_subcommand("candidates", "candidate squared distances");
  candidates->add_option("--dim", dim, "ambient dimension")->required();

  CLI::App* search = app.add_subcommand("search", "random-walk minimax search");
  search->add_option("--rank", rank, "projection rank")->required();
  search->add_option("--dim", dim, "ambient dimension")->required();
  CLI::Option* seed_opt = search->add_option("--seed", seed_flag, "RNG seed");
  search->add_option("--starts", starts, "number of independent starts");
  search->add_option("--steps", steps, "proposals per start");
  search->add_flag("--real-only", real_only, "restrict proposals to real entries");
  search->add_flag("--persymmetric", persymmetric, "bias proposals toward anti-diagonal symmetry");

  CLI::App* table = app.add_subcommand("table", "conjecture comparison table as CSV");
  table->add_option("--max-dim", max_dim, "largest ambient dimension")->required();
  CLI::Option* table_seed_opt = table->add_option("--seed", seed_flag, "RNG seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (nu->parsed()) return cmd_nu(rank, dim, conjecture, out);
    if (construct->parsed()) return cmd_construct(dim, phases_path, out_path, out);
    if (pair->parsed()) return cmd_pair(dim, out_q, out_t, out_u, out, err);
    if (profile->parsed()) return cmd_profile(in_path, out);
    if (candidates->parsed()) return cmd_candidates(dim, out);
    if (search->parsed()) {
      SearchConfig config;
      config.rank = rank;
      config.dim = dim;
      config.seed = resolve_seed(seed_opt->count() > 0, seed_flag);
      config.starts = starts;
      config.steps_per_start = steps;
      config.real_only = real_only;
      config.persymmetric_bias = persymmetric;
      return cmd_search(config, out);
    }
    if (table->parsed()) {
      SearchConfig config;
      config.seed = resolve_seed(table_seed_opt->count() > 0, seed_flag);
      return cmd_table(max_dim, config, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace nilproj::cli
