// Command line front end: every subcommand prints a JSON report to stdout
// and a one-line human summary to stderr. Exit codes: 0 success and all
// checks passing, 2 a mathematical check failed (discrepancy in the report),
// 1 usage or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "tchains/combing.hpp"
#include "tchains/json_io.hpp"
#include "tchains/random_chains.hpp"
#include "tchains/resolutions.hpp"
#include "tchains/rips.hpp"

using namespace tchains;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

// Option values starting with '{' or '[' are inline JSON, anything else is a
// file path.
Json load_json(const std::string& text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) {
    return Json::parse(text);
  }
  std::ifstream in(text);
  if (!in) throw std::invalid_argument("cannot open input file '" + text + "'");
  Json j;
  in >> j;
  return j;
}

void emit(const Json& report, const std::string& summary) {
  std::cout << report.dump(2) << std::endl;
  std::cerr << summary << std::endl;
}

std::vector<Chain> load_or_generate_chains(const Group& g, const std::string& chains_text,
                                           int random_count, int degree, long long radius,
                                           unsigned long long seed) {
  if (!chains_text.empty()) return chain_list_from_json(g, load_json(chains_text));
  if (random_count <= 0) {
    throw std::invalid_argument("provide --chains or a positive --random count");
  }
  std::mt19937_64 rng(seed);
  const auto ball = g.ball(radius);
  std::vector<Chain> out;
  for (int i = 0; i < random_count; ++i) {
    Chain c = random_chain(rng, ball, {.degree = degree, .terms = 4, .coeff_bound = 9});
    if (degree == 0) c = reduce_degree0(g, c);
    out.push_back(std::move(c));
  }
  return out;
}

int run_group_ball(const std::string& spec, long long radius) {
  const Group g = group_from_json(load_json(spec));
  const auto ball = g.ball(radius);
  Json elems = Json::array();
  for (const auto& x : ball) elems.push_back(element_to_json(g, x));
  emit(Json{{"group", group_to_json(g)},
            {"radius", radius},
            {"size", ball.size()},
            {"ball", elems}},
       g.describe() + ": |ball(" + std::to_string(radius) + ")| = " + std::to_string(ball.size()));
  return kExitOk;
}

int run_chain_boundary(const std::string& spec, const std::string& input) {
  const Group g = group_from_json(load_json(spec));
  const Chain c = chain_from_json(g, load_json(input));
  const Chain d = boundary(c);
  emit(Json{{"group", group_to_json(g)}, {"boundary", chain_to_json(g, d)}},
       "boundary: degree " + std::to_string(c.degree()) + " -> " + std::to_string(d.degree()) +
           ", support " + std::to_string(d.support_size()));
  return kExitOk;
}

int run_chain_norm(const std::string& spec, const std::string& input, long long k,
                   const std::string& alpha, bool has_k) {
  const Group g = group_from_json(load_json(spec));
  const Chain c = chain_from_json(g, load_json(input));
  const NormSpec norm =
      has_k ? NormSpec::polynomial(k) : NormSpec::exponential(rat_from_string(alpha));
  const Rat value = weighted_norm(g, c, norm);
  Json report{{"group", group_to_json(g)},
              {"degree", c.degree()},
              {"norm", rat_to_json(value)},
              {"control_radius", control_radius(g, c)}};
  if (has_k) {
    report["kind"] = "polynomial";
    report["k"] = k;
  } else {
    report["kind"] = "exponential";
    report["alpha"] = alpha;
  }
  emit(report, "norm = " + rat_to_string(value));
  return kExitOk;
}

int run_homotopy_verify(const std::string& spec, const std::string& f_text,
                        const std::string& fp_text, const std::string& chains_text,
                        int random_count, int degree, long long radius,
                        unsigned long long seed) {
  const Group g = group_from_json(load_json(spec));
  const PointMap f = point_map_from_json(g, load_json(f_text));
  const PointMap fp = point_map_from_json(g, load_json(fp_text));
  const auto chains = load_or_generate_chains(g, chains_text, random_count, degree, radius, seed);
  Json results = Json::array();
  int failures = 0;
  for (const Chain& c : chains) {
    const HomotopyCheck check = verify_homotopy_identity(f, fp, c);
    Json entry{{"degree", c.degree()}, {"ok", check.ok}};
    if (!check.ok) {
      entry["discrepancy"] = chain_to_json(g, check.discrepancy);
      ++failures;
    }
    results.push_back(std::move(entry));
  }
  emit(Json{{"group", group_to_json(g)},
            {"checked", chains.size()},
            {"failures", failures},
            {"results", results}},
       "homotopy identity: " + std::to_string(chains.size() - failures) + "/" +
           std::to_string(chains.size()) + " chains passed");
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int run_comb_verify(const std::string& comb_text, long long radius) {
  const Combing comb = combing_from_json(load_json(comb_text));
  const CombingReport report = verify_combing(comb, radius);
  emit(combing_report_to_json(comb, report),
       std::string("combing axioms ") + (report.axioms_ok ? "hold" : "FAIL") + " on ball(" +
           std::to_string(radius) + ")");
  return report.axioms_ok ? kExitOk : kExitCheckFailed;
}

int run_comb_contract(const std::string& comb_text, const std::string& chains_text, bool check,
                      int random_count, int degree, long long radius, unsigned long long seed) {
  const Combing comb = combing_from_json(load_json(comb_text));
  const Group& g = comb.group();
  const auto chains = load_or_generate_chains(g, chains_text, random_count, degree, radius, seed);
  Json results = Json::array();
  int failures = 0;
  for (const Chain& c : chains) {
    Json entry{{"degree", c.degree()}};
    if (check) {
      const ContractionCheck result = check_contraction(comb, c);
      entry["ok"] = result.ok;
      if (!result.ok) {
        entry["discrepancy"] = chain_to_json(g, result.discrepancy);
        ++failures;
      }
    } else {
      entry["image"] = chain_to_json(g, contracting_homotopy(comb, c));
    }
    results.push_back(std::move(entry));
  }
  Json report{{"combing", combing_to_json(comb)}, {"checked", chains.size()}, {"results", results}};
  if (check) report["failures"] = failures;
  emit(report, check ? "contraction identity: " + std::to_string(chains.size() - failures) + "/" +
                           std::to_string(chains.size()) + " chains passed"
                     : "applied the contracting homotopy to " + std::to_string(chains.size()) +
                           " chains");
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int run_comb_profile(const std::string& comb_text, long long k, int degree, long long length_bound,
                     long long control_bound) {
  const Combing comb = combing_from_json(load_json(comb_text));
  const ProfileReport report = homotopy_norm_profile(comb, k, degree, length_bound, control_bound);
  emit(profile_report_to_json(comb.group(), report),
       "profiled " + std::to_string(report.tuples_examined) + " tuples over " +
           std::to_string(report.shell_max.size()) + " shells");
  return kExitOk;
}

int run_cohomology(const std::string& spec, const std::string& method, int n_max) {
  const Group g = group_from_json(load_json(spec));
  std::vector<long long> dims;
  std::string method_name;
  if (method == "bar") {
    dims = bar_cohomology_finite(g, n_max);
    method_name = "bar";
  } else if (method == "resolution" || method == "small_resolution") {
    dims = cohomology_small_resolution(g);
    method_name = "small_resolution";
  } else {
    throw std::invalid_argument("unknown method '" + method + "' (use bar|resolution)");
  }
  std::ostringstream summary;
  summary << "dims = [";
  for (std::size_t i = 0; i < dims.size(); ++i) summary << (i ? "," : "") << dims[i];
  summary << "]";
  emit(cohomology_report_to_json(g, method_name, dims), summary.str());
  return kExitOk;
}

int run_rips(const std::string& space_text, const std::string& scale_text, int max_dim) {
  const FiniteMetricSpace space = metric_space_from_json(load_json(space_text));
  const Rat scale = rat_from_string(scale_text);
  const SimplicialComplex complex = build_rips(space, scale, max_dim);
  const auto dims = rips_homology(complex);
  Json counts = Json::array();
  for (int d = 0; d <= complex.max_dim; ++d) counts.push_back(complex.count(d));
  emit(Json{{"points", space.size()},
            {"scale", rat_to_string(scale)},
            {"max_dim", max_dim},
            {"simplex_counts", counts},
            {"homology", dims},
            {"components", component_count(complex, space.size())}},
       "Rips homology computed");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chain-level computations on finitely generated groups"};
  app.require_subcommand(1);
  unsigned long long seed = 0;
  app.add_option("--seed", seed, "seed for randomized chain fixtures")->capture_default_str();

  std::string spec, input, chains_text, f_text, fp_text, comb_text, alpha, method, space_text,
      scale_text;
  long long radius = 0, k = 0, length_bound = 0, control_bound = 0;
  int degree = 1, max_dim = 1, n_max = 2, random_count = 0;
  bool check = false;

  auto* group_cmd = app.add_subcommand("group", "group oracles");
  group_cmd->require_subcommand(1);
  auto* ball_cmd = group_cmd->add_subcommand("ball", "enumerate a metric ball");
  ball_cmd->add_option("--spec", spec, "group spec (inline JSON or path)")->required();
  ball_cmd->add_option("--radius", radius, "ball radius")->required();

  auto* chain_cmd = app.add_subcommand("chain", "chain operations");
  chain_cmd->require_subcommand(1);
  auto* boundary_cmd = chain_cmd->add_subcommand("boundary", "simplicial boundary");
  boundary_cmd->add_option("--group", spec)->required();
  boundary_cmd->add_option("--in", input, "chain (inline JSON or path)")->required();
  auto* norm_cmd = chain_cmd->add_subcommand("norm", "weighted norm");
  norm_cmd->add_option("--group", spec)->required();
  norm_cmd->add_option("--in", input)->required();
  auto* k_opt = norm_cmd->add_option("--k", k, "polynomial weight exponent");
  auto* alpha_opt = norm_cmd->add_option("--alpha", alpha, "exponential base p/q");
  k_opt->excludes(alpha_opt);

  auto* homotopy_cmd = app.add_subcommand("homotopy", "elementary homotopies");
  homotopy_cmd->require_subcommand(1);
  auto* verify_cmd = homotopy_cmd->add_subcommand("verify", "check the prism identity");
  verify_cmd->add_option("--group", spec)->required();
  verify_cmd->add_option("--f", f_text, "point map (inline JSON or path)")->required();
  verify_cmd->add_option("--fp", fp_text, "second point map")->required();
  verify_cmd->add_option("--chains", chains_text, "chain list (inline JSON or path)");
  verify_cmd->add_option("--random", random_count, "generate this many random chains");
  verify_cmd->add_option("--degree", degree, "degree for random chains");
  verify_cmd->add_option("--radius", radius, "support radius for random chains")->default_val(2);

  auto* comb_cmd = app.add_subcommand("comb", "combings and contracting homotopies");
  comb_cmd->require_subcommand(1);
  auto* comb_verify_cmd = comb_cmd->add_subcommand("verify", "check the combing axioms");
  comb_verify_cmd->add_option("--comb", comb_text, "combing (inline JSON or path)")->required();
  comb_verify_cmd->add_option("--radius", radius)->required();
  auto* contract_cmd = comb_cmd->add_subcommand("contract", "apply the contracting homotopy");
  contract_cmd->add_option("--comb", comb_text)->required();
  contract_cmd->add_option("--chains", chains_text);
  contract_cmd->add_flag("--check", check, "verify delta H + H delta = id");
  contract_cmd->add_option("--random", random_count);
  contract_cmd->add_option("--degree", degree);
  contract_cmd->add_option("--radius", radius)->default_val(3);
  auto* profile_cmd = comb_cmd->add_subcommand("profile", "norm growth profile");
  profile_cmd->add_option("--comb", comb_text)->required();
  profile_cmd->add_option("--k", k)->required();
  profile_cmd->add_option("--deg", degree)->required();
  profile_cmd->add_option("--len", length_bound)->required();
  profile_cmd->add_option("--radius", control_bound)->required();

  auto* cohomology_cmd = app.add_subcommand("cohomology", "group cohomology dimensions");
  cohomology_cmd->add_option("--group", spec)->required();
  cohomology_cmd->add_option("--method", method, "bar | resolution")->required();
  cohomology_cmd->add_option("--nmax", n_max, "top degree for the bar method")
      ->capture_default_str();

  auto* rips_cmd = app.add_subcommand("rips", "Rips complex homology");
  rips_cmd->add_option("--space", space_text, "metric space (inline JSON or path)")->required();
  rips_cmd->add_option("--radius", scale_text, "scale (integer or p/q)")->required();
  rips_cmd->add_option("--maxdim", max_dim)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ball_cmd->parsed()) return run_group_ball(spec, radius);
    if (boundary_cmd->parsed()) return run_chain_boundary(spec, input);
    if (norm_cmd->parsed()) {
      if (k_opt->count() == 0 && alpha_opt->count() == 0) {
        throw std::invalid_argument("chain norm needs --k or --alpha");
      }
      return run_chain_norm(spec, input, k, alpha, k_opt->count() > 0);
    }
    if (verify_cmd->parsed()) {
      return run_homotopy_verify(spec, f_text, fp_text, chains_text, random_count, degree, radius,
                                 seed);
    }
    if (comb_verify_cmd->parsed()) return run_comb_verify(comb_text, radius);
    if (contract_cmd->parsed()) {
      return run_comb_contract(comb_text, chains_text, check, random_count, degree, radius, seed);
    }
    if (profile_cmd->parsed()) {
      return run_comb_profile(comb_text, k, degree, length_bound, control_bound);
    }
    if (cohomology_cmd->parsed()) return run_cohomology(spec, method, n_max);
    if (rips_cmd->parsed()) return run_rips(space_text, scale_text, max_dim);
    std::cerr << "missing subcommand" << std::endl;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  }
}
