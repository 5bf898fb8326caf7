// Acceptance suite: one check per shipped guarantee, each printed as a single
// PASS/FAIL line with its measured runtime. Run with --criterion N for one
// check or with no arguments for all ten.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tchains/combing.hpp"
#include "tchains/json_io.hpp"
#include "tchains/random_chains.hpp"
#include "tchains/resolutions.hpp"
#include "tchains/rips.hpp"

using namespace tchains;

namespace {

struct Outcome {
  bool pass = true;
  std::string details;
};

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return t;
}

// 1. boundary squares to zero: >= 300 randomized chains, degrees 2..4,
//    supports in ball(3), over F2, Z^2 and Z/5
Outcome criterion_simplicial_identity() {
  std::mt19937_64 rng(1001);
  const Group groups[] = {Group::free_group(2), Group::free_abelian(2),
                          Group::finite_table(cyclic_table(5), {1})};
  int checked = 0;
  for (const Group& g : groups) {
    const auto ball = g.ball(3);
    for (int degree = 2; degree <= 4; ++degree) {
      for (int i = 0; i < 34; ++i) {
        const Chain c = random_chain(rng, ball, {.degree = degree, .terms = 5, .coeff_bound = 9});
        if (!boundary(boundary(c)).is_zero()) {
          return {false, "delta^2 != 0 on a degree-" + std::to_string(degree) + " chain"};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " chains, all with delta^2 = 0 exactly"};
}

// 2. prism identity H(f,f')delta + delta H(f,f') = f'_* - f_* on randomized
//    map pairs and chains, degrees 1..3 plus the reduced degree-0 form
Outcome criterion_homotopy_identity() {
  std::mt19937_64 rng(1002);
  const Group f2 = Group::free_group(2);
  const auto domain = f2.ball(2);
  int checked = 0;
  for (int degree = 1; degree <= 3; ++degree) {
    for (int i = 0; i < 30; ++i) {
      const PointMap f = random_table_map(rng, domain, domain);
      const PointMap fp = random_table_map(rng, domain, domain);
      const Chain c = random_chain(rng, domain, {.degree = degree, .terms = 4, .coeff_bound = 9});
      if (!verify_homotopy_identity(f, fp, c).ok) {
        return {false, "identity failed in degree " + std::to_string(degree)};
      }
      ++checked;
    }
  }
  for (int i = 0; i < 20; ++i) {
    const PointMap f = random_table_map(rng, domain, domain);
    const PointMap fp = random_table_map(rng, domain, domain);
    const Chain c = reduce_degree0(
        f2, random_chain(rng, domain, {.degree = 0, .terms = 4, .coeff_bound = 9}));
    if (!verify_homotopy_identity(f, fp, c).ok) {
      return {false, "identity failed on a reduced degree-0 chain"};
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " map pairs and chains, identity exact"};
}

// 3. contracting homotopy delta H + H delta = id on reduced chains,
//    degrees 0..3, supports in ball(4), for the shipped combings
Outcome criterion_contracting_homotopy() {
  std::mt19937_64 rng(1003);
  int checked = 0;
  for (const Combing& comb : {Combing::free_prefix(2), Combing::abelian_staircase(2)}) {
    const auto ball = comb.group().ball(4);
    for (int degree = 0; degree <= 3; ++degree) {
      for (int i = 0; i < 26; ++i) {
        Chain c = random_chain(rng, ball, {.degree = degree, .terms = 4, .coeff_bound = 9});
        if (degree == 0) c = reduce_degree0(comb.group(), c);
        if (!check_contraction(comb, c).ok) {
          return {false, "contraction identity failed in degree " + std::to_string(degree)};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " reduced chains over both combings, identity exact"};
}

// 4. free-group combing constants on ball(5), J(g) = l(g) for all l(g) <= 8
Outcome criterion_combing_constants() {
  const Combing comb = Combing::free_prefix(2);
  const CombingReport report = verify_combing(comb, 5);
  std::ostringstream details;
  details << "C_obs = " << rat_to_string(report.lipschitz_observed)
          << ", S_obs = " << report.closeness_observed;
  if (!(report.lipschitz_observed <= 1)) return {false, details.str() + "; C exceeds 1"};
  if (report.closeness_observed != 1) return {false, details.str() + "; S != 1"};
  if (!report.axioms_ok) return {false, details.str() + "; axiom check failed"};
  const Group& f2 = comb.group();
  for (const auto& g : f2.ball(8)) {
    if (comb.steps(g) != f2.word_length(g)) {
      return {false, details.str() + "; J != length at some g with l <= 8"};
    }
  }
  details << ", J(g) = l(g) for all 13121 elements of ball(8)";
  return {true, details.str()};
}

// 5. growth profile: per-shell maxima of ||H(basis)||^k / weight^(k+1) for
//    k in {0,1,2} and degrees 0..1 with L = 8, R = 2; asserts that the
//    maximum over shells 3..8 stays within the maximum over shells 0..2
Outcome criterion_growth_profile() {
  const Combing comb = Combing::free_prefix(2);
  bool pass = true;
  std::ostringstream details;
  for (int degree = 0; degree <= 1; ++degree) {
    for (long long k = 0; k <= 2; ++k) {
      const ProfileReport report = homotopy_norm_profile(comb, k, degree, 8, 2);
      Rat early(0), late(0);
      for (std::size_t s = 0; s <= 2; ++s) early = std::max(early, report.shell_max[s]);
      for (std::size_t s = 3; s <= 8; ++s) late = std::max(late, report.shell_max[s]);
      const bool ok = late <= early;
      pass = pass && ok;
      details << "[k=" << k << " deg=" << degree << " early=" << rat_to_string(early) << "~"
              << rat_to_decimal(early, 3) << " late=" << rat_to_string(late) << "~"
              << rat_to_decimal(late, 3) << (ok ? " ok" : " EXCEEDS") << "] ";
    }
  }
  return {pass, details.str()};
}

// 6. free-group resolution: b0 b1 = 0 and sigma b1 = id on randomized
//    elements; b1 sigma(g) = g - 1 and |supp sigma(g)| = l(g) for l(g) <= 8
Outcome criterion_resolution() {
  std::mt19937_64 rng(1006);
  const Group f2 = Group::free_group(2);
  const auto ball = f2.ball(3);
  for (int i = 0; i < 100; ++i) {
    ResolutionElement e = ResolutionElement::zero(2);
    for (auto& component : e.components) {
      component = random_chain(rng, ball, {.degree = 0, .terms = 3, .coeff_bound = 9});
    }
    const Chain image = free_res_b1(f2, e);
    if (free_res_b0(image) != 0) return {false, "b0 b1 != 0"};
    if (!(sigma(f2, image) == e)) return {false, "sigma b1 != id"};
  }
  for (const auto& g : f2.ball(8)) {
    const ResolutionElement s = sigma_basis(f2, g);
    std::size_t support = 0;
    for (const auto& component : s.components) support += component.support_size();
    if (static_cast<long long>(support) != f2.word_length(g)) {
      return {false, "sigma support size != word length"};
    }
    Chain expected(0);
    expected.add(Tuple{{g}}, 1);
    expected.add(Tuple{{f2.identity()}}, -1);
    if (!(free_res_b1(f2, s) == expected)) return {false, "b1 sigma(g) != g - 1"};
  }
  return {true, "100 randomized elements and all of ball(8), all identities exact"};
}

// 7. cohomology dimensions: F2 -> [1,2,0], Z -> [1,1,0], and bar cohomology
//    [1,0,0] for Z/2 and Z/3 up to degree 2
Outcome criterion_cohomology() {
  if (cohomology_small_resolution(Group::free_group(2)) != std::vector<long long>{1, 2, 0}) {
    return {false, "free group of rank 2 gave the wrong dimensions"};
  }
  if (cohomology_small_resolution(Group::free_abelian(1)) != std::vector<long long>{1, 1, 0}) {
    return {false, "infinite cyclic group gave the wrong dimensions"};
  }
  for (int n : {2, 3}) {
    const Group g = Group::finite_table(cyclic_table(n), {1});
    if (bar_cohomology_finite(g, 2) != std::vector<long long>{1, 0, 0}) {
      return {false, "bar cohomology of Z/" + std::to_string(n) + " is not [1,0,0]"};
    }
  }
  return {true, "F2 -> [1,2,0], Z -> [1,1,0], Z/2 and Z/3 -> [1,0,0]; all finite-dimensional"};
}

// 8. norm submultiplicativity under convolution, polynomial k in {0..3} and
//    exponential bases 3/2 and 2, >= 200 randomized pairs in F2 ball(3)
Outcome criterion_submultiplicativity() {
  std::mt19937_64 rng(1008);
  const Group f2 = Group::free_group(2);
  const auto ball = f2.ball(3);
  std::vector<NormSpec> specs;
  for (long long k = 0; k <= 3; ++k) specs.push_back(NormSpec::polynomial(k));
  specs.push_back(NormSpec::exponential(Rat(3) / 2));
  specs.push_back(NormSpec::exponential(Rat(2)));
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Chain phi = random_chain(rng, ball, {.degree = 0, .terms = 4, .coeff_bound = 9});
    const Chain psi = random_chain(rng, ball, {.degree = 0, .terms = 4, .coeff_bound = 9});
    const Chain conv = convolve(f2, phi, psi);
    for (const NormSpec& spec : specs) {
      if (weighted_norm(f2, conv, spec) >
          weighted_norm(f2, phi, spec) * weighted_norm(f2, psi, spec)) {
        return {false, "submultiplicativity failed"};
      }
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " pairs x 6 norms, inequality exact"};
}

// 9. Rips homology at desk scale: integer ball(3) at scale 1 is an interval,
//    the 3-point clique at scale 1 is a full triangle; delta^2 = 0 is
//    verified inside every homology computation
Outcome criterion_rips() {
  const Group z = Group::free_abelian(1);
  const auto interval = build_rips(FiniteMetricSpace::from_ball(z, 3), Rat(1), 1);
  if (rips_homology(interval) != std::vector<long long>{1, 0}) {
    return {false, "integer ball(3) at scale 1 is not an interval"};
  }
  std::vector<std::vector<Rat>> d(3, std::vector<Rat>(3, Rat(1)));
  for (int i = 0; i < 3; ++i) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
  const FiniteMetricSpace clique({"a", "b", "c"}, d);
  const auto triangle = build_rips(clique, Rat(1), 2);
  if (rips_homology(triangle) != std::vector<long long>{1, 0, 0}) {
    return {false, "3-point clique at scale 1 is not contractible"};
  }
  return {true, "interval -> [1,0], clique -> [1,0,0]; boundary composite zero in both"};
}

// 10. quasi-isometry witness: the identity between Z with generators {+-1}
//     and Z with generators {+-2,+-3} is quasi-Lipschitz both ways on
//     ball(8), and the composite is chain homotopic to the identity
Outcome criterion_quasi_isometry() {
  const Group z_std = Group::free_abelian(1);
  const Group z_23 = Group::free_abelian(1, {{2}, {3}});

  Rat forward(0), backward(0);
  for (const auto& x : z_std.ball(8)) {
    for (const auto& y : z_std.ball(8)) {
      const Rat ratio = rat_of(z_23.distance(x, y)) / rat_of(z_std.distance(x, y) + 1);
      forward = std::max(forward, ratio);
    }
  }
  for (const auto& x : z_23.ball(8)) {
    for (const auto& y : z_23.ball(8)) {
      const Rat ratio = rat_of(z_std.distance(x, y)) / rat_of(z_23.distance(x, y) + 1);
      backward = std::max(backward, ratio);
    }
  }
  std::ostringstream details;
  details << "C_forward = " << rat_to_string(forward) << ", C_backward = "
          << rat_to_string(backward) << "~" << rat_to_decimal(backward, 3);
  if (!(forward <= 1 && backward <= 3)) {
    return {false, details.str() + "; quasi-Lipschitz bounds exceeded"};
  }

  std::mt19937_64 rng(1010);
  const PointMap composite = PointMap::compose(PointMap::identity(), PointMap::identity());
  const auto ball = z_std.ball(4);
  int checked = 0;
  for (int degree = 1; degree <= 2; ++degree) {
    for (int i = 0; i < 20; ++i) {
      const Chain c = random_chain(rng, ball, {.degree = degree, .terms = 4, .coeff_bound = 9});
      if (!verify_homotopy_identity(PointMap::identity(), composite, c).ok) {
        return {false, details.str() + "; composite is not homotopic to the identity"};
      }
      ++checked;
    }
  }
  for (int i = 0; i < 10; ++i) {
    const Chain c = reduce_degree0(
        z_std, random_chain(rng, ball, {.degree = 0, .terms = 4, .coeff_bound = 9}));
    if (!verify_homotopy_identity(PointMap::identity(), composite, c).ok) {
      return {false, details.str() + "; composite fails on a reduced degree-0 chain"};
    }
    ++checked;
  }
  details << ", " << checked << " chains through the composite, identity exact";
  return {true, details.str()};
}

struct Criterion {
  const char* name;
  Outcome (*run)();
  double budget_seconds;  // 0 = no stated budget
};

const Criterion kCriteria[] = {
    {"simplicial identity delta^2 = 0", criterion_simplicial_identity, 10},
    {"elementary homotopy identity", criterion_homotopy_identity, 30},
    {"contracting homotopy identity", criterion_contracting_homotopy, 60},
    {"free-group combing constants", criterion_combing_constants, 0},
    {"contracting homotopy growth profile", criterion_growth_profile, 300},
    {"free-group resolution identities", criterion_resolution, 0},
    {"cohomology dimensions", criterion_cohomology, 30},
    {"norm submultiplicativity", criterion_submultiplicativity, 0},
    {"Rips homology at desk scale", criterion_rips, 10},
    {"quasi-isometry witness", criterion_quasi_isometry, 0},
};

bool run_criterion(int index) {
  const Criterion& criterion = kCriteria[index];
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = criterion.run();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool pass = outcome.pass;
  std::ostringstream line;
  line << "CRITERION " << (index + 1) << " " << (pass ? "PASS" : "FAIL") << " | "
       << criterion.name << " | " << outcome.details << " | " << seconds << "s";
  if (criterion.budget_seconds > 0) {
    line << " (budget " << criterion.budget_seconds << "s)";
    if (seconds >= criterion.budget_seconds) {
      pass = false;
      line << " OVER BUDGET";
    }
  }
  std::cout << line.str() << std::endl;
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[i + 1]);
      ++i;
    } else if (std::strcmp(argv[i], "--all") != 0) {
      std::cerr << "usage: tchains_acceptance [--criterion N | --all]" << std::endl;
      return 1;
    }
  }
  const int total = static_cast<int>(std::size(kCriteria));
  if (only < 0 || only > total) {
    std::cerr << "criterion index out of range" << std::endl;
    return 1;
  }
  int failures = 0;
  if (only > 0) {
    failures = run_criterion(only - 1) ? 0 : 1;
  } else {
    for (int i = 0; i < total; ++i) {
      if (!run_criterion(i)) ++failures;
    }
    std::cout << (total - failures) << "/" << total << " criteria passed" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
