#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tchains/chain.hpp"
#include "tchains/group.hpp"
#include "tchains/linalg.hpp"

namespace tchains {

/// Table-backed cochain of a fixed arity: values on G^n for a finite group,
/// or on ball(L)^n for a declared radius L. Arity 0 is a single scalar.
class Cochain {
 public:
  /// Domain descriptor: the whole finite group, or a ball of the given radius.
  struct Domain {
    bool finite_total = false;
    long long radius = 0;
  };

  static Cochain scalar(Rat value);

  /// Materializes a rule into a table over the full group (finite family)
  /// or over ball(radius)^arity.
  static Cochain from_rule(const Group& g, int arity, Domain domain,
                           const std::function<Rat(const std::vector<GroupElement>&)>& rule);

  static Cochain from_table(const Group& g, int arity, Domain domain,
                            std::map<std::vector<GroupElement>, Rat> values);

  int arity() const { return arity_; }
  const Domain& domain() const { return domain_; }
  const std::map<std::vector<GroupElement>, Rat>& values() const { return values_; }

  /// Throws std::invalid_argument outside the stated domain.
  Rat value(const Group& g, const std::vector<GroupElement>& args) const;

 private:
  Cochain(int arity, Domain domain) : arity_(arity), domain_(domain) {}

  bool in_domain(const Group& g, const std::vector<GroupElement>& args) const;

  int arity_;
  Domain domain_;
  std::map<std::vector<GroupElement>, Rat> values_;  // zeros omitted
};

/// Inhomogeneous bar coboundary
///   (d phi)(g_1,...,g_{n+1}) = phi(g_2,...,g_{n+1})
///     + sum_{j=1..n} (-1)^j phi(g_1,...,g_j g_{j+1},...,g_{n+1})
///     + (-1)^{n+1} phi(g_1,...,g_n).
/// For a ball(L) table the output is tabulated over ball(L/2), where every
/// required evaluation stays inside the input domain; throws if the input
/// radius is too small to evaluate anything.
Cochain bar_coboundary(const Group& g, const Cochain& phi);

/// Dimensions [dim H^0,...,dim H^n_max] of the bar cochain complex of a
/// finite group with real coefficients, by exact rank computation. Guarded by
/// a cap on the largest tabulated domain |G|^(n_max+1).
std::vector<long long> bar_cohomology_finite(const Group& g, int n_max,
                                             std::size_t table_cap = 2000000);

struct GrowthReport {
  long long k = 0;
  long long radius = 0;
  Rat least_constant;                  // least C with |phi| <= C prod (l(g_i)+1)^k on the table
  std::vector<GroupElement> witness;   // argument tuple attaining it
  std::vector<Rat> constant_by_radius; // least C restricted to ball(0..L)
  bool plateaued = false;              // last two radii agree (observation, not a verdict)
};

/// Least polynomial-growth constant of order k over the tabulated domain.
GrowthReport cochain_growth_class(const Group& g, const Cochain& phi, long long k);

/// Element of R[F_r]^r: one degree-0 chain per generator summand.
struct ResolutionElement {
  std::vector<Chain> components;

  static ResolutionElement zero(int rank) {
    return ResolutionElement{std::vector<Chain>(static_cast<std::size_t>(rank), Chain(0))};
  }
  bool is_zero() const {
    for (const auto& c : components) {
      if (!c.is_zero()) return false;
    }
    return true;
  }
  bool operator==(const ResolutionElement&) const = default;
};

/// b_0(phi) = sum_g phi(g); equals the augmentation.
Rat free_res_b0(const Chain& phi);

/// b_1(phi_1,...,phi_r)(g) = sum_j phi_j(g) - phi_j(g s(j)).
Chain free_res_b1(const Group& g, const ResolutionElement& e);

/// The contracting section on basis vectors: sigma(identity) = 0 and, writing
/// g = g2 s(j)^eps with l(g2) < l(g), sigma(g) - sigma(g2) is +g in summand j
/// (eps = +1) or -g2 in summand j (eps = -1).
ResolutionElement sigma_basis(const Group& g, const GroupElement& x);

/// Linear extension of sigma_basis to finitely supported chains.
ResolutionElement sigma(const Group& g, const Chain& psi);

/// Cohomology dimensions [dim H^0, dim H^1, dim H^2] of the equivariant-Hom
/// complex 0 -> R -> R^r -> 0 of the two-step free resolution, with the
/// coboundary computed by evaluating invariant functionals on b_1 images.
/// Supports free groups, the infinite cyclic group, and the trivial group.
std::vector<long long> cohomology_small_resolution(const Group& g);

}  // namespace tchains
