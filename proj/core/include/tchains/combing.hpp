#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tchains/chain.hpp"
#include "tchains/homotopy.hpp"

namespace tchains {

/// A sequence of maps f_n : X -> X with f_0 constant at the base point
/// (the identity element) and f_n(x) = x for all n >= stab(x), together with
/// declared quasi-Lipschitz / closeness / growth constants.
class Combing {
 public:
  enum class Kind { FreePrefix, AbelianStaircase, Table };

  /// f_n(g) = prefix of length min(n, l(g)) of the reduced word of g.
  static Combing free_prefix(int rank);

  /// f_n(x) walks the staircase geodesic from 0 to x that exhausts
  /// coordinate 1 first, then coordinate 2, and so on.
  static Combing abelian_staircase(int rank);

  /// Finite table over a stated ball: entries[(n, x)] = f_n(x) for all
  /// 0 <= n < stab(x); f_n(x) = x for n >= stab(x). Queries outside the
  /// stated domain throw.
  static Combing table(Group group, std::map<std::pair<long long, GroupElement>, GroupElement> entries,
                       std::map<GroupElement, long long> stab, Rat lipschitz, long long closeness,
                       long long growth_order, Rat growth_constant);

  Kind kind() const { return kind_; }
  const Group& group() const { return group_; }
  const GroupElement& base_point() const { return base_; }

  GroupElement apply(long long n, const GroupElement& x) const;
  long long stab(const GroupElement& x) const;

  /// Number of indices n with f_n(x) != f_{n+1}(x).
  long long steps(const GroupElement& x) const;

  const Rat& declared_lipschitz() const { return lipschitz_; }
  long long declared_closeness() const { return closeness_; }
  long long growth_order() const { return growth_order_; }
  const Rat& growth_constant() const { return growth_constant_; }

  const std::map<std::pair<long long, GroupElement>, GroupElement>& table_entries() const {
    return table_entries_;
  }
  const std::map<GroupElement, long long>& table_stab() const { return table_stab_; }

 private:
  Combing(Kind kind, Group group)
      : kind_(kind), group_(std::move(group)), base_(group_.identity()) {}

  Kind kind_;
  Group group_;
  GroupElement base_;
  Rat lipschitz_;
  long long closeness_ = 0;
  long long growth_order_ = 0;
  Rat growth_constant_;
  std::map<std::pair<long long, GroupElement>, GroupElement> table_entries_;
  std::map<GroupElement, long long> table_stab_;
};

struct CombingReport {
  long long radius = 0;
  bool basepoint_ok = true;          // f_0(x) = pt
  bool stabilization_ok = true;      // f_n(x) = x for n >= stab(x)
  Rat lipschitz_observed;            // max d(f_n x, f_n y) / (d(x,y)+1)
  long long closeness_observed = 0;  // max d(f_n x, f_{n+1} x)
  bool lipschitz_ok = true;          // observed <= declared
  bool closeness_ok = true;
  std::vector<long long> steps_max_by_shell;  // max J over each shell l(x) = s
  bool growth_ok = true;  // J(x) <= growth_constant * (l(x)+1)^order
  bool axioms_ok = true;
};

/// Exhaustive axiom check over the ball of the given radius.
CombingReport verify_combing(const Combing& combing, long long radius);

/// H(c) = sum_n H(f_n, f_{n+1})(c); the sum is finite because only stages
/// with n < max stab over the support contribute. With `reduced` set, a
/// degree-0 input must lie in the augmentation kernel.
Chain contracting_homotopy(const Combing& combing, const Chain& c, bool reduced = true);

struct ContractionCheck {
  bool ok;
  Chain discrepancy;
};

/// Checks delta H + H delta = id on c (degree >= 1), or delta H = id on a
/// degree-0 chain with augmentation zero.
ContractionCheck check_contraction(const Combing& combing, const Chain& c);

struct ProfileReport {
  long long k = 0;
  int degree = 0;
  long long length_bound = 0;   // L: enumerate tuples with l(x_i) <= L
  long long control_bound = 0;  // R: pairwise distances <= R
  long long growth_order = 1;
  /// Per shell s = l(x_0): max over tuples of
  ///   ||H(basis tuple)||^k / (l(x_0)+...+l(x_n)+1)^(k+order).
  std::vector<Rat> shell_max;
  std::vector<std::optional<Tuple>> shell_witness;
  long long max_output_control_radius = 0;
  std::size_t tuples_examined = 0;
};

ProfileReport homotopy_norm_profile(const Combing& combing, long long k, int degree,
                                    long long length_bound, long long control_bound);

}  // namespace tchains
