#pragma once

#include <map>
#include <memory>
#include <variant>

#include "tchains/chain.hpp"

namespace tchains {

class Combing;

/// A total map between point sets, as a closed-form rule or a finite table.
/// Table-backed maps reject points outside their stated domain.
class PointMap {
 public:
  static PointMap identity();
  static PointMap constant(GroupElement pt);
  static PointMap combing_stage(std::shared_ptr<const Combing> combing, long long n);
  static PointMap table(std::map<GroupElement, GroupElement> entries);
  static PointMap compose(PointMap outer, PointMap inner);

  GroupElement operator()(const GroupElement& x) const;

  bool is_identity() const { return std::holds_alternative<Identity>(impl_); }

  struct Identity {};
  struct Constant {
    GroupElement pt;
  };
  struct Stage {
    std::shared_ptr<const Combing> combing;
    long long n;
  };
  struct Table {
    std::map<GroupElement, GroupElement> entries;
  };
  struct Compose {
    std::shared_ptr<const PointMap> outer, inner;
  };

  const std::variant<Identity, Constant, Stage, Table, Compose>& rule() const { return impl_; }

 private:
  explicit PointMap(std::variant<Identity, Constant, Stage, Table, Compose> impl)
      : impl_(std::move(impl)) {}
  std::variant<Identity, Constant, Stage, Table, Compose> impl_;
};

/// Entrywise image chain; degenerate image tuples are projected to zero.
Chain pushforward(const PointMap& f, const Chain& c);

/// The degree +1 prism operator between the chain maps induced by f and fp:
///   (x_0,...,x_n) -> sum_j (-1)^j (f(x_0),...,f(x_j),fp(x_j),...,fp(x_n)).
Chain elementary_homotopy(const PointMap& f, const PointMap& fp, const Chain& c);

struct HomotopyCheck {
  bool ok;
  Chain discrepancy;  // left side minus right side, zero iff ok
};

/// Checks H(f,fp) delta + delta H(f,fp) = fp_* - f_* exactly on c. In degree
/// 0 the H(f,fp) delta term is absent (reduced complex convention).
HomotopyCheck verify_homotopy_identity(const PointMap& f, const PointMap& fp, const Chain& c);

}  // namespace tchains
