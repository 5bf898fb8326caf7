#include "tchains/combing.hpp"

#include <algorithm>
#include <stdexcept>

namespace tchains {

Combing Combing::free_prefix(int rank) {
  Combing c(Kind::FreePrefix, Group::free_group(rank));
  c.lipschitz_ = 1;
  c.closeness_ = 1;
  c.growth_order_ = 1;
  c.growth_constant_ = 1;
  return c;
}

Combing Combing::abelian_staircase(int rank) {
  Combing c(Kind::AbelianStaircase, Group::free_abelian(rank));
  c.lipschitz_ = 2;
  c.closeness_ = 1;
  c.growth_order_ = 1;
  c.growth_constant_ = 1;
  return c;
}

Combing Combing::table(Group group, std::map<std::pair<long long, GroupElement>, GroupElement> entries,
                       std::map<GroupElement, long long> stab, Rat lipschitz, long long closeness,
                       long long growth_order, Rat growth_constant) {
  Combing c(Kind::Table, std::move(group));
  for (const auto& [x, s] : stab) {
    c.group_.validate(x);
    if (s < 0) throw std::invalid_argument("stabilization bound must be >= 0");
  }
  for (const auto& [key, fx] : entries) {
    c.group_.validate(key.second);
    c.group_.validate(fx);
  }
  c.table_entries_ = std::move(entries);
  c.table_stab_ = std::move(stab);
  c.lipschitz_ = std::move(lipschitz);
  c.closeness_ = closeness;
  c.growth_order_ = growth_order;
  c.growth_constant_ = std::move(growth_constant);
  return c;
}

GroupElement Combing::apply(long long n, const GroupElement& x) const {
  if (n < 0) throw std::invalid_argument("combing stage index must be >= 0");
  group_.validate(x);
  switch (kind_) {
    case Kind::FreePrefix: {
      const long long len = static_cast<long long>(x.data.size());
      const long long keep = std::min(n, len);
      return GroupElement{{x.data.begin(), x.data.begin() + keep}};
    }
    case Kind::AbelianStaircase: {
      GroupElement out = x;
      long long budget = n;
      for (std::size_t i = 0; i < out.data.size(); ++i) {
        const long long mag = out.data[i] < 0 ? -out.data[i] : out.data[i];
        const long long walked = std::min(budget, mag);
        out.data[i] = (out.data[i] < 0 ? -walked : walked);
        budget -= walked;
      }
      return out;
    }
    case Kind::Table: {
      if (n >= stab(x)) return x;
      auto it = table_entries_.find({n, x});
      if (it == table_entries_.end()) {
        throw std::invalid_argument("combing table has no entry for the queried stage/point");
      }
      return it->second;
    }
  }
  throw std::logic_error("unreachable");
}

long long Combing::stab(const GroupElement& x) const {
  group_.validate(x);
  switch (kind_) {
    case Kind::FreePrefix:
      return static_cast<long long>(x.data.size());
    case Kind::AbelianStaircase: {
      long long sum = 0;
      for (long long c : x.data) sum += c < 0 ? -c : c;
      return sum;
    }
    case Kind::Table: {
      auto it = table_stab_.find(x);
      if (it == table_stab_.end()) {
        throw std::invalid_argument("combing table has no stabilization bound for the point");
      }
      return it->second;
    }
  }
  throw std::logic_error("unreachable");
}

long long Combing::steps(const GroupElement& x) const {
  const long long bound = stab(x);
  long long count = 0;
  GroupElement current = apply(0, x);
  for (long long n = 0; n < bound; ++n) {
    GroupElement next = apply(n + 1, x);
    if (next != current) ++count;
    current = std::move(next);
  }
  return count;
}

CombingReport verify_combing(const Combing& combing, long long radius) {
  const Group& g = combing.group();
  CombingReport report;
  report.radius = radius;
  report.lipschitz_observed = 0;
  report.steps_max_by_shell.assign(static_cast<std::size_t>(radius) + 1, 0);

  const std::vector<GroupElement> ball = g.ball(radius);
  long long max_stab = 0;
  for (const auto& x : ball) max_stab = std::max(max_stab, combing.stab(x));
  const long long stage_end = max_stab + 1;  // one stage past stabilization

  // per-point axioms and J
  for (const auto& x : ball) {
    if (combing.apply(0, x) != combing.base_point()) report.basepoint_ok = false;
    const long long sx = combing.stab(x);
    if (combing.apply(sx, x) != x || combing.apply(sx + 1, x) != x) {
      report.stabilization_ok = false;
    }
    for (long long n = 0; n <= stage_end; ++n) {
      const long long step =
          g.distance(combing.apply(n, x), combing.apply(n + 1, x));
      report.closeness_observed = std::max(report.closeness_observed, step);
    }
    const long long shell = g.word_length(x);
    const long long j = combing.steps(x);
    auto& cell = report.steps_max_by_shell[static_cast<std::size_t>(shell)];
    cell = std::max(cell, j);
    const Rat bound = combing.growth_constant() *
                      rat_pow(rat_of(g.word_length(x) + 1),
                              static_cast<unsigned long>(combing.growth_order()));
    if (rat_of(j) > bound) report.growth_ok = false;
  }

  // pairwise quasi-Lipschitz
  for (const auto& x : ball) {
    for (const auto& y : ball) {
      if (y < x) continue;
      const long long dxy = g.distance(x, y);
      for (long long n = 0; n <= stage_end; ++n) {
        const Rat ratio =
            rat_of(g.distance(combing.apply(n, x), combing.apply(n, y))) / rat_of(dxy + 1);
        if (ratio > report.lipschitz_observed) report.lipschitz_observed = ratio;
      }
    }
  }

  report.lipschitz_ok = report.lipschitz_observed <= combing.declared_lipschitz();
  report.closeness_ok = report.closeness_observed <= combing.declared_closeness();
  report.axioms_ok = report.basepoint_ok && report.stabilization_ok && report.lipschitz_ok &&
                     report.closeness_ok && report.growth_ok;
  return report;
}

Chain contracting_homotopy(const Combing& combing, const Chain& c, bool reduced) {
  if (reduced && c.degree() == 0 && augmentation(c) != 0) {
    throw std::invalid_argument(
        "degree-0 input to the contracting homotopy must have augmentation 0");
  }
  Chain out(c.degree() + 1);
  for (const auto& [t, coeff] : c.terms()) {
    const std::size_t n1 = t.points.size();
    long long max_stab = 0;
    for (const auto& p : t.points) max_stab = std::max(max_stab, combing.stab(p));

    std::vector<GroupElement> current, next;
    current.reserve(n1);
    for (const auto& p : t.points) current.push_back(combing.apply(0, p));
    for (long long n = 0; n < max_stab; ++n) {
      next.clear();
      for (const auto& p : t.points) next.push_back(combing.apply(n + 1, p));
      if (next == current) {
        current.swap(next);
        continue;
      }
      for (std::size_t j = 0; j < n1; ++j) {
        Tuple prism;
        prism.points.reserve(n1 + 1);
        for (std::size_t i = 0; i <= j; ++i) prism.points.push_back(current[i]);
        for (std::size_t i = j; i < n1; ++i) prism.points.push_back(next[i]);
        out.add(prism, (j % 2 == 0) ? coeff : Rat(-coeff));
      }
      current.swap(next);
    }
  }
  return out;
}

ContractionCheck check_contraction(const Combing& combing, const Chain& c) {
  Chain lhs = boundary(contracting_homotopy(combing, c));
  if (c.degree() >= 1) {
    lhs += contracting_homotopy(combing, boundary(c), /*reduced=*/false);
  }
  Chain diff = lhs - c;
  return ContractionCheck{diff.is_zero(), std::move(diff)};
}

namespace {

// Enumerates nondegenerate tuples (x_0,...,x_n) with l(x_i) <= L and pairwise
// distances <= R, invoking fn on each. Later entries are generated as
// x_0 * s with l(s) <= R, so the cost per tuple stays proportional to the
// small control ball rather than the whole length ball.
template <typename Fn>
void for_each_controlled_tuple(const Group& g, int degree, long long length_bound,
                               long long control_bound, Fn&& fn) {
  const std::vector<GroupElement> length_ball = g.ball(length_bound);
  const std::vector<GroupElement> control_ball = g.ball(control_bound);
  std::vector<GroupElement> partial;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(partial.size()) == degree + 1) {
      fn(Tuple{partial});
      return;
    }
    auto try_extend = [&](const GroupElement& x) {
      if (!partial.empty() && partial.back() == x) return;
      if (g.word_length(x) > length_bound) return;
      for (const auto& y : partial) {
        if (g.distance(x, y) > control_bound) return;
      }
      partial.push_back(x);
      self(self);
      partial.pop_back();
    };
    if (partial.empty()) {
      for (const auto& x : length_ball) try_extend(x);
    } else {
      for (const auto& s : control_ball) try_extend(g.multiply(partial.front(), s));
    }
  };
  rec(rec);
}

}  // namespace

ProfileReport homotopy_norm_profile(const Combing& combing, long long k, int degree,
                                    long long length_bound, long long control_bound) {
  if (k < 0) throw std::invalid_argument("profile weight exponent must be >= 0");
  if (degree < 0) throw std::invalid_argument("profile degree must be >= 0");
  const Group& g = combing.group();
  ProfileReport report;
  report.k = k;
  report.degree = degree;
  report.length_bound = length_bound;
  report.control_bound = control_bound;
  report.growth_order = combing.growth_order();
  report.shell_max.assign(static_cast<std::size_t>(length_bound) + 1, Rat(0));
  report.shell_witness.assign(static_cast<std::size_t>(length_bound) + 1, std::nullopt);

  const NormSpec norm = NormSpec::polynomial(k);
  const unsigned long denom_exp = static_cast<unsigned long>(k + report.growth_order);

  for_each_controlled_tuple(g, degree, length_bound, control_bound, [&](const Tuple& t) {
    ++report.tuples_examined;
    Chain image = contracting_homotopy(combing, Chain::basis(t), /*reduced=*/false);
    long long lsum = 0;
    for (const auto& p : t.points) lsum += g.word_length(p);
    Rat ratio = weighted_norm(g, image, norm) / rat_pow(rat_of(lsum + 1), denom_exp);
    ratio.canonicalize();
    const std::size_t shell = static_cast<std::size_t>(g.word_length(t.points.front()));
    if (ratio > report.shell_max[shell]) {
      report.shell_max[shell] = ratio;
      report.shell_witness[shell] = t;
    }
    report.max_output_control_radius =
        std::max(report.max_output_control_radius, control_radius(g, image));
  });
  return report;
}

}  // namespace tchains
