#include "tchains/resolutions.hpp"

#include <algorithm>
#include <stdexcept>

namespace tchains {

Cochain Cochain::scalar(Rat value) {
  Cochain c(0, Domain{true, 0});
  if (value != 0) c.values_.emplace(std::vector<GroupElement>{}, std::move(value));
  return c;
}

bool Cochain::in_domain(const Group& g, const std::vector<GroupElement>& args) const {
  if (static_cast<int>(args.size()) != arity_) return false;
  for (const auto& x : args) {
    g.validate(x);
    if (!domain_.finite_total && g.word_length(x) > domain_.radius) return false;
  }
  return true;
}

Cochain Cochain::from_rule(const Group& g, int arity, Domain domain,
                           const std::function<Rat(const std::vector<GroupElement>&)>& rule) {
  if (arity < 0) throw std::invalid_argument("cochain arity must be >= 0");
  if (domain.finite_total && g.family() != Family::Finite) {
    throw std::invalid_argument("total cochain tables require a finite group");
  }
  Cochain c(arity, domain);
  const std::vector<GroupElement> points =
      domain.finite_total ? g.ball(static_cast<long long>(g.order())) : g.ball(domain.radius);
  std::vector<GroupElement> args(static_cast<std::size_t>(arity), g.identity());
  auto rec = [&](auto&& self, int coord) -> void {
    if (coord == arity) {
      Rat v = rule(args);
      if (v != 0) c.values_.emplace(args, std::move(v));
      return;
    }
    for (const auto& x : points) {
      args[static_cast<std::size_t>(coord)] = x;
      self(self, coord + 1);
    }
  };
  rec(rec, 0);
  return c;
}

Cochain Cochain::from_table(const Group& g, int arity, Domain domain,
                            std::map<std::vector<GroupElement>, Rat> values) {
  if (arity < 0) throw std::invalid_argument("cochain arity must be >= 0");
  Cochain c(arity, domain);
  for (auto& [args, v] : values) {
    if (!c.in_domain(g, args)) {
      throw std::invalid_argument("cochain table key outside the stated domain");
    }
    if (v != 0) c.values_.emplace(args, std::move(v));
  }
  return c;
}

Rat Cochain::value(const Group& g, const std::vector<GroupElement>& args) const {
  if (!in_domain(g, args)) {
    throw std::invalid_argument("cochain evaluated outside its domain");
  }
  auto it = values_.find(args);
  return it == values_.end() ? Rat(0) : it->second;
}

Cochain bar_coboundary(const Group& g, const Cochain& phi) {
  const int n = phi.arity();
  Cochain::Domain out_domain = phi.domain();
  if (!out_domain.finite_total) {
    out_domain.radius = phi.domain().radius / 2;
  }

  const std::vector<GroupElement> points = out_domain.finite_total
                                               ? g.ball(static_cast<long long>(g.order()))
                                               : g.ball(out_domain.radius);

  std::map<std::vector<GroupElement>, Rat> table;
  std::vector<GroupElement> args(static_cast<std::size_t>(n) + 1, g.identity());
  auto rec = [&](auto&& self, int coord) -> void {
    if (coord == n + 1) {
      Rat v(0);
      std::vector<GroupElement> face;
      face.reserve(static_cast<std::size_t>(n));
      // leading face drops g_1
      face.assign(args.begin() + 1, args.end());
      v += phi.value(g, face);
      // middle faces multiply adjacent entries
      for (int j = 1; j <= n; ++j) {
        face.clear();
        for (int i = 0; i < n + 1; ++i) {
          if (i == j - 1) {
            face.push_back(g.multiply(args[static_cast<std::size_t>(j - 1)],
                                      args[static_cast<std::size_t>(j)]));
          } else if (i != j) {
            face.push_back(args[static_cast<std::size_t>(i)]);
          }
        }
        v += (j % 2 == 0) ? phi.value(g, face) : Rat(-phi.value(g, face));
      }
      // trailing face drops g_{n+1}
      face.assign(args.begin(), args.end() - 1);
      v += ((n + 1) % 2 == 0) ? phi.value(g, face) : Rat(-phi.value(g, face));
      if (v != 0) table.emplace(args, std::move(v));
      return;
    }
    for (const auto& x : points) {
      args[static_cast<std::size_t>(coord)] = x;
      self(self, coord + 1);
    }
  };
  rec(rec, 0);
  return Cochain::from_table(g, n + 1, out_domain, std::move(table));
}

namespace {

std::size_t checked_pow(std::size_t base, int exp, std::size_t cap) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

std::vector<long long> bar_cohomology_finite(const Group& g, int n_max, std::size_t table_cap) {
  if (g.family() != Family::Finite) {
    throw std::invalid_argument("bar cohomology is tabulated for finite groups only");
  }
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  const std::size_t order = g.order();
  if (checked_pow(order, n_max + 1, table_cap) > table_cap) {
    throw std::invalid_argument("bar cochain table size exceeds the configured cap");
  }

  // dim Coh^n = |G|^n with tuples indexed in mixed radix
  auto dim_of = [&](int n) {
    long long d = 1;
    for (int i = 0; i < n; ++i) d *= static_cast<long long>(order);
    return d;
  };
  auto index_of = [&](const std::vector<long long>& tuple) {
    long long idx = 0;
    for (long long x : tuple) idx = idx * static_cast<long long>(order) + x;
    return idx;
  };

  // d_n : Coh^n -> Coh^{n+1}; build cochain-complex matrices, one per degree.
  std::vector<RatMatrix> deltas;
  for (int n = 0; n <= n_max; ++n) {
    RatMatrix d(dim_of(n + 1), dim_of(n));
    std::vector<long long> tuple(static_cast<std::size_t>(n) + 1, 0);
    auto rec = [&](auto&& self, int coord) -> void {
      if (coord == n + 1) {
        const long long row = index_of(tuple);
        std::vector<long long> face;
        face.reserve(static_cast<std::size_t>(n));
        face.assign(tuple.begin() + 1, tuple.end());
        d.add(row, index_of(face), Rat(1));
        for (int j = 1; j <= n; ++j) {
          face.clear();
          for (int i = 0; i < n + 1; ++i) {
            if (i == j - 1) {
              face.push_back(
                  g.table()[static_cast<std::size_t>(tuple[static_cast<std::size_t>(j - 1)])]
                           [static_cast<std::size_t>(tuple[static_cast<std::size_t>(j)])]);
            } else if (i != j) {
              face.push_back(tuple[static_cast<std::size_t>(i)]);
            }
          }
          d.add(row, index_of(face), (j % 2 == 0) ? Rat(1) : Rat(-1));
        }
        face.assign(tuple.begin(), tuple.end() - 1);
        d.add(row, index_of(face), ((n + 1) % 2 == 0) ? Rat(1) : Rat(-1));
        return;
      }
      for (std::size_t x = 0; x < order; ++x) {
        tuple[static_cast<std::size_t>(coord)] = static_cast<long long>(x);
        self(self, coord + 1);
      }
    };
    rec(rec, 0);
    deltas.push_back(std::move(d));
  }

  std::vector<long long> out;
  long long previous_rank = 0;  // rank d_{-1}
  for (int n = 0; n <= n_max; ++n) {
    const long long rank_n = rank(deltas[static_cast<std::size_t>(n)]);
    out.push_back(dim_of(n) - rank_n - previous_rank);
    previous_rank = rank_n;
  }
  return out;
}

GrowthReport cochain_growth_class(const Group& g, const Cochain& phi, long long k) {
  if (k < 0) throw std::invalid_argument("growth order must be >= 0");
  GrowthReport report;
  report.k = k;
  report.radius = phi.domain().finite_total ? static_cast<long long>(g.order())
                                            : phi.domain().radius;
  report.least_constant = 0;

  std::vector<Rat> by_radius(static_cast<std::size_t>(report.radius) + 1, Rat(0));
  for (const auto& [args, v] : phi.values()) {
    Rat weight(1);
    long long max_len = 0;
    for (const auto& x : args) {
      const long long l = g.word_length(x);
      max_len = std::max(max_len, l);
      weight *= rat_pow(rat_of(l + 1), static_cast<unsigned long>(k));
    }
    Rat ratio = rat_abs(v) / weight;
    if (ratio > report.least_constant) {
      report.least_constant = ratio;
      report.witness = args;
    }
    for (long long r = max_len; r <= report.radius; ++r) {
      auto& cell = by_radius[static_cast<std::size_t>(r)];
      if (ratio > cell) cell = ratio;
    }
  }
  report.constant_by_radius = std::move(by_radius);
  const std::size_t m = report.constant_by_radius.size();
  report.plateaued = m >= 2 && report.constant_by_radius[m - 1] == report.constant_by_radius[m - 2];
  return report;
}

Rat free_res_b0(const Chain& phi) { return augmentation(phi); }

namespace {

void require_free_resolution_group(const Group& g) {
  const bool ok = g.family() == Family::Free ||
                  (g.family() == Family::Abelian && g.rank() == 1 && !g.has_custom_generators());
  if (!ok) {
    throw std::invalid_argument(
        "the two-step free resolution applies to free groups and the infinite cyclic group");
  }
}

// g = g2 * s(j)^eps with l(g2) < l(g); returns (g2, j, eps).
std::tuple<GroupElement, int, int> peel_last_generator(const Group& g, const GroupElement& x) {
  if (g.family() == Family::Free) {
    GroupElement g2 = x;
    const long long letter = g2.data.back();
    g2.data.pop_back();
    return {g2, static_cast<int>(letter < 0 ? -letter : letter), letter < 0 ? -1 : +1};
  }
  // infinite cyclic group as coordinate vectors
  GroupElement g2 = x;
  const int eps = g2.data[0] > 0 ? +1 : -1;
  g2.data[0] -= eps;
  return {g2, 1, eps};
}

}  // namespace

Chain free_res_b1(const Group& g, const ResolutionElement& e) {
  require_free_resolution_group(g);
  const int r = g.rank();
  if (static_cast<int>(e.components.size()) != r) {
    throw std::invalid_argument("resolution element has wrong number of summands");
  }
  Chain out(0);
  for (int j = 0; j < r; ++j) {
    const GroupElement s = g.positive_generators()[static_cast<std::size_t>(j)];
    const GroupElement s_inv = g.inverse(s);
    for (const auto& [t, coeff] : e.components[static_cast<std::size_t>(j)].terms()) {
      const GroupElement& h = t.points[0];
      out.add(Tuple{{h}}, coeff);
      out.add(Tuple{{g.multiply(h, s_inv)}}, -coeff);
    }
  }
  return out;
}

ResolutionElement sigma_basis(const Group& g, const GroupElement& x) {
  require_free_resolution_group(g);
  g.validate(x);
  ResolutionElement out = ResolutionElement::zero(g.rank());
  GroupElement current = x;
  while (g.word_length(current) > 0) {
    auto [g2, j, eps] = peel_last_generator(g, current);
    if (eps > 0) {
      out.components[static_cast<std::size_t>(j - 1)].add(Tuple{{current}}, Rat(1));
    } else {
      out.components[static_cast<std::size_t>(j - 1)].add(Tuple{{g2}}, Rat(-1));
    }
    current = std::move(g2);
  }
  return out;
}

ResolutionElement sigma(const Group& g, const Chain& psi) {
  if (psi.degree() != 0) throw std::invalid_argument("sigma expects a degree-0 chain");
  ResolutionElement out = ResolutionElement::zero(g.rank());
  for (const auto& [t, coeff] : psi.terms()) {
    ResolutionElement part = sigma_basis(g, t.points[0]);
    for (std::size_t j = 0; j < out.components.size(); ++j) {
      part.components[j] *= coeff;
      out.components[j] += part.components[j];
    }
  }
  return out;
}

std::vector<long long> cohomology_small_resolution(const Group& g) {
  if (g.family() == Family::Finite && g.order() == 1) {
    // trivial group: 0 -> R[G] -> R is already a free resolution
    return {1, 0, 0};
  }
  require_free_resolution_group(g);
  const int r = g.rank();

  // An invariant functional on R[G] is determined by its value at the
  // identity basis vector; evaluate the functional with value 1 on the b_1
  // image of each standard basis element of R[G]^r.
  RatMatrix d0(r, 1);
  for (int j = 0; j < r; ++j) {
    ResolutionElement basis = ResolutionElement::zero(r);
    basis.components[static_cast<std::size_t>(j)].add(Tuple{{g.identity()}}, Rat(1));
    const Chain image = free_res_b1(g, basis);
    Rat evaluated(0);
    for (const auto& [t, coeff] : image.terms()) evaluated += coeff;  // invariant functional
    d0.set(j, 0, evaluated);
  }

  const long long rank_d0 = rank(d0);
  return {1 - rank_d0, static_cast<long long>(r) - rank_d0, 0};
}

}  // namespace tchains
