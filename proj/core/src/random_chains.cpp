#include "tchains/random_chains.hpp"

#include <map>
#include <stdexcept>

namespace tchains {

Chain random_chain(std::mt19937_64& rng, const std::vector<GroupElement>& points,
                   const RandomChainParams& params) {
  if (points.empty()) throw std::invalid_argument("random chain needs a nonempty point pool");
  if (params.degree >= 1 && points.size() < 2) {
    throw std::invalid_argument("nondegenerate tuples of positive degree need >= 2 points");
  }
  std::uniform_int_distribution<std::size_t> pick_point(0, points.size() - 1);
  std::uniform_int_distribution<long long> pick_coeff(-params.coeff_bound, params.coeff_bound);

  Chain c(params.degree);
  for (int term = 0; term < params.terms; ++term) {
    Tuple t;
    t.points.reserve(static_cast<std::size_t>(params.degree) + 1);
    for (int i = 0; i <= params.degree; ++i) {
      GroupElement x = points[pick_point(rng)];
      while (!t.points.empty() && t.points.back() == x) x = points[pick_point(rng)];
      t.points.push_back(std::move(x));
    }
    long long coeff = 0;
    while (coeff == 0) coeff = pick_coeff(rng);
    c.add(t, rat_of(coeff));
  }
  return c;
}

Chain reduce_degree0(const Group& g, Chain c) {
  if (c.degree() != 0) throw std::invalid_argument("reduce_degree0 expects degree 0");
  const Rat total = augmentation(c);
  if (total != 0) c.add(Tuple{{g.identity()}}, -total);
  return c;
}

PointMap random_table_map(std::mt19937_64& rng, const std::vector<GroupElement>& domain,
                          const std::vector<GroupElement>& image_pool) {
  if (image_pool.empty()) throw std::invalid_argument("random map needs a nonempty image pool");
  std::uniform_int_distribution<std::size_t> pick(0, image_pool.size() - 1);
  std::map<GroupElement, GroupElement> entries;
  for (const auto& x : domain) entries.emplace(x, image_pool[pick(rng)]);
  return PointMap::table(std::move(entries));
}

}  // namespace tchains
