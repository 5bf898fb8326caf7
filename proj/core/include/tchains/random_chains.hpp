#pragma once

#include <random>
#include <vector>

#include "tchains/chain.hpp"
#include "tchains/homotopy.hpp"

namespace tchains {

struct RandomChainParams {
  int degree = 1;
  int terms = 4;
  long long coeff_bound = 9;  // nonzero coefficients drawn from [-bound, bound]
};

/// Deterministic (seeded) chain fixture with points drawn from `points`,
/// which must hold at least two distinct elements when degree >= 1.
Chain random_chain(std::mt19937_64& rng, const std::vector<GroupElement>& points,
                   const RandomChainParams& params);

/// Projects a degree-0 chain into the augmentation kernel by subtracting the
/// augmentation at the identity basis vector.
Chain reduce_degree0(const Group& g, Chain c);

/// Table-backed map sending every domain point to a uniform draw from `image_pool`.
PointMap random_table_map(std::mt19937_64& rng, const std::vector<GroupElement>& domain,
                          const std::vector<GroupElement>& image_pool);

}  // namespace tchains
