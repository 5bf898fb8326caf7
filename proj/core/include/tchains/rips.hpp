#pragma once

#include <string>
#include <vector>

#include "tchains/group.hpp"
#include "tchains/linalg.hpp"
#include "tchains/rational.hpp"

namespace tchains {

/// Finite metric space with an explicit distance table; the metric axioms
/// (zero diagonal, positivity, symmetry, triangle inequality) are verified at
/// construction.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<std::vector<Rat>> distances);

  /// Points of a group ball with the word metric; labels are canonical
  /// renderings of the elements.
  static FiniteMetricSpace from_ball(const Group& g, long long radius);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rat& distance(std::size_t i, std::size_t j) const { return distances_[i][j]; }
  const std::vector<std::vector<Rat>>& distances() const { return distances_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Rat>> distances_;
};

/// Simplices listed by dimension; each simplex is a sorted vertex set and the
/// complex is closed under taking faces.
struct SimplicialComplex {
  int max_dim = 0;
  std::vector<std::vector<std::vector<int>>> simplices_by_dim;

  std::size_t count(int dim) const {
    return dim <= max_dim ? simplices_by_dim[static_cast<std::size_t>(dim)].size() : 0;
  }
};

/// Rips complex at scale R: simplices are the vertex sets of diameter <= R
/// with at most max_dim+1 vertices.
SimplicialComplex build_rips(const FiniteMetricSpace& space, const Rat& scale, int max_dim);

/// Simplicial homology dimensions [H_0,...,H_max_dim] with alternating-sign
/// boundary matrices on the sorted vertex order.
std::vector<long long> rips_homology(const SimplicialComplex& complex);

/// Number of connected components of the 1-skeleton (union-find); an
/// independent oracle for H_0.
long long component_count(const SimplicialComplex& complex, std::size_t vertex_count);

}  // namespace tchains
