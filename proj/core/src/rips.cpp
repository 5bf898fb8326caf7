#include "tchains/rips.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tchains {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<std::vector<Rat>> distances)
    : labels_(std::move(labels)), distances_(std::move(distances)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw std::invalid_argument("metric space needs at least one point");
  if (distances_.size() != n) throw std::invalid_argument("distance table has wrong size");
  for (const auto& row : distances_) {
    if (row.size() != n) throw std::invalid_argument("distance table must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (distances_[i][i] != 0) throw std::invalid_argument("distance table diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && distances_[i][j] <= 0) {
        throw std::invalid_argument("off-diagonal distances must be positive");
      }
      if (distances_[i][j] != distances_[j][i]) {
        throw std::invalid_argument("distance table must be symmetric");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (distances_[i][k] > distances_[i][j] + distances_[j][k]) {
          throw std::invalid_argument("distance table violates the triangle inequality");
        }
      }
    }
  }
}

FiniteMetricSpace FiniteMetricSpace::from_ball(const Group& g, long long radius) {
  const std::vector<GroupElement> points = g.ball(radius);
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const auto& p : points) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.data.size(); ++i) {
      if (i) os << ",";
      os << p.data[i];
    }
    os << ")";
    labels.push_back(os.str());
  }
  std::vector<std::vector<Rat>> d(points.size(), std::vector<Rat>(points.size(), Rat(0)));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      d[i][j] = d[j][i] = rat_of(g.distance(points[i], points[j]));
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(d));
}

SimplicialComplex build_rips(const FiniteMetricSpace& space, const Rat& scale, int max_dim) {
  if (scale < 0) throw std::invalid_argument("Rips scale must be >= 0");
  if (max_dim < 0 || static_cast<std::size_t>(max_dim) + 1 > space.size()) {
    throw std::invalid_argument("max_dim must satisfy 0 <= max_dim <= |X|-1");
  }
  const int n = static_cast<int>(space.size());

  SimplicialComplex complex;
  complex.max_dim = max_dim;
  complex.simplices_by_dim.assign(static_cast<std::size_t>(max_dim) + 1, {});
  for (int v = 0; v < n; ++v) complex.simplices_by_dim[0].push_back({v});

  // extend cliques by vertices above the current maximum
  for (int dim = 1; dim <= max_dim; ++dim) {
    const auto& below = complex.simplices_by_dim[static_cast<std::size_t>(dim - 1)];
    auto& out = complex.simplices_by_dim[static_cast<std::size_t>(dim)];
    for (const auto& simplex : below) {
      for (int v = simplex.back() + 1; v < n; ++v) {
        bool close = true;
        for (int u : simplex) {
          if (space.distance(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) > scale) {
            close = false;
            break;
          }
        }
        if (close) {
          std::vector<int> extended = simplex;
          extended.push_back(v);
          out.push_back(std::move(extended));
        }
      }
    }
  }
  return complex;
}

std::vector<long long> rips_homology(const SimplicialComplex& complex) {
  const int top = complex.max_dim;
  ChainComplex matrixized;
  for (int dim = 0; dim <= top; ++dim) {
    matrixized.dims.push_back(static_cast<long long>(complex.count(dim)));
  }

  for (int dim = 1; dim <= top; ++dim) {
    const auto& faces = complex.simplices_by_dim[static_cast<std::size_t>(dim - 1)];
    const auto& cells = complex.simplices_by_dim[static_cast<std::size_t>(dim)];
    std::map<std::vector<int>, long long> face_index;
    for (std::size_t i = 0; i < faces.size(); ++i) face_index[faces[i]] = static_cast<long long>(i);

    RatMatrix d(static_cast<long long>(faces.size()), static_cast<long long>(cells.size()));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto& simplex = cells[c];
      for (std::size_t j = 0; j < simplex.size(); ++j) {
        std::vector<int> face;
        face.reserve(simplex.size() - 1);
        for (std::size_t i = 0; i < simplex.size(); ++i) {
          if (i != j) face.push_back(simplex[i]);
        }
        auto it = face_index.find(face);
        if (it == face_index.end()) {
          throw std::invalid_argument("simplicial complex is not closed under faces");
        }
        d.add(it->second, static_cast<long long>(c), (j % 2 == 0) ? Rat(1) : Rat(-1));
      }
    }
    matrixized.differentials.push_back(std::move(d));
  }
  return homology_dims(matrixized);
}

long long component_count(const SimplicialComplex& complex, std::size_t vertex_count) {
  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  if (complex.max_dim >= 1) {
    for (const auto& edge : complex.simplices_by_dim[1]) {
      const std::size_t a = find(static_cast<std::size_t>(edge[0]));
      const std::size_t b = find(static_cast<std::size_t>(edge[1]));
      if (a != b) parent[a] = b;
    }
  }
  long long components = 0;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (find(v) == v) ++components;
  }
  return components;
}

}  // namespace tchains
