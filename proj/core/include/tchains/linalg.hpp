#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tchains/rational.hpp"

namespace tchains {

/// Sparse matrix over the rationals; zero entries are never stored.
class RatMatrix {
 public:
  RatMatrix(long long rows, long long cols);

  long long rows() const { return rows_; }
  long long cols() const { return cols_; }

  void set(long long r, long long c, Rat value);
  void add(long long r, long long c, const Rat& value);
  Rat at(long long r, long long c) const;

  const std::map<std::pair<long long, long long>, Rat>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  RatMatrix transpose() const;
  RatMatrix multiply(const RatMatrix& rhs) const;

  static RatMatrix identity(long long n);

 private:
  void check_index(long long r, long long c) const;

  long long rows_, cols_;
  std::map<std::pair<long long, long long>, Rat> entries_;
};

/// Exact rank by rational Gaussian elimination with deterministic pivoting
/// (first nonzero row in column order).
long long rank(const RatMatrix& m);

/// Matrixized chain complex: dims[k] = dim C_k and differentials[k] = d_{k+1}
/// as a dims[k] x dims[k+1] matrix (d_{k+1} : C_{k+1} -> C_k).
struct ChainComplex {
  std::vector<long long> dims;
  std::vector<RatMatrix> differentials;
};

/// Homology dimensions H_0,...,H_top. Validates matrix shapes against dims
/// and that consecutive differentials compose to zero.
std::vector<long long> homology_dims(const ChainComplex& complex);

}  // namespace tchains
