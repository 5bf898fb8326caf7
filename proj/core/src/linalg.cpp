#include "tchains/linalg.hpp"

#include <stdexcept>

namespace tchains {

RatMatrix::RatMatrix(long long rows, long long cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be >= 0");
}

void RatMatrix::check_index(long long r, long long c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw std::invalid_argument("matrix index out of range");
  }
}

void RatMatrix::set(long long r, long long c, Rat value) {
  check_index(r, c);
  if (value == 0) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = std::move(value);
  }
}

void RatMatrix::add(long long r, long long c, const Rat& value) {
  check_index(r, c);
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

Rat RatMatrix::at(long long r, long long c) const {
  check_index(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rat(0) : it->second;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (const auto& [rc, v] : entries_) out.set(rc.second, rc.first, v);
  return out;
}

RatMatrix RatMatrix::multiply(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  // row-major walk of lhs against a row-indexed view of rhs
  std::vector<std::vector<std::pair<long long, const Rat*>>> rhs_rows(
      static_cast<std::size_t>(rhs.rows_));
  for (const auto& [rc, v] : rhs.entries_) {
    rhs_rows[static_cast<std::size_t>(rc.first)].emplace_back(rc.second, &v);
  }
  RatMatrix out(rows_, rhs.cols_);
  for (const auto& [rc, v] : entries_) {
    for (const auto& [col, w] : rhs_rows[static_cast<std::size_t>(rc.second)]) {
      out.add(rc.first, col, v * *w);
    }
  }
  return out;
}

RatMatrix RatMatrix::identity(long long n) {
  RatMatrix out(n, n);
  for (long long i = 0; i < n; ++i) out.set(i, i, Rat(1));
  return out;
}

long long rank(const RatMatrix& m) {
  // sparse row echelon; rows as column->value maps
  std::vector<std::map<long long, Rat>> rows(static_cast<std::size_t>(m.rows()));
  for (const auto& [rc, v] : m.entries()) {
    rows[static_cast<std::size_t>(rc.first)].emplace(rc.second, v);
  }
  std::vector<bool> used(rows.size(), false);
  long long r = 0;
  for (long long col = 0; col < m.cols(); ++col) {
    // first unused row with a nonzero entry in this column
    std::size_t pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!used[i] && rows[i].count(col)) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    used[pivot] = true;
    ++r;
    const Rat pivot_value = rows[pivot].at(col);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || !rows[i].count(col)) continue;
      const Rat factor = rows[i].at(col) / pivot_value;
      for (const auto& [c, v] : rows[pivot]) {
        if (c < col) continue;
        auto [it, inserted] = rows[i].try_emplace(c, -factor * v);
        if (!inserted) {
          it->second -= factor * v;
          if (it->second == 0) rows[i].erase(it);
        }
      }
    }
  }
  return r;
}

std::vector<long long> homology_dims(const ChainComplex& complex) {
  const std::size_t top = complex.dims.size();
  if (top == 0) throw std::invalid_argument("chain complex needs at least one space");
  if (complex.differentials.size() + 1 != top) {
    throw std::invalid_argument("chain complex needs exactly dims-1 differentials");
  }
  for (std::size_t k = 0; k + 1 < top; ++k) {
    const RatMatrix& d = complex.differentials[k];
    if (d.rows() != complex.dims[k] || d.cols() != complex.dims[k + 1]) {
      throw std::invalid_argument("differential shape does not match chain complex dims");
    }
  }
  for (std::size_t k = 0; k + 2 < top; ++k) {
    if (!complex.differentials[k].multiply(complex.differentials[k + 1]).is_zero()) {
      throw std::invalid_argument("differentials do not compose to zero");
    }
  }

  std::vector<long long> ranks(top + 1, 0);  // ranks[k] = rank d_k, d_0 and d_{top} are zero
  for (std::size_t k = 0; k + 1 < top; ++k) {
    ranks[k + 1] = rank(complex.differentials[k]);
  }
  std::vector<long long> out(top, 0);
  for (std::size_t k = 0; k < top; ++k) {
    out[k] = complex.dims[k] - ranks[k] - ranks[k + 1];
  }
  return out;
}

}  // namespace tchains
