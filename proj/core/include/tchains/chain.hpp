#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

#include "tchains/group.hpp"
#include "tchains/rational.hpp"

namespace tchains {

/// A nondegenerate (n+1)-tuple of points, the basis element of degree n.
struct Tuple {
  std::vector<GroupElement> points;

  int degree() const { return static_cast<int>(points.size()) - 1; }

  /// No adjacent repetition x_j = x_{j+1}.
  bool nondegenerate() const {
    for (std::size_t j = 0; j + 1 < points.size(); ++j) {
      if (points[j] == points[j + 1]) return false;
    }
    return true;
  }

  auto operator<=>(const Tuple&) const = default;
};

/// Finitely supported chain of a fixed degree with exact rational
/// coefficients. Degenerate tuples are projected to zero on insertion and
/// zero coefficients are never stored.
class Chain {
 public:
  explicit Chain(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("chain degree must be >= 0");
  }

  static Chain basis(Tuple t);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  const std::map<Tuple, Rat>& terms() const { return terms_; }

  /// Adds c * t, dropping the term if t is degenerate or the sum cancels.
  void add(const Tuple& t, const Rat& c);
  Rat coefficient(const Tuple& t) const;

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(const Rat& scalar);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Rat& s, Chain c) { return c *= s; }
  Chain operator-() const;

  bool operator==(const Chain& other) const = default;

 private:
  int degree_;
  std::map<Tuple, Rat> terms_;
};

/// Polynomial weight (l+1)^k or exponential weight alpha^l with alpha > 1.
class NormSpec {
 public:
  enum class Kind { Polynomial, Exponential };

  static NormSpec polynomial(long long k);
  static NormSpec exponential(Rat alpha);

  Kind kind() const { return kind_; }
  long long exponent() const { return k_; }
  const Rat& base() const { return alpha_; }

 private:
  NormSpec(Kind kind, long long k, Rat alpha) : kind_(kind), k_(k), alpha_(std::move(alpha)) {}
  Kind kind_;
  long long k_;
  Rat alpha_;
};

/// Alternating sum of faces; faces that become degenerate are dropped.
/// Requires degree >= 1.
Chain boundary(const Chain& c);

/// Sum of coefficients of a degree-0 chain.
Rat augmentation(const Chain& c);

/// Sum over the support of |coeff| times the tuple weight
/// (l(x_0)+...+l(x_n)+1)^k resp. alpha^(l(x_0)+...+l(x_n)).
Rat weighted_norm(const Group& g, const Chain& c, const NormSpec& spec);

/// Least R bounding every pairwise distance inside each support tuple;
/// 0 for the zero chain and for degree-0 chains.
long long control_radius(const Group& g, const Chain& c);

/// Convolution of degree-0 chains: (a*b)(x) = sum_h a(h) b(h^{-1} x).
Chain convolve(const Group& g, const Chain& a, const Chain& b);

/// Diagonal translation x . (x_0,...,x_n) = (x x_0,...,x x_n).
Chain diagonal_action(const Group& g, const GroupElement& x, const Chain& c);

}  // namespace tchains
